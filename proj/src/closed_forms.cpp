#include "bridgekit/census.hpp"

#include "bridgekit/error.hpp"

namespace bridgekit {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den, const char* formula, int c) {
  if (num % den != 0) {
    throw NonIntegralFormula(std::string(formula) + " at c=" + std::to_string(c) + ": " + num.str() +
                             " is not divisible by " + den.str());
  }
  return num / den;
}

BigInt p2(int e) { return pow2(static_cast<unsigned>(e)); }

void require_crossing(int c) {
  if (c < 3) throw Error("closed forms need c >= 3, got " + std::to_string(c));
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt closed_TK(int c) {
  require_crossing(c);
  if (c % 2 == 0) return exact_div(p2(c - 2) - 1, 3, "TK", c);
  if (c % 4 == 1) return exact_div(p2(c - 2) + p2((c - 1) / 2), 3, "TK", c);
  return exact_div(p2(c - 2) + p2((c - 1) / 2) + 2, 3, "TK", c);
}

BigInt closed_TK_star(int c) {
  require_crossing(c);
  switch (c % 4) {
    case 0: return exact_div(p2(c - 3) + p2((c - 4) / 2), 3, "TK*", c);
    case 1: return exact_div(p2(c - 3) + p2((c - 3) / 2), 3, "TK*", c);
    case 2: return exact_div(p2(c - 3) + p2((c - 4) / 2) - 1, 3, "TK*", c);
    default: return exact_div(p2(c - 3) + p2((c - 3) / 2) + 1, 3, "TK*", c);
  }
}

BigInt closed_N(int c, int ell) {
  require_crossing(c);
  if (ell < 0 || (c - ell) % 2 != 0 || ell > max_sign_changes(c)) return 0;
  const std::int64_t half = (c + ell) / 2;
  // Real bounds (l+1)/2 <= m <= (c+l)/4 over integer m.
  const std::int64_t m_lo = (ell + 2) / 2;
  const std::int64_t m_hi = (c + ell) / 4;

  BigInt inner = 0;
  for (std::int64_t m = m_lo; m <= m_hi; ++m) inner += binomial((c - ell) / 2 - 1, 2 * m - 1 - ell);
  BigInt n = binomial(half - 1, ell) * inner;

  if (half % 2 == 0 && ell % 2 == 1) {
    // Palindromic correction; (c - l)/4 - 1/2 is an integer here.
    const std::int64_t top = (c - ell - 2) / 4;
    BigInt extra = 0;
    for (std::int64_t m = m_lo; m <= m_hi; ++m) extra += binomial(top, m - 1 - (ell - 1) / 2);
    n += binomial((c + ell) / 4 - 1, (ell - 1) / 2) * extra;
  }
  return n;
}

BigInt closed_TS(int c) {
  require_crossing(c);
  const BigInt cc = c;
  if (c % 2 == 0) return exact_div((3 * cc - 4) * p2(c - 2) - 15 * cc + 28, 27, "TS", c);
  const BigInt base = (3 * cc - 4) * p2(c - 2) + (3 * cc + 4) * p2((c - 1) / 2);
  if (c % 4 == 1) return exact_div(base + 18 * cc - 38, 27, "TS", c);
  return exact_div(base + 12 * cc - 18, 27, "TS", c);
}

BigInt closed_TS_star(int c) {
  require_crossing(c);
  const BigInt cc = c;
  const BigInt lead = (3 * cc - 4) * p2(c - 2);
  switch (c % 4) {
    case 0: return exact_div(lead + (3 * cc - 8) * p2((c - 2) / 2) - 18 * cc + 32, 54, "TS*", c);
    case 1: return exact_div(lead + (3 * cc + 4) * p2((c - 1) / 2) + 18 * cc - 38, 54, "TS*", c);
    case 2: return exact_div(lead + (3 * cc - 8) * p2((c - 2) / 2) - 12 * cc + 24, 54, "TS*", c);
    default: return exact_div(lead + (3 * cc + 4) * p2((c - 1) / 2) + 12 * cc - 18, 54, "TS*", c);
  }
}

Rational closed_avg_braid(int c) {
  require_crossing(c);
  const BigInt cc = c;
  const Rational head(3 * cc + 11, 9);
  if (c % 2 == 0) return head + Rational(2 * cc - 4, 3 * (p2(c - 2) - 1));
  if (c % 4 == 1) {
    return head - Rational(p2((c + 3) / 2) + 9 * cc - 19, 9 * (p2(c - 2) + p2((c - 1) / 2)));
  }
  return head - Rational(p2((c + 3) / 2) + 3 * cc - 5, 9 * (p2(c - 2) + p2((c - 1) / 2) + 2));
}

Rational closed_avg_braid_star(int c) {
  require_crossing(c);
  const BigInt cc = c;
  const Rational head(3 * cc + 11, 9);
  switch (c % 4) {
    case 0: return head + Rational(p2(c / 2) + 9 * cc - 16, 9 * (p2(c - 2) + p2((c - 2) / 2)));
    case 2: return head + Rational(p2(c / 2) + 3 * cc - 8, 9 * (p2(c - 2) + p2((c - 2) / 2) - 2));
    default: return closed_avg_braid(c);
  }
}

Rational closed_avg_genus(int c) {
  require_crossing(c);
  const BigInt cc = c;
  const Rational head(3 * cc + 1, 12);
  if (c % 2 == 0) return head + Rational(cc - 5, p2(c) - 4);
  if (c % 4 == 1) return head + Rational(1, 3 * p2((c - 3) / 2));
  return head + Rational(p2((c + 1) / 2) - 3 * cc + 11, 12 * (p2(c - 3) + p2((c - 3) / 2) + 1));
}

CensusRow closed_row(int c) {
  CensusRow row;
  row.c = c;
  row.tk = closed_TK(c);
  row.ts = closed_TS(c);
  row.tk_star = closed_TK_star(c);
  row.ts_star = closed_TS_star(c);
  row.avg_braid = closed_avg_braid(c);
  row.avg_braid_star = closed_avg_braid_star(c);
  row.avg_genus = closed_avg_genus(c);
  for (int ell = c % 2; ell <= max_sign_changes(c); ell += 2) row.by_ell.push_back({c, ell, closed_N(c, ell)});
  return row;
}

}  // namespace bridgekit
