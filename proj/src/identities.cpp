#include <sstream>

#include "bridgekit/census.hpp"

namespace bridgekit {

namespace {

class Pascal {
 public:
  explicit Pascal(int rows) : rows_(static_cast<std::size_t>(rows) + 1) {
    for (std::size_t n = 0; n < rows_.size(); ++n) {
      rows_[n].resize(n + 1);
      rows_[n][0] = rows_[n][n] = 1;
      for (std::size_t k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }

  const BigInt& operator()(std::int64_t n, std::int64_t k) const {
    if (n < 0 || k < 0 || k > n) return zero_;
    if (static_cast<std::size_t>(n) >= rows_.size()) throw std::out_of_range("pascal row");
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<BigInt>> rows_;
  BigInt zero_ = 0;
};

template <class Lhs, class Rhs>
void check(IdentityResult& res, const std::string& where, const Lhs& lhs, const Rhs& rhs) {
  ++res.cases;
  if (lhs == rhs) return;
  if (res.passed) {
    std::ostringstream os;
    os << where << ": lhs=" << lhs << " rhs=" << rhs;
    res.counterexample = os.str();
  }
  res.passed = false;
}

}  // namespace

std::vector<IdentityResult> verify_identities(int n_max) {
  if (n_max < 1) n_max = 1;
  const Pascal binom(2 * n_max + 2);
  std::vector<IdentityResult> out;

  IdentityResult odd_sum{"binomial-sum-odd", "sum_{q=0}^{n-1} 2^q C(2n-1-q,q) = (4^n-1)/3", 0, true, std::nullopt};
  IdentityResult even_sum{"binomial-sum-even", "sum_{q=0}^{n} 2^q C(2n-q,q) = (2*4^n+1)/3", 0, true, std::nullopt};
  IdentityResult odd_wsum{"weighted-sum-odd", "sum_{q=0}^{n-1} q 2^q C(2n-1-q,q) = 2((3n-2)4^n-6n+2)/27", 0, true, std::nullopt};
  IdentityResult even_wsum{"weighted-sum-even", "sum_{q=0}^{n} q 2^q C(2n-q,q) = 2((6n-1)4^n+6n+1)/27", 0, true, std::nullopt};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    BigInt s_odd = 0, s_even = 0, w_odd = 0, w_even = 0;
    for (std::int64_t q = 0; q <= n; ++q) {
      const BigInt p = pow2(static_cast<unsigned>(q));
      if (q <= n - 1) {
        BigInt t = p * binom(2 * n - 1 - q, q);
        w_odd += q * t;
        s_odd += t;
      }
      BigInt t = p * binom(2 * n - q, q);
      w_even += q * t;
      s_even += t;
    }
    const BigInt four_n = pow2(static_cast<unsigned>(2 * n));
    const std::string at = "n=" + std::to_string(n);
    // Compared after clearing denominators.
    check(odd_sum, at, BigInt(3 * s_odd), BigInt(four_n - 1));
    check(even_sum, at, BigInt(3 * s_even), BigInt(2 * four_n + 1));
    check(odd_wsum, at, BigInt(27 * w_odd), BigInt(2 * ((3 * n - 2) * four_n - 6 * n + 2)));
    check(even_wsum, at, BigInt(27 * w_even), BigInt(2 * ((6 * n - 1) * four_n + 6 * n + 1)));
  }

  IdentityResult odd_part{"partial-odd-binomials",
                          "sum_{m=l+1}^{floor((k+l)/2)} C(k-l-1,2m-2l-1) = 2^{k-l-2}, 0<=l<=k-2", 0, true, std::nullopt};
  IdentityResult even_part{"partial-even-binomials",
                           "sum_{m=l+1}^{floor((k+l+1)/2)} C(k-l-1,2m-2l-2) = 2^{k-l-2} (+1/2 when l=k-1)", 0, true, std::nullopt};
  IdentityResult half_part{"partial-full-row",
                           "sum_{m=l+1}^{floor((k+l+1)/2)} C((k-l-1)/2,m-l-1) = 2^{(k-l-1)/2}, k+l+1 even", 0, true, std::nullopt};
  for (std::int64_t k = 1; k <= n_max; ++k) {
    for (std::int64_t l = 0; l <= k - 1; ++l) {
      const std::string at = "k=" + std::to_string(k) + ",l=" + std::to_string(l);
      if (l <= k - 2) {
        BigInt s = 0;
        for (std::int64_t m = l + 1; m <= (k + l) / 2; ++m) s += binom(k - l - 1, 2 * m - 2 * l - 1);
        check(odd_part, at, s, pow2(static_cast<unsigned>(k - l - 2)));
      }
      {
        BigInt s = 0;
        for (std::int64_t m = l + 1; m <= (k + l + 1) / 2; ++m) s += binom(k - l - 1, 2 * m - 2 * l - 2);
        // 2^{k-l-2} is 1/2 at l = k-1, where the extra 1/2 applies.
        Rational rhs = l <= k - 2 ? Rational(pow2(static_cast<unsigned>(k - l - 2)))
                                  : Rational(1, 2) + Rational(1, 2);
        check(even_part, at, Rational(s), rhs);
      }
      if ((k + l + 1) % 2 == 0) {
        const std::int64_t top = (k - l - 1) / 2;
        BigInt s = 0;
        for (std::int64_t m = l + 1; m <= (k + l + 1) / 2; ++m) s += binom(top, m - l - 1);
        check(half_part, at, s, pow2(static_cast<unsigned>(top)));
      }
    }
  }

  out = {odd_sum, even_sum, odd_wsum, even_wsum, odd_part, even_part, half_part};
  return out;
}

}  // namespace bridgekit
