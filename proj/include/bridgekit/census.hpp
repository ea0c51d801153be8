#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bridgekit/contfrac.hpp"
#include "bridgekit/rational.hpp"

namespace bridgekit {

/// N_{c,l}: knots with crossing number c whose word has l sign changes.
struct SignClassCount {
  int c = 0;
  int ell = 0;
  BigInt count = 0;

  friend bool operator==(const SignClassCount&, const SignClassCount&) = default;
};

/// Per-crossing-number aggregates. Starred fields count knots up to mirror
/// image.
struct CensusRow {
  int c = 0;
  BigInt tk = 0;
  BigInt ts = 0;
  BigInt tk_star = 0;
  BigInt ts_star = 0;
  Rational avg_braid;
  Rational avg_braid_star;
  Rational avg_genus;
  std::vector<SignClassCount> by_ell;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

struct CensusConfig {
  int enumeration_ceiling = 22;
  /// Worker threads; 0 picks the hardware concurrency.
  unsigned parallelism = 1;
};

/// Calls `visit` once per reduced even word with crossing number c, in a
/// deterministic order: ascending l, then m, then sign pattern, then magnitude
/// composition. The span is only valid during the call.
void for_each_word(int c, const std::function<void(std::span<const Entry>)>& visit);

/// Canonical KnotClass representatives (w <= rev_neg(w)) with crossing c.
void for_each_canonical_word(int c, const std::function<void(std::span<const Entry>)>& visit);
std::vector<EvenWord> enumerate_words(int c);

/// Orbit tests on raw entries, without allocating.
bool is_knot_canonical(std::span<const Entry> w);
bool is_mirror_canonical(std::span<const Entry> w);

/// Every field by direct enumeration. Throws ResourceBound when c exceeds the
/// configured ceiling.
CensusRow brute_counts(int c, const CensusConfig& config = {});

BigInt closed_TK(int c);
BigInt closed_TK_star(int c);
BigInt closed_N(int c, int ell);
/// Throws NonIntegralFormula if a division leaves a remainder.
BigInt closed_TS(int c);
BigInt closed_TS_star(int c);
Rational closed_avg_braid(int c);
Rational closed_avg_braid_star(int c);
Rational closed_avg_genus(int c);
/// Row built from the closed forms only; by_ell from closed_N.
CensusRow closed_row(int c);

/// Largest l that can carry knots at crossing number c.
int max_sign_changes(int c);

/// Binomial coefficient; zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

struct IdentityResult {
  std::string name;
  std::string statement;
  std::uint64_t cases = 0;
  bool passed = true;
  /// First failing instance, e.g. "n=7: lhs=... rhs=...".
  std::optional<std::string> counterexample;
};

/// Checks the binomial-sum and partial-sum identities used by the sign-change
/// totals for every n (resp. every k and admissible l) up to n_max.
std::vector<IdentityResult> verify_identities(int n_max);

/// Row-by-row comparison of enumeration against closed forms. Returns one
/// human-readable line per mismatch; empty means agreement.
std::vector<std::string> compare_rows(const CensusRow& brute, const CensusRow& closed);

}  // namespace bridgekit
