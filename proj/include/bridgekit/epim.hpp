#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bridgekit/contfrac.hpp"
#include "bridgekit/error.hpp"
#include "bridgekit/knot.hpp"

namespace bridgekit {

/// Data of an Ohtsuki-Riley-Sakuma interleaving
///   (e_1 a, 2c_1, e_2 a^{-1}, 2c_2, ..., e_{2r+1} a).
struct OrsParams {
  EvenWord target = EvenWord({2, -2});
  int r = 1;
  /// 2r+1 signs, eps[0] == +1.
  std::vector<int> eps;
  /// 2r integers c_1..c_{2r}.
  std::vector<Entry> cvec;

  /// Throws InvalidParams on size or sign violations, or when c_j == 0 with
  /// eps_{j+1} != eps_j.
  void validate() const;

  friend bool operator==(const OrsParams&, const OrsParams&) = default;
  friend auto operator<=>(const OrsParams&, const OrsParams&) = default;
};

/// The four non-negative terms whose sum is
///   slack = braid(K) - 3 braid(K') + 4.
struct InequalityAudit {
  std::int64_t term_copies = 0;   // (2r-2)(braid(K')-2)
  std::int64_t term_cbudget = 0;  // sum over c_j != 0 of (|c_j| - 1)
  std::int64_t term_zero = 0;     // 2r - #{c_j != 0}
  std::int64_t term_signs = 0;    // (2r+1) t(a) + 2 #{c_j != 0} - t(composed)
  std::int64_t slack = 0;

  friend bool operator==(const InequalityAudit&, const InequalityAudit&) = default;
};

struct EpiWitness {
  KnotClass big;
  KnotClass small;
  OrsParams params;
  InequalityAudit audit;
};

struct SearchBudget {
  /// Ceiling on search-tree nodes per query.
  std::uint64_t max_nodes = 200'000'000;
};

/// Raised when the search tree outgrows the budget. `partial` holds every
/// witness found before the search stopped.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::vector<EpiWitness> partial)
      : Error(what), partial_(std::move(partial)) {}
  const std::vector<EpiWitness>& partial() const noexcept { return partial_; }

 private:
  std::vector<EpiWitness> partial_;
};

/// Interleaves the blocks; each c_j == 0 separator is deleted and the two
/// adjacent block-boundary entries are summed. Throws InvalidParams for
/// malformed sizes or signs and MergeCancellation if a merge sums to zero
/// (a zero separator between blocks of opposite sign).
EvenWord ors_compose(const OrsParams& p);

/// Audit of a verified composition. Throws AuditFailure if any term is
/// negative or the terms do not sum to the slack.
InequalityAudit audit_inequality(const OrsParams& p);
InequalityAudit audit_inequality(const EpiWitness& w);

/// Every witness K >= K' with K' a nontrivial two-bridge knot other than K.
/// Targets of both chiralities with c(K') <= c(K)/3 are tried. Sorted by
/// target, then parameters.
std::vector<EpiWitness> epi_targets(const KnotClass& k, const SearchBudget& budget = {});

/// First witness K >= K' (proper targets only).
std::optional<EpiWitness> admits_epi(const KnotClass& k, const KnotClass& kp, const SearchBudget& budget = {});

/// True iff K has no proper nontrivial epimorphic image.
bool is_minimal(const KnotClass& k, const SearchBudget& budget = {});

/// Distinct image knots of the witnesses, in witness order.
std::vector<KnotClass> image_knots(const std::vector<EpiWitness>& witnesses);

struct EpiGraph {
  std::vector<KnotClass> nodes;
  std::vector<EpiWitness> edges;
};

/// The epimorphism digraph over all two-bridge knots with 3 <= c <= max_c.
EpiGraph epi_graph(int max_c, const SearchBudget& budget = {});

std::string graph_to_dot(const EpiGraph& g);
std::string graph_to_json(const EpiGraph& g);
std::string witness_to_json(const EpiWitness& w);
/// "target=2,-2 r=1 eps=(+,+,+) c=(1,-2)"
std::string describe_params(const OrsParams& p);

}  // namespace bridgekit
