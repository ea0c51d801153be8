#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bridgekit/contfrac.hpp"
#include "bridgekit/epim.hpp"

namespace bridgekit {

enum class Structure { B2, T3a, T3b, T4a, T4b, T4c, T4d, Other };

std::string to_string(Structure s);

/// Which small-braid pattern a word follows once its leading entry is made
/// positive. Positions are 1-based. For T3a/T4a i0 marks the large entry;
/// for T3b the single non-alternating gap; for T4b the two 4s (i0 < i1); for
/// T4c i0 is the 4 and i1 the non-alternating gap; for T4d the two gaps.
struct StructureTag {
  Structure tag = Structure::Other;
  std::optional<int> i0;
  std::optional<int> i1;

  friend bool operator==(const StructureTag&, const StructureTag&) = default;
};

StructureTag structure(const EvenWord& w);

enum class NonminimalKind { Torus, A3_1, A3_2, B3, A4, B4_1, B4_2, B4_3, C4_1, C4_2, D4 };

/// "2" for the torus case, otherwise "3A1", "4B2", ...
std::string to_string(NonminimalKind k);

/// One way a word meets a non-minimality criterion. `word` is the orbit
/// member (leading entry positive) that matched; positions refer to it and
/// are 1-based. The length 2k of `word` satisfies
/// 2k + 1, 2k + 3 or 2k + 5 = (2r+1)(2m+1) depending on the kind.
struct NonminimalType {
  NonminimalKind kind = NonminimalKind::Torus;
  EvenWord word = EvenWord({2, -2});
  int r = 0;
  int m = 0;
  std::optional<int> i0, i1, j0, j1;
};

/// All criteria the word meets, over both orbit members with positive lead.
std::vector<NonminimalType> nonminimal_matches(const EvenWord& w);

/// First match by kind tag; empty means minimal. Only meaningful for braid
/// index 2..4.
std::optional<NonminimalType> nonminimal_type(const EvenWord& w);

/// Composition parameters realising a classified word: target is the torus
/// word of length 2m.
OrsParams witness_params(const NonminimalType& t);

struct Table1Row {
  int braid = 0;
  std::string type;
  int crossing = 0;
  EvenWord word = EvenWord({2, -2});
  std::vector<std::string> images;
  /// Classifier data when the word matched a criterion.
  std::optional<NonminimalType> detail;

  friend bool operator==(const Table1Row& a, const Table1Row& b) {
    return a.braid == b.braid && a.type == b.type && a.crossing == b.crossing && a.word == b.word &&
           a.images == b.images;
  }
};

struct Table1Options {
  int max_c = 15;
  bool up_to_mirror = true;
  unsigned parallelism = 1;
  SearchBudget budget;
};

/// Non-minimal two-bridge knots with braid index <= 4 and 3 <= c <= max_c.
/// A knot is listed when either the classifier or the search finds it
/// non-minimal; type "?" or empty images expose any disagreement. Sorted by
/// braid, type, crossing, images, word.
std::vector<Table1Row> table1(const Table1Options& options);

/// Lines prefixed "-" (expected only) or "+" (produced only); empty when the
/// tables agree row for row.
std::vector<std::string> diff_table1(const std::vector<Table1Row>& produced, const std::vector<Table1Row>& expected);

/// "2 | 3A1 | 11 | [2, -2, ...] | 3_1" style one-line rendering.
std::string describe_row(const Table1Row& row);

}  // namespace bridgekit
