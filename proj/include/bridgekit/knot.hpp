#pragma once

#include <optional>
#include <string>

#include "bridgekit/contfrac.hpp"

namespace bridgekit {

/// c(K) = sum |entries| - t.
int crossing_number(const EvenWord& w);
/// braid(K) = sum |entries| / 2 - t + 1.
int braid_index(const EvenWord& w);
/// Half the reduced even length.
int genus(const EvenWord& w);

/// Lexicographic minimum of {w, rev_neg(w)}: the representative of the
/// two-bridge knot K(w) (chirality kept).
EvenWord knot_canonical(const EvenWord& w);
/// Lexicographic minimum of {w, rev_neg(w), negate(w), reverse(w)}.
EvenWord mirror_canonical(const EvenWord& w);
/// Lexicographic minimum over the orbit members whose leading entry is
/// positive; used when printing knots up to mirror image.
EvenWord positive_representative(const EvenWord& w);

/// Two-bridge knot identified by its canonical reduced even word.
class KnotClass {
 public:
  /// Throws NotAKnot if the word's value has an even denominator.
  explicit KnotClass(const EvenWord& w);

  const EvenWord& canon() const { return canon_; }
  int crossing() const { return crossing_; }
  int braid() const { return braid_; }
  int genus() const { return genus_; }
  int sign_changes() const { return signchg_; }

  friend bool operator==(const KnotClass& a, const KnotClass& b) { return a.canon_ == b.canon_; }
  friend auto operator<=>(const KnotClass& a, const KnotClass& b) { return a.canon_ <=> b.canon_; }

 private:
  EvenWord canon_;
  int crossing_;
  int braid_;
  int genus_;
  int signchg_;
};

/// A knot up to mirror image.
class MirrorClass {
 public:
  explicit MirrorClass(const EvenWord& w);

  const EvenWord& canon() const { return canon_; }
  int crossing() const { return crossing_number(canon_); }
  int braid() const { return braid_index(canon_); }
  int genus() const { return bridgekit::genus(canon_); }

  friend bool operator==(const MirrorClass& a, const MirrorClass& b) { return a.canon_ == b.canon_; }
  friend auto operator<=>(const MirrorClass& a, const MirrorClass& b) { return a.canon_ <=> b.canon_; }

 private:
  EvenWord canon_;
};

KnotClass knot_from_word(const EvenWord& w);
MirrorClass mirror_class(const KnotClass& k);
MirrorClass mirror_class(const MirrorClass& k);

/// 2m+1 when K is the torus knot T(2m+1, 2), i.e. braid index 2.
std::optional<int> is_torus_two_strand(const KnotClass& k);

/// Rolfsen-style label for the few small knots that have one here
/// (3_1, 4_1, 5_1); chirality is not distinguished.
std::optional<std::string> rolfsen_name(const EvenWord& w);
/// rolfsen_name, or the canonical word in brackets.
std::string display_name(const KnotClass& k);

/// {"word": "...", "crossing": c, "braid": b, "genus": g}
std::string knot_to_json(const KnotClass& k);

}  // namespace bridgekit
