#include "bridgekit/knot.hpp"

#include <array>
#include <sstream>

#include "json.hpp"

#include "bridgekit/error.hpp"

namespace bridgekit {

int crossing_number(const EvenWord& w) {
  return static_cast<int>(abs_sum(w.entries())) - sign_changes(w);
}

int braid_index(const EvenWord& w) {
  return static_cast<int>(abs_sum(w.entries()) / 2) - sign_changes(w) + 1;
}

int genus(const EvenWord& w) { return static_cast<int>(w.size() / 2); }

EvenWord knot_canonical(const EvenWord& w) {
  EvenWord rn = rev_neg(w);
  return rn < w ? rn : w;
}

EvenWord mirror_canonical(const EvenWord& w) {
  std::array<EvenWord, 4> orbit{w, rev_neg(w), negate(w), reverse(w)};
  return *std::min_element(orbit.begin(), orbit.end());
}

EvenWord positive_representative(const EvenWord& w) {
  // Exactly one of w, -w leads with a positive entry; likewise for reverse(w).
  EvenWord a = w[0] > 0 ? w : negate(w);
  EvenWord r = reverse(w);
  EvenWord b = r[0] > 0 ? r : negate(r);
  return b < a ? b : a;
}

KnotClass::KnotClass(const EvenWord& w) : canon_(knot_canonical(w)) {
  crossing_ = crossing_number(canon_);
  braid_ = braid_index(canon_);
  genus_ = bridgekit::genus(canon_);
  signchg_ = bridgekit::sign_changes(canon_);
  // Even-length even expansions always have odd denominators.
  if (eval(canon_).denominator() % 2 == 0) {
    throw NotAKnot("word " + format_word(canon_) + " evaluates to an even-denominator fraction");
  }
}

MirrorClass::MirrorClass(const EvenWord& w) : canon_(mirror_canonical(w)) {}

KnotClass knot_from_word(const EvenWord& w) { return KnotClass(w); }

MirrorClass mirror_class(const KnotClass& k) { return MirrorClass(k.canon()); }
MirrorClass mirror_class(const MirrorClass& k) { return MirrorClass(k.canon()); }

std::optional<int> is_torus_two_strand(const KnotClass& k) {
  if (k.braid() != 2) return std::nullopt;
  return static_cast<int>(k.canon().size()) + 1;
}

std::optional<std::string> rolfsen_name(const EvenWord& w) {
  EvenWord m = mirror_canonical(w);
  const std::string s = format_word(m);
  if (s == "-2,2") return "3_1";
  if (s == "-2,-2") return "4_1";
  if (s == "-2,2,-2,2") return "5_1";
  return std::nullopt;
}

std::string display_name(const KnotClass& k) {
  if (auto n = rolfsen_name(k.canon())) return *n;
  return "[" + format_word(k.canon()) + "]";
}

std::string knot_to_json(const KnotClass& k) {
  nlohmann::ordered_json j;
  j["word"] = format_word(k.canon());
  j["crossing"] = k.crossing();
  j["braid"] = k.braid();
  j["genus"] = k.genus();
  return j.dump();
}

}  // namespace bridgekit
