#include "bridgekit/epim.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "bridgekit/census.hpp"

namespace bridgekit {

namespace {

void validate_shape(const OrsParams& p) {
  if (p.r < 1) throw InvalidParams("r must be positive, got " + std::to_string(p.r));
  if (p.eps.size() != static_cast<std::size_t>(2 * p.r + 1)) {
    throw InvalidParams("expected " + std::to_string(2 * p.r + 1) + " signs, got " + std::to_string(p.eps.size()));
  }
  if (p.cvec.size() != static_cast<std::size_t>(2 * p.r)) {
    throw InvalidParams("expected " + std::to_string(2 * p.r) + " c-values, got " + std::to_string(p.cvec.size()));
  }
  for (int e : p.eps) {
    if (e != 1 && e != -1) throw InvalidParams("signs must be +1 or -1");
  }
  if (p.eps[0] != 1) throw InvalidParams("the first sign must be +1");
}

}  // namespace

void OrsParams::validate() const {
  validate_shape(*this);
  for (std::size_t j = 0; j < cvec.size(); ++j) {
    if (cvec[j] == 0 && eps[j + 1] != eps[j]) {
      throw InvalidParams("c_" + std::to_string(j + 1) + " = 0 requires equal neighbouring signs");
    }
  }
}

EvenWord ors_compose(const OrsParams& p) {
  // A zero separator between blocks of opposite sign is left to the merge
  // below, which reports it as a cancellation.
  validate_shape(p);
  const auto& a = p.target.vec();
  std::vector<Entry> out;
  out.reserve((a.size() + 1) * p.eps.size());
  for (std::size_t blk = 0; blk < p.eps.size(); ++blk) {
    std::vector<Entry> block(a);
    if (blk % 2 == 1) std::reverse(block.begin(), block.end());
    for (auto& e : block) e *= p.eps[blk];
    auto first = block.begin();
    if (blk > 0) {
      const Entry c = p.cvec[blk - 1];
      if (c == 0) {
        const Entry merged = out.back() + block.front();
        if (merged == 0) {
          throw MergeCancellation("merging across c_" + std::to_string(blk) + " = 0 cancels to zero");
        }
        out.back() = merged;
        ++first;
      } else {
        out.push_back(2 * c);
      }
    }
    out.insert(out.end(), first, block.end());
  }
  // A merge of same-sign even entries is even and nonzero, so the word is valid.
  return EvenWord(std::move(out));
}

InequalityAudit audit_inequality(const OrsParams& p) {
  p.validate();
  const EvenWord big = ors_compose(p);
  const int r2 = 2 * p.r;
  std::int64_t nonzero = 0;
  std::int64_t cbudget = 0;
  for (Entry c : p.cvec) {
    if (c != 0) {
      ++nonzero;
      cbudget += (c < 0 ? -c : c) - 1;
    }
  }
  const int braid_small = braid_index(p.target);
  InequalityAudit a;
  a.term_copies = static_cast<std::int64_t>(r2 - 2) * (braid_small - 2);
  a.term_cbudget = cbudget;
  a.term_zero = r2 - nonzero;
  a.term_signs = static_cast<std::int64_t>(r2 + 1) * sign_changes(p.target) + 2 * nonzero - sign_changes(big);
  a.slack = braid_index(big) - 3 * braid_small + 4;

  std::ostringstream why;
  if (a.term_copies < 0) why << " copies term " << a.term_copies << " < 0;";
  if (a.term_cbudget < 0) why << " c-budget term " << a.term_cbudget << " < 0;";
  if (a.term_zero < 0) why << " zero-count term " << a.term_zero << " < 0;";
  if (a.term_signs < 0) why << " sign term " << a.term_signs << " < 0;";
  if (a.term_copies + a.term_cbudget + a.term_zero + a.term_signs != a.slack) {
    why << " terms sum to " << a.term_copies + a.term_cbudget + a.term_zero + a.term_signs << " but slack is "
        << a.slack << ";";
  }
  if (!why.str().empty()) throw AuditFailure("audit failed for " + describe_params(p) + ":" + why.str());
  return a;
}

InequalityAudit audit_inequality(const EpiWitness& w) { return audit_inequality(w.params); }

namespace {

// Depth-first generation of compositions onto one target word, pruned by the
// crossing number and length of K.
class TargetSearch {
 public:
  TargetSearch(const KnotClass& big, const SearchBudget& budget, std::uint64_t& nodes)
      : big_(big), budget_(budget), nodes_(nodes) {}

  void run(const KnotClass& small, const EvenWord& a, std::vector<EpiWitness>& found) {
    small_ = &small;
    target_ = &a;
    found_ = &found;
    fwd_ = a.vec();
    bwd_.assign(fwd_.rbegin(), fwd_.rend());
    target_cross_ = crossing_number(a);
    const int big_c = big_.crossing();
    const auto big_len = static_cast<std::int64_t>(big_.canon().size());
    const auto la = static_cast<std::int64_t>(fwd_.size());
    for (int r = 1; (2 * r + 1) * target_cross_ <= big_c; ++r) {
      // Each zero separator removes itself and one merged entry.
      const std::int64_t removed = (2 * r + 1) * la + 2 * r - big_len;
      if (removed < 0 || removed % 2 != 0 || removed > 4 * r) continue;
      const std::int64_t zeros = removed / 2;
      r_ = r;
      zeros_needed_ = static_cast<int>(zeros);
      word_.clear();
      cross_ = 0;
      eps_.assign(1, 1);
      cvec_.clear();
      append_block(0, 1, false);
      descend(0, 0);
    }
  }

 private:
  void push(Entry e) {
    const Entry mag = e < 0 ? -e : e;
    if (!word_.empty() && ((word_.back() < 0) != (e < 0))) {
      cross_ += static_cast<int>(mag) - 1;
    } else {
      cross_ += static_cast<int>(mag);
    }
    word_.push_back(e);
  }

  void append_block(std::size_t index, int sign, bool merge) {
    const auto& src = index % 2 == 0 ? fwd_ : bwd_;
    std::size_t i = 0;
    if (merge) {
      // Same sign as word_.back(): magnitudes add, no new sign change.
      const Entry e = sign * src[0];
      word_.back() += e;
      cross_ += static_cast<int>(e < 0 ? -e : e);
      i = 1;
    }
    for (; i < src.size(); ++i) push(sign * src[i]);
  }

  void tick() {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetExceeded("epimorphism search for " + format_word(big_.canon()) + " exceeded " +
                               std::to_string(budget_.max_nodes) + " nodes",
                           *found_);
    }
  }

  // `j` separators chosen so far, `zeros` of them zero.
  void descend(int j, int zeros) {
    const int big_c = big_.crossing();
    if (j == 2 * r_) {
      if (cross_ == big_c && zeros == zeros_needed_) accept();
      return;
    }
    const int blocks_after = 2 * r_ - j;  // including the one after this separator
    const int seps_after = 2 * r_ - j - 1;
    const std::size_t saved_len = word_.size();
    const int saved_cross = cross_;
    const Entry saved_back = word_.back();
    const int eps_here = eps_.back();
    auto restore = [&] {
      word_.resize(saved_len);
      word_.back() = saved_back;
      cross_ = saved_cross;
      eps_.pop_back();
      cvec_.pop_back();
    };

    // c_j = 0: delete the separator and merge, keeping the sign.
    if (zeros < zeros_needed_ && cross_ + blocks_after * target_cross_ <= big_c) {
      tick();
      eps_.push_back(eps_here);
      cvec_.push_back(0);
      append_block(static_cast<std::size_t>(j + 1), eps_here, true);
      if (cross_ + (blocks_after - 1) * target_cross_ <= big_c) descend(j + 1, zeros + 1);
      restore();
    }
    if (zeros + seps_after < zeros_needed_) return;  // every later separator would need to be zero

    // Separator 2c adds at least 2|c| - 1, the next block at least c(a) - 1.
    for (Entry mag = 1; cross_ + 2 * mag - 2 + blocks_after * target_cross_ <= big_c; ++mag) {
      for (Entry c : {mag, -mag}) {
        for (int sign : {1, -1}) {
          tick();
          eps_.push_back(sign);
          cvec_.push_back(c);
          push(2 * c);
          append_block(static_cast<std::size_t>(j + 1), sign, false);
          if (cross_ + (blocks_after - 1) * target_cross_ <= big_c) descend(j + 1, zeros);
          restore();
        }
      }
    }
  }

  void accept() {
    const auto& canon = big_.canon().vec();
    if (word_.size() != canon.size()) return;
    bool same = word_ == canon;
    if (!same) {
      same = true;
      const std::size_t n = word_.size();
      for (std::size_t i = 0; i < n && same; ++i) same = -word_[n - 1 - i] == canon[i];
    }
    if (!same) return;
    OrsParams p{*target_, r_, eps_, cvec_};
    // Re-derive from the parameters rather than trusting the search state.
    if (KnotClass(ors_compose(p)) != big_) throw Error("internal: witness does not recompose");
    found_->push_back(EpiWitness{big_, *small_, p, audit_inequality(p)});
  }

  const KnotClass& big_;
  const SearchBudget& budget_;
  std::uint64_t& nodes_;
  const KnotClass* small_ = nullptr;
  const EvenWord* target_ = nullptr;
  std::vector<EpiWitness>* found_ = nullptr;
  std::vector<Entry> fwd_, bwd_;
  int target_cross_ = 0;
  int r_ = 1;
  int zeros_needed_ = 0;
  std::vector<Entry> word_;
  int cross_ = 0;
  std::vector<int> eps_;
  std::vector<Entry> cvec_;
};

// Both words of the target's class: each serves as the word `a`.
std::vector<EvenWord> target_words(const KnotClass& small) {
  std::vector<EvenWord> words{small.canon()};
  EvenWord other = rev_neg(small.canon());
  if (other != small.canon()) words.push_back(std::move(other));
  return words;
}

void sort_witnesses(std::vector<EpiWitness>& ws) {
  std::sort(ws.begin(), ws.end(), [](const EpiWitness& x, const EpiWitness& y) {
    if (x.small.crossing() != y.small.crossing()) return x.small.crossing() < y.small.crossing();
    if (x.small != y.small) return x.small < y.small;
    return x.params < y.params;
  });
}

void search_target(const KnotClass& k, const KnotClass& small, const SearchBudget& budget, std::uint64_t& nodes,
                   std::vector<EpiWitness>& found) {
  if (small == k || 3 * small.crossing() > k.crossing()) return;
  TargetSearch search(k, budget, nodes);
  for (const auto& a : target_words(small)) search.run(small, a, found);
}

}  // namespace

std::vector<EpiWitness> epi_targets(const KnotClass& k, const SearchBudget& budget) {
  std::vector<EpiWitness> found;
  std::uint64_t nodes = 0;
  for (int c = 3; 3 * c <= k.crossing(); ++c) {
    for (const auto& w : enumerate_words(c)) search_target(k, KnotClass(w), budget, nodes, found);
  }
  sort_witnesses(found);
  return found;
}

std::optional<EpiWitness> admits_epi(const KnotClass& k, const KnotClass& kp, const SearchBudget& budget) {
  std::vector<EpiWitness> found;
  std::uint64_t nodes = 0;
  search_target(k, kp, budget, nodes, found);
  if (found.empty()) return std::nullopt;
  sort_witnesses(found);
  return found.front();
}

bool is_minimal(const KnotClass& k, const SearchBudget& budget) { return epi_targets(k, budget).empty(); }

std::vector<KnotClass> image_knots(const std::vector<EpiWitness>& witnesses) {
  std::vector<KnotClass> out;
  for (const auto& w : witnesses) {
    if (std::find(out.begin(), out.end(), w.small) == out.end()) out.push_back(w.small);
  }
  return out;
}

EpiGraph epi_graph(int max_c, const SearchBudget& budget) {
  EpiGraph g;
  for (int c = 3; c <= max_c; ++c) {
    for (const auto& w : enumerate_words(c)) g.nodes.emplace_back(w);
  }
  for (const auto& k : g.nodes) {
    auto ws = epi_targets(k, budget);
    g.edges.insert(g.edges.end(), ws.begin(), ws.end());
  }
  return g;
}

std::string describe_params(const OrsParams& p) {
  std::ostringstream os;
  os << "target=" << format_word(p.target) << " r=" << p.r << " eps=(";
  for (std::size_t i = 0; i < p.eps.size(); ++i) os << (i ? "," : "") << (p.eps[i] > 0 ? '+' : '-');
  os << ") c=(";
  for (std::size_t i = 0; i < p.cvec.size(); ++i) os << (i ? "," : "") << p.cvec[i];
  os << ")";
  return os.str();
}

namespace {

nlohmann::ordered_json witness_json(const EpiWitness& w) {
  nlohmann::ordered_json j;
  j["from"] = format_word(w.big.canon());
  j["to"] = format_word(w.small.canon());
  j["to_name"] = display_name(w.small);
  j["target_word"] = format_word(w.params.target);
  j["r"] = w.params.r;
  j["eps"] = w.params.eps;
  j["cvec"] = w.params.cvec;
  j["audit"] = {{"term_copies", w.audit.term_copies},
                {"term_cbudget", w.audit.term_cbudget},
                {"term_zero", w.audit.term_zero},
                {"term_signs", w.audit.term_signs},
                {"slack", w.audit.slack}};
  return j;
}

}  // namespace

std::string witness_to_json(const EpiWitness& w) { return witness_json(w).dump(); }

std::string graph_to_json(const EpiGraph& g) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& k : g.nodes) {
    nlohmann::ordered_json n;
    n["word"] = format_word(k.canon());
    n["name"] = display_name(k);
    n["crossing"] = k.crossing();
    n["braid"] = k.braid();
    n["genus"] = k.genus();
    j["nodes"].push_back(n);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) j["edges"].push_back(witness_json(e));
  return j.dump(2);
}

std::string graph_to_dot(const EpiGraph& g) {
  std::ostringstream os;
  os << "digraph epimorphisms {\n  rankdir=TB;\n";
  for (const auto& k : g.nodes) {
    os << "  \"" << format_word(k.canon()) << "\" [label=\"" << display_name(k) << "\\nc=" << k.crossing()
       << " braid=" << k.braid() << "\"];\n";
  }
  for (const auto& e : g.edges) {
    os << "  \"" << format_word(e.big.canon()) << "\" -> \"" << format_word(e.small.canon()) << "\" [label=\""
       << describe_params(e.params) << " slack=" << e.audit.slack << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace bridgekit
