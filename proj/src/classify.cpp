#include "bridgekit/classify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "bridgekit/census.hpp"
#include "bridgekit/knot.hpp"
#include "bridgekit/parallel.hpp"

namespace bridgekit {

std::string to_string(Structure s) {
  switch (s) {
    case Structure::B2: return "B2";
    case Structure::T3a: return "T3a";
    case Structure::T3b: return "T3b";
    case Structure::T4a: return "T4a";
    case Structure::T4b: return "T4b";
    case Structure::T4c: return "T4c";
    case Structure::T4d: return "T4d";
    case Structure::Other: break;
  }
  return "other";
}

std::string to_string(NonminimalKind k) {
  switch (k) {
    case NonminimalKind::Torus: return "2";
    case NonminimalKind::A3_1: return "3A1";
    case NonminimalKind::A3_2: return "3A2";
    case NonminimalKind::B3: return "3B";
    case NonminimalKind::A4: return "4A";
    case NonminimalKind::B4_1: return "4B1";
    case NonminimalKind::B4_2: return "4B2";
    case NonminimalKind::B4_3: return "4B3";
    case NonminimalKind::C4_1: return "4C1";
    case NonminimalKind::C4_2: return "4C2";
    case NonminimalKind::D4: return "4D";
  }
  return "?";
}

StructureTag structure(const EvenWord& w) {
  const EvenWord v = w[0] > 0 ? w : negate(w);
  const int b = braid_index(v);
  StructureTag out;
  if (b < 2 || b > 4) return out;

  std::vector<int> big;    // 1-based positions with |entry| > 2
  std::vector<int> gaps;   // 1-based i with v_i v_{i+1} > 0
  int excess = 0;          // sum of (|a_i| - 1)
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Entry mag = v[i] < 0 ? -v[i] : v[i];
    if (mag > 2) big.push_back(static_cast<int>(i) + 1);
    excess += static_cast<int>(mag / 2 - 1);
    if (i + 1 < v.size() && (v[i] < 0) == (v[i + 1] < 0)) gaps.push_back(static_cast<int>(i) + 1);
  }

  if (b == 2) {
    out.tag = Structure::B2;
  } else if (b == 3) {
    if (excess == 1) {
      out.tag = Structure::T3a;
      out.i0 = big[0];
    } else {
      out.tag = Structure::T3b;
      out.i0 = gaps[0];
    }
  } else if (excess == 2) {
    if (big.size() == 1) {
      out.tag = Structure::T4a;
      out.i0 = big[0];
    } else {
      out.tag = Structure::T4b;
      out.i0 = big[0];
      out.i1 = big[1];
    }
  } else if (excess == 1) {
    out.tag = Structure::T4c;
    out.i0 = big[0];
    out.i1 = gaps[0];
  } else {
    out.tag = Structure::T4d;
    out.i0 = gaps[0];
    out.i1 = gaps[1];
  }
  return out;
}

namespace {

struct Factorization {
  int r;
  int m;
};

// All (r, m) >= 1 with (2r+1)(2m+1) == n.
std::vector<Factorization> factorizations(int n) {
  std::vector<Factorization> out;
  for (int q = 3; q * 3 <= n; q += 2) {
    if (n % q == 0) out.push_back({(n / q - 1) / 2, (q - 1) / 2});
  }
  return out;
}

void match_word(const EvenWord& v, std::vector<NonminimalType>& out) {
  const StructureTag tag = structure(v);
  const int len = static_cast<int>(v.size());  // 2k
  auto emit = [&](NonminimalKind kind, Factorization f, std::optional<int> i0, std::optional<int> i1,
                  std::optional<int> j0, std::optional<int> j1) {
    out.push_back(NonminimalType{kind, v, f.r, f.m, i0, i1, j0, j1});
  };

  switch (tag.tag) {
    case Structure::B2:
      for (auto f : factorizations(len + 1)) emit(NonminimalKind::Torus, f, {}, {}, {}, {});
      break;

    case Structure::T3a: {
      const int i0 = *tag.i0;
      for (auto f : factorizations(len + 1)) {
        const int q = 2 * f.m + 1;
        for (int j0 = 1; j0 <= 2 * f.r; ++j0) {
          if (i0 == j0 * q) emit(NonminimalKind::A3_1, f, i0, {}, j0, {});
        }
      }
      for (auto f : factorizations(len + 3)) {
        const int q = 2 * f.m + 1;
        for (int j0 = 1; j0 <= 2 * f.r; ++j0) {
          if (i0 == j0 * q - 1) emit(NonminimalKind::A3_2, f, i0, {}, j0, {});
        }
      }
      break;
    }

    case Structure::T3b: {
      const int i0 = *tag.i0;
      for (auto f : factorizations(len + 1)) {
        const int q = 2 * f.m + 1;
        for (int j0 = 1; j0 <= 2 * f.r; ++j0) {
          if (i0 == j0 * q || i0 == j0 * q - 1) emit(NonminimalKind::B3, f, i0, {}, j0, {});
        }
      }
      break;
    }

    case Structure::T4a: {
      const int i0 = *tag.i0;
      for (auto f : factorizations(len + 1)) {
        const int q = 2 * f.m + 1;
        for (int j0 = 1; j0 <= 2 * f.r; ++j0) {
          if (i0 == j0 * q) emit(NonminimalKind::A4, f, i0, {}, j0, {});
        }
      }
      break;
    }

    case Structure::T4b: {
      // The two 4s are unordered; try both labellings.
      const int p0 = *tag.i0, p1 = *tag.i1;
      const std::pair<int, int> labellings[] = {{p0, p1}, {p1, p0}};
      for (auto f : factorizations(len + 1)) {
        const int q = 2 * f.m + 1;
        for (int j0 = 1; j0 <= 2 * f.r; ++j0) {
          for (int j1 = 1; j1 <= 2 * f.r; ++j1) {
            if (j0 != j1 && p0 == j0 * q && p1 == j1 * q) emit(NonminimalKind::B4_1, f, p0, p1, j0, j1);
          }
        }
      }
      for (auto f : factorizations(len + 3)) {
        const int q = 2 * f.m + 1;
        for (auto [i0, i1] : labellings) {
          for (int j0 = 1; j0 <= 2 * f.r; ++j0) {
            for (int j1 = 1; j1 <= 2 * f.r; ++j1) {
              if (j0 == j1 || i0 != j0 * q - 1) continue;
              if ((j1 < j0 && i1 == j1 * q) || (j1 > j0 && i1 == j1 * q - 2)) {
                emit(NonminimalKind::B4_2, f, i0, i1, j0, j1);
              }
            }
          }
        }
      }
      for (auto f : factorizations(len + 5)) {
        const int q = 2 * f.m + 1;
        for (auto [i0, i1] : labellings) {
          for (int j0 = 1; j0 <= 2 * f.r; ++j0) {
            for (int j1 = j0 + 1; j1 <= 2 * f.r; ++j1) {
              if (i0 == j0 * q - 1 && i1 == j1 * q - 3) emit(NonminimalKind::B4_3, f, i0, i1, j0, j1);
            }
          }
        }
      }
      break;
    }

    case Structure::T4c: {
      const int i0 = *tag.i0, i1 = *tag.i1;
      for (auto f : factorizations(len + 1)) {
        const int q = 2 * f.m + 1;
        for (int j0 = 1; j0 <= 2 * f.r; ++j0) {
          for (int j1 = 1; j1 <= 2 * f.r; ++j1) {
            if (i0 == j0 * q && (i1 == j1 * q || i1 == j1 * q - 1)) emit(NonminimalKind::C4_1, f, i0, i1, j0, j1);
          }
        }
      }
      for (auto f : factorizations(len + 3)) {
        const int q = 2 * f.m + 1;
        for (int j0 = 1; j0 <= 2 * f.r; ++j0) {
          for (int j1 = 1; j1 <= 2 * f.r; ++j1) {
            if (j0 == j1 || i0 != j0 * q - 1) continue;
            const bool hit = j1 < j0 ? (i1 == j1 * q || i1 == j1 * q - 1) : (i1 == j1 * q - 2 || i1 == j1 * q - 3);
            if (hit) emit(NonminimalKind::C4_2, f, i0, i1, j0, j1);
          }
        }
      }
      break;
    }

    case Structure::T4d: {
      const int i0 = *tag.i0, i1 = *tag.i1;
      for (auto f : factorizations(len + 1)) {
        const int q = 2 * f.m + 1;
        for (int j0 = 1; j0 <= 2 * f.r; ++j0) {
          for (int j1 = j0; j1 <= 2 * f.r; ++j1) {
            const bool a = i0 == j0 * q - 1 || i0 == j0 * q;
            const bool b = i1 == j1 * q - 1 || i1 == j1 * q;
            if (a && b && i0 < i1) emit(NonminimalKind::D4, f, i0, i1, j0, j1);
          }
        }
      }
      break;
    }

    case Structure::Other:
      break;
  }
}

}  // namespace

std::vector<NonminimalType> nonminimal_matches(const EvenWord& w) {
  // The criteria are stated for words with a positive leading entry, up to
  // mirror image: check the positive-lead versions of w and reverse(w).
  const EvenWord a = w[0] > 0 ? w : negate(w);
  const EvenWord rw = reverse(w);
  const EvenWord b = rw[0] > 0 ? rw : negate(rw);
  std::vector<NonminimalType> out;
  match_word(a, out);
  if (b != a) match_word(b, out);
  std::stable_sort(out.begin(), out.end(), [](const NonminimalType& x, const NonminimalType& y) {
    return to_string(x.kind) < to_string(y.kind);
  });
  return out;
}

std::optional<NonminimalType> nonminimal_type(const EvenWord& w) {
  auto all = nonminimal_matches(w);
  if (all.empty()) return std::nullopt;
  return all.front();
}

OrsParams witness_params(const NonminimalType& t) {
  const int r2 = 2 * t.r;
  const int q = 2 * t.m + 1;
  std::vector<Entry> torus;
  for (int i = 0; i < 2 * t.m; ++i) torus.push_back(i % 2 == 0 ? 2 : -2);

  // 1-based helpers.
  std::vector<int> eps(static_cast<std::size_t>(r2 + 1), 1);
  std::vector<Entry> mag(static_cast<std::size_t>(r2), 1);
  std::map<int, int> forced_sign;  // j -> sign of c_j
  auto alt = [](int j) { return j % 2 == 1 ? 1 : -1; };  // (-1)^{j-1}
  auto flip_after = [&](int j) {
    for (int i = j + 1; i <= r2 + 1; ++i) eps[static_cast<std::size_t>(i - 1)] = -eps[static_cast<std::size_t>(i - 1)];
  };
  const int j0 = t.j0.value_or(0), j1 = t.j1.value_or(0);
  const int i0 = t.i0.value_or(0), i1 = t.i1.value_or(0);

  switch (t.kind) {
    case NonminimalKind::Torus:
      break;
    case NonminimalKind::A3_1:
      mag[j0 - 1] = 2;
      break;
    case NonminimalKind::A3_2:
      mag[j0 - 1] = 0;
      break;
    case NonminimalKind::B3:
      flip_after(j0);
      forced_sign[j0] = i0 == j0 * q ? alt(j0) : -alt(j0);
      break;
    case NonminimalKind::A4:
      mag[j0 - 1] = 3;
      break;
    case NonminimalKind::B4_1:
      mag[j0 - 1] = mag[j1 - 1] = 2;
      break;
    case NonminimalKind::B4_2:
      mag[j0 - 1] = 0;
      mag[j1 - 1] = 2;
      break;
    case NonminimalKind::B4_3:
      mag[j0 - 1] = mag[j1 - 1] = 0;
      break;
    case NonminimalKind::C4_1:
      mag[j0 - 1] = 2;
      flip_after(j1);
      forced_sign[j1] = i1 == j1 * q ? alt(j1) : -alt(j1);
      break;
    case NonminimalKind::C4_2: {
      mag[j0 - 1] = 0;
      flip_after(j1);
      const bool first_option = j1 < j0 ? i1 == j1 * q : i1 == j1 * q - 2;
      forced_sign[j1] = first_option ? alt(j1) : -alt(j1);
      break;
    }
    case NonminimalKind::D4:
      if (j0 == j1) {
        forced_sign[j0] = -alt(j0);
      } else {
        flip_after(j0);
        flip_after(j1);
        forced_sign[j0] = i0 == j0 * q ? alt(j0) : -alt(j0);
        forced_sign[j1] = i1 == j1 * q - 1 ? alt(j1) : -alt(j1);
      }
      break;
  }

  std::vector<Entry> cvec(static_cast<std::size_t>(r2));
  for (int j = 1; j <= r2; ++j) {
    auto it = forced_sign.find(j);
    // Otherwise (-1)^j eps_j c_j < 0.
    const int sign = it != forced_sign.end() ? it->second : alt(j) * eps[static_cast<std::size_t>(j - 1)];
    cvec[static_cast<std::size_t>(j - 1)] = sign * mag[static_cast<std::size_t>(j - 1)];
  }
  return OrsParams{EvenWord(std::move(torus)), t.r, std::move(eps), std::move(cvec)};
}

namespace {

std::string bracket_word(const EvenWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + std::to_string(w[i]);
  return s + "]";
}

std::string join_images(const std::vector<std::string>& images) {
  std::string s;
  for (std::size_t i = 0; i < images.size(); ++i) s += (i ? " and " : "") + images[i];
  return s;
}

}  // namespace

std::string describe_row(const Table1Row& row) {
  std::ostringstream os;
  os << row.braid << " | " << row.type << " | " << row.crossing << " | " << bracket_word(row.word) << " | "
     << (row.images.empty() ? "-" : join_images(row.images));
  return os.str();
}

std::vector<Table1Row> table1(const Table1Options& options) {
  std::vector<EvenWord> candidates;
  for (int c = 3; c <= options.max_c; ++c) {
    for_each_canonical_word(c, [&](std::span<const Entry> w) {
      if (options.up_to_mirror && !is_mirror_canonical(w)) return;
      EvenWord ew = make_even_word_unchecked(std::vector<Entry>(w.begin(), w.end()));
      if (braid_index(ew) <= 4) candidates.push_back(std::move(ew));
    });
  }

  std::vector<std::optional<Table1Row>> slots(candidates.size());
  parallel_for(candidates.size(), options.parallelism, [&](std::size_t i) {
    const EvenWord shown = options.up_to_mirror ? positive_representative(candidates[i]) : candidates[i];
    const KnotClass k(shown);
    auto kind = nonminimal_type(shown);
    auto witnesses = epi_targets(k, options.budget);
    if (!kind && witnesses.empty()) return;
    Table1Row row;
    row.braid = k.braid();
    row.type = kind ? to_string(kind->kind) : "?";
    row.crossing = k.crossing();
    row.word = shown;
    for (const auto& img : image_knots(witnesses)) {
      std::string name = display_name(img);
      if (std::find(row.images.begin(), row.images.end(), name) == row.images.end()) row.images.push_back(name);
    }
    row.detail = kind;
    slots[i] = std::move(row);
  });

  std::vector<Table1Row> rows;
  for (auto& s : slots) {
    if (s) rows.push_back(std::move(*s));
  }
  std::sort(rows.begin(), rows.end(), [](const Table1Row& a, const Table1Row& b) {
    return std::tie(a.braid, a.type, a.crossing, a.images, a.word) <
           std::tie(b.braid, b.type, b.crossing, b.images, b.word);
  });
  return rows;
}

std::vector<std::string> diff_table1(const std::vector<Table1Row>& produced, const std::vector<Table1Row>& expected) {
  std::vector<std::string> out;
  for (const auto& e : expected) {
    if (std::find(produced.begin(), produced.end(), e) == produced.end()) out.push_back("- " + describe_row(e));
  }
  for (const auto& p : produced) {
    if (std::find(expected.begin(), expected.end(), p) == expected.end()) out.push_back("+ " + describe_row(p));
  }
  if (out.empty() && produced != expected) {
    for (std::size_t i = 0; i < produced.size(); ++i) {
      if (!(produced[i] == expected[i])) {
        out.push_back("~ row " + std::to_string(i + 1) + " out of order: " + describe_row(produced[i]));
      }
    }
  }
  return out;
}

}  // namespace bridgekit
