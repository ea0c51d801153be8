#include "bridgekit/report.hpp"

#include <sstream>
#include <utility>

#include "json.hpp"

namespace bridgekit {

using nlohmann::ordered_json;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "md") return Format::Md;
  if (name == "dot") return Format::Dot;
  throw ParseError("unknown format '" + name + "'", name, 0);
}

std::string to_string(Format f) {
  switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Md: return "md";
    case Format::Dot: return "dot";
  }
  return "?";
}

namespace {

std::string show(const Rational& q, const ReportOptions& opt) { return opt.decimal ? q.to_decimal(12) : q.to_string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

// Rows of cells rendered as a markdown table or CSV.
std::string grid(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows, Format f) {
  std::ostringstream os;
  if (f == Format::Csv) {
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
      os << '\n';
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
  }
  auto line = [&](const std::vector<std::string>& cells) {
    os << '|';
    for (const auto& c : cells) os << ' ' << c << " |";
    os << '\n';
  };
  line(header);
  os << '|';
  for (std::size_t i = 0; i < header.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& r : rows) line(r);
  return os.str();
}

std::string bracket_word(const EvenWord& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + std::to_string(w[i]);
  return s + "]";
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

ordered_json params_json(const OrsParams& p) {
  return ordered_json{{"target", format_word(p.target)}, {"r", p.r}, {"eps", p.eps}, {"c", p.cvec}};
}

void reject_dot(Format f, const char* what) {
  if (f == Format::Dot) throw ParseError(std::string("dot output is only available for graphs, not ") + what, "dot", 0);
}

}  // namespace

std::string census_report(const std::vector<CensusRow>& rows, const ReportOptions& opt) {
  reject_dot(opt.format, "census tables");
  const bool mirror = opt.up_to_mirror;
  if (opt.format == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["c"] = r.c;
      if (!mirror) {
        j["tk"] = r.tk.str();
        j["ts"] = r.ts.str();
        j["avg_braid"] = show(r.avg_braid, opt);
      }
      j["tk_star"] = r.tk_star.str();
      j["ts_star"] = r.ts_star.str();
      j["avg_braid_star"] = show(r.avg_braid_star, opt);
      if (!mirror) {
        j["avg_genus"] = show(r.avg_genus, opt);
        ordered_json by = ordered_json::object();
        for (const auto& e : r.by_ell) by[std::to_string(e.ell)] = e.count.str();
        j["by_ell"] = by;
      }
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  const bool csv = opt.format == Format::Csv;
  std::vector<std::string> header;
  if (mirror) {
    header = csv ? std::vector<std::string>{"c", "tk_star", "ts_star", "avg_braid_star"}
                 : std::vector<std::string>{"c", "TK*", "TS*", "avg braid*"};
  } else {
    header = csv ? std::vector<std::string>{"c", "tk", "ts", "avg_braid", "tk_star", "ts_star", "avg_braid_star",
                                            "avg_genus"}
                 : std::vector<std::string>{"c", "TK", "TS", "avg braid", "TK*", "TS*", "avg braid*"};
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    std::vector<std::string> row = {std::to_string(r.c)};
    if (!mirror) row.insert(row.end(), {r.tk.str(), r.ts.str(), show(r.avg_braid, opt)});
    row.insert(row.end(), {r.tk_star.str(), r.ts_star.str(), show(r.avg_braid_star, opt)});
    if (csv && !mirror) row.push_back(show(r.avg_genus, opt));
    cells.push_back(std::move(row));
  }
  return grid(header, cells, opt.format);
}

std::string table1_report(const std::vector<Table1Row>& rows, const ReportOptions& opt) {
  reject_dot(opt.format, "table1");
  if (opt.format == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : rows) {
      ordered_json j;
      j["braid"] = r.braid;
      j["type"] = r.type;
      j["crossing"] = r.crossing;
      j["word"] = format_word(r.word);
      j["images"] = r.images;
      if (r.detail) {
        const auto& d = *r.detail;
        ordered_json p;
        p["r"] = d.r;
        p["m"] = d.m;
        auto opt_int = [](const std::optional<int>& v) { return v ? ordered_json(*v) : ordered_json(nullptr); };
        p["i0"] = opt_int(d.i0);
        p["i1"] = opt_int(d.i1);
        p["j0"] = opt_int(d.j0);
        p["j1"] = opt_int(d.j1);
        p["matched_word"] = format_word(d.word);
        p["witness"] = params_json(witness_params(d));
        j["params"] = p;
      } else {
        j["params"] = nullptr;
      }
      arr.push_back(j);
    }
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows) {
    const std::string word = opt.format == Format::Md ? bracket_word(r.word) : format_word(r.word);
    cells.push_back({std::to_string(r.braid), r.type, std::to_string(r.crossing), word, join(r.images, " and ")});
  }
  return grid({"braid", "type", "c", "word", "onto"}, cells, opt.format);
}

std::string identities_report(const std::vector<IdentityResult>& results, const ReportOptions& opt) {
  reject_dot(opt.format, "identities");
  if (opt.format == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      arr.push_back(ordered_json{{"name", r.name},
                                 {"statement", r.statement},
                                 {"cases", r.cases},
                                 {"passed", r.passed},
                                 {"counterexample", r.counterexample ? ordered_json(*r.counterexample) : nullptr}});
    }
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : results) {
    cells.push_back({r.name, r.statement, std::to_string(r.cases), r.passed ? "pass" : "FAIL",
                     r.counterexample.value_or("")});
  }
  return grid({"identity", "statement", "cases", "result", "counterexample"}, cells, opt.format);
}

std::string invariants_report(const EvenWord& w, const ReportOptions& opt) {
  reject_dot(opt.format, "invariants");
  const KnotClass k(w);
  const auto torus = is_torus_two_strand(k);
  const std::vector<std::pair<std::string, std::string>> fields = {
      {"word", format_word(w)},
      {"canonical", format_word(k.canon())},
      {"mirror_canonical", format_word(mirror_canonical(w))},
      {"value", show(eval(w), opt)},
      {"crossing", std::to_string(k.crossing())},
      {"braid", std::to_string(k.braid())},
      {"genus", std::to_string(k.genus())},
      {"sign_changes", std::to_string(sign_changes(w))},
      {"torus", torus ? "T(" + std::to_string(*torus) + ",2)" : ""},
      {"name", display_name(k)},
  };
  if (opt.format == Format::Json) {
    ordered_json j;
    j["word"] = format_word(w);
    j["canonical"] = format_word(k.canon());
    j["mirror_canonical"] = format_word(mirror_canonical(w));
    j["value"] = show(eval(w), opt);
    j["crossing"] = k.crossing();
    j["braid"] = k.braid();
    j["genus"] = k.genus();
    j["sign_changes"] = sign_changes(w);
    j["torus"] = torus ? ordered_json(*torus) : ordered_json(nullptr);
    j["name"] = display_name(k);
    return j.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& [key, value] : fields) cells.push_back({key, value.empty() ? "-" : value});
  return grid({"field", "value"}, cells, opt.format);
}

std::string witnesses_report(const std::vector<EpiWitness>& ws, const ReportOptions& opt) {
  reject_dot(opt.format, "witness lists");
  if (opt.format == Format::Json) {
    ordered_json arr = ordered_json::array();
    for (const auto& w : ws) arr.push_back(ordered_json::parse(witness_to_json(w)));
    return arr.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> cells;
  for (const auto& w : ws) {
    const auto& a = w.audit;
    cells.push_back({format_word(w.big.canon()), display_name(w.small), format_word(w.small.canon()),
                     std::to_string(w.params.r), describe_params(w.params), std::to_string(a.term_copies),
                     std::to_string(a.term_cbudget), std::to_string(a.term_zero), std::to_string(a.term_signs),
                     std::to_string(a.slack)});
  }
  return grid({"knot", "image", "image word", "r", "params", "copies", "cbudget", "zero", "signs", "slack"}, cells,
              opt.format);
}

}  // namespace bridgekit
