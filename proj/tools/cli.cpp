#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "bridgekit/census.hpp"
#include "bridgekit/classify.hpp"
#include "bridgekit/epim.hpp"
#include "bridgekit/error.hpp"
#include "bridgekit/reference_tables.hpp"
#include "bridgekit/report.hpp"

namespace bridgekit::cli {

namespace {

struct Config {
  int ceiling = 22;
  std::uint64_t budget = SearchBudget{}.max_nodes;
  Format format = Format::Md;
  bool format_given = false;
  unsigned jobs = 1;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_positive(const std::string& key, const std::string& value, bool allow_zero) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != value.size() || v < 0 || (v == 0 && !allow_zero)) {
    throw ParseError(key + ": expected a positive integer, got '" + value + "'", value, 0);
  }
  return v;
}

void apply_setting(Config& cfg, const std::string& key, const std::string& value) {
  if (key == "ceiling") {
    cfg.ceiling = static_cast<int>(parse_positive(key, value, false));
  } else if (key == "budget") {
    cfg.budget = static_cast<std::uint64_t>(parse_positive(key, value, false));
  } else if (key == "format") {
    cfg.format = parse_format(value);
    cfg.format_given = true;
  } else if (key == "jobs") {
    cfg.jobs = static_cast<unsigned>(parse_positive(key, value, true));
  } else {
    throw ParseError("unknown config key '" + key + "'", key, 0);
  }
}

// key = value lines; '#' starts a comment.
void load_config_file(Config& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file " + path, path, 0);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(path + ":" + std::to_string(lineno) + ": expected key=value", line, 0);
    std::string value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    apply_setting(cfg, trim(line.substr(0, eq)), value);
  }
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int c = static_cast<int>(parse_positive("range", text, false));
    return {c, c};
  }
  const int lo = static_cast<int>(parse_positive("range", text.substr(0, dots), false));
  const int hi = static_cast<int>(parse_positive("range", text.substr(dots + 2), false));
  if (lo > hi) throw ParseError("empty range " + text, text, 0);
  return {lo, hi};
}

void require_within(int value, int ceiling, const std::string& what) {
  if (value > ceiling) {
    throw ResourceBound(what + " " + std::to_string(value) + " exceeds the enumeration ceiling " +
                        std::to_string(ceiling) + " (raise it with --ceiling)");
  }
}

// CLI11 reads "-2,2" as an unknown short flag; words may therefore be written
// after "--" or with a leading '='. A leading '=' is stripped here.
std::string word_arg(const std::string& s) { return !s.empty() && s.front() == '=' ? s.substr(1) : s; }

std::string minimal_line(const EvenWord& w, const std::vector<EpiWitness>& ws) {
  if (ws.empty()) return format_word(w) + ": minimal\n";
  std::string names;
  for (const auto& k : image_knots(ws)) names += (names.empty() ? "" : " and ") + display_name(k);
  return format_word(w) + ": not minimal, onto " + names + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"two-bridge knot census, epimorphisms and minimality", "bridgekit"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name, config_path;
  std::optional<int> ceiling_flag;
  std::optional<std::uint64_t> budget_flag;
  std::optional<unsigned> jobs_flag;
  bool decimal = false;
  app.add_option("--format", format_name, "output format: json, csv, md or dot");
  app.add_option("--config", config_path, "key=value file (ceiling, budget, format, jobs)");
  app.add_option("--ceiling", ceiling_flag, "largest crossing number to enumerate");
  app.add_option("--budget", budget_flag, "node ceiling for each epimorphism search");
  app.add_option("--jobs", jobs_flag, "worker threads, 0 = all cores");
  app.add_flag("--decimal", decimal, "print rationals as decimals");

  std::string word1, word2;
  auto* inv = app.add_subcommand("invariants", "invariants of one word");
  inv->add_option("word", word1, "comma-separated even entries, e.g. 2,-4,4,-2")->required();

  std::string range;
  bool verify = false, up_to_mirror = false, formulas_only = false;
  auto* census = app.add_subcommand("census", "knot counts by crossing number");
  census->add_option("range", range, "c or lo..hi")->required();
  census->add_flag("--verify", verify, "compare enumeration, closed forms and the reference table");
  census->add_flag("--up-to-mirror", up_to_mirror, "show the mirror-class columns only");
  census->add_flag("--formulas-only", formulas_only, "evaluate closed forms without enumerating");

  auto* epi = app.add_subcommand("epi", "epimorphisms between two-bridge knot groups");
  epi->require_subcommand(1);
  auto* targets = epi->add_subcommand("targets", "all proper images of a knot");
  targets->add_option("word", word1)->required();
  auto* check = epi->add_subcommand("check", "search for K >= K'");
  check->add_option("word", word1)->required();
  check->add_option("target", word2)->required();
  int graph_max = 0;
  auto* graph = epi->add_subcommand("graph", "epimorphism digraph as dot or json");
  graph->add_option("--max-c", graph_max)->required();
  auto* minimal = epi->add_subcommand("minimal", "decide minimality by search");
  minimal->add_option("word", word1)->required();

  int table_max = 15;
  auto* t1 = app.add_subcommand("table1", "non-minimal knots with braid index <= 4");
  t1->add_option("--max-c", table_max, "largest crossing number");

  int n_max = 200;
  auto* ids = app.add_subcommand("identities", "binomial identity checks");
  ids->add_option("--n-max", n_max, "largest n checked");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    Config cfg;
    if (!config_path.empty()) load_config_file(cfg, config_path);
    if (const char* env = std::getenv("BRIDGEKIT_CEILING"); env && *env) apply_setting(cfg, "ceiling", env);
    if (ceiling_flag) apply_setting(cfg, "ceiling", std::to_string(*ceiling_flag));
    if (budget_flag) apply_setting(cfg, "budget", std::to_string(*budget_flag));
    if (jobs_flag) apply_setting(cfg, "jobs", std::to_string(*jobs_flag));
    if (!format_name.empty()) apply_setting(cfg, "format", format_name);

    ReportOptions ropt{cfg.format, decimal, false};
    const SearchBudget budget{cfg.budget};

    if (*inv) {
      out << invariants_report(parse_even_word(word_arg(word1)), ropt);
      return kOk;
    }

    if (*census) {
      const auto [lo, hi] = parse_range(range);
      if (lo < 1) throw ParseError("crossing numbers start at 1", range, 0);
      if (!formulas_only) require_within(hi, cfg.ceiling, "crossing number");
      std::vector<CensusRow> rows;
      int mismatches = 0;
      for (int c = lo; c <= hi; ++c) {
        CensusRow closed = closed_row(c);
        if (formulas_only) {
          rows.push_back(std::move(closed));
          continue;
        }
        CensusRow brute = brute_counts(c, CensusConfig{cfg.ceiling, cfg.jobs});
        if (verify) {
          for (const auto& line : compare_rows(brute, closed)) {
            err << "c=" << c << " enumeration vs formula: " << line << "\n";
            ++mismatches;
          }
          for (const auto& ref : reference_census()) {
            if (ref.c != c) continue;
            CensusRow published = brute;
            published.tk = ref.tk;
            published.ts = ref.ts;
            published.tk_star = ref.tk_star;
            published.ts_star = ref.ts_star;
            published.avg_braid = ref.avg_braid;
            published.avg_braid_star = ref.avg_braid_star;
            for (const auto& line : compare_rows(brute, published)) {
              err << "c=" << c << " enumeration vs reference table: " << line << "\n";
              ++mismatches;
            }
          }
        }
        rows.push_back(std::move(brute));
      }
      ropt.up_to_mirror = up_to_mirror;
      out << census_report(rows, ropt);
      if (verify) {
        err << (mismatches ? std::to_string(mismatches) + " mismatches\n" : "verified: no mismatches\n");
        if (mismatches) return kMismatch;
      }
      return kOk;
    }

    if (*epi) {
      if (*graph) {
        require_within(graph_max, cfg.ceiling, "max-c");
        const EpiGraph g = epi_graph(graph_max, budget);
        out << (cfg.format == Format::Json ? graph_to_json(g) + "\n" : graph_to_dot(g));
        return kOk;
      }
      const KnotClass k(parse_even_word(word_arg(word1)));
      try {
        if (*targets) {
          out << witnesses_report(epi_targets(k, budget), ropt);
        } else if (*minimal) {
          out << minimal_line(k.canon(), epi_targets(k, budget));
        } else if (*check) {
          const KnotClass kp(parse_even_word(word_arg(word2)));
          auto w = admits_epi(k, kp, budget);
          if (w) {
            out << witnesses_report({*w}, ropt);
          } else {
            out << "no epimorphism " << format_word(k.canon()) << " -> " << format_word(kp.canon()) << "\n";
          }
        }
      } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        err << "partial results (incomplete, " << e.partial().size() << " witnesses):\n";
        out << witnesses_report(e.partial(), ropt);
        return kResource;
      }
      return kOk;
    }

    if (*t1) {
      if (table_max < 1) throw ParseError("--max-c must be positive", std::to_string(table_max), 0);
      require_within(table_max, cfg.ceiling, "max-c");
      Table1Options topt;
      topt.max_c = table_max;
      topt.parallelism = cfg.jobs;
      topt.budget = budget;
      const auto rows = table1(topt);
      out << table1_report(rows, ropt);
      if (table_max == 15) {
        const auto diff = diff_table1(rows, reference_table1());
        if (!diff.empty()) {
          err << "table1 differs from the reference table:\n";
          for (const auto& line : diff) err << line << "\n";
          return kMismatch;
        }
        err << "table1 matches the reference table (" << rows.size() << " rows)\n";
      }
      return kOk;
    }

    if (*ids) {
      if (n_max < 1) throw ParseError("--n-max must be positive", std::to_string(n_max), 0);
      const auto results = verify_identities(n_max);
      out << identities_report(results, ropt);
      for (const auto& r : results) {
        if (!r.passed) return kMismatch;
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << " (token '" << e.token() << "' at offset " << e.position() << ")\n";
    return kParse;
  } catch (const ResourceBound& e) {
    err << "resource bound: " << e.what() << "\n";
    return kResource;
  } catch (const BudgetExceeded& e) {
    err << "search budget exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace bridgekit::cli
