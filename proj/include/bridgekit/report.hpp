#pragma once

#include <string>
#include <vector>

#include "bridgekit/census.hpp"
#include "bridgekit/classify.hpp"
#include "bridgekit/epim.hpp"
#include "bridgekit/knot.hpp"

namespace bridgekit {

enum class Format { Json, Csv, Md, Dot };

/// Throws ParseError for anything but json, csv, md, dot.
Format parse_format(const std::string& name);
std::string to_string(Format f);

struct ReportOptions {
  Format format = Format::Md;
  /// Render rationals as 12-significant-digit decimals instead of p/q.
  bool decimal = false;
  /// Census tables: only the columns that count knots up to mirror image.
  bool up_to_mirror = false;
};

std::string census_report(const std::vector<CensusRow>& rows, const ReportOptions& opt);
std::string table1_report(const std::vector<Table1Row>& rows, const ReportOptions& opt);
std::string identities_report(const std::vector<IdentityResult>& results, const ReportOptions& opt);
/// Everything cmd_invariants prints for one word as typed.
std::string invariants_report(const EvenWord& w, const ReportOptions& opt);
std::string witnesses_report(const std::vector<EpiWitness>& ws, const ReportOptions& opt);

}  // namespace bridgekit
