#pragma once

#include <vector>

#include "bridgekit/census.hpp"
#include "bridgekit/classify.hpp"

namespace bridgekit {

/// Published census values for 3 <= c <= 15 (no per-ell breakdown).
const std::vector<CensusRow>& reference_census();

/// Published list of non-minimal knots with braid index <= 4 and c <= 15,
/// in printed order.
const std::vector<Table1Row>& reference_table1();

}  // namespace bridgekit
