#include "bridgekit/reference_tables.hpp"

#include <string>

namespace bridgekit {

namespace {

struct CensusLiteral {
  int c;
  long tk, ts, tk_star, ts_star;
  long avg_num, avg_den, avg_star_num, avg_star_den;
};

// Counts of two-bridge knots by crossing number: TK, TS, then the same up to
// mirror image, with the average braid indices as fractions.
constexpr CensusLiteral kCensus[] = {
    {3, 2, 2, 1, 1, 2, 1, 2, 1},
    {4, 1, 0, 1, 0, 3, 1, 3, 1},
    {5, 4, 8, 2, 4, 5, 2, 5, 2},
    {6, 5, 6, 3, 4, 17, 5, 10, 3},
    {7, 14, 30, 7, 15, 24, 7, 24, 7},
    {8, 21, 44, 12, 24, 83, 21, 4, 1},
    {9, 48, 132, 24, 66, 33, 8, 33, 8},
    {10, 85, 242, 45, 128, 389, 85, 206, 45},
    {11, 182, 598, 91, 299, 34, 7, 34, 7},
    {12, 341, 1208, 176, 620, 1783, 341, 461, 88},
    {13, 704, 2764, 352, 1382, 1949, 352, 1949, 352},
    {14, 1365, 5758, 693, 2920, 8041, 1365, 4084, 693},
    {15, 2774, 12678, 1387, 6339, 8620, 1387, 8620, 1387},
};

struct Table1Literal {
  int braid;
  const char* type;
  int crossing;
  std::vector<Entry> word;
  std::vector<std::string> images;
};

std::vector<Table1Row> build_table1() {
  const std::vector<std::string> t3 = {"3_1"};
  const std::vector<std::string> t5 = {"5_1"};
  const std::vector<Table1Literal> lit = {
      {2, "2", 9, {2, -2, 2, -2, 2, -2, 2, -2}, t3},
      {2, "2", 15, {2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2}, {"3_1", "5_1"}},
      {3, "3A1", 11, {2, -2, 2, -2, 2, -4, 2, -2}, t3},
      {3, "3A2", 9, {2, -4, 2, -2, 2, -2}, t3},
      {3, "3A2", 15, {2, -4, 2, -2, 2, -2, 2, -2, 2, -2, 2, -2}, t3},
      {3, "3A2", 15, {2, -2, 2, -2, 2, -2, 2, -4, 2, -2, 2, -2}, t3},
      {3, "3A2", 15, {2, -2, 2, -4, 2, -2, 2, -2, 2, -2, 2, -2}, t5},
      {3, "3B", 10, {2, -2, -2, 2, -2, 2, -2, 2}, t3},
      {3, "3B", 10, {2, -2, 2, -2, 2, 2, -2, 2}, t3},
      {4, "4A", 13, {2, -2, 2, -2, 2, -6, 2, -2}, t3},
      {4, "4B1", 13, {2, -2, 4, -2, 2, -4, 2, -2}, t3},
      {4, "4B2", 11, {2, -4, 2, -4, 2, -2}, t3},
      {4, "4B3", 9, {2, -4, 4, -2}, t3},
      {4, "4B3", 15, {2, -4, 2, -2, 2, -4, 2, -2, 2, -2}, t3},
      {4, "4B3", 15, {2, -4, 2, -2, 2, -2, 2, -2, 4, -2}, t3},
      {4, "4B3", 15, {2, -4, 4, -2, 2, -2, 2, -2, 2, -2}, t3},
      {4, "4B3", 15, {2, -2, 2, -2, 4, -4, 2, -2, 2, -2}, t3},
      {4, "4B3", 15, {2, -2, 2, -4, 2, -2, 4, -2, 2, -2}, t5},
      {4, "4C1", 12, {2, -2, -4, 2, -2, 2, -2, 2}, t3},
      {4, "4C1", 12, {2, -2, -2, 2, -2, 4, -2, 2}, t3},
      {4, "4C1", 12, {2, -2, 2, -2, 2, 4, -2, 2}, t3},
      {4, "4C1", 12, {2, -2, 2, 2, -2, 4, -2, 2}, t3},
      {4, "4C2", 10, {2, -4, 2, -2, -2, 2}, t3},
      {4, "4C2", 10, {2, -4, 2, 2, -2, 2}, t3},
      {4, "4D", 11, {2, -2, -2, -2, 2, -2, 2, -2}, t3},
      {4, "4D", 11, {2, -2, -2, 2, -2, -2, 2, -2}, t3},
      {4, "4D", 11, {2, -2, -2, 2, -2, 2, 2, -2}, t3},
      {4, "4D", 11, {2, -2, 2, 2, -2, -2, 2, -2}, t3},
  };
  std::vector<Table1Row> rows;
  for (const auto& l : lit) {
    Table1Row row;
    row.braid = l.braid;
    row.type = l.type;
    row.crossing = l.crossing;
    row.word = EvenWord(l.word);
    row.images = l.images;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

const std::vector<CensusRow>& reference_census() {
  static const std::vector<CensusRow> rows = [] {
    std::vector<CensusRow> out;
    for (const auto& l : kCensus) {
      CensusRow row;
      row.c = l.c;
      row.tk = l.tk;
      row.ts = l.ts;
      row.tk_star = l.tk_star;
      row.ts_star = l.ts_star;
      row.avg_braid = Rational(BigInt(l.avg_num), BigInt(l.avg_den));
      row.avg_braid_star = Rational(BigInt(l.avg_star_num), BigInt(l.avg_star_den));
      out.push_back(std::move(row));
    }
    return out;
  }();
  return rows;
}

const std::vector<Table1Row>& reference_table1() {
  static const std::vector<Table1Row> rows = build_table1();
  return rows;
}

}  // namespace bridgekit
