#include <doctest.h>

#include <fstream>
#include <sstream>

#include "satex/counting.hpp"
#include "satex/graph_io.hpp"
#include "satex/search.hpp"

using namespace satex;

namespace {

struct Row {
  int n;
  std::string f;
  BigCount m;
  std::string g;
  BigCount value;
  std::string witness;
};

std::vector<Row> load() {
  std::ifstream in(std::string(SATEX_FIXTURE_DIR) + "/satex_regression.csv");
  REQUIRE(in.good());
  std::string line;
  std::getline(in, line);
  REQUIRE(line == "n,F,m,G,value,witness_graph6");
  std::vector<Row> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    REQUIRE(cells.size() == 6);
    rows.push_back({std::stoi(cells[0]), cells[1], parse_bigcount(cells[2]), cells[3], parse_bigcount(cells[4]), cells[5]});
  }
  return rows;
}

}  // namespace

TEST_CASE("exact satex regression fixtures") {
  const auto rows = load();
  CHECK(rows.size() >= 20);
  bool anchor = false;
  for (const auto& row : rows) {
    CAPTURE(row.n);
    CAPTURE(row.f);
    CAPTURE(row.m);
    CAPTURE(row.g);
    const PatternSpec f = PatternSpec::parse(row.f);
    const PatternSpec g = PatternSpec::parse(row.g);
    const auto r = exact_satex(row.n, f, row.m, g);
    CHECK(r.optimum == row.value);
    CHECK(encode_graph6(r.witness) == row.witness);
    const Graph w = decode_graph6(row.witness);
    CHECK(count_subgraphs(f, w) >= row.m);
    CHECK(count_subgraphs(g, w) == row.value);
    anchor = anchor || (row.n == 4 && row.f == "K2" && row.m == 5 && row.g == "K3" && row.value == 2);
  }
  CHECK(anchor);
}
