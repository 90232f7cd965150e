#include <doctest.h>

#include <cstdlib>
#include <map>
#include <set>

#include "equiknot/invariants.hpp"
#include "equiknot/knot_table.hpp"
#include "equiknot/planar_diagram.hpp"

using namespace equiknot;

namespace {

// Standard knot determinants, an anchor independent of this codebase.
const std::map<std::string, std::int64_t> kDeterminants = {
    {"unknot2", 1}, {"3_1", 3},   {"4_1", 5},   {"5_1", 5},   {"5_2", 7},
    {"6_1", 9},     {"6_2", 11},  {"6_3", 13},  {"7_1", 7},   {"7_2", 11},
    {"7_3", 13},    {"7_4", 15},  {"7_5", 17},  {"7_6", 19},  {"7_7", 21},
    {"8_1", 13},    {"8_2", 17},  {"8_3", 17},  {"8_4", 19},  {"8_5", 21},
    {"8_6", 23},    {"8_7", 23},  {"8_8", 25},  {"8_9", 25},  {"8_10", 27},
    {"8_11", 27},   {"8_12", 29}, {"8_13", 29}, {"8_14", 31}, {"8_15", 33},
    {"8_16", 35},   {"8_17", 37}, {"8_18", 45}, {"8_19", 3},  {"8_20", 9},
    {"8_21", 15},
};

}  // namespace

TEST_CASE("every entry passes the self check") {
  for (const KnotTableEntry& e : builtin_table()) {
    CAPTURE(e.name);
    CHECK_NOTHROW(verify_entry(e));
  }
}

TEST_CASE("names are unique and find_entry works") {
  std::set<std::string> names;
  for (const KnotTableEntry& e : builtin_table()) {
    CHECK(names.insert(e.name).second);
            CHECK(find_entry(e.name) == &e);
  }
  CHECK(find_entry("no_such_knot") == nullptr);
  CHECK(find_entry("3_1") != nullptr);
}

TEST_CASE("determinants match the standard table through both oracles") {
  for (const KnotTableEntry& e : builtin_table()) {
    CAPTURE(e.name);
    auto it = kDeterminants.find(e.name);
    REQUIRE(it != kDeterminants.end());
    PlanarDiagram d = arcpres_to_diagram(e.presentation());
    CHECK(determinant(d) == it->second);
    CHECK(std::llabs(jones_polynomial(d, 24).eval_at_minus_one()) ==
          it->second);
  }
}

TEST_CASE("jones span separates alternating from non-alternating") {
  for (const KnotTableEntry& e : builtin_table()) {
    if (!e.nontrivial()) continue;
    CAPTURE(e.name);
    Laurent v = e.expected_jones();
    if (e.alternating) {
      CHECK(v.span() == e.crossing_number);
    } else {
      CHECK(v.span() < e.crossing_number);
    }
  }
}

TEST_CASE("arc counts meet the arc-index bounds") {
  for (const KnotTableEntry& e : builtin_table()) {
    if (!e.nontrivial()) continue;
    CAPTURE(e.name);
    int n = e.presentation().page_count();
    CHECK(n <= e.crossing_number + 2);
    if (e.prime && !e.alternating) CHECK(n <= e.crossing_number);
  }
}

TEST_CASE("jones polynomials distinguish all entries up to mirror") {
  std::map<Laurent, std::string> seen;
  for (const KnotTableEntry& e : builtin_table()) {
    Laurent key = e.expected_jones().mirror_canonical();
    auto [it, inserted] = seen.emplace(key, e.name);
    CAPTURE(e.name);
    CAPTURE(it->second);
    CHECK(inserted);
  }
}

TEST_CASE("the expected coverage ships") {
  // 35 prime knots through 8 crossings plus the unknot presentation.
  CHECK(builtin_table().size() == 36);
  for (const char* name :
       {"3_1", "4_1", "6_1", "7_7", "8_18", "8_19", "8_20", "8_21"})
    CHECK(find_entry(name) != nullptr);
}
