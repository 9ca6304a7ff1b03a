#include <algorithm>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "artinq/low_index.hpp"
#include "artinq/pipeline.hpp"
#include "oracles.hpp"

using namespace artinq;

TEST_CASE("infinite cyclic group", "[low_index]") {
  PresentationSpec z;
  z.generators = Alphabet({"a1"});
  for (std::size_t k = 1; k <= 6; ++k) {
    // exactly one subgroup of each index
    REQUIRE(count_classes_of_index(z, k) == 1);
  }
  REQUIRE(low_index_subgroups(z, 4).size() == 4);
  REQUIRE_THROWS_AS(low_index_subgroups(z, 0), std::invalid_argument);
}

TEST_CASE("finite cyclic and free groups", "[low_index]") {
  PresentationSpec c6;
  c6.generators = Alphabet({"a1"});
  c6.relators.push_back(Word::power(0, 6));
  for (std::size_t k = 1; k <= 7; ++k) {
    REQUIRE(count_classes_of_index(c6, k) == (6 % k == 0 ? 1u : 0u));
  }
  PresentationSpec f2;
  f2.generators = Alphabet({"a1", "a2"});
  // subgroups of index 2 and 3 in F_2 up to conjugacy: 3 and 7
  REQUIRE(count_classes_of_index(f2, 2) == 3);
  REQUIRE(count_classes_of_index(f2, 3) == 7);
  REQUIRE(oracle::transitive_action_classes(2, {}, 3) == 7);
}

TEST_CASE("square quotients at n = 4 match brute force", "[low_index]") {
  struct Case {
    PresentationSpec p;
    std::size_t      expected_index4;
  };
  std::vector<Case> cases{{ngon_cycle_quotient(4), 9},
                          {ngon_twisted_quotient(4, 1), 8},
                          {ngon_twisted_quotient(4, 2), 9}};
  for (auto const& c : cases) {
    auto const tables = low_index_subgroups(c.p, 4);
    auto const rels   = c.p.all_relators();
    INFO(c.p.label);
    for (std::size_t k = 1; k <= 4; ++k) {
      std::size_t const count = static_cast<std::size_t>(
          std::count_if(tables.begin(), tables.end(),
                        [k](auto const& t) { return t.num_cosets() == k; }));
      REQUIRE(count == oracle::transitive_action_classes(4, rels, k));
      REQUIRE(count == count_classes_of_index(c.p, k));
    }
    REQUIRE(count_classes_of_index(c.p, 4) == c.expected_index4);
    for (auto const& t : tables) {
      REQUIRE(t.is_consistent());
      REQUIRE(t.satisfies(c.p));
    }
    for (std::size_t i = 0; i < tables.size(); ++i) {
      for (std::size_t j = i + 1; j < tables.size(); ++j) {
        REQUIRE_FALSE(conjugate_tables(tables[i], tables[j]));
      }
    }
  }
}

TEST_CASE("counts ignore how relations are written", "[low_index]") {
  auto       p = ngon_twisted_quotient(4, 1);
  auto const before = count_classes_of_index(p, 4);
  std::reverse(p.relations.begin(), p.relations.end());
  for (auto& r : p.relations) {
    std::swap(r.lhs, r.rhs);
  }
  REQUIRE(count_classes_of_index(p, 4) == before);
  // a relator and its cyclic conjugate define the same group
  auto q = ngon_cycle_quotient(4);
  auto& w = q.relators.front();
  std::vector<Letter> rotated(w.begin() + 1, w.end());
  rotated.push_back(w[0]);
  w = Word(rotated);
  REQUIRE(count_classes_of_index(q, 4) == 9);
}

TEST_CASE("conjugate tables are recognised", "[low_index]") {
  auto const p      = ngon_cycle_quotient(4);
  auto const tables = low_index_subgroups(p, 3);
  for (auto const& t : tables) {
    REQUIRE(conjugate_tables(t, t));
  }
  // relabelling cosets of the pair action gives a conjugate table
  auto const a = point_coset_table(p, 4);
  auto const b = coset_table_from_action(p, sigma_assignment(4), 2, "point 3");
  REQUIRE(conjugate_tables(a, b));
  REQUIRE_FALSE(conjugate_tables(a, pair_coset_table(p, 4)));
}
