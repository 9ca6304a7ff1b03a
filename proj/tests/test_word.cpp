#include <random>
#include <string>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "artinq/word.hpp"
#include "oracles.hpp"

using namespace artinq;

namespace {
  Alphabet abc(std::size_t n, char prefix = 'a') {
    Alphabet a;
    for (std::size_t i = 1; i <= n; ++i) {
      a.add(std::string(1, prefix) + std::to_string(i));
    }
    return a;
  }

  Word g(GenIndex i) {
    return Word(gen(i));
  }
}  // namespace

TEST_CASE("alphabet validates names", "[word]") {
  Alphabet a;
  REQUIRE(a.add("a1") == 0);
  REQUIRE(a.add("b12") == 1);
  REQUIRE_THROWS_AS(a.add("a1"), std::invalid_argument);
  REQUIRE_THROWS_AS(a.add("A1"), std::invalid_argument);
  REQUIRE_THROWS_AS(a.add("a"), std::invalid_argument);
  REQUIRE_THROWS_AS(a.add("ab1"), std::invalid_argument);
  REQUIRE(a.contains("b12"));
  REQUIRE_FALSE(a.find("c1").has_value());
  REQUIRE_THROWS_AS(a.at("c1"), std::out_of_range);
  REQUIRE(a.name(1) == "b12");
}

TEST_CASE("words are freely reduced on construction", "[word]") {
  Word w{gen(0), gen(1), inv(1), inv(0), gen(2)};
  REQUIRE(w == g(2));
  REQUIRE((g(0) * g(0).inverse()).empty());
  REQUIRE(Word::power(1, 3).size() == 3);
  REQUIRE(Word::power(1, -2) == Word{inv(1), inv(1)});
  REQUIRE(Word::power(1, 0).empty());
  REQUIRE(g(0).pow(-3) == Word::power(0, -3));
  REQUIRE((g(0) * g(1)).pow(2) == Word{gen(0), gen(1), gen(0), gen(1)});
}

TEST_CASE("self multiplication does not alias", "[word]") {
  Word w{gen(0), gen(1), gen(2)};
  w *= w;
  REQUIRE(w.size() == 6);
  Word v = w.inverse();
  v *= v.inverse();
  REQUIRE(v.empty());
}

TEST_CASE("reduction agrees with the naive oracle", "[word][property]") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    auto const raw = oracle::random_raw(rng, 3, trial % 40);
    auto const letters = oracle::from_raw(raw);
    Word const w(letters);
    REQUIRE(oracle::to_raw(w) == oracle::naive_reduce(raw));
    // inverse and product laws
    REQUIRE((w * w.inverse()).empty());
    REQUIRE(w.inverse().inverse() == w);
    auto const raw2 = oracle::random_raw(rng, 3, 10);
    Word const u(oracle::from_raw(raw2));
    REQUIRE((w * u).inverse() == u.inverse() * w.inverse());
    auto cat = raw;
    cat.insert(cat.end(), raw2.begin(), raw2.end());
    REQUIRE(oracle::to_raw(w * u) == oracle::naive_reduce(cat));
  }
}

TEST_CASE("commutator and conjugation conventions", "[word]") {
  Word const x = g(0);
  Word const y = g(1);
  REQUIRE(commutator(x, y) == Word{inv(0), inv(1), gen(0), gen(1)});
  REQUIRE(conjugate(x, y) == Word{inv(1), gen(0), gen(1)});
  REQUIRE(commutator(x, x).empty());
  REQUIRE(invert(commutator(x, y)) == commutator(y, x));
}

TEST_CASE("cycle commutators", "[word]") {
  std::vector<Word> ys{g(0), g(1), g(2)};
  // [y1, y2 y3 y2^-1]
  REQUIRE(cycle_commutator(ys)
          == commutator(g(0), g(1) * g(2) * g(1).inverse()));
  std::vector<Word> four{g(0), g(1), g(2), g(3)};
  REQUIRE(cycle_commutator(four)
          == commutator(g(0), g(1) * g(2) * g(3) * (g(1) * g(2)).inverse()));
  REQUIRE_THROWS_AS(cycle_commutator(std::vector<Word>{g(0), g(1)}),
                    std::invalid_argument);
}

TEST_CASE("twisted cycle commutators", "[word]") {
  std::vector<Word> ys;
  for (GenIndex i = 0; i < 6; ++i) {
    ys.push_back(g(i));
  }
  // t = 2: prefix y2^-1 y3^-1 y4 y5
  Word const prefix = g(1).inverse() * g(2).inverse() * g(3) * g(4);
  REQUIRE(twisted_cycle_commutator(ys, 2)
          == commutator(g(0), prefix * g(5) * prefix.inverse()));
  // Prefix has n - 2 letters, so the length is 2 + 2 (2 (n - 2) + 1) = 20.
  REQUIRE(twisted_cycle_commutator(ys, 1).size() == 20);
  REQUIRE_THROWS_AS(twisted_cycle_commutator(ys, 0), std::out_of_range);
  REQUIRE_THROWS_AS(twisted_cycle_commutator(ys, 5), std::out_of_range);
  REQUIRE_NOTHROW(twisted_cycle_commutator(ys, 4));
  REQUIRE_THROWS_AS(
      twisted_cycle_commutator(std::vector<Word>{g(0), g(1), g(2)}, 1),
      std::invalid_argument);
}

TEST_CASE("parse and format round trip", "[word]") {
  auto const a = abc(4);
  REQUIRE(parse_word("", a).empty());
  REQUIRE(parse_word("1", a).empty());
  REQUIRE(format_word(Word{}, a) == "1");
  Word const w = parse_word("a1*a2^-1*a2^-1*a3^3", a);
  REQUIRE(w == Word{gen(0), inv(1), inv(1), gen(2), gen(2), gen(2)});
  REQUIRE(format_word(w, a) == "a1*a2^-2*a3^3");
  REQUIRE(parse_word(format_word(w, a), a) == w);
  REQUIRE(parse_word(" a1 * a1^-1 ", a).empty());
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    Word const r(oracle::from_raw(oracle::random_raw(rng, 4, 15)));
    REQUIRE(parse_word(format_word(r, a), a) == r);
  }
}

TEST_CASE("parse errors", "[word]") {
  auto const a = abc(3);
  REQUIRE_THROWS_AS(parse_word("a4", a), ParseError);
  REQUIRE_THROWS_AS(parse_word("a1^", a), ParseError);
  REQUIRE_THROWS_AS(parse_word("a1**a2", a), ParseError);
  REQUIRE_THROWS_AS(parse_word("a1^0", a), ParseError);
  REQUIRE_THROWS_AS(parse_word("a1^x", a), ParseError);
  REQUIRE_THROWS_AS(parse_word("*", a), ParseError);
}

TEST_CASE("exponent sums and substitution", "[word]") {
  auto const a = abc(3);
  Word const w = parse_word("a1*a2*a1^-1*a3^2", a);
  REQUIRE(exponent_sums(w, 3) == std::vector<std::int64_t>{0, 1, 2});
  REQUIRE(exponent_sums(commutator(g(0), g(1)), 3)
          == std::vector<std::int64_t>{0, 0, 0});
  REQUIRE(uses_only(w, 3));
  REQUIRE_FALSE(uses_only(w, 2));
  auto const s = substitute_once(w, parse_word("a2*a1^-1", a),
                                 parse_word("a3", a));
  REQUIRE(s.has_value());
  REQUIRE(*s == parse_word("a1*a3^3", a));
  REQUIRE_FALSE(substitute_once(w, parse_word("a2^2", a), Word{}).has_value());
}
