#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "catch2/catch_amalgamated.hpp"

#include "artinq/pipeline.hpp"
#include "artinq/schreier.hpp"
#include "oracles.hpp"

using namespace artinq;

namespace {
  Word a(std::size_t i) {
    return Word(gen(static_cast<GenIndex>(i - 1)));
  }

  Word y(std::size_t i) {
    return Word(gen(static_cast<GenIndex>(i - 1)));
  }

  // Exponent vector over z_1 .. z_{n+1} with the given signed entries.
  std::vector<std::int64_t> zvec(std::size_t n,
                                 std::vector<std::pair<std::size_t, int>> const& terms) {
    std::vector<std::int64_t> v(n + 1, 0);
    for (auto [i, c] : terms) {
      v.at(i - 1) += c;
    }
    return v;
  }

  // a2^e ... a_{n-1}^e with the first t letters inverted.
  Word twisted_prefix(std::size_t n, int t) {
    Word v;
    for (std::size_t i = 2; i <= n - 1; ++i) {
      v *= (i <= static_cast<std::size_t>(t) + 1) ? a(i).inverse() : a(i);
    }
    return v;
  }

  Word random_word(std::mt19937& rng, std::size_t n, std::size_t len) {
    return Word(oracle::from_raw(oracle::random_raw(rng, static_cast<int>(n), len)));
  }
}  // namespace

TEST_CASE("coset tables of the standard actions", "[schreier]") {
  for (std::size_t n = 4; n <= 9; ++n) {
    auto const g    = artin_ngon(n);
    auto const pair = pair_coset_table(g, n);
    REQUIRE(pair.num_cosets() == n * (n - 1) / 2);
    REQUIRE(pair.is_consistent());
    REQUIRE(pair.satisfies(g));
    REQUIRE(pair.point(0) == 0);
    auto const pt = point_coset_table(g, n);
    REQUIRE(pt.num_cosets() == n);
    REQUIRE(pt.is_consistent());
    REQUIRE(pt.satisfies(ngon_cycle_quotient(n)));
    for (GenIndex x = 0; x < n; ++x) {
      std::set<Coset> seen(pair.row(x).begin(), pair.row(x).end());
      REQUIRE(seen.size() == pair.num_cosets());
      for (Coset c = 0; c < pair.num_cosets(); ++c) {
        REQUIRE(pair.act(pair.act(c, gen(x)), inv(x)) == c);
      }
    }
  }
  auto bad = sigma_assignment(5);
  bad.set_image(0, Perm::transposition(5, 1, 3));
  REQUIRE_THROWS_AS(coset_table_from_action(artin_ngon(5), bad, 0, "bad"),
                    std::invalid_argument);
}

TEST_CASE("pair transversal", "[schreier]") {
  REQUIRE(pair_rep(5, 1, 2).empty());
  REQUIRE(pair_rep(5, 1, 3) == a(2));
  REQUIRE(pair_rep(5, 2, 4) == a(2) * a(3) * a(1));
  REQUIRE_THROWS_AS(pair_rep(5, 3, 3), std::out_of_range);
  for (std::size_t n = 4; n <= 9; ++n) {
    auto const sigma = sigma_assignment(n);
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t l = k + 1; l <= n; ++l) {
        auto const p = evaluate(sigma, pair_rep(n, k, l));
        REQUIRE(p(1) == k);
        REQUIRE(p(2) == l);
      }
    }
    auto const g     = artin_ngon(n);
    auto const table = pair_coset_table(g, n);
    auto const tr    = pair_transversal(table, n);
    REQUIRE(check_transversal(table, tr).ok());
    REQUIRE(is_schreier_transversal(table, tr));
    auto const pt  = point_coset_table(g, n);
    auto const ptr = point_transversal(pt);
    REQUIRE(check_transversal(pt, ptr).ok());
    REQUIRE(is_schreier_transversal(pt, ptr));
  }
}

TEST_CASE("xi generators fix the base pair", "[schreier]") {
  for (std::size_t n = 4; n <= 10; ++n) {
    auto const xi = xi_generators(n);
    REQUIRE(xi.size() == n + 1);
    REQUIRE(xi[0].definition == a(1));
    REQUIRE(xi[n - 2].definition == a(2).pow(2));
    REQUIRE(xi[n - 1].definition == a(n).pow(2));
    auto const sigma = sigma_assignment(n);
    for (auto const& x : xi) {
      auto const p = evaluate(sigma, x.definition);
      REQUIRE(std::set<Point>{p(1), p(2)} == std::set<Point>{1, 2});
    }
    REQUIRE(y_alphabet(n).size() == n + 1);
  }
}

TEST_CASE("table row examples", "[schreier]") {
  std::size_t const n = 7;
  // l < m < n
  auto const r1 = rho_step(n, 2, 4, 5);
  REQUIRE(r1.word == y(4));
  REQUIRE(r1.next == PairCoset{2, 4});
  // k = 1, l < m = n
  auto const r2 = rho_step(n, 1, 4, n);
  REQUIRE(r2.word == y(n) * y(n + 1).inverse());
  REQUIRE(r2.next == PairCoset{4, n});
  // k = m = l - 1
  auto const r3 = rho_step(n, 3, 4, 3);
  REQUIRE(r3.word == y(1));
  REQUIRE(r3.next == PairCoset{3, 4});
  REQUIRE_THROWS_AS(rho_step(n, 4, 4, 1), std::out_of_range);
  REQUIRE_THROWS_AS(rho_step(n, 1, 2, n + 1), std::out_of_range);
}

TEST_CASE("table is exhaustive and verifies in quotients", "[schreier]") {
  for (std::size_t n = 4; n <= 8; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t l = k + 1; l <= n; ++l) {
        for (std::size_t m = 1; m <= n; ++m) {
          REQUIRE(rho_matching_rows(n, k, l, m).size() == 1);
          auto const row = rho_step(n, k, l, m).row;
          REQUIRE(row >= 1);
          REQUIRE(row <= rho_num_rows);
        }
      }
    }
    auto const report = verify_rho_table(n, true);
    for (auto const& f : report.failures) {
      INFO(f);
    }
    REQUIRE(report.ok());
  }
}

TEST_CASE("extension along words", "[schreier][property]") {
  std::mt19937 rng(5);
  for (std::size_t n = 4; n <= 8; ++n) {
    REQUIRE(rho_extend(n, PairCoset{2, 3}, Word{}).word.empty());
    auto const xi   = xi_generators(n);
    auto const last = rho_extend(n, PairCoset{}, xi.back().definition);
    REQUIRE(last.word == y(n + 1));
    REQUIRE(last.end == PairCoset{1, 2});

    auto const sigma = sigma_assignment(n);
    auto const sgn   = ngon_signed_assignment(n);
    for (int trial = 0; trial < 100; ++trial) {
      Word const w     = random_word(rng, n, 12);
      auto const start = pair_at(n, static_cast<std::size_t>(trial) % (n * (n - 1) / 2));
      auto const r     = rho_extend(n, {start.first, start.second}, w);
      auto const p     = evaluate(sigma, w);
      PairCoset const expect
          = p(start.first) < p(start.second)
                ? PairCoset{p(start.first), p(start.second)}
                : PairCoset{p(start.second), p(start.first)};
      REQUIRE(r.end == expect);
      Word const loop = pair_rep(n, start.first, start.second) * w
                        * pair_rep(n, r.end.k, r.end.l).inverse();
      Word const ex = expand_y(n, r.word);
      REQUIRE(evaluate(sigma, loop) == evaluate(sigma, ex));
      REQUIRE(evaluate(sgn, loop) == evaluate(sgn, ex));
      // braid relations only preserve the total exponent sum
      auto const total = [n](Word const& u) {
        auto const v = exponent_sums(u, n);
        return std::accumulate(v.begin(), v.end(), std::int64_t{0});
      };
      REQUIRE(total(loop) == total(ex));
    }
  }
}

TEST_CASE("subgroup presentation counts", "[schreier]") {
  for (std::size_t n = 4; n <= 9; ++n) {
    std::size_t const cosets = n * (n - 1) / 2;
    auto const h = pair_subgroup_presentation(artin_ngon(n), n);
    REQUIRE(h.spec.num_generators() == n + 1);
    REQUIRE(h.spec.relations.size() == cosets * cosets);
    REQUIRE(h.spec.relators.size() == n + 1);
    // every S_2 relator is empty
    for (std::size_t i = 0; i < h.spec.relators.size(); ++i) {
      REQUIRE(h.relator_origins[i].kind == RowKind::generator);
      REQUIRE(h.spec.relators[i].empty());
    }
    auto const h0 = pair_subgroup_presentation(ngon_cycle_quotient(n), n);
    REQUIRE(h0.spec.relators.size() == cosets + n + 1);
    REQUIRE(h0.relation_origins.size() == h0.spec.relations.size());
  }
}

TEST_CASE("commutator rows vanish abelianly off the first two points",
          "[schreier]") {
  for (std::size_t n = 5; n <= 8; ++n) {
    for (int t = 0; t <= static_cast<int>(n) - 2; ++t) {
      auto const g  = ngon_group(n, t == 0 ? QuotientKind::cycle : QuotientKind::twisted, t);
      auto const sp = pair_subgroup_presentation(g, n);
      std::size_t nontrivial = 0;
      for (std::size_t i = 0; i < sp.spec.relators.size(); ++i) {
        auto const& o = sp.relator_origins[i];
        if (o.kind != RowKind::relator) {
          continue;
        }
        auto const [k, l] = pair_at(n, o.coset);
        bool const zero = exponent_sums(sp.spec.relators[i], n + 1)
                          == std::vector<std::int64_t>(n + 1, 0);
        if (k > 2 || (k == 1 && l == 2)) {
          REQUIRE(zero);
        } else {
          nontrivial += !zero;
        }
      }
      REQUIRE(nontrivial > 0);
    }
  }
}

TEST_CASE("conjugator vectors of the commutator rows", "[schreier]") {
  for (std::size_t n = 5; n <= 10; ++n) {
    Word const v = twisted_prefix(n, 0);
    for (std::size_t l = 3; l <= n; ++l) {
      auto const r1 = rho_extend(n, PairCoset{1, l}, v);
      REQUIRE(r1.end == PairCoset{1, l - 1});
      std::vector<std::pair<std::size_t, int>> terms;
      for (std::size_t i = 2; i <= n - 1; ++i) {
        terms.emplace_back(i, 1);
      }
      REQUIRE(exponent_sums(r1.word, n + 1) == zvec(n, terms));
      REQUIRE(exponent_sums(rho_extend(n, PairCoset{2, l}, v).word, n + 1)
              == zvec(n, {{1, 1}}));
    }
    for (int t = 1; t <= static_cast<int>(n) - 3; ++t) {
      Word const vt = twisted_prefix(n, t);
      auto const tt = static_cast<std::size_t>(t);
      for (std::size_t l = 3; l <= n; ++l) {
        std::vector<std::pair<std::size_t, int>> g1;
        std::vector<std::pair<std::size_t, int>> g2;
        if (tt + 1 <= l - 2) {
          for (std::size_t i = 2; i <= tt + 1; ++i) {
            g1.emplace_back(i, -1);
          }
          for (std::size_t i = tt + 2; i <= n - 2; ++i) {
            g1.emplace_back(i, 1);
          }
          g1.emplace_back(n - 1, 1);
          g2 = {{n - 1, -t}, {1, 1}};
        } else {
          for (std::size_t i = 2; i <= tt; ++i) {
            g1.emplace_back(i, -1);
          }
          for (std::size_t i = tt + 1; i <= n - 2; ++i) {
            g1.emplace_back(i, 1);
          }
          g2 = {{n - 1, -(t - 1)}, {1, -1}};
        }
        INFO("n=" << n << " t=" << t << " l=" << l);
        REQUIRE(exponent_sums(rho_extend(n, PairCoset{1, l}, vt).word, n + 1)
                == zvec(n, g1));
        REQUIRE(exponent_sums(rho_extend(n, PairCoset{2, l}, vt).word, n + 1)
                == zvec(n, g2));
      }
    }
  }
}

TEST_CASE("generic rewriting", "[schreier][property]") {
  std::mt19937 rng(17);
  for (std::size_t n = 4; n <= 7; ++n) {
    auto const g  = artin_ngon(n);
    auto const rs = pair_generic_schreier(g, n);
    // Schreier generators: (|T| - 1) free generators of the subgroup plus
    // n |T| - (|T| - 1) in total, minus the trivial ones dropped.
    std::size_t const cosets = n * (n - 1) / 2;
    REQUIRE(rs.num_generators() == n * cosets - (cosets - 1));
    for (auto const& x : xi_generators(n)) {
      Coset      end = 99;
      Word const w   = rs.rewrite(0, x.definition, &end);
      REQUIRE(end == 0);
      REQUIRE(rs.expand(w) == x.definition);
    }
    auto const& tr = rs.transversal();
    for (int trial = 0; trial < 200; ++trial) {
      Word const  w     = random_word(rng, n, 15);
      Coset const start = static_cast<Coset>(trial % cosets);
      Coset       end   = 0;
      Word const  r     = rs.rewrite(start, w, &end);
      REQUIRE(end == rs.table().act(start, w));
      REQUIRE(rs.expand(r) == tr.reps[start] * w * tr.reps[end].inverse());
    }
    auto const pt = point_generic_schreier(ngon_cycle_quotient(n), n);
    REQUIRE(pt.num_generators() == n * n - (n - 1));
  }
}

TEST_CASE("perturbed table words are caught abelianly", "[schreier]") {
  std::size_t const n = 6;
  RhoAbelianCheck const check(n);
  REQUIRE(check.check(2, 4, 3).ok());
  auto const rs   = pair_generic_schreier(artin_ngon(n), n);
  auto const step = rho_step(n, 2, 4, 3);
  for (std::size_t extra = 1; extra <= n + 1; ++extra) {
    Word const loop = expand_y(n, step.word * y(extra))
                      * pair_rep(n, step.next.k, step.next.l) * a(3).inverse()
                      * pair_rep(n, 2, 4).inverse();
    Coset      end = 0;
    Word const w   = rs.rewrite(0, loop, &end);
    REQUIRE(end == 0);
    REQUIRE_FALSE(check.lattice().contains(exponent_row(w)));
  }
}
