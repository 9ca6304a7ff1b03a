// Independent reference implementations used only by the tests. None of
// them share code with the library beyond the basic value types.

#ifndef ARTINQ_TESTS_ORACLES_HPP_
#define ARTINQ_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "artinq/abelian.hpp"
#include "artinq/perm.hpp"
#include "artinq/word.hpp"

namespace oracle {

  // Letters as signed 1-based integers: +g for generator g-1, -g for its
  // inverse.
  using RawWord = std::vector<int>;

  // Cancels adjacent inverse pairs until none remain.
  inline RawWord naive_reduce(RawWord w) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == -w[i + 1]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i),
                  w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  inline RawWord to_raw(artinq::Word const& w) {
    RawWord out;
    for (auto x : w) {
      out.push_back(x.sign * static_cast<int>(x.gen + 1));
    }
    return out;
  }

  inline std::vector<artinq::Letter> from_raw(RawWord const& w) {
    std::vector<artinq::Letter> out;
    for (int v : w) {
      out.push_back(artinq::Letter{static_cast<artinq::GenIndex>(std::abs(v) - 1),
                                   static_cast<std::int8_t>(v > 0 ? 1 : -1)});
    }
    return out;
  }

  inline RawWord random_raw(std::mt19937& rng, int gens, std::size_t len) {
    std::uniform_int_distribution<int> pick(1, gens);
    std::bernoulli_distribution        flip(0.5);
    RawWord                            w;
    for (std::size_t i = 0; i < len; ++i) {
      w.push_back(flip(rng) ? pick(rng) : -pick(rng));
    }
    return w;
  }

  // Order of the group generated by the given permutations (plain closure).
  inline std::size_t group_order(std::vector<artinq::Perm> const& gens) {
    std::set<std::vector<artinq::Point>> seen;
    std::vector<artinq::Perm>             todo;
    auto const id = artinq::Perm::identity(gens.front().degree());
    auto key = [](artinq::Perm const& p) {
      std::vector<artinq::Point> v;
      for (artinq::Point i = 0; i < p.degree(); ++i) {
        v.push_back(p.image0(i));
      }
      return v;
    };
    seen.insert(key(id));
    todo.push_back(id);
    while (!todo.empty()) {
      auto p = todo.back();
      todo.pop_back();
      for (auto const& g : gens) {
        auto q = p * g;
        if (seen.insert(key(q)).second) {
          todo.push_back(q);
        }
      }
    }
    return seen.size();
  }

  // Exact determinant by cofactor expansion (small matrices only).
  inline std::int64_t det(std::vector<std::vector<std::int64_t>> const& m) {
    std::size_t const n = m.size();
    if (n == 0) {
      return 1;
    }
    if (n == 1) {
      return m[0][0];
    }
    std::int64_t total = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[0][j] == 0) {
        continue;
      }
      std::vector<std::vector<std::int64_t>> minor;
      for (std::size_t i = 1; i < n; ++i) {
        std::vector<std::int64_t> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != j) {
            row.push_back(m[i][k]);
          }
        }
        minor.push_back(std::move(row));
      }
      std::int64_t const c = m[0][j] * det(minor);
      total += (j % 2 == 0) ? c : -c;
    }
    return total;
  }

  inline void choose(std::size_t n, std::size_t k, std::size_t start,
                     std::vector<std::size_t>&              cur,
                     std::vector<std::vector<std::size_t>>& out) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      choose(n, k, i + 1, cur, out);
      cur.pop_back();
    }
  }

  struct CokernelOracle {
    std::size_t               free_rank;
    std::vector<std::int64_t> torsion;
  };

  // Invariant factors from determinantal divisors: d_k is the gcd of all
  // k x k minors and the k-th invariant factor is d_k / d_{k-1}.
  inline CokernelOracle
  determinantal(std::vector<std::vector<std::int64_t>> const& m,
                std::size_t                                   cols) {
    std::size_t const rows = m.size();
    std::int64_t      prev = 1;
    std::size_t       rank = 0;
    CokernelOracle    out{cols, {}};
    for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
      std::vector<std::vector<std::size_t>> rs, cs;
      std::vector<std::size_t>              cur;
      choose(rows, k, 0, cur, rs);
      choose(cols, k, 0, cur, cs);
      std::int64_t g = 0;
      for (auto const& r : rs) {
        for (auto const& c : cs) {
          std::vector<std::vector<std::int64_t>> sub(k,
                                                     std::vector<std::int64_t>(k));
          for (std::size_t i = 0; i < k; ++i) {
            for (std::size_t j = 0; j < k; ++j) {
              sub[i][j] = m[r[i]][c[j]];
            }
          }
          g = std::gcd(g, det(sub));
        }
      }
      if (g == 0) {
        break;
      }
      rank = k;
      std::int64_t const s = g / prev;
      if (s > 1) {
        out.torsion.push_back(s);
      }
      prev = g;
    }
    out.free_rank = cols - rank;
    return out;
  }

  // Number of x in (Z/d)^cols with m x = 0 mod d, by enumeration; equals
  // |Hom(coker, Z/d)|.
  inline std::uint64_t
  residue_solutions(std::vector<std::vector<std::int64_t>> const& m,
                    std::size_t cols, std::int64_t d) {
    std::vector<std::int64_t> x(cols, 0);
    std::uint64_t             count = 0;
    while (true) {
      bool ok = true;
      for (auto const& row : m) {
        std::int64_t s = 0;
        for (std::size_t j = 0; j < cols; ++j) {
          s += row[j] * x[j];
        }
        if (((s % d) + d) % d != 0) {
          ok = false;
          break;
        }
      }
      count += ok;
      std::size_t j = 0;
      while (j < cols && ++x[j] == d) {
        x[j++] = 0;
      }
      if (j == cols) {
        break;
      }
    }
    return count;
  }

  // |Hom(Z^f + sum Z/t_i, Z/d)| = d^f prod gcd(d, t_i).
  inline std::uint64_t hom_count(artinq::AbelianInvariants const& a,
                                 std::int64_t                     d) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < a.free_rank; ++i) {
      out *= static_cast<std::uint64_t>(d);
    }
    for (auto const& t : a.torsion) {
      out *= static_cast<std::uint64_t>(
          std::gcd(d, static_cast<std::int64_t>(t)));
    }
    return out;
  }

  // Number of conjugacy classes of subgroups of index exactly k, counted as
  // isomorphism classes of transitive actions of degree k satisfying the
  // relators; brute force over all generator images in Sym(k).
  inline std::size_t
  transitive_action_classes(std::size_t                      num_gens,
                            std::vector<artinq::Word> const& relators,
                            std::size_t                      k) {
    std::vector<std::vector<artinq::Point>> perms;
    std::vector<artinq::Point>              p(k);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto inverse_of = [](std::vector<artinq::Point> const& q) {
      std::vector<artinq::Point> r(q.size());
      for (std::size_t i = 0; i < q.size(); ++i) {
        r[q[i]] = static_cast<artinq::Point>(i);
      }
      return r;
    };
    std::vector<std::vector<artinq::Point>> inverses;
    for (auto const& q : perms) {
      inverses.push_back(inverse_of(q));
    }
    std::set<std::vector<std::size_t>> classes;
    std::vector<std::size_t>           choice(num_gens, 0);
    auto act = [&](std::size_t x, artinq::Letter l) -> std::size_t {
      auto const idx = choice[l.gen];
      return l.sign > 0 ? perms[idx][x] : inverses[idx][x];
    };
    while (true) {
      bool ok = true;
      for (auto const& w : relators) {
        for (std::size_t x = 0; x < k && ok; ++x) {
          std::size_t y = x;
          for (auto l : w) {
            y = act(y, l);
          }
          ok = y == x;
        }
        if (!ok) {
          break;
        }
      }
      if (ok) {
        // Transitive?
        std::vector<bool>        seen(k, false);
        std::vector<std::size_t> stack{0};
        seen[0] = true;
        while (!stack.empty()) {
          auto x = stack.back();
          stack.pop_back();
          for (std::size_t g = 0; g < num_gens; ++g) {
            auto y = perms[choice[g]][x];
            if (!seen[y]) {
              seen[y] = true;
              stack.push_back(y);
            }
          }
        }
        if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) {
          // Canonical form: smallest relabelled tuple.
          std::vector<std::size_t> best;
          for (std::size_t c = 0; c < perms.size(); ++c) {
            auto const&              s  = perms[c];
            auto const&              si = inverses[c];
            std::vector<std::size_t> tuple;
            for (std::size_t g = 0; g < num_gens; ++g) {
              auto const& q = perms[choice[g]];
              for (std::size_t x = 0; x < k; ++x) {
                tuple.push_back(s[q[si[x]]]);
              }
            }
            if (best.empty() || tuple < best) {
              best = tuple;
            }
          }
          classes.insert(best);
        }
      }
      std::size_t g = 0;
      while (g < num_gens && ++choice[g] == perms.size()) {
        choice[g++] = 0;
      }
      if (g == num_gens) {
        break;
      }
    }
    return classes.size();
  }

}  // namespace oracle

#endif  // ARTINQ_TESTS_ORACLES_HPP_
