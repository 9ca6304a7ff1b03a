// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails, except those named with --known-failure (still
// printed as FAIL).

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "artinq/cli.hpp"
#include "artinq/low_index.hpp"
#include "artinq/pipeline.hpp"
#include "artinq/word_maps.hpp"
#include "oracles.hpp"

using namespace artinq;

namespace {
  struct Outcome {
    bool        pass = true;
    std::string detail;
  };

  void fail(Outcome& o, std::string const& why) {
    if (o.pass) {
      o.detail = why;
    }
    o.pass = false;
  }

  std::string describe(cli::ReproduceRow const& r) {
    std::ostringstream s;
    s << "n=" << r.n << " " << to_string(r.quotient);
    if (r.quotient == QuotientKind::twisted) {
      s << " t=" << r.t;
    }
    s << ": got " << format_invariants(r.computed);
    return s.str();
  }

  Outcome pair_table(std::vector<cli::ReproduceRow> const& rows) {
    Outcome o;
    std::size_t checked = 0;
    for (auto const& r : rows) {
      bool const last_t = r.quotient == QuotientKind::twisted
                          && static_cast<std::size_t>(r.t) == r.n - 2;
      if (last_t) {
        continue;
      }
      ++checked;
      if (!r.expected || r.computed != *r.expected) {
        fail(o, describe(r));
      }
    }
    o.detail = o.pass ? std::to_string(checked) + " subgroups" : o.detail;
    return o;
  }

  Outcome last_t_equals_cycle(std::vector<cli::ReproduceRow> const& rows) {
    Outcome o;
    std::size_t checked = 0;
    for (auto const& r : rows) {
      if (r.quotient != QuotientKind::twisted
          || static_cast<std::size_t>(r.t) != r.n - 2) {
        continue;
      }
      auto const cyc = std::find_if(rows.begin(), rows.end(), [&r](auto const& c) {
        return c.n == r.n && c.quotient == QuotientKind::cycle;
      });
      ++checked;
      if (cyc == rows.end() || cyc->computed != r.computed) {
        fail(o, describe(r));
      }
    }
    o.detail = o.pass ? std::to_string(checked) + " values of n" : o.detail;
    return o;
  }

  Outcome point_stabilisers(std::size_t jobs) {
    Outcome o;
    auto const rows = cli::reproduce_rows(5, 15, SubgroupKind::point, jobs);
    for (auto const& r : rows) {
      if (r.computed != make_invariants(2, {2})) {
        fail(o, describe(r));
      }
    }
    o.detail = o.pass ? std::to_string(rows.size()) + " subgroups" : o.detail;
    return o;
  }

  Outcome low_index_square() {
    Outcome o;
    auto const cyc = count_classes_of_index(ngon_cycle_quotient(4), 4);
    auto const tw  = count_classes_of_index(ngon_twisted_quotient(4, 1), 4);
    o.detail = "cycle " + std::to_string(cyc) + ", twisted " + std::to_string(tw);
    o.pass   = cyc == 9 && tw == 8;
    return o;
  }

  Outcome rho_tables(std::size_t jobs) {
    Outcome             o;
    std::vector<Report> reports(9);
    cli::parallel_for(reports.size(), jobs, [&reports](std::size_t i) {
      reports[i] = verify_rho_table(4 + i, true);
    });
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (!reports[i].ok()) {
        fail(o, "n=" + std::to_string(4 + i) + ": " + reports[i].failures.front());
      }
    }
    o.detail = o.pass ? "n = 4..12" : o.detail;
    return o;
  }

  Outcome map_families(std::size_t jobs) {
    struct Item {
      MapPair     pair;
      std::size_t n;
      int         t;
      Report      report;
    };
    std::vector<Item> items;
    for (std::size_t n = 4; n <= 12; ++n) {
      for (auto p : {MapPair::prop31, MapPair::prop32, MapPair::prop33,
                     MapPair::thm11}) {
        bool const twisted = p == MapPair::prop33 || p == MapPair::thm11;
        int const  t_hi    = twisted ? static_cast<int>(n) - 3 : 1;
        for (int t = 1; t <= t_hi; ++t) {
          items.push_back({p, n, t, {}});
        }
      }
    }
    cli::parallel_for(items.size(), jobs, [&items](std::size_t i) {
      items[i].report = verify_pair(items[i].pair, items[i].n, items[i].t);
    });
    Outcome o;
    for (auto const& it : items) {
      if (!it.report.ok()) {
        fail(o, "n=" + std::to_string(it.n) + " t=" + std::to_string(it.t)
                    + ": " + it.report.failures.front());
      }
    }
    o.detail = o.pass ? std::to_string(items.size()) + " (family, n, t) cases"
                      : o.detail;
    return o;
  }

  Outcome lemma_identities() {
    Outcome o;
    for (std::size_t n = 4; n <= 10; ++n) {
      auto const report = verify_lemma_suite(lemma_identity_suite(n));
      if (!report.ok()) {
        fail(o, "n=" + std::to_string(n) + ": " + report.failures.front());
      }
    }
    // k = 2 base case, literally: free reduction and braid moves only
    auto const p   = braid_chain(2, 'a');
    Word const lhs = p.word("a1^-1*a2^2*a1*a2");
    Word const rhs = p.word("a2*a1^2");
    auto const br  = braid_relation(p.word("a2"), p.word("a1"));
    auto const one = derive_by_substitution(lhs, rhs, br, 1);
    auto const any = derive_by_substitution(lhs, rhs, br);
    std::string const base
        = any ? "k=2 base case needs " + std::to_string(*any)
                    + " braid substitutions"
              : "k=2 base case not derivable";
    if (!one) {
      fail(o, "lemma suite n=4..10 holds; " + base + ", not 1");
    } else if (o.pass) {
      o.detail = "n = 4..10; " + base;
    }
    return o;
  }

  Outcome snf_properties() {
    using Dense = std::vector<std::vector<std::int64_t>>;
    std::mt19937                       rng(20240611);
    std::uniform_int_distribution<int> dim(1, 6);
    std::uniform_int_distribution<int> entry(-5, 5);
    Outcome                            o;
    int const                          trials = 1500;
    for (int trial = 0; trial < trials && o.pass; ++trial) {
      std::size_t const rows = static_cast<std::size_t>(dim(rng));
      std::size_t const cols = static_cast<std::size_t>(dim(rng));
      Dense             m(rows, std::vector<std::int64_t>(cols));
      for (auto& r : m) {
        for (auto& x : r) {
          x = entry(rng);
        }
      }
      auto const a  = smith_normal_form(IntMatrix::from_dense(m, cols));
      auto const or_ = oracle::determinantal(m, cols);
      bool same      = a.free_rank == or_.free_rank
                  && a.torsion.size() == or_.torsion.size();
      for (std::size_t i = 0; same && i < a.torsion.size(); ++i) {
        same = a.torsion[i] == or_.torsion[i];
      }
      if (same && cols <= 4) {
        for (std::int64_t d : {2, 3, 4}) {
          same = same
                 && oracle::residue_solutions(m, cols, d) == oracle::hom_count(a, d);
        }
      }
      if (!same) {
        fail(o, "oracle mismatch at trial " + std::to_string(trial));
        break;
      }
      std::shuffle(m.begin(), m.end(), rng);
      std::vector<std::size_t> perm(cols);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Dense s = m;
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
          s[r][c] = m[r][perm[c]];
        }
      }
      if (smith_normal_form(IntMatrix::from_dense(s, cols)) != a) {
        fail(o, "shuffle changed invariants at trial " + std::to_string(trial));
      }
    }
    o.detail = o.pass ? std::to_string(trials) + " random matrices" : o.detail;
    return o;
  }
}  // namespace

int main(int argc, char** argv) {
  std::set<int> known;
  for (int i = 1; i < argc; ++i) {
    std::string const arg = argv[i];
    if (arg == "--known-failure" && i + 1 < argc) {
      known.insert(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance [--known-failure N]...\n";
      return 2;
    }
  }
  // ARTINQ_THREADS wins; otherwise every core
  std::size_t const jobs = std::getenv("ARTINQ_THREADS") != nullptr
                               ? cli::default_jobs()
                               : std::max(1u, std::thread::hardware_concurrency());

  auto const rows = cli::reproduce_rows(5, 20, SubgroupKind::pair, jobs);

  struct Criterion {
    int                      id;
    std::string              name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria{
      {1, "pair stabiliser abelianisations, n = 5..20",
       [&rows] { return pair_table(rows); }},
      {2, "t = n-2 matches the cycle quotient",
       [&rows] { return last_t_equals_cycle(rows); }},
      {3, "point stabilisers give Z/2 + Z^2, n = 5..15",
       [jobs] { return point_stabilisers(jobs); }},
      {4, "index 4 subgroup classes at n = 4", low_index_square},
      {5, "rewriting table against finite and abelian images",
       [jobs] { return rho_tables(jobs); }},
      {6, "map families in finite quotients, n = 4..12",
       [jobs] { return map_families(jobs); }},
      {7, "lemma identities and the k = 2 base case", lemma_identities},
      {8, "Smith normal form against the oracle", snf_properties},
  };

  int status = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    auto const out   = c.run();
    auto const secs  = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    std::cout << (out.pass ? "PASS" : "FAIL") << " " << c.id << " " << c.name
              << " (" << out.detail << ")";
    if (!out.pass && known.count(c.id) != 0) {
      std::cout << " [known]";
    } else if (!out.pass) {
      status = 1;
    }
    std::cout << " " << std::fixed << std::setprecision(1) << secs << "s\n";
  }
  return status;
}
