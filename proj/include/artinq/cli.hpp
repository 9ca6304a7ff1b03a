// artinq - Artin group quotients, explicit isomorphisms and subgroup
// abelianisations.
//
// Command implementations for the artinq tool. Each command takes a Job and
// returns a document plus an exit status; argument parsing lives in
// tools/artinq.cpp.

#ifndef ARTINQ_CLI_HPP_
#define ARTINQ_CLI_HPP_

#include <algorithm>  // for min
#include <atomic>     // for atomic
#include <cstddef>    // for size_t
#include <cstdlib>    // for getenv, strtoul
#include <optional>   // for optional
#include <span>       // for span
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <thread>     // for thread
#include <utility>    // for move
#include <vector>     // for vector

#include "abelian.hpp"
#include "diagrams.hpp"
#include "io.hpp"
#include "low_index.hpp"
#include "pipeline.hpp"
#include "schreier.hpp"
#include "word_maps.hpp"

namespace artinq::cli {

  inline constexpr char const* tool_version = "1.0.0";

  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  enum class Format { json, gap, text, tsv };

  struct Job {
    std::string         command;
    std::string         diagram = "ngon";
    std::size_t         n       = 0;
    std::optional<int>  t;
    std::optional<QuotientKind> quotient;
    SubgroupKind        subgroup  = SubgroupKind::pair;
    Format              format    = Format::json;
    std::size_t         jobs      = 1;
    std::string         pair      = "all";
    std::string         direction = "both";
    std::size_t         k = 0, l = 0, m = 0;
    std::size_t         max_index = 4;
    std::size_t         n_lo = 0, n_hi = 0;
    bool                lemmas  = false;
    bool                corrupt = false;
  };

  struct Output {
    std::string text;
    int         exit_code = 0;
  };

  [[nodiscard]] inline Format parse_format(std::string const& s) {
    if (s == "json") {
      return Format::json;
    } else if (s == "gap") {
      return Format::gap;
    } else if (s == "text") {
      return Format::text;
    } else if (s == "tsv") {
      return Format::tsv;
    }
    throw UsageError("unknown format \"" + s + "\"");
  }

  [[nodiscard]] inline QuotientKind parse_quotient(std::string const& s) {
    if (s == "none") {
      return QuotientKind::none;
    } else if (s == "cycle") {
      return QuotientKind::cycle;
    } else if (s == "twisted") {
      return QuotientKind::twisted;
    }
    throw UsageError("unknown quotient \"" + s + "\"");
  }

  [[nodiscard]] inline SubgroupKind parse_subgroup(std::string const& s) {
    if (s == "pair") {
      return SubgroupKind::pair;
    } else if (s == "point") {
      return SubgroupKind::point;
    }
    throw UsageError("unknown subgroup \"" + s + "\"");
  }

  //! "A..B" or a single "A".
  [[nodiscard]] inline std::pair<std::size_t, std::size_t>
  parse_range(std::string const& s) {
    auto const dots = s.find("..");
    try {
      if (dots == std::string::npos) {
        auto const v = std::stoul(s);
        return {v, v};
      }
      return {std::stoul(s.substr(0, dots)), std::stoul(s.substr(dots + 2))};
    } catch (std::exception const&) {
      throw UsageError("bad range \"" + s + "\", expected A..B");
    }
  }

  //! ARTINQ_THREADS, or 1.
  [[nodiscard]] inline std::size_t default_jobs() {
    if (char const* env = std::getenv("ARTINQ_THREADS")) {
      auto const v = std::strtoul(env, nullptr, 10);
      if (v > 0) {
        return v;
      }
    }
    return 1;
  }

  //! Runs f(0) .. f(count - 1) on up to `jobs` threads. Results must be
  //! written to per-index slots so the output order does not depend on
  //! scheduling.
  template <typename F>
  void parallel_for(std::size_t count, std::size_t jobs, F&& f) {
    if (jobs <= 1 || count <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        f(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < std::min(jobs, count); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          f(i);
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
  }

  namespace detail {
    inline void require_n(std::size_t n) {
      if (n < 4) {
        throw UsageError("n must be at least 4");
      }
    }

    inline int require_t(Job const& job, int lo, int hi) {
      if (!job.t) {
        throw UsageError("--t is required here (valid range "
                         + std::to_string(lo) + ".." + std::to_string(hi)
                         + ")");
      }
      if (*job.t < lo || *job.t > hi) {
        throw UsageError("t = " + std::to_string(*job.t)
                         + " is out of range " + std::to_string(lo) + ".."
                         + std::to_string(hi));
      }
      return *job.t;
    }

    // --t alone selects the twisted quotient.
    inline QuotientKind effective_quotient(Job const& job) {
      if (job.quotient) {
        return *job.quotient;
      }
      return job.t ? QuotientKind::twisted : QuotientKind::none;
    }

    inline int ngon_t(Job const& job, QuotientKind q) {
      if (q != QuotientKind::twisted) {
        return 0;
      }
      return require_t(job, 1, static_cast<int>(job.n) - 2);
    }

    inline json header(Job const& job, json params) {
      json doc;
      doc["tool_version"] = tool_version;
      doc["command"]      = job.command;
      doc["params"]       = std::move(params);
      return doc;
    }

    inline json report_json(Report const& r) {
      return json{{"ok", r.ok()}, {"failures", r.failures}};
    }

    inline std::string dump(json const& doc) {
      return doc.dump(2) + "\n";
    }

    inline MapPair parse_pair(std::string const& s) {
      if (s == "prop31") {
        return MapPair::prop31;
      } else if (s == "prop32") {
        return MapPair::prop32;
      } else if (s == "prop33") {
        return MapPair::prop33;
      } else if (s == "thm11") {
        return MapPair::thm11;
      }
      throw UsageError("unknown pair \"" + s
                       + "\" (prop31, prop32, prop33, thm11)");
    }

    inline bool pair_needs_t(MapPair p) {
      return p == MapPair::prop33 || p == MapPair::thm11;
    }

    // Drops the last letter of the longest image: a deliberately broken map.
    inline void corrupt(GeneratorMap& m) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < m.images.size(); ++i) {
        if (m.images[i].size() > m.images[best].size()) {
          best = i;
        }
      }
      auto const& letters = m.images[best].letters();
      m.images[best]      = Word(std::span<Letter const>(
          letters.data(), letters.empty() ? 0 : letters.size() - 1));
      m.name += "-corrupt";
    }

    inline json map_json(GeneratorMap const& m) {
      json images = json::object();
      for (GenIndex g = 0; g < m.source.num_generators(); ++g) {
        images[m.source.generators.name(g)] = m.target.format(m.images[g]);
      }
      return json{{"name", m.name},
                  {"source", m.source.label},
                  {"target", m.target.label},
                  {"images", std::move(images)}};
    }

    inline Report verify_maps(GeneratorMap const& fwd, GeneratorMap const& bwd,
                              PairQuotients const& qs) {
      Report report;
      report.merge(check_exponent_sums(fwd));
      report.merge(check_exponent_sums(bwd));
      for (auto const& a : qs.on_forward_target) {
        report.merge(verify_in_quotient(fwd, a));
        report.merge(verify_mutual_inverse(bwd, fwd, a));
      }
      for (auto const& a : qs.on_forward_source) {
        report.merge(verify_in_quotient(bwd, a));
        report.merge(verify_mutual_inverse(fwd, bwd, a));
      }
      return report;
    }

    inline PresentationSpec present_spec(Job const& job) {
      require_n(job.n);
      auto const q = effective_quotient(job);
      if (job.diagram == "dn") {
        if (q != QuotientKind::none) {
          throw UsageError("A(D_n) takes no quotient");
        }
        return artin_dn(job.n);
      }
      if (job.diagram == "ngon") {
        return ngon_group(job.n, q, ngon_t(job, q));
      }
      if (job.diagram == "delta") {
        int const t = require_t(job, 1, static_cast<int>(job.n) - 3);
        switch (q) {
          case QuotientKind::none:
            return artin_delta(job.n, t);
          case QuotientKind::cycle:
            return delta_cycle_quotient(job.n, t);
          case QuotientKind::twisted:
            return delta_twisted_quotient(job.n, t);
        }
      }
      throw UsageError("unknown diagram \"" + job.diagram
                       + "\" (dn, ngon, delta)");
    }

    inline std::string presentation_output(Job const& job,
                                           PresentationSpec const& p,
                                           json params) {
      if (job.format == Format::gap || job.format == Format::text) {
        return to_gap(p);
      }
      auto doc            = header(job, std::move(params));
      doc["presentation"] = to_json(p);
      return dump(doc);
    }
  }  // namespace detail

  [[nodiscard]] inline Output cmd_present(Job const& job) {
    auto const p = detail::present_spec(job);
    json params{{"diagram", job.diagram},
                {"n", job.n},
                {"quotient", to_string(detail::effective_quotient(job))}};
    if (job.t) {
      params["t"] = *job.t;
    }
    return {detail::presentation_output(job, p, std::move(params)), 0};
  }

  [[nodiscard]] inline Output cmd_isomap(Job const& job) {
    detail::require_n(job.n);
    auto const pair = detail::parse_pair(job.pair);
    int        t    = 1;
    if (detail::pair_needs_t(pair)) {
      t = detail::require_t(job, 1, static_cast<int>(job.n) - 3);
    }
    if (job.direction != "fwd" && job.direction != "bwd"
        && job.direction != "both") {
      throw UsageError("direction must be fwd, bwd or both");
    }
    auto fwd = make_pair_map(pair, job.n, t, Direction::forward);
    auto bwd = make_pair_map(pair, job.n, t, Direction::backward);
    if (job.corrupt) {
      detail::corrupt(fwd);
    }
    auto const qs = pair_quotients(pair, job.n, t);
    Report     report;
    json       maps = json::array();
    if (job.direction != "bwd") {
      maps.push_back(detail::map_json(fwd));
      for (auto const& a : qs.on_forward_target) {
        report.merge(verify_in_quotient(fwd, a));
      }
      report.merge(check_exponent_sums(fwd));
    }
    if (job.direction != "fwd") {
      maps.push_back(detail::map_json(bwd));
      for (auto const& a : qs.on_forward_source) {
        report.merge(verify_in_quotient(bwd, a));
      }
      report.merge(check_exponent_sums(bwd));
    }
    if (job.direction == "both") {
      for (auto const& a : qs.on_forward_target) {
        report.merge(verify_mutual_inverse(bwd, fwd, a));
      }
      for (auto const& a : qs.on_forward_source) {
        report.merge(verify_mutual_inverse(fwd, bwd, a));
      }
    }
    json params{{"n", job.n},
                {"pair", job.pair},
                {"direction", job.direction},
                {"corrupt", job.corrupt}};
    if (detail::pair_needs_t(pair)) {
      params["t"] = t;
    }
    auto doc      = detail::header(job, std::move(params));
    doc["maps"]   = std::move(maps);
    doc["report"] = detail::report_json(report);
    return {detail::dump(doc), report.ok() ? 0 : 1};
  }

  [[nodiscard]] inline Output cmd_rho(Job const& job) {
    detail::require_n(job.n);
    if (job.k < 1 || job.k >= job.l || job.l > job.n || job.m < 1
        || job.m > job.n) {
      throw UsageError("need 1 <= k < l <= n and 1 <= m <= n");
    }
    auto const step   = rho_step(job.n, job.k, job.l, job.m);
    auto const ys     = y_alphabet(job.n);
    auto const ngon   = artin_ngon(job.n);
    Report     report = verify_rho_row(job.n, job.k, job.l, job.m);
    report.merge(RhoAbelianCheck(job.n).check(job.k, job.l, job.m));
    auto doc = detail::header(
        job, json{{"n", job.n}, {"k", job.k}, {"l", job.l}, {"m", job.m}});
    doc["row"]      = step.row;
    doc["word"]     = format_word(step.word, ys);
    doc["expanded"] = ngon.format(expand_y(job.n, step.word));
    doc["next"]     = {step.next.k, step.next.l};
    doc["report"]   = detail::report_json(report);
    return {detail::dump(doc), report.ok() ? 0 : 1};
  }

  [[nodiscard]] inline Output cmd_rs(Job const& job) {
    detail::require_n(job.n);
    auto const q  = detail::effective_quotient(job);
    int const  t  = detail::ngon_t(job, q);
    auto const sp = subgroup_presentation(job.n, q, t, job.subgroup);
    json       params{{"n", job.n},
                      {"quotient", to_string(q)},
                      {"subgroup", to_string(job.subgroup)}};
    if (q == QuotientKind::twisted) {
      params["t"] = t;
    }
    return {detail::presentation_output(job, sp.spec, std::move(params)), 0};
  }

  [[nodiscard]] inline Output cmd_abelianize(Job const& job) {
    detail::require_n(job.n);
    auto const q = detail::effective_quotient(job);
    int const  t = detail::ngon_t(job, q);
    auto const a = subgroup_abelianization(job.n, q, t, job.subgroup);
    json       params{{"n", job.n},
                      {"quotient", to_string(q)},
                      {"subgroup", to_string(job.subgroup)}};
    if (q == QuotientKind::twisted) {
      params["t"] = t;
    }
    auto       doc    = detail::header(job, std::move(params));
    json const result = to_json(a);
    for (auto const& [key, value] : result.items()) {
      doc[key] = value;
    }
    return {detail::dump(doc), 0};
  }

  [[nodiscard]] inline Output cmd_low_index(Job const& job) {
    detail::require_n(job.n);
    if (!job.quotient || *job.quotient == QuotientKind::none) {
      throw UsageError("--quotient cycle|twisted is required");
    }
    int const  t = detail::ngon_t(job, *job.quotient);
    auto const p = ngon_group(job.n, *job.quotient, t);
    if (job.max_index < 1) {
      throw UsageError("--max-index must be at least 1");
    }
    auto const              tables = low_index_subgroups(p, job.max_index);
    std::vector<std::size_t> counts(job.max_index + 1, 0);
    for (auto const& tab : tables) {
      ++counts[tab.num_cosets()];
    }
    json classes = json::array();
    for (std::size_t i = 1; i <= job.max_index; ++i) {
      classes.push_back(json{{"index", i}, {"classes", counts[i]}});
    }
    json params{{"n", job.n},
                {"quotient", to_string(*job.quotient)},
                {"max_index", job.max_index}};
    if (*job.quotient == QuotientKind::twisted) {
      params["t"] = t;
    }
    auto doc       = detail::header(job, std::move(params));
    doc["counts"]  = std::move(classes);
    doc["total"]   = tables.size();
    return {detail::dump(doc), 0};
  }

  struct ReproduceRow {
    std::size_t                      n;
    QuotientKind                     quotient;
    int                              t;
    SubgroupKind                     subgroup;
    AbelianInvariants                computed;
    std::optional<AbelianInvariants> expected;

    [[nodiscard]] bool matches() const {
      return !expected || computed == *expected;
    }
  };

  //! For each n: the subgroup in A(Delta_n) (pair mode only), G_0, and
  //! G_t for 1 <= t <= n-2.
  [[nodiscard]] inline std::vector<ReproduceRow>
  reproduce_rows(std::size_t lo, std::size_t hi, SubgroupKind s,
                 std::size_t jobs) {
    std::vector<ReproduceRow> rows;
    for (std::size_t n = lo; n <= hi; ++n) {
      if (s == SubgroupKind::pair) {
        rows.push_back({n, QuotientKind::none, 0, s, {}, {}});
      }
      rows.push_back({n, QuotientKind::cycle, 0, s, {}, {}});
      for (int t = 1; t <= static_cast<int>(n) - 2; ++t) {
        rows.push_back({n, QuotientKind::twisted, t, s, {}, {}});
      }
    }
    parallel_for(rows.size(), jobs, [&rows](std::size_t i) {
      auto& r    = rows[i];
      r.computed = subgroup_abelianization(r.n, r.quotient, r.t, r.subgroup);
      r.expected = expected_invariants(r.n, r.quotient, r.t, r.subgroup);
    });
    return rows;
  }

  [[nodiscard]] inline Output cmd_reproduce(Job const& job) {
    if (job.n_lo < 5 || job.n_hi < job.n_lo) {
      throw UsageError("--n-range A..B needs 5 <= A <= B");
    }
    auto const rows = reproduce_rows(job.n_lo, job.n_hi, job.subgroup,
                                     job.jobs);
    bool       ok   = true;
    for (auto const& r : rows) {
      ok = ok && r.matches();
    }
    if (job.format == Format::tsv || job.format == Format::text) {
      std::string out = "n\tquotient\tt\tsubgroup\tfree_rank\ttorsion\t"
                        "expected\tstatus\n";
      for (auto const& r : rows) {
        std::string torsion;
        for (auto const& d : r.computed.torsion) {
          torsion += (torsion.empty() ? "" : ",") + d.str();
        }
        out += std::to_string(r.n) + "\t" + to_string(r.quotient) + "\t"
               + std::to_string(r.t) + "\t" + to_string(r.subgroup) + "\t"
               + std::to_string(r.computed.free_rank) + "\t[" + torsion
               + "]\t"
               + (r.expected ? format_invariants(*r.expected) : "-") + "\t"
               + (r.matches() ? "pass" : "FAIL") + "\n";
      }
      return {out, ok ? 0 : 1};
    }
    json table = json::array();
    for (auto const& r : rows) {
      json row{{"n", r.n},
               {"quotient", to_string(r.quotient)},
               {"t", r.t},
               {"subgroup", to_string(r.subgroup)},
               {"computed", to_json(r.computed)}};
      row["expected"] = r.expected ? to_json(*r.expected) : json(nullptr);
      row["status"]   = r.matches() ? "pass" : "fail";
      table.push_back(std::move(row));
    }
    auto doc = detail::header(job, json{{"n_range", {job.n_lo, job.n_hi}},
                                        {"subgroup", to_string(job.subgroup)},
                                        {"jobs", job.jobs}});
    doc["rows"] = std::move(table);
    doc["ok"]   = ok;
    return {detail::dump(doc), ok ? 0 : 1};
  }

  [[nodiscard]] inline Output cmd_verify_maps(Job const& job) {
    if (job.n_lo < 4 || job.n_hi < job.n_lo) {
      throw UsageError("--n-range A..B needs 4 <= A <= B");
    }
    std::vector<MapPair> pairs;
    if (job.pair == "all") {
      pairs = {MapPair::prop31, MapPair::prop32, MapPair::prop33,
               MapPair::thm11};
    } else {
      pairs = {detail::parse_pair(job.pair)};
    }
    struct Item {
      MapPair     pair;
      std::string pair_name;
      std::size_t n;
      int         t;
      Report      report;
    };
    std::vector<Item> items;
    for (std::size_t n = job.n_lo; n <= job.n_hi; ++n) {
      for (auto p : pairs) {
        std::string const name = p == MapPair::prop31   ? "prop31"
                                 : p == MapPair::prop32 ? "prop32"
                                 : p == MapPair::prop33 ? "prop33"
                                                        : "thm11";
        if (detail::pair_needs_t(p)) {
          for (int t = 1; t <= static_cast<int>(n) - 3; ++t) {
            items.push_back({p, name, n, t, {}});
          }
        } else {
          items.push_back({p, name, n, 0, {}});
        }
      }
    }
    bool const corrupt = job.corrupt;
    parallel_for(items.size(), job.jobs, [&items, corrupt](std::size_t i) {
      auto&      it  = items[i];
      int const  t   = it.t == 0 ? 1 : it.t;
      auto       fwd = make_pair_map(it.pair, it.n, t, Direction::forward);
      auto const bwd = make_pair_map(it.pair, it.n, t, Direction::backward);
      if (corrupt) {
        detail::corrupt(fwd);
      }
      it.report = detail::verify_maps(fwd, bwd,
                                      pair_quotients(it.pair, it.n, t));
    });
    bool ok      = true;
    json results = json::array();
    for (auto const& it : items) {
      ok = ok && it.report.ok();
      json r{{"pair", it.pair_name}, {"n", it.n}};
      if (it.t != 0) {
        r["t"] = it.t;
      }
      r["report"] = detail::report_json(it.report);
      results.push_back(std::move(r));
    }
    json lemmas = json::array();
    if (job.lemmas) {
      std::vector<Report> reports(job.n_hi - job.n_lo + 1);
      parallel_for(reports.size(), job.jobs, [&](std::size_t i) {
        reports[i] = verify_lemma_suite(lemma_identity_suite(job.n_lo + i));
      });
      for (std::size_t i = 0; i < reports.size(); ++i) {
        ok = ok && reports[i].ok();
        lemmas.push_back(json{{"n", job.n_lo + i},
                              {"report", detail::report_json(reports[i])}});
      }
    }
    auto doc = detail::header(job, json{{"n_range", {job.n_lo, job.n_hi}},
                                        {"pair", job.pair},
                                        {"lemmas", job.lemmas},
                                        {"corrupt", job.corrupt},
                                        {"jobs", job.jobs}});
    doc["maps"]   = std::move(results);
    doc["lemmas"] = std::move(lemmas);
    doc["ok"]     = ok;
    return {detail::dump(doc), ok ? 0 : 1};
  }

  [[nodiscard]] inline Output run(Job const& job) {
    if (job.command == "present") {
      return cmd_present(job);
    } else if (job.command == "isomap") {
      return cmd_isomap(job);
    } else if (job.command == "rho") {
      return cmd_rho(job);
    } else if (job.command == "rs") {
      return cmd_rs(job);
    } else if (job.command == "abelianize") {
      return cmd_abelianize(job);
    } else if (job.command == "low-index") {
      return cmd_low_index(job);
    } else if (job.command == "reproduce") {
      return cmd_reproduce(job);
    } else if (job.command == "verify-maps") {
      return cmd_verify_maps(job);
    }
    throw UsageError("unknown command \"" + job.command + "\"");
  }

}  // namespace artinq::cli

#endif  // ARTINQ_CLI_HPP_
