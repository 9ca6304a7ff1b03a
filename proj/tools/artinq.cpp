// artinq command line tool.

#include <exception>  // for exception
#include <iostream>   // for cout, cerr
#include <string>     // for string

#include <CLI11.hpp>

#include "artinq/cli.hpp"

namespace {
  using artinq::cli::Job;

  struct Raw {
    std::string quotient;
    std::string subgroup = "pair";
    std::string format   = "json";
    std::string range;
    int         t     = 0;
  };

  void add_n(CLI::App* sub, Job& job) {
    sub->add_option("--n", job.n, "Number of generators (n >= 4)")
        ->required();
  }

  void add_t(CLI::App* sub, Raw& raw) {
    sub->add_option("--t", raw.t, "Twist parameter");
  }

  void add_jobs(CLI::App* sub, Job& job) {
    sub->add_option("--jobs", job.jobs,
                    "Worker threads (default: ARTINQ_THREADS or 1)");
  }
}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Artin group quotients: presentations, explicit isomorphisms, "
               "subgroup abelianisations and low index subgroups"};
  app.set_version_flag("--version", std::string(artinq::cli::tool_version));
  app.require_subcommand(1);

  Job job;
  job.jobs = artinq::cli::default_jobs();
  Raw raw;

  auto* present = app.add_subcommand("present", "Emit a presentation");
  present->add_option("--diagram", job.diagram, "dn, ngon or delta")
      ->check(CLI::IsMember({"dn", "ngon", "delta"}));
  add_n(present, job);
  add_t(present, raw);
  present->add_option("--quotient", raw.quotient, "none, cycle or twisted");
  present->add_option("--format", raw.format, "json, gap or text");

  auto* isomap = app.add_subcommand(
      "isomap", "Print and verify one family of explicit homomorphisms");
  add_n(isomap, job);
  add_t(isomap, raw);
  isomap->add_option("--pair", job.pair, "prop31, prop32, prop33 or thm11")
      ->required();
  isomap->add_option("--direction", job.direction, "fwd, bwd or both");
  isomap->add_flag("--corrupt", job.corrupt,
                   "Break the forward map on purpose (negative control)");

  auto* rho = app.add_subcommand("rho", "One row of the rewriting table");
  add_n(rho, job);
  rho->add_option("--k", job.k)->required();
  rho->add_option("--l", job.l)->required();
  rho->add_option("--m", job.m)->required();

  auto* rs = app.add_subcommand("rs", "Subgroup presentation");
  add_n(rs, job);
  add_t(rs, raw);
  rs->add_option("--quotient", raw.quotient, "none, cycle or twisted");
  rs->add_option("--subgroup", raw.subgroup, "pair or point");
  rs->add_option("--format", raw.format, "json or gap");

  auto* abel = app.add_subcommand("abelianize",
                                  "Abelian invariants of a subgroup");
  add_n(abel, job);
  add_t(abel, raw);
  abel->add_option("--quotient", raw.quotient, "none, cycle or twisted");
  abel->add_option("--subgroup", raw.subgroup, "pair or point");

  auto* low = app.add_subcommand("low-index",
                                 "Conjugacy classes of low index subgroups");
  add_n(low, job);
  add_t(low, raw);
  low->add_option("--quotient", raw.quotient, "cycle or twisted")->required();
  low->add_option("--max-index", job.max_index, "Largest index");

  auto* repro = app.add_subcommand(
      "reproduce", "Subgroup abelianisations against the published table");
  repro->add_option("--n-range", raw.range, "A..B with A >= 5")->required();
  repro->add_option("--subgroup", raw.subgroup, "pair or point");
  repro->add_option("--format", raw.format, "json or tsv");
  add_jobs(repro, job);

  auto* verify = app.add_subcommand(
      "verify-maps", "Check every map family in finite quotients");
  verify->add_option("--n-range", raw.range, "A..B with A >= 4")->required();
  verify->add_option("--pair", job.pair,
                     "all, prop31, prop32, prop33 or thm11");
  verify->add_flag("--lemmas", job.lemmas, "Also run the word identity suite");
  verify->add_flag("--corrupt", job.corrupt,
                   "Break the forward maps on purpose (negative control)");
  add_jobs(verify, job);

  CLI11_PARSE(app, argc, argv);

  try {
    auto* sub   = app.get_subcommands().front();
    job.command = sub->get_name();
    auto const* t_opt = sub->get_option_no_throw("--t");
    if (t_opt != nullptr && t_opt->count() > 0) {
      job.t = raw.t;
    }
    if (!raw.quotient.empty()) {
      job.quotient = artinq::cli::parse_quotient(raw.quotient);
    }
    job.subgroup = artinq::cli::parse_subgroup(raw.subgroup);
    job.format   = artinq::cli::parse_format(raw.format);
    if (!raw.range.empty()) {
      auto const [lo, hi] = artinq::cli::parse_range(raw.range);
      job.n_lo            = lo;
      job.n_hi            = hi;
    }
    auto const out = artinq::cli::run(job);
    std::cout << out.text;
    return out.exit_code;
  } catch (artinq::cli::UsageError const& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
