// artinq - Artin group quotients, explicit isomorphisms and subgroup
// abelianisations.
//
// End-to-end computations shared by the command line tool and the tests:
// subgroup abelianisations of A(Delta_n) and its quotients, their expected
// values, and the checks of the rewriting table.

#ifndef ARTINQ_PIPELINE_HPP_
#define ARTINQ_PIPELINE_HPP_

#include <cstddef>    // for size_t
#include <optional>   // for optional
#include <stdexcept>  // for invalid_argument, out_of_range
#include <string>     // for string
#include <vector>     // for vector

#include "abelian.hpp"
#include "diagrams.hpp"
#include "perm.hpp"
#include "schreier.hpp"
#include "word.hpp"

namespace artinq {

  enum class QuotientKind { none, cycle, twisted };
  enum class SubgroupKind { pair, point };

  [[nodiscard]] inline std::string to_string(QuotientKind q) {
    switch (q) {
      case QuotientKind::none:
        return "none";
      case QuotientKind::cycle:
        return "cycle";
      case QuotientKind::twisted:
        return "twisted";
    }
    return "?";
  }

  [[nodiscard]] inline std::string to_string(SubgroupKind s) {
    return s == SubgroupKind::pair ? "pair" : "point";
  }

  //! A(Delta_n), G_0 or G_t (1 <= t <= n-2).
  [[nodiscard]] inline PresentationSpec ngon_group(std::size_t n,
                                                   QuotientKind q, int t = 0) {
    if (n < 4) {
      throw std::out_of_range("n must be at least 4");
    }
    switch (q) {
      case QuotientKind::none:
        return artin_ngon(n);
      case QuotientKind::cycle:
        return ngon_cycle_quotient(n);
      case QuotientKind::twisted:
        if (t < 1 || static_cast<std::size_t>(t) > n - 2) {
          throw std::out_of_range("t must lie in 1.." + std::to_string(n - 2));
        }
        return ngon_twisted_quotient(n, t);
    }
    throw std::invalid_argument("unknown quotient");
  }

  //! Presentation of the pair stabiliser (on y_1 .. y_{n+1}) or the point
  //! stabiliser (on generic Schreier generators).
  [[nodiscard]] inline SubgroupPresentation
  subgroup_presentation(std::size_t n, QuotientKind q, int t,
                        SubgroupKind s) {
    auto const g = ngon_group(n, q, t);
    if (s == SubgroupKind::pair) {
      return pair_subgroup_presentation(g, n);
    }
    return generic_subgroup_presentation(g, point_generic_schreier(g, n));
  }

  [[nodiscard]] inline AbelianInvariants
  subgroup_abelianization(std::size_t n, QuotientKind q, int t,
                          SubgroupKind s) {
    return abelianization(subgroup_presentation(n, q, t, s).spec);
  }

  [[nodiscard]] inline AbelianInvariants
  make_invariants(std::size_t free_rank, std::vector<int> const& torsion) {
    AbelianInvariants a;
    a.free_rank = free_rank;
    for (int d : torsion) {
      a.torsion.emplace_back(d);
    }
    return a;
  }

  //! Published values for n > 4: H -> Z^4, H_0 -> Z/2 + Z^3,
  //! H_t -> Z/2 + Z/4 + Z^2 (1 <= t <= n-3), H_{n-2} as H_0; both point
  //! stabilisers of G_0 and G_t give Z/2 + Z^2. Nothing is recorded for
  //! the point stabiliser in A(Delta_n).
  [[nodiscard]] inline std::optional<AbelianInvariants>
  expected_invariants(std::size_t n, QuotientKind q, int t, SubgroupKind s) {
    if (s == SubgroupKind::point) {
      if (q == QuotientKind::none) {
        return std::nullopt;
      }
      return make_invariants(2, {2});
    }
    switch (q) {
      case QuotientKind::none:
        return make_invariants(4, {});
      case QuotientKind::cycle:
        return make_invariants(3, {2});
      case QuotientKind::twisted:
        if (static_cast<std::size_t>(t) == n - 2) {
          return make_invariants(3, {2});
        }
        return make_invariants(2, {2, 4});
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting table checks
  ////////////////////////////////////////////////////////////////////////

  //! t_{k,l} a_m t_{k',l'}^-1 against the expanded table word, in the
  //! permutation and signed quotients of A(Delta_n), plus the end coset
  //! against the pair action.
  [[nodiscard]] inline Report verify_rho_row(std::size_t n, std::size_t k,
                                             std::size_t l, std::size_t m) {
    Report     report;
    auto const step = rho_step(n, k, l, m);
    std::string const where = "rho(t_{" + std::to_string(k) + ","
                              + std::to_string(l) + "}, a"
                              + std::to_string(m) + ")";
    if (pair_image(n, {k, l}, m) != step.next) {
      report.failures.push_back(where + ": end coset disagrees with the "
                                        "pair action");
      return report;
    }
    Word const lhs = pair_rep(n, k, l) * Word(gen(static_cast<GenIndex>(m - 1)))
                     * pair_rep(n, step.next.k, step.next.l).inverse();
    Word const rhs   = expand_y(n, step.word);
    auto const sigma = sigma_assignment(n);
    auto const sgn   = ngon_signed_assignment(n);
    if (evaluate(sigma, lhs) != evaluate(sigma, rhs)) {
      report.failures.push_back(where + " [sigma]");
    }
    if (evaluate(sgn, lhs) != evaluate(sgn, rhs)) {
      report.failures.push_back(where + " [signed]");
    }
    return report;
  }

  //! Compares each table row with the generic rewriting at the abelian
  //! level: the generic rewrite of expand(rho) t_{k',l'} a_m^-1 t_{k,l}^-1
  //! must lie in the relation lattice of H.
  class RhoAbelianCheck {
   public:
    explicit RhoAbelianCheck(std::size_t n)
        : n_(n),
          group_(artin_ngon(n)),
          rs_(pair_generic_schreier(group_, n)),
          lattice_(exponent_matrix(generic_subgroup_presentation(group_, rs_)
                                       .spec)) {}

    [[nodiscard]] Report check(std::size_t k, std::size_t l,
                               std::size_t m) const {
      Report     report;
      auto const step = rho_step(n_, k, l, m);
      Word const loop = expand_y(n_, step.word)
                        * pair_rep(n_, step.next.k, step.next.l)
                        * Word(inv(static_cast<GenIndex>(m - 1)))
                        * pair_rep(n_, k, l).inverse();
      Coset      end  = 0;
      Word const w    = rs_.rewrite(0, loop, &end);
      if (end != 0) {
        report.failures.push_back("abelian rho check: loop leaves the "
                                  "subgroup");
      } else if (!lattice_.contains(exponent_row(w))) {
        report.failures.push_back(
            "abelian rho check: rho(t_{" + std::to_string(k) + ","
            + std::to_string(l) + "}, a" + std::to_string(m)
            + ") differs from the generic rewrite in H/[H,H]");
      }
      return report;
    }

    [[nodiscard]] RelationLattice const& lattice() const noexcept {
      return lattice_;
    }

   private:
    std::size_t      n_;
    PresentationSpec group_;
    GenericSchreier  rs_;
    RelationLattice  lattice_;
  };

  //! Every legal (k, l, m) at this n: exactly one matching table row, the
  //! quotient identity, and (optionally) the abelian comparison.
  [[nodiscard]] inline Report verify_rho_table(std::size_t n,
                                               bool        abelian = true) {
    Report                         report;
    std::optional<RhoAbelianCheck> ab;
    if (abelian) {
      ab.emplace(n);
    }
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t l = k + 1; l <= n; ++l) {
        for (std::size_t m = 1; m <= n; ++m) {
          auto const rows = rho_matching_rows(n, k, l, m);
          if (rows.size() != 1) {
            report.failures.push_back(
                "rho rows matching (" + std::to_string(k) + ","
                + std::to_string(l) + "," + std::to_string(m)
                + "): " + std::to_string(rows.size()));
            continue;
          }
          report.merge(verify_rho_row(n, k, l, m));
          if (ab) {
            report.merge(ab->check(k, l, m));
          }
        }
      }
    }
    return report;
  }

}  // namespace artinq

#endif  // ARTINQ_PIPELINE_HPP_
