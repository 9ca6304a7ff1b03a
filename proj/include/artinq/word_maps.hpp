// artinq - Artin group quotients, explicit isomorphisms and subgroup
// abelianisations.
//
// Explicit homomorphisms between the presentations (generator image tables),
// their verification in finite quotients, and concrete instances of the
// braid/commutation word identities used to justify them.

#ifndef ARTINQ_WORD_MAPS_HPP_
#define ARTINQ_WORD_MAPS_HPP_

#include <cstddef>    // for size_t
#include <memory>     // for shared_ptr, make_shared
#include <optional>   // for optional
#include <stdexcept>  // for invalid_argument, out_of_range
#include <string>     // for string
#include <utility>    // for move
#include <variant>    // for visit
#include <vector>     // for vector

#include "diagrams.hpp"
#include "perm.hpp"
#include "word.hpp"

namespace artinq {

  enum class Direction { forward, backward };

  //! A homomorphism candidate: one word over the target generators for each
  //! source generator.
  struct GeneratorMap {
    std::string       name;
    PresentationSpec  source;
    PresentationSpec  target;
    std::vector<Word> images;

    [[nodiscard]] Word const& image(GenIndex g) const {
      return images.at(g);
    }

    [[nodiscard]] Word const& image(std::string_view name) const {
      return images.at(source.gen(name));
    }

    [[nodiscard]] bool well_formed() const {
      if (images.size() != source.num_generators()) {
        return false;
      }
      for (auto const& w : images) {
        if (!uses_only(w, target.num_generators())) {
          return false;
        }
      }
      return true;
    }
  };

  [[nodiscard]] inline Word apply(GeneratorMap const& m, Word const& w) {
    Word out;
    for (Letter x : w) {
      if (x.gen >= m.images.size()) {
        throw std::out_of_range("map \"" + m.name
                                + "\" has no image for generator "
                                + std::to_string(x.gen));
      }
      out *= (x.sign > 0 ? m.images[x.gen] : m.images[x.gen].inverse());
    }
    return out;
  }

  //! first then second.
  [[nodiscard]] inline GeneratorMap compose(GeneratorMap const& first,
                                            GeneratorMap const& second) {
    GeneratorMap m{second.name + " o " + first.name, first.source,
                   second.target, {}};
    for (auto const& w : first.images) {
      m.images.push_back(apply(second, w));
    }
    return m;
  }

  [[nodiscard]] inline GeneratorMap identity_map(PresentationSpec const& p,
                                                 PresentationSpec const& q,
                                                 std::string name = "id") {
    if (p.num_generators() != q.num_generators()) {
      throw std::invalid_argument("identity map needs equal generator counts");
    }
    GeneratorMap m{std::move(name), p, q, {}};
    for (GenIndex g = 0; g < p.num_generators(); ++g) {
      m.images.emplace_back(artinq::gen(g));
    }
    return m;
  }

  //! The assignment of the source generators obtained by evaluating their
  //! images under an assignment of the target.
  template <GroupElement E>
  [[nodiscard]] Assignment<E> pullback(Assignment<E> const& on_target,
                                       GeneratorMap const&  m) {
    std::vector<E> images;
    for (auto const& w : m.images) {
      images.push_back(evaluate(on_target, w));
    }
    return Assignment<E>(on_target.name() + "@" + m.name, on_target.degree(),
                         std::move(images));
  }

  [[nodiscard]] inline AnyAssignment pullback(AnyAssignment const& on_target,
                                              GeneratorMap const&  m) {
    return std::visit(
        [&m](auto const& a) -> AnyAssignment { return pullback(a, m); },
        on_target);
  }

  namespace detail {
    // Builds image words by generator name in the target.
    class Images {
     public:
      explicit Images(PresentationSpec const& target) : target_(target) {}

      [[nodiscard]] Word g(std::string const& prefix, std::size_t i,
                           int e = 1) const {
        return Word::power(target_.gen(prefix + std::to_string(i)), e);
      }

      //! prefix_lo ... prefix_hi, empty when lo > hi.
      [[nodiscard]] Word up(std::string const& prefix, std::size_t lo,
                            std::size_t hi, int e = 1) const {
        Word w;
        for (std::size_t i = lo; i <= hi && lo <= hi; ++i) {
          w *= g(prefix, i, e);
        }
        return w;
      }

      //! prefix_hi ... prefix_lo (descending), empty when hi < lo.
      [[nodiscard]] Word down(std::string const& prefix, std::size_t hi,
                              std::size_t lo, int e = 1) const {
        Word w;
        for (std::size_t i = hi; i >= lo && hi >= lo; --i) {
          w *= g(prefix, i, e);
          if (i == 0) {
            break;
          }
        }
        return w;
      }

     private:
      PresentationSpec const& target_;
    };

    inline GeneratorMap make_map(std::string name, PresentationSpec source,
                                 PresentationSpec target) {
      GeneratorMap m{std::move(name), std::move(source), std::move(target),
                     {}};
      m.images.resize(m.source.num_generators());
      return m;
    }

    inline void set(GeneratorMap& m, std::string const& name, Word w) {
      m.images.at(m.source.gen(name)) = std::move(w);
    }

    inline std::string dir_tag(Direction d) {
      return d == Direction::forward ? "fwd" : "bwd";
    }
  }  // namespace detail

  //! A(D_n) and A(Delta_n) modulo the cycle commutator. Forward sends the
  //! n-gon generators a_i to words in x; backward sends x_i to words in a.
  [[nodiscard]] inline GeneratorMap map_prop31(std::size_t n, Direction dir) {
    if (n < 4) {
      throw std::invalid_argument("needs n >= 4");
    }
    auto ngon = ngon_cycle_quotient(n);
    auto dn   = artin_dn(n);
    if (dir == Direction::forward) {
      auto           m = detail::make_map("prop31-fwd", ngon, dn);
      detail::Images x(m.target);
      detail::set(m, "a1", x.g("x", 1));
      for (std::size_t i = 2; i <= n - 1; ++i) {
        detail::set(m, "a" + std::to_string(i), x.g("x", i + 1));
      }
      detail::set(m, "a" + std::to_string(n),
                  x.down("x", n, 3, -1) * x.g("x", 2) * x.up("x", 3, n));
      return m;
    }
    auto           m = detail::make_map("prop31-bwd", dn, ngon);
    detail::Images a(m.target);
    detail::set(m, "x1", a.g("a", 1));
    detail::set(m, "x2",
                a.up("a", 2, n - 1) * a.g("a", n) * a.down("a", n - 1, 2, -1));
    for (std::size_t i = 3; i <= n; ++i) {
      detail::set(m, "x" + std::to_string(i), a.g("a", i - 1));
    }
    return m;
  }

  //! A(D_n) and A(Delta_{1,n}) modulo cc(b1, b2, b3, b4). Forward sends b to
  //! words in x.
  [[nodiscard]] inline GeneratorMap map_prop32(std::size_t n, Direction dir) {
    if (n < 4) {
      throw std::invalid_argument("needs n >= 4");
    }
    auto delta = delta_cycle_quotient(n, 1);
    auto dn    = artin_dn(n);
    if (dir == Direction::forward) {
      auto           m = detail::make_map("prop32-fwd", delta, dn);
      detail::Images x(m.target);
      detail::set(m, "b1", x.g("x", 4));
      detail::set(m, "b2", x.g("x", 3));
      detail::set(m, "b3", x.g("x", 1));
      detail::set(m, "b4",
                  x.g("x", 1, -1) * x.g("x", 3, -1) * x.g("x", 2) * x.g("x", 3)
                      * x.g("x", 1));
      for (std::size_t k = 5; k <= n; ++k) {
        detail::set(m, "b" + std::to_string(k), x.g("x", k));
      }
      return m;
    }
    auto           m = detail::make_map("prop32-bwd", dn, delta);
    detail::Images b(m.target);
    detail::set(m, "x1", b.g("b", 3));
    detail::set(m, "x2",
                b.g("b", 2) * b.g("b", 3) * b.g("b", 4) * b.g("b", 3, -1)
                    * b.g("b", 2, -1));
    detail::set(m, "x3", b.g("b", 2));
    detail::set(m, "x4", b.g("b", 1));
    for (std::size_t k = 5; k <= n; ++k) {
      detail::set(m, "x" + std::to_string(k), b.g("b", k));
    }
    return m;
  }

  //! Cycle commutator quotients of A(Delta_{t,n}) (Q2) and A(Delta_{1,n})
  //! (Q1). Forward goes Q2 -> Q1 (c generators as words in b); backward
  //! goes Q1 -> Q2. The generators b_1 .. b_{4+r} correspond.
  [[nodiscard]] inline GeneratorMap map_prop33(std::size_t n, int t,
                                               Direction dir) {
    check_twist_range(n, t);
    std::size_t const r  = n - 3 - static_cast<std::size_t>(t);
    auto              q1 = delta_cycle_quotient(n, 1);
    auto              q2 = delta_cycle_quotient(n, t);
    std::string const tag
        = "prop33-" + detail::dir_tag(dir) + "-t" + std::to_string(t);
    if (dir == Direction::forward) {
      auto           m = detail::make_map(tag, q2, q1);
      detail::Images b(m.target);
      for (std::size_t i = 1; i <= 4 + r; ++i) {
        detail::set(m, "b" + std::to_string(i), b.g("b", i));
      }
      if (5 + r <= n) {
        // c_{5+r} := b_{5+r} b_{4+r} ... b_5 b1 b2 b3 b2^-1 b1^-1 b_5^-1 ...
        //            b_{5+r}^-1
        Word const head = b.g("b", 5 + r) * b.down("b", 4 + r, 5) * b.g("b", 1)
                          * b.g("b", 2);
        detail::set(m, "c" + std::to_string(5 + r),
                    head * b.g("b", 3) * head.inverse());
        for (std::size_t k = 6 + r; k <= n; ++k) {
          detail::set(m, "c" + std::to_string(k), b.g("b", k));
        }
      }
      return m;
    }
    auto           m = detail::make_map(tag, q1, q2);
    detail::Images q(m.target);
    for (std::size_t i = 1; i <= 4 + r; ++i) {
      detail::set(m, "b" + std::to_string(i), q.g("b", i));
    }
    if (5 + r <= n) {
      // b_{5+r} := b_{4+r} ... b_5 b1 b2 b3 c_{5+r} b3^-1 b2^-1 b1^-1 b_5^-1
      //            ... b_{4+r}^-1
      Word const head = q.down("b", 4 + r, 5) * q.g("b", 1) * q.g("b", 2)
                        * q.g("b", 3);
      detail::set(m, "b" + std::to_string(5 + r),
                  head * q.g("c", 5 + r) * head.inverse());
      for (std::size_t k = 6 + r; k <= n; ++k) {
        detail::set(m, "b" + std::to_string(k), q.g("c", k));
      }
    }
    return m;
  }

  //! Q_{n,t} (twisted quotient of A(Delta_{t,n})) and G_{n,t} (t-twisted
  //! quotient of A(Delta_n)). Forward sends b, c to words in a; backward
  //! sends a to words in b, c. For n = 4 the presentations coincide and the
  //! map is the identity correspondence.
  [[nodiscard]] inline GeneratorMap map_thm11(std::size_t n, int t,
                                              Direction dir) {
    check_twist_range(n, t);
    auto              q   = delta_twisted_quotient(n, t);
    auto              g   = ngon_twisted_quotient(n, t);
    std::string const tag = "thm11-" + detail::dir_tag(dir) + "-t"
                            + std::to_string(t);
    if (n == 4) {
      return dir == Direction::forward ? identity_map(q, g, tag)
                                       : identity_map(g, q, tag);
    }
    std::size_t const r = n - 3 - static_cast<std::size_t>(t);
    if (dir == Direction::forward) {
      auto           m = detail::make_map(tag, q, g);
      detail::Images a(m.target);
      // b1 := a2 ... a_{r+1} a_{r+2} a_{r+1}^-1 ... a2^-1
      detail::set(m, "b1",
                  a.up("a", 2, r + 1) * a.g("a", r + 2)
                      * a.down("a", r + 1, 2, -1));
      // b2 := a2 ... a_{r+2} a_{r+3}^-1 ... a_{n-1}^-1 a_n a_{n-1} ...
      //       a_{r+3} a_{r+2}^-1 ... a2^-1
      detail::set(m, "b2",
                  a.up("a", 2, r + 2) * a.up("a", r + 3, n - 1, -1)
                      * a.g("a", n) * a.down("a", n - 1, r + 3)
                      * a.down("a", r + 2, 2, -1));
      // b3 := a_{r+4}^-1 ... a_{n-1}^-1 a_n a_{n-1} ... a_{r+4}
      detail::set(m, "b3",
                  a.up("a", r + 4, n - 1, -1) * a.g("a", n)
                      * a.down("a", n - 1, r + 4));
      detail::set(m, "b4", a.g("a", 1));
      for (std::size_t k = 5; k <= r + 4; ++k) {
        detail::set(m, "b" + std::to_string(k), a.g("a", r + 7 - k));
      }
      for (std::size_t k = 5 + r; k <= n; ++k) {
        detail::set(m, "c" + std::to_string(k), a.g("a", k - 1));
      }
      return m;
    }
    auto           m = detail::make_map(tag, g, q);
    detail::Images b(m.target);
    detail::set(m, "a1", b.g("b", 4));
    // a2 := b_{r+4} b_{r+3} ... b5 b1 b5^-1 ... b_{r+4}^-1
    detail::set(m, "a2",
                b.down("b", r + 4, 5) * b.g("b", 1) * b.up("b", 5, r + 4, -1));
    for (std::size_t k = 3; k <= r + 2; ++k) {
      detail::set(m, "a" + std::to_string(k), b.g("b", r + 7 - k));
    }
    // a_{r+3} := b1^-1 b2 b3 b2^-1 b1
    detail::set(m, "a" + std::to_string(r + 3),
                b.g("b", 1, -1) * b.g("b", 2) * b.g("b", 3) * b.g("b", 2, -1)
                    * b.g("b", 1));
    for (std::size_t k = r + 4; k <= n - 1; ++k) {
      detail::set(m, "a" + std::to_string(k), b.g("c", k + 1));
    }
    // a_n := c_n ... c_{r+5} b3 c_{r+5}^-1 ... c_n^-1
    detail::set(m, "a" + std::to_string(n),
                b.down("c", n, r + 5) * b.g("b", 3) * b.up("c", r + 5, n, -1));
    return m;
  }

  enum class MapPair { prop31, prop32, prop33, thm11 };

  [[nodiscard]] inline GeneratorMap make_pair_map(MapPair p, std::size_t n,
                                                  int t, Direction d) {
    switch (p) {
      case MapPair::prop31:
        return map_prop31(n, d);
      case MapPair::prop32:
        return map_prop32(n, d);
      case MapPair::prop33:
        return map_prop33(n, t, d);
      case MapPair::thm11:
        return map_thm11(n, t, d);
    }
    throw std::invalid_argument("unknown map pair");
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite quotients of each presentation family
  ////////////////////////////////////////////////////////////////////////

  // Cyclic quotient order; any value > 2 separates a generator from its
  // inverse.
  inline constexpr std::size_t cyclic_quotient_order = 5;

  [[nodiscard]] inline std::vector<AnyAssignment> dn_quotients(std::size_t n) {
    return {dn_signed_assignment(n), dn_perm_assignment(n),
            cyclic_assignment(n, cyclic_quotient_order)};
  }

  //! Quotients of A(Delta_n) killing both the cycle commutator and every
  //! twisted cycle commutator.
  [[nodiscard]] inline std::vector<AnyAssignment>
  ngon_quotients(std::size_t n) {
    return {sigma_assignment(n), ngon_signed_assignment(n),
            cyclic_assignment(n, cyclic_quotient_order)};
  }

  //! Quotients of A(Delta_{t,n}) / cc, obtained by pulling the D_n quotients
  //! back along Q2 -> Q1 -> A(D_n). They must be validated by
  //! check_relations before use, which the verification routines do.
  [[nodiscard]] inline std::vector<AnyAssignment>
  delta_cycle_quotients(std::size_t n, int t) {
    auto const m = compose(map_prop33(n, t, Direction::forward),
                           map_prop32(n, Direction::forward));
    std::vector<AnyAssignment> out;
    for (auto const& a : dn_quotients(n)) {
      out.push_back(pullback(a, m));
    }
    return out;
  }

  //! Quotients of Q_{n,t}, pulled back along Q_{n,t} -> G_{n,t}.
  [[nodiscard]] inline std::vector<AnyAssignment>
  delta_twisted_quotients(std::size_t n, int t) {
    auto const                 m = map_thm11(n, t, Direction::forward);
    std::vector<AnyAssignment> out;
    for (auto const& a : ngon_quotients(n)) {
      out.push_back(pullback(a, m));
    }
    return out;
  }

  //! Finite quotients available for the source and target of a map family.
  struct PairQuotients {
    std::vector<AnyAssignment> on_forward_source;
    std::vector<AnyAssignment> on_forward_target;
  };

  [[nodiscard]] inline PairQuotients pair_quotients(MapPair p, std::size_t n,
                                                    int t) {
    switch (p) {
      case MapPair::prop31:
        return {ngon_quotients(n), dn_quotients(n)};
      case MapPair::prop32:
        return {delta_cycle_quotients(n, 1), dn_quotients(n)};
      case MapPair::prop33:
        return {delta_cycle_quotients(n, t), delta_cycle_quotients(n, 1)};
      case MapPair::thm11:
        return {delta_twisted_quotients(n, t), ngon_quotients(n)};
    }
    throw std::invalid_argument("unknown map pair");
  }

  ////////////////////////////////////////////////////////////////////////
  // Verification
  ////////////////////////////////////////////////////////////////////////

  //! Evaluates the image of every source relation and relator under the
  //! given assignment of the target. An empty report is a necessary
  //! condition for `m` to define a homomorphism.
  [[nodiscard]] inline Report
  verify_in_quotient(GeneratorMap const& m, AnyAssignment const& on_target) {
    Report      report;
    auto const  qname = name_of(on_target);
    auto const  pre   = check_relations(m.target, on_target);
    if (!pre.ok()) {
      report.merge(pre, m.name + " [" + qname
                            + "] target quotient is not a homomorphism: ");
      return report;
    }
    report.merge(check_relations(m.source, pullback(on_target, m)),
                 m.name + " [" + qname + "] ");
    return report;
  }

  //! For each source generator g of m1, evaluates m2(m1(g)) g^-1 under an
  //! assignment of m1's source.
  [[nodiscard]] inline Report
  verify_mutual_inverse(GeneratorMap const& m1, GeneratorMap const& m2,
                        AnyAssignment const& on_source) {
    Report report;
    if (!(m1.target.generators == m2.source.generators)
        || !(m2.target.generators == m1.source.generators)) {
      report.failures.push_back(m1.name + " and " + m2.name
                                + " are not composable both ways");
      return report;
    }
    auto const pre = check_relations(m1.source, on_source);
    if (!pre.ok()) {
      report.merge(pre, m1.name + " [" + name_of(on_source)
                            + "] source quotient is not a homomorphism: ");
      return report;
    }
    for (GenIndex g = 0; g < m1.source.num_generators(); ++g) {
      Word const round_trip = apply(m2, apply(m1, Word(gen(g))));
      Word const defect     = round_trip * Word(inv(g));
      bool const trivial    = std::visit(
          [&defect](auto const& a) {
            return evaluate(a, defect).is_identity();
          },
          on_source);
      if (!trivial) {
        report.failures.push_back(
            m2.name + " o " + m1.name + " [" + name_of(on_source) + "] moves "
            + m1.source.generators.name(g) + " to "
            + m1.source.format(round_trip));
      }
    }
    return report;
  }

  //! Generators whose round trip m2(m1(g)) is freely equal to g.
  [[nodiscard]] inline std::vector<std::string>
  freely_fixed_generators(GeneratorMap const& m1, GeneratorMap const& m2) {
    std::vector<std::string> out;
    for (GenIndex g = 0; g < m1.source.num_generators(); ++g) {
      if (apply(m2, apply(m1, Word(gen(g)))) == Word(gen(g))) {
        out.push_back(m1.source.generators.name(g));
      }
    }
    return out;
  }

  //! Exponent sum of every image word is 1 (the maps induce the identity on
  //! abelianisations, all of which are Z here).
  [[nodiscard]] inline Report check_exponent_sums(GeneratorMap const& m) {
    Report report;
    for (GenIndex g = 0; g < m.images.size(); ++g) {
      std::int64_t total = 0;
      for (Letter x : m.images[g]) {
        total += x.sign;
      }
      if (total != 1) {
        report.failures.push_back(m.name + ": image of "
                                  + m.source.generators.name(g)
                                  + " has exponent sum "
                                  + std::to_string(total));
      }
    }
    return report;
  }

  //! Every check for one map family at (n, t): both maps in every finite
  //! quotient of their targets, both composites in every finite quotient of
  //! their sources, and the exponent sums.
  [[nodiscard]] inline Report verify_pair(MapPair p, std::size_t n, int t) {
    auto const fwd = make_pair_map(p, n, t, Direction::forward);
    auto const bwd = make_pair_map(p, n, t, Direction::backward);
    auto const qs  = pair_quotients(p, n, t);
    Report     report;
    if (!fwd.well_formed() || !bwd.well_formed()) {
      report.failures.push_back(fwd.name + ": image table is incomplete");
      return report;
    }
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

  ////////////////////////////////////////////////////////////////////////
  // Word identity suite
  ////////////////////////////////////////////////////////////////////////

  //! A presentation together with finite quotients in which identities
  //! holding in the presented group can be tested.
  struct IdentityContext {
    PresentationSpec           presentation;
    std::vector<AnyAssignment> quotients;
  };

  //! Braid chain y1..yk: Sym(k+1), the signed reflections e_i + e_{i+1},
  //! the Hurwitz action and a cyclic quotient.
  [[nodiscard]] inline std::shared_ptr<IdentityContext const>
  braid_chain_context(std::size_t k, char prefix = 'y') {
    auto ctx          = std::make_shared<IdentityContext>();
    ctx->presentation = braid_chain(k, prefix);
    std::vector<Perm>       sym;
    std::vector<SignedPerm> neg;
    for (Point i = 1; i <= k; ++i) {
      sym.push_back(Perm::transposition(k + 1, i, i + 1));
      neg.push_back(SignedPerm::transposition(k + 1, i, i + 1, true));
    }
    ctx->quotients.emplace_back(Assignment<Perm>("sym", k + 1, sym));
    ctx->quotients.emplace_back(
        Assignment<SignedPerm>("neg-reflections", k + 1, neg));
    ctx->quotients.emplace_back(hurwitz_assignment(k));
    ctx->quotients.emplace_back(cyclic_assignment(k, cyclic_quotient_order));
    return ctx;
  }

  [[nodiscard]] inline std::shared_ptr<IdentityContext const>
  ngon_context(PresentationSpec p, std::size_t n) {
    auto ctx          = std::make_shared<IdentityContext>();
    ctx->presentation = std::move(p);
    ctx->quotients    = ngon_quotients(n);
    return ctx;
  }

  struct LemmaInstance {
    std::string                            tag;
    Word                                   lhs;
    Word                                   rhs;
    std::shared_ptr<IdentityContext const> context;
  };

  namespace detail {
    inline std::vector<Word> gens(std::size_t k) {
      std::vector<Word> out;
      for (GenIndex g = 0; g < k; ++g) {
        out.emplace_back(gen(g));
      }
      return out;
    }

    inline Word prod(std::vector<Word> const& y, std::size_t lo,
                     std::size_t hi) {
      Word w;
      for (std::size_t i = lo; i <= hi && lo <= hi; ++i) {
        w *= y[i - 1];
      }
      return w;
    }

    inline void push_relation(std::vector<LemmaInstance>&                   out,
                              std::string                                   tag,
                              Relation const&                               rel,
                              std::shared_ptr<IdentityContext const> const& ctx) {
      out.push_back(LemmaInstance{std::move(tag), rel.lhs, rel.rhs, ctx});
    }

    // 1-based subsets of {lo..hi} of size k, in lexicographic order.
    inline void subsets(std::size_t lo, std::size_t hi, std::size_t k,
                        std::vector<std::size_t>&              current,
                        std::vector<std::vector<std::size_t>>& out) {
      if (current.size() == k) {
        out.push_back(current);
        return;
      }
      for (std::size_t i = lo; i <= hi; ++i) {
        current.push_back(i);
        subsets(i + 1, hi, k, current, out);
        current.pop_back();
      }
    }
  }  // namespace detail

  //! Concrete instances of the braid/commutation identities, each an
  //! equality lhs = rhs expected to hold in its context presentation.
  [[nodiscard]] inline std::vector<LemmaInstance>
  lemma_identity_suite(std::size_t n) {
    if (n < 4) {
      throw std::invalid_argument("lemma suite needs n >= 4");
    }
    std::vector<LemmaInstance> out;

    // f, g, h with BR(f,g), BR(g,h), CM(f,h), in both orientations of a
    // three-generator chain.
    {
      auto const ctx = braid_chain_context(3);
      auto const y   = detail::gens(3);
      for (int orient = 0; orient < 2; ++orient) {
        Word const& f   = orient == 0 ? y[0] : y[2];
        Word const& g   = y[1];
        Word const& h   = orient == 0 ? y[2] : y[0];
        auto const  tag = std::string("brcm/") + (orient == 0 ? "fwd" : "rev");
        auto        ghg = g * h * g.inverse();
        detail::push_relation(out, tag + "/i.1", braid_relation(f, ghg), ctx);
        detail::push_relation(out, tag + "/i.2",
                              braid_relation(f, g.inverse() * h * g), ctx);
        detail::push_relation(out, tag + "/i.3",
                              braid_relation(f, f * ghg * f.inverse()), ctx);
        detail::push_relation(out, tag + "/ii.1",
                              commute_relation(g, f * ghg * f.inverse()), ctx);
        detail::push_relation(
            out, tag + "/ii.2",
            commute_relation(f.inverse() * g * f, h.inverse() * g * h), ctx);
        detail::push_relation(
            out, tag + "/ii.3",
            commute_relation(f * g * f.inverse(), h * g * h.inverse()), ctx);
      }
    }

    // Long conjugates along a braid chain y1..yk.
    for (std::size_t k = 2; k <= n; ++k) {
      auto const  ctx = braid_chain_context(k);
      auto const  y   = detail::gens(k);
      auto const  pre = detail::prod(y, 1, k - 1);
      Word const  w   = pre * y[k - 1] * pre.inverse();
      auto const  mid = detail::prod(y, 2, k - 1);
      Word const  rhs = (mid * y[k - 1]).inverse() * y[0] * mid * y[k - 1];
      std::string tag = "longconj/k" + std::to_string(k);
      out.push_back(LemmaInstance{tag + "/i", w, rhs, ctx});
      detail::push_relation(out, tag + "/ii.1", braid_relation(y[0], w), ctx);
      detail::push_relation(out, tag + "/ii.2", braid_relation(y[k - 1], w),
                            ctx);
      if (k >= 3) {
        Word const v = mid.inverse() * y[0] * mid;
        detail::push_relation(out, tag + "/ii.3", braid_relation(y[k - 1], v),
                              ctx);
      }
      for (std::size_t i = 2; i + 1 <= k; ++i) {
        detail::push_relation(out, tag + "/iii.y" + std::to_string(i),
                              commute_relation(y[i - 1], w), ctx);
      }
    }

    // Rotations of the cycle commutator in G_0.
    {
      auto const ctx = ngon_context(ngon_cycle_quotient(n), n);
      auto const a   = detail::gens(n);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Word> rotated;
        for (std::size_t i = 0; i < n; ++i) {
          rotated.push_back(a[(i + j) % n]);
        }
        out.push_back(LemmaInstance{"ccequiv/rot" + std::to_string(j),
                                    cycle_commutator(rotated), Word{}, ctx});
      }
    }

    // Rotations and sign patterns of the twisted cycle commutators in G_t.
    for (int t = 1; t <= static_cast<int>(n) - 2; ++t) {
      auto const  ctx = ngon_context(ngon_twisted_quotient(n, t), n);
      auto const  a   = detail::gens(n);
      std::string tag = "tcequiv/t" + std::to_string(t);
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Word> rotated;
        for (std::size_t i = 0; i < n; ++i) {
          rotated.push_back(a[(i + j) % n]);
        }
        out.push_back(LemmaInstance{tag + "/i.rot" + std::to_string(j),
                                    twisted_cycle_commutator(rotated, t),
                                    Word{}, ctx});
      }
      std::vector<std::vector<std::size_t>> subsets;
      std::vector<std::size_t>              current;
      detail::subsets(2, n - 1, static_cast<std::size_t>(t), current, subsets);
      for (auto const& s : subsets) {
        Word        c;
        std::string name = tag + "/ii.S";
        for (std::size_t i = 2; i <= n - 1; ++i) {
          bool const in_s = std::find(s.begin(), s.end(), i) != s.end();
          c *= in_s ? a[i - 1].inverse() : a[i - 1];
        }
        for (auto i : s) {
          name += "_" + std::to_string(i);
        }
        out.push_back(LemmaInstance{
            name, commutator(a[0], c * a[n - 1] * c.inverse()), Word{}, ctx});
      }
    }

    // a1^-1 (a2 ... a_{k-1}) a_k^2 (a1 ... a_k)
    //   = (a2 ... a_{k-1}) (a1 ... a_{k-2}) a_k a_{k-1}^2, 1 < k < n.
    for (std::size_t k = 2; k < n; ++k) {
      auto const ctx = braid_chain_context(k, 'a');
      auto const a   = detail::gens(k);
      Word const lhs = a[0].inverse() * detail::prod(a, 2, k - 1)
                       * a[k - 1].pow(2) * detail::prod(a, 1, k);
      Word const rhs = detail::prod(a, 2, k - 1) * detail::prod(a, 1, k - 2)
                       * a[k - 1] * a[k - 2].pow(2);
      out.push_back(
          LemmaInstance{"hardcase/k" + std::to_string(k), lhs, rhs, ctx});
    }
    return out;
  }

  //! Checks every instance in every quotient of its context (after checking
  //! the quotient itself).
  [[nodiscard]] inline Report
  verify_lemma_suite(std::vector<LemmaInstance> const& suite) {
    Report                          report;
    std::vector<IdentityContext const*> validated;
    for (auto const& inst : suite) {
      auto const* ctx = inst.context.get();
      if (std::find(validated.begin(), validated.end(), ctx)
          == validated.end()) {
        for (auto const& q : ctx->quotients) {
          report.merge(check_relations(ctx->presentation, q),
                       ctx->presentation.label + " [" + name_of(q) + "] ");
        }
        validated.push_back(ctx);
      }
      for (auto const& q : ctx->quotients) {
        bool const equal = std::visit(
            [&inst](auto const& a) {
              return evaluate(a, inst.lhs) == evaluate(a, inst.rhs);
            },
            q);
        if (!equal) {
          report.failures.push_back(inst.tag + " [" + name_of(q) + "] "
                                    + ctx->presentation.format(inst.lhs)
                                    + " != "
                                    + ctx->presentation.format(inst.rhs));
        }
      }
    }
    return report;
  }

  //! Repeatedly replaces the first occurrence of rel.lhs in `from` by
  //! rel.rhs (freely reducing each time) until `to` is reached. Returns the
  //! number of substitutions, or nullopt when `to` is not reached within
  //! max_steps.
  [[nodiscard]] inline std::optional<std::size_t>
  derive_by_substitution(Word from, Word const& to, Relation const& rel,
                         std::size_t max_steps = 16) {
    for (std::size_t step = 0; step <= max_steps; ++step) {
      if (from == to) {
        return step;
      }
      auto next = substitute_once(from, rel.lhs, rel.rhs);
      if (!next) {
        return std::nullopt;
      }
      from = std::move(*next);
    }
    return std::nullopt;
  }

}  // namespace artinq

#endif  // ARTINQ_WORD_MAPS_HPP_
