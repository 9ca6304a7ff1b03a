// artinq - Artin group quotients, explicit isomorphisms and subgroup
// abelianisations.
//
// Labelled diagrams and the Artin/Coxeter presentations built from them.

#ifndef ARTINQ_DIAGRAMS_HPP_
#define ARTINQ_DIAGRAMS_HPP_

#include <algorithm>    // for min, max
#include <cstddef>      // for size_t
#include <set>          // for set
#include <stdexcept>    // for invalid_argument, out_of_range
#include <string>       // for string, to_string
#include <string_view>  // for string_view
#include <utility>      // for pair, move
#include <vector>       // for vector

#include "word.hpp"

namespace artinq {

  enum class DiagramKind {
    dn,        // Coxeter diagram D_n, generators x1..xn
    ngon,      // the n-gon (affine A_{n-1}), generators a1..an
    delta_tn,  // square with an r-arm at 1 and an s-arm at 3
    path       // A_k braid chain, used as a context for word identities
  };

  //! Vertices are 1..n; edges are stored as (i, j) with i < j.
  struct Diagram {
    DiagramKind                                     kind = DiagramKind::ngon;
    std::size_t                                     n    = 0;
    int                                             t    = 0;
    std::set<std::pair<std::size_t, std::size_t>>  edges;
    char                                            path_prefix = 'y';

    //! Length of the arm hanging off vertex 1 (Delta_{t,n} only).
    [[nodiscard]] std::size_t r() const {
      return n - 3 - static_cast<std::size_t>(t);
    }

    //! Length of the arm hanging off vertex 3 (Delta_{t,n} only).
    [[nodiscard]] std::size_t s() const {
      return static_cast<std::size_t>(t) - 1;
    }

    [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const {
      if (i > j) {
        std::swap(i, j);
      }
      return edges.count({i, j}) != 0;
    }

    [[nodiscard]] std::size_t degree(std::size_t v) const {
      std::size_t d = 0;
      for (auto const& [i, j] : edges) {
        d += (i == v || j == v);
      }
      return d;
    }

    bool operator==(Diagram const&) const = default;
  };

  namespace detail {
    inline void add_edge(Diagram& d, std::size_t i, std::size_t j) {
      if (i == j || i < 1 || j < 1 || i > d.n || j > d.n) {
        throw std::invalid_argument("bad edge {" + std::to_string(i) + ","
                                    + std::to_string(j) + "}");
      }
      d.edges.emplace(std::min(i, j), std::max(i, j));
    }
  }  // namespace detail

  [[nodiscard]] inline Diagram diagram_dn(std::size_t n) {
    if (n < 4) {
      throw std::invalid_argument("D_n needs n >= 4, got " + std::to_string(n));
    }
    Diagram d{DiagramKind::dn, n, 0, {}};
    detail::add_edge(d, 1, 3);
    detail::add_edge(d, 2, 3);
    for (std::size_t i = 3; i < n; ++i) {
      detail::add_edge(d, i, i + 1);
    }
    return d;
  }

  [[nodiscard]] inline Diagram diagram_ngon(std::size_t n) {
    if (n < 3) {
      throw std::invalid_argument("the n-gon needs n >= 3, got "
                                  + std::to_string(n));
    }
    Diagram d{DiagramKind::ngon, n, 0, {}};
    for (std::size_t i = 1; i < n; ++i) {
      detail::add_edge(d, i, i + 1);
    }
    detail::add_edge(d, n, 1);
    return d;
  }

  inline void check_twist_range(std::size_t n, int t) {
    if (n < 4) {
      throw std::invalid_argument("n must be >= 4, got " + std::to_string(n));
    }
    if (t < 1 || static_cast<std::size_t>(t) > n - 3) {
      throw std::out_of_range("t = " + std::to_string(t)
                              + " outside the valid range 1.."
                              + std::to_string(n - 3));
    }
  }

  //! Square 1-2-3-4-1, r-arm 1-5-...-(4+r), s-arm 3-(5+r)-...-n, where
  //! r = n-3-t and s = t-1.
  [[nodiscard]] inline Diagram diagram_delta_tn(std::size_t n, int t) {
    check_twist_range(n, t);
    Diagram d{DiagramKind::delta_tn, n, t, {}};
    detail::add_edge(d, 1, 2);
    detail::add_edge(d, 2, 3);
    detail::add_edge(d, 3, 4);
    detail::add_edge(d, 4, 1);
    std::size_t const r    = d.r();
    std::size_t       prev = 1;
    for (std::size_t v = 5; v <= 4 + r; ++v) {
      detail::add_edge(d, prev, v);
      prev = v;
    }
    prev = 3;
    for (std::size_t v = 5 + r; v <= n; ++v) {
      detail::add_edge(d, prev, v);
      prev = v;
    }
    return d;
  }

  //! The braid chain y1 - y2 - ... - yk.
  [[nodiscard]] inline Diagram diagram_path(std::size_t k, char prefix = 'y') {
    if (k < 1) {
      throw std::invalid_argument("path needs at least one vertex");
    }
    Diagram d{DiagramKind::path, k, 0, {}, prefix};
    for (std::size_t i = 1; i < k; ++i) {
      detail::add_edge(d, i, i + 1);
    }
    return d;
  }

  [[nodiscard]] inline std::vector<std::string>
  generator_names(Diagram const& d) {
    std::vector<std::string> names;
    for (std::size_t v = 1; v <= d.n; ++v) {
      char prefix = 'a';
      switch (d.kind) {
        case DiagramKind::dn:
          prefix = 'x';
          break;
        case DiagramKind::ngon:
          prefix = 'a';
          break;
        case DiagramKind::delta_tn:
          prefix = v <= 4 + d.r() ? 'b' : 'c';
          break;
        case DiagramKind::path:
          prefix = d.path_prefix;
          break;
      }
      names.push_back(prefix + std::to_string(v));
    }
    return names;
  }

  //! 180 degree rotation Delta_{t,n} -> Delta_{n-2-t,n}; entry v-1 is the
  //! image of vertex v.
  [[nodiscard]] inline std::vector<std::size_t>
  delta_rotation(std::size_t n, int t) {
    check_twist_range(n, t);
    std::size_t const r = n - 3 - static_cast<std::size_t>(t);
    std::size_t const s = static_cast<std::size_t>(t) - 1;
    // In the rotated diagram the arm lengths swap: r' = s, s' = r.
    std::vector<std::size_t> image(n);
    image[0] = 3;
    image[1] = 4;
    image[2] = 1;
    image[3] = 2;
    for (std::size_t j = 1; j <= r; ++j) {
      image[4 + j - 1] = 4 + s + j;
    }
    for (std::size_t j = 1; j <= s; ++j) {
      image[4 + r + j - 1] = 4 + j;
    }
    return image;
  }

  [[nodiscard]] inline bool is_isomorphism(Diagram const&                  from,
                                           Diagram const&                  to,
                                           std::vector<std::size_t> const& map) {
    if (from.n != to.n || map.size() != from.n
        || from.edges.size() != to.edges.size()) {
      return false;
    }
    std::set<std::size_t> seen(map.begin(), map.end());
    if (seen.size() != from.n || *seen.begin() < 1 || *seen.rbegin() > to.n) {
      return false;
    }
    for (auto const& [i, j] : from.edges) {
      if (!to.adjacent(map[i - 1], map[j - 1])) {
        return false;
      }
    }
    return true;
  }

  struct Relation {
    Word lhs;
    Word rhs;

    bool operator==(Relation const&) const = default;
  };

  //! Generators, relations lhs = rhs, and (kept separately) extra relators
  //! w = 1 imposed when passing to a quotient.
  struct PresentationSpec {
    Alphabet              generators;
    std::vector<Relation> relations;
    std::vector<Word>     relators;
    std::string           label;

    [[nodiscard]] std::size_t num_generators() const noexcept {
      return generators.size();
    }

    [[nodiscard]] GenIndex gen(std::string_view name) const {
      return generators.at(name);
    }

    [[nodiscard]] Word word(std::string_view text) const {
      return parse_word(text, generators);
    }

    [[nodiscard]] std::string format(Word const& w) const {
      return format_word(w, generators);
    }

    //! Every relation as a relator lhs * rhs^-1, followed by the extra
    //! relators.
    [[nodiscard]] std::vector<Word> all_relators() const {
      std::vector<Word> out;
      out.reserve(relations.size() + relators.size());
      for (auto const& rel : relations) {
        out.push_back(rel.lhs * rel.rhs.inverse());
      }
      out.insert(out.end(), relators.begin(), relators.end());
      return out;
    }

    [[nodiscard]] bool uses_declared_generators() const {
      auto const k = num_generators();
      for (auto const& rel : relations) {
        if (!uses_only(rel.lhs, k) || !uses_only(rel.rhs, k)) {
          return false;
        }
      }
      for (auto const& w : relators) {
        if (!uses_only(w, k)) {
          return false;
        }
      }
      return true;
    }
  };

  //! g h g = h g h
  [[nodiscard]] inline Relation braid_relation(Word const& g, Word const& h) {
    return Relation{g * h * g, h * g * h};
  }

  //! g h = h g
  [[nodiscard]] inline Relation commute_relation(Word const& g, Word const& h) {
    return Relation{g * h, h * g};
  }

  [[nodiscard]] inline std::string diagram_label(Diagram const& d) {
    switch (d.kind) {
      case DiagramKind::dn:
        return "A(D_" + std::to_string(d.n) + ")";
      case DiagramKind::ngon:
        return "A(Delta_" + std::to_string(d.n) + ")";
      case DiagramKind::delta_tn:
        return "A(Delta_{" + std::to_string(d.t) + "," + std::to_string(d.n)
               + "})";
      case DiagramKind::path:
        return "A(A_" + std::to_string(d.n) + ")";
    }
    return "A(?)";
  }

  //! One generator per vertex; a braid relation for every edge and a
  //! commuting relation for every other pair, in lexicographic pair order.
  [[nodiscard]] inline PresentationSpec artin_presentation(Diagram const& d) {
    PresentationSpec p;
    p.generators = Alphabet(generator_names(d));
    p.label      = diagram_label(d);
    for (std::size_t i = 1; i <= d.n; ++i) {
      for (std::size_t j = i + 1; j <= d.n; ++j) {
        Word const gi(gen(static_cast<GenIndex>(i - 1)));
        Word const gj(gen(static_cast<GenIndex>(j - 1)));
        p.relations.push_back(d.adjacent(i, j) ? braid_relation(gi, gj)
                                               : commute_relation(gi, gj));
      }
    }
    return p;
  }

  [[nodiscard]] inline PresentationSpec coxeter_presentation(Diagram const& d) {
    PresentationSpec p = artin_presentation(d);
    p.label            = "W" + p.label.substr(1);
    for (GenIndex g = 0; g < p.num_generators(); ++g) {
      p.relations.push_back(Relation{Word::power(g, 2), Word{}});
    }
    return p;
  }

  [[nodiscard]] inline PresentationSpec
  quotient_presentation(PresentationSpec base,
                        std::vector<Word> const& relators,
                        std::string const&       suffix = "") {
    for (auto const& w : relators) {
      if (!uses_only(w, base.num_generators())) {
        throw std::out_of_range("quotient relator uses an undeclared generator");
      }
      base.relators.push_back(w);
    }
    if (!suffix.empty()) {
      base.label += suffix;
    }
    return base;
  }

  namespace detail {
    inline std::vector<Word> generator_words(PresentationSpec const& p,
                                             std::vector<std::string> const& names) {
      std::vector<Word> out;
      for (auto const& name : names) {
        out.emplace_back(gen(p.gen(name)));
      }
      return out;
    }

    inline std::vector<Word> first_generators(std::size_t k) {
      std::vector<Word> out;
      for (GenIndex g = 0; g < k; ++g) {
        out.emplace_back(gen(g));
      }
      return out;
    }
  }  // namespace detail

  [[nodiscard]] inline PresentationSpec artin_dn(std::size_t n) {
    return artin_presentation(diagram_dn(n));
  }

  [[nodiscard]] inline PresentationSpec artin_ngon(std::size_t n) {
    return artin_presentation(diagram_ngon(n));
  }

  [[nodiscard]] inline PresentationSpec artin_delta(std::size_t n, int t) {
    return artin_presentation(diagram_delta_tn(n, t));
  }

  //! G_0: A(Delta_n) modulo the cycle commutator of a1..an.
  [[nodiscard]] inline PresentationSpec ngon_cycle_quotient(std::size_t n) {
    auto       base = artin_ngon(n);
    auto const ys   = detail::first_generators(n);
    return quotient_presentation(std::move(base), {cycle_commutator(ys)},
                                 "/cc");
  }

  //! G_t: A(Delta_n) modulo the t-twisted cycle commutator, 1 <= t <= n-2.
  [[nodiscard]] inline PresentationSpec ngon_twisted_quotient(std::size_t n,
                                                              int         t) {
    auto       base = artin_ngon(n);
    auto const ys   = detail::first_generators(n);
    return quotient_presentation(std::move(base),
                                 {twisted_cycle_commutator(ys, t)},
                                 "/tc_" + std::to_string(t));
  }

  //! A(Delta_{t,n}) modulo the cycle commutator of b1, b2, b3, b4.
  [[nodiscard]] inline PresentationSpec delta_cycle_quotient(std::size_t n,
                                                             int         t) {
    auto       base = artin_delta(n, t);
    auto const ys   = detail::generator_words(base, {"b1", "b2", "b3", "b4"});
    return quotient_presentation(std::move(base), {cycle_commutator(ys)},
                                 "/cc");
  }

  //! Q_{n,t}: A(Delta_{t,n}) modulo the twisted cycle commutator of
  //! b1, b2, b3, b4.
  [[nodiscard]] inline PresentationSpec delta_twisted_quotient(std::size_t n,
                                                               int t) {
    auto       base = artin_delta(n, t);
    auto const ys   = detail::generator_words(base, {"b1", "b2", "b3", "b4"});
    return quotient_presentation(std::move(base),
                                 {twisted_cycle_commutator(ys, 1)}, "/tc");
  }

  [[nodiscard]] inline PresentationSpec braid_chain(std::size_t k,
                                                    char        prefix = 'y') {
    return artin_presentation(diagram_path(k, prefix));
  }

}  // namespace artinq

#endif  // ARTINQ_DIAGRAMS_HPP_
