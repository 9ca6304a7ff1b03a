// artinq - Artin group quotients, explicit isomorphisms and subgroup
// abelianisations.
//
// Coset tables from permutation actions, transversals, the hand-picked
// generators y_1 .. y_{n+1} of the pair stabiliser with their rewriting
// table, generic Reidemeister-Schreier rewriting, and subgroup
// presentations.

#ifndef ARTINQ_SCHREIER_HPP_
#define ARTINQ_SCHREIER_HPP_

#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <optional>   // for optional
#include <queue>      // for queue
#include <stdexcept>  // for invalid_argument, out_of_range
#include <string>     // for string
#include <utility>    // for pair, move
#include <vector>     // for vector

#include "diagrams.hpp"
#include "perm.hpp"
#include "word.hpp"

namespace artinq {

  using Coset = std::uint32_t;

  //! Right action of the generators on the cosets of a subgroup. Coset 0 is
  //! the subgroup itself; each coset also records the point of the defining
  //! permutation action it corresponds to.
  class CosetTable {
   public:
    CosetTable() = default;

    //! `rows[g][c]` is the coset c * g. Inverse rows are derived.
    CosetTable(std::string                      description,
               std::vector<std::vector<Coset>>  rows,
               std::vector<Point>               points = {})
        : description_(std::move(description)),
          fwd_(std::move(rows)),
          points_(std::move(points)) {
      num_cosets_ = fwd_.empty() ? 1 : fwd_[0].size();
      bwd_.assign(fwd_.size(), std::vector<Coset>(num_cosets_, 0));
      for (std::size_t g = 0; g < fwd_.size(); ++g) {
        if (fwd_[g].size() != num_cosets_) {
          throw std::invalid_argument("coset table rows differ in length");
        }
        for (Coset c = 0; c < num_cosets_; ++c) {
          if (fwd_[g][c] >= num_cosets_) {
            throw std::invalid_argument("coset table entry out of range");
          }
          bwd_[g][fwd_[g][c]] = c;
        }
      }
      if (points_.empty()) {
        for (Coset c = 0; c < num_cosets_; ++c) {
          points_.push_back(c);
        }
      }
    }

    [[nodiscard]] std::size_t num_cosets() const noexcept {
      return num_cosets_;
    }

    [[nodiscard]] std::size_t num_generators() const noexcept {
      return fwd_.size();
    }

    [[nodiscard]] std::string const& description() const noexcept {
      return description_;
    }

    [[nodiscard]] Coset act(Coset c, Letter x) const {
      return x.sign > 0 ? fwd_.at(x.gen).at(c) : bwd_.at(x.gen).at(c);
    }

    [[nodiscard]] Coset act(Coset c, Word const& w) const {
      for (Letter x : w) {
        c = act(c, x);
      }
      return c;
    }

    [[nodiscard]] std::vector<Coset> const& row(GenIndex g) const {
      return fwd_.at(g);
    }

    [[nodiscard]] std::vector<Coset> const& inverse_row(GenIndex g) const {
      return bwd_.at(g);
    }

    //! 0-based point of the defining action.
    [[nodiscard]] Point point(Coset c) const {
      return points_.at(c);
    }

    [[nodiscard]] std::optional<Coset> coset_of_point(Point p) const {
      for (Coset c = 0; c < num_cosets_; ++c) {
        if (points_[c] == p) {
          return c;
        }
      }
      return std::nullopt;
    }

    //! Every row is a permutation and the inverse rows invert it.
    [[nodiscard]] bool is_consistent() const {
      for (std::size_t g = 0; g < fwd_.size(); ++g) {
        std::vector<bool> hit(num_cosets_, false);
        for (Coset c = 0; c < num_cosets_; ++c) {
          Coset const d = fwd_[g][c];
          if (d >= num_cosets_ || hit[d] || bwd_[g][d] != c) {
            return false;
          }
          hit[d] = true;
        }
      }
      return true;
    }

    //! Every relation and relator traces a closed loop from every coset.
    [[nodiscard]] bool satisfies(PresentationSpec const& p) const {
      for (auto const& rel : p.all_relators()) {
        for (Coset c = 0; c < num_cosets_; ++c) {
          if (act(c, rel) != c) {
            return false;
          }
        }
      }
      return true;
    }

    [[nodiscard]] bool operator==(CosetTable const& that) const {
      return fwd_ == that.fwd_;
    }

   private:
    std::string                     description_;
    std::size_t                     num_cosets_ = 1;
    std::vector<std::vector<Coset>> fwd_;
    std::vector<std::vector<Coset>> bwd_;
    std::vector<Point>              points_;
  };

  //! Cosets of the stabiliser of `base` (0-based) in the orbit of `base`,
  //! numbered breadth first over a1, a1^-1, a2, ...
  [[nodiscard]] inline CosetTable
  coset_table_from_action(PresentationSpec const& p,
                          Assignment<Perm> const& action, Point base,
                          std::string description) {
    auto const report = check_relations(p, action);
    if (!report.ok()) {
      throw std::invalid_argument("action \"" + action.name()
                                  + "\" violates " + report.failures.front());
    }
    std::size_t const  ngens = p.num_generators();
    std::vector<Coset> coset_of(action.degree(), Coset(-1));
    std::vector<Point> points{base};
    coset_of.at(base) = 0;
    std::queue<Point> todo;
    todo.push(base);
    while (!todo.empty()) {
      Point const x = todo.front();
      todo.pop();
      for (GenIndex g = 0; g < ngens; ++g) {
        for (int s : {1, -1}) {
          auto const& perm = action.image(Letter{g, static_cast<std::int8_t>(s)});
          Point const y    = perm.image0(x);
          if (coset_of[y] == Coset(-1)) {
            coset_of[y] = static_cast<Coset>(points.size());
            points.push_back(y);
            todo.push(y);
          }
        }
      }
    }
    std::vector<std::vector<Coset>> rows(ngens,
                                         std::vector<Coset>(points.size()));
    for (GenIndex g = 0; g < ngens; ++g) {
      for (Coset c = 0; c < points.size(); ++c) {
        rows[g][c] = coset_of[action.image(g).image0(points[c])];
      }
    }
    return CosetTable(std::move(description), std::move(rows),
                      std::move(points));
  }

  //! Cosets of H, the preimage of the stabiliser of {1,2} under a_i ->
  //! (i,i+1), a_n -> (1,n). `p` is A(Delta_n) or one of its quotients.
  [[nodiscard]] inline CosetTable pair_coset_table(PresentationSpec const& p,
                                                   std::size_t n) {
    return coset_table_from_action(p, pair_action(sigma_assignment(n)), 0,
                                   "pair {1,2} stabilizer");
  }

  //! Cosets of the preimage of the stabiliser of the point 1.
  [[nodiscard]] inline CosetTable point_coset_table(PresentationSpec const& p,
                                                    std::size_t n) {
    return coset_table_from_action(p, sigma_assignment(n), 0,
                                   "point 1 stabilizer");
  }

  ////////////////////////////////////////////////////////////////////////
  // Transversals
  ////////////////////////////////////////////////////////////////////////

  //! One representative word per coset; reps[0] is empty.
  struct Transversal {
    std::vector<Word> reps;

    [[nodiscard]] Word const& operator[](Coset c) const {
      return reps.at(c);
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return reps.size();
    }
  };

  //! a_2 ... a_{l-1} a_1 ... a_{k-1} over the generators a1..an
  //! (indices 0..n-1).
  [[nodiscard]] inline Word pair_rep(std::size_t n, std::size_t k,
                                     std::size_t l) {
    if (k < 1 || k >= l || l > n) {
      throw std::out_of_range("pair rep needs 1 <= k < l <= n");
    }
    Word w;
    for (std::size_t i = 2; i <= l - 1; ++i) {
      w *= Word(gen(static_cast<GenIndex>(i - 1)));
    }
    for (std::size_t i = 1; i <= k - 1; ++i) {
      w *= Word(gen(static_cast<GenIndex>(i - 1)));
    }
    return w;
  }

  //! a_1 ... a_{k-1}
  [[nodiscard]] inline Word point_rep(std::size_t k) {
    Word w;
    for (std::size_t i = 1; i + 1 <= k; ++i) {
      w *= Word(gen(static_cast<GenIndex>(i - 1)));
    }
    return w;
  }

  [[nodiscard]] inline Transversal pair_transversal(CosetTable const& table,
                                                    std::size_t       n) {
    Transversal tr;
    for (Coset c = 0; c < table.num_cosets(); ++c) {
      auto const [k, l] = pair_at(n, table.point(c));
      tr.reps.push_back(pair_rep(n, k, l));
    }
    return tr;
  }

  [[nodiscard]] inline Transversal point_transversal(CosetTable const& table) {
    Transversal tr;
    for (Coset c = 0; c < table.num_cosets(); ++c) {
      tr.reps.push_back(point_rep(table.point(c) + 1));
    }
    return tr;
  }

  //! rep(0) is empty and each rep leads from coset 0 to its coset.
  [[nodiscard]] inline Report check_transversal(CosetTable const&  table,
                                                Transversal const& tr) {
    Report report;
    if (tr.size() != table.num_cosets()) {
      report.failures.push_back("transversal size "
                                + std::to_string(tr.size()) + " != index "
                                + std::to_string(table.num_cosets()));
      return report;
    }
    if (!tr[0].empty()) {
      report.failures.push_back("representative of the subgroup is not empty");
    }
    for (Coset c = 0; c < table.num_cosets(); ++c) {
      if (table.act(0, tr[c]) != c) {
        report.failures.push_back("representative " + std::to_string(c)
                                  + " leads to coset "
                                  + std::to_string(table.act(0, tr[c])));
      }
    }
    return report;
  }

  //! Prefix closed: dropping the last letter of a representative gives the
  //! representative of the coset it reaches.
  [[nodiscard]] inline bool is_schreier_transversal(CosetTable const&  table,
                                                    Transversal const& tr) {
    if (!check_transversal(table, tr).ok()) {
      return false;
    }
    for (Coset c = 1; c < table.num_cosets(); ++c) {
      auto const& letters = tr[c].letters();
      Word const  prefix(std::span<Letter const>(letters.data(),
                                                 letters.size() - 1));
      if (!(tr[table.act(0, prefix)] == prefix)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // The generators y_1 .. y_{n+1} and the rewriting table
  ////////////////////////////////////////////////////////////////////////

  struct SchreierGen {
    std::string name;
    Word        definition;
  };

  [[nodiscard]] inline Alphabet y_alphabet(std::size_t n) {
    Alphabet a;
    for (std::size_t i = 1; i <= n + 1; ++i) {
      a.add("y" + std::to_string(i));
    }
    return a;
  }

  //! xi_1 = a1, xi_i = a_{i+1} (2 <= i <= n-2), xi_{n-1} = a2^2,
  //! xi_n = an^2, xi_{n+1} = a2 a1 a3 a4 ... an.
  [[nodiscard]] inline std::vector<SchreierGen> xi_generators(std::size_t n) {
    if (n < 4) {
      throw std::invalid_argument("needs n >= 4");
    }
    auto a = [](std::size_t i) {
      return Word(gen(static_cast<GenIndex>(i - 1)));
    };
    std::vector<SchreierGen> out;
    auto                     add = [&out](Word w) {
      out.push_back({"y" + std::to_string(out.size() + 1), std::move(w)});
    };
    add(a(1));
    for (std::size_t i = 2; i <= n - 2; ++i) {
      add(a(i + 1));
    }
    add(a(2).pow(2));
    add(a(n).pow(2));
    Word last = a(2) * a(1);
    for (std::size_t i = 3; i <= n; ++i) {
      last *= a(i);
    }
    add(std::move(last));
    return out;
  }

  //! Substitutes the xi words for y_1 .. y_{n+1}.
  [[nodiscard]] inline Word expand_y(std::size_t n, Word const& w) {
    static thread_local std::size_t              cached_n = 0;
    static thread_local std::vector<SchreierGen> xi;
    if (cached_n != n) {
      xi       = xi_generators(n);
      cached_n = n;
    }
    Word out;
    for (Letter x : w) {
      Word const& d = xi.at(x.gen).definition;
      out *= (x.sign > 0 ? d : d.inverse());
    }
    return out;
  }

  //! A coset of H as the pair {k, l} with k < l.
  struct PairCoset {
    std::size_t k = 1;
    std::size_t l = 2;

    auto operator<=>(PairCoset const&) const = default;
  };

  //! Image of {k,l} under a_m, i.e. under (m, m+1) or (1, n).
  [[nodiscard]] inline PairCoset pair_image(std::size_t n, PairCoset c,
                                            std::size_t m) {
    std::size_t const u = m < n ? m : 1;
    std::size_t const v = m < n ? m + 1 : n;
    auto              f = [u, v](std::size_t x) {
      return x == u ? v : (x == v ? u : x);
    };
    std::size_t const k = f(c.k);
    std::size_t const l = f(c.l);
    return k < l ? PairCoset{k, l} : PairCoset{l, k};
  }

  struct RhoStep {
    Word      word;  // over y1 .. y_{n+1}
    PairCoset next;
    int       row = 0;  // 1-based table row
  };

  namespace detail {
    inline void check_rho_args(std::size_t n, std::size_t k, std::size_t l,
                               std::size_t m) {
      if (n < 4 || k < 1 || k >= l || l > n || m < 1 || m > n) {
        throw std::out_of_range("rho needs n >= 4, 1 <= k < l <= n, "
                                "1 <= m <= n");
      }
    }

    inline bool rho_guard(int row, std::size_t n, std::size_t k,
                          std::size_t l, std::size_t m) {
      switch (row) {
        case 1:
          return l < m && m < n;
        case 2:
          return l == m && m < n;
        case 3:
          return k == m && m + 1 == l;
        case 4:
          return k == m && m + 1 < l;
        case 5:
          return k < m && m + 1 == l;
        case 6:
          return k < m && m + 1 < l;
        case 7:
          return k == m + 1;
        case 8:
          return k > m + 1;
        case 9:
          return k == 1 && l == n && m == n;
        case 10:
          return k == 1 && l < m && m == n;
        case 11:
          return k > 1 && l == n && m == n;
        case 12:
          return k > 1 && l < m && m == n;
        default:
          return false;
      }
    }
  }  // namespace detail

  inline constexpr int rho_num_rows = 12;

  //! Every table row whose guard holds; exactly one for legal arguments.
  [[nodiscard]] inline std::vector<int>
  rho_matching_rows(std::size_t n, std::size_t k, std::size_t l,
                    std::size_t m) {
    detail::check_rho_args(n, k, l, m);
    std::vector<int> rows;
    for (int r = 1; r <= rho_num_rows; ++r) {
      if (detail::rho_guard(r, n, k, l, m)) {
        rows.push_back(r);
      }
    }
    return rows;
  }

  //! rho(t_{k,l}, a_m) and the coset {k', l'} with t_{k,l} a_m = rho t_{k',l'}.
  [[nodiscard]] inline RhoStep rho_step(std::size_t n, std::size_t k,
                                        std::size_t l, std::size_t m) {
    auto const rows = rho_matching_rows(n, k, l, m);
    if (rows.size() != 1) {
      throw std::logic_error("rho table rows are not exhaustive and disjoint "
                             "at k=" + std::to_string(k) + " l="
                             + std::to_string(l) + " m=" + std::to_string(m));
    }
    auto y = [](std::size_t i) {
      return Word(gen(static_cast<GenIndex>(i - 1)));
    };
    auto y_prod = [&y](std::size_t lo, std::size_t hi) {
      Word w;
      for (std::size_t i = lo; i <= hi && lo <= hi; ++i) {
        w *= y(i);
      }
      return w;
    };
    auto norm = [](std::size_t a, std::size_t b) {
      return a < b ? PairCoset{a, b} : PairCoset{b, a};
    };
    int const row = rows.front();
    switch (row) {
      case 1:
        return {y(m - 1), {k, l}, row};
      case 2:
        return {Word{}, {k, l + 1}, row};
      case 3:
        return {y(1), {k, l}, row};
      case 4:
        return {Word{}, {k + 1, l}, row};
      case 5:
        return {conjugate(y(n - 1), y_prod(2, l - 2)), {k, l - 1}, row};
      case 6:
        return {y(m), {k, l}, row};
      case 7:
        return {conjugate(y(n - 1), y_prod(1, k - 1)), {k - 1, l}, row};
      case 8:
        return {y(m + 1), {k, l}, row};
      case 9:
        return {conjugate(y(1), y(n + 1).inverse()), {k, l}, row};
      case 10:
        return {y(n) * y(n + 1).inverse(), norm(l, n), row};
      case 11:
        return {y(n + 1), norm(1, k), row};
      case 12:
        return {conjugate(y(n - 2), y(n + 1).inverse()), {k, l}, row};
      default:
        break;
    }
    throw std::logic_error("unreachable rho row");
  }

  struct RhoResult {
    Word      word;
    PairCoset end;
  };

  //! rho(t_{k,l}, w) for a word w over a1..an, extended letter by letter;
  //! an inverse letter x^-1 entering coset u contributes rho(t, x)^-1 where
  //! t x = u.
  [[nodiscard]] inline RhoResult rho_extend(std::size_t n, PairCoset start,
                                            Word const& w) {
    RhoResult result{Word{}, start};
    for (Letter x : w) {
      std::size_t const m = x.gen + 1;
      if (m > n) {
        throw std::out_of_range("letter outside a1..an");
      }
      if (x.sign > 0) {
        auto step = rho_step(n, result.end.k, result.end.l, m);
        result.word *= step.word;
        result.end = step.next;
      } else {
        PairCoset const prev = pair_image(n, result.end, m);
        auto            step = rho_step(n, prev.k, prev.l, m);
        if (step.next != result.end) {
          throw std::logic_error("rho table target disagrees with the "
                                 "pair action");
        }
        result.word *= step.word.inverse();
        result.end = prev;
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generic Reidemeister-Schreier
  ////////////////////////////////////////////////////////////////////////

  //! Schreier generators s_(c,x) = rep(c) x rep(c x)^-1 for a Schreier
  //! transversal, omitting those freely equal to the empty word. They are
  //! named s1, s2, ... in (coset, generator) order.
  class GenericSchreier {
   public:
    GenericSchreier(CosetTable table, Transversal tr)
        : table_(std::move(table)), tr_(std::move(tr)) {
      if (!is_schreier_transversal(table_, tr_)) {
        throw std::invalid_argument("generic rewriting needs a prefix closed "
                                    "transversal");
      }
      index_.assign(table_.num_cosets(),
                    std::vector<std::optional<GenIndex>>(
                        table_.num_generators()));
      for (Coset c = 0; c < table_.num_cosets(); ++c) {
        for (GenIndex g = 0; g < table_.num_generators(); ++g) {
          Word const def = tr_[c] * Word(gen(g))
                           * tr_[table_.act(c, gen(g))].inverse();
          if (!def.empty()) {
            index_[c][g] = static_cast<GenIndex>(definitions_.size());
            definitions_.push_back(def);
            origins_.emplace_back(c, g);
            alphabet_.add("s" + std::to_string(definitions_.size()));
          }
        }
      }
    }

    [[nodiscard]] CosetTable const& table() const noexcept {
      return table_;
    }

    [[nodiscard]] Transversal const& transversal() const noexcept {
      return tr_;
    }

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return alphabet_;
    }

    [[nodiscard]] std::size_t num_generators() const noexcept {
      return definitions_.size();
    }

    [[nodiscard]] Word const& definition(GenIndex s) const {
      return definitions_.at(s);
    }

    //! (coset, generator) that defines s.
    [[nodiscard]] std::pair<Coset, GenIndex> origin(GenIndex s) const {
      return origins_.at(s);
    }

    [[nodiscard]] std::optional<GenIndex> generator_at(Coset c,
                                                       GenIndex g) const {
      return index_.at(c).at(g);
    }

    //! Rewrites w read from coset `start`; `end` receives the final coset.
    [[nodiscard]] Word rewrite(Coset start, Word const& w,
                               Coset* end = nullptr) const {
      Word  out;
      Coset c = start;
      for (Letter x : w) {
        if (x.sign > 0) {
          if (auto s = index_[c][x.gen]) {
            out *= Word(gen(*s));
          }
          c = table_.act(c, x);
        } else {
          Coset const prev = table_.act(c, x);
          if (auto s = index_[prev][x.gen]) {
            out *= Word(inv(*s));
          }
          c = prev;
        }
      }
      if (end != nullptr) {
        *end = c;
      }
      return out;
    }

    //! Substitutes the defining words.
    [[nodiscard]] Word expand(Word const& w) const {
      Word out;
      for (Letter x : w) {
        Word const& d = definitions_.at(x.gen);
        out *= (x.sign > 0 ? d : d.inverse());
      }
      return out;
    }

   private:
    CosetTable                                       table_;
    Transversal                                      tr_;
    std::vector<std::vector<std::optional<GenIndex>>> index_;
    std::vector<Word>                                definitions_;
    std::vector<std::pair<Coset, GenIndex>>          origins_;
    Alphabet                                         alphabet_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Subgroup presentations
  ////////////////////////////////////////////////////////////////////////

  enum class RowKind { relation, relator, generator };

  //! Where a row of a subgroup presentation came from: the coset it was
  //! read from and the index of the relation, relator or generator.
  struct RowOrigin {
    RowKind     kind;
    Coset       coset;
    std::size_t source;
  };

  struct SubgroupPresentation {
    PresentationSpec       spec;
    // One entry per relation, then one per relator, in order.
    std::vector<RowOrigin> relation_origins;
    std::vector<RowOrigin> relator_origins;
  };

  //! Presentation of H (or its image in a quotient of A(Delta_n)) on
  //! y_1 .. y_{n+1}: rho(t, lhs) = rho(t, rhs) for every coset and relation,
  //! rho(t, w) for every coset and extra relator, then
  //! rho(1, xi_i) y_i^-1 for each i.
  [[nodiscard]] inline SubgroupPresentation
  pair_subgroup_presentation(PresentationSpec const& p, std::size_t n) {
    if (p.num_generators() != n) {
      throw std::invalid_argument("expected a presentation on a1..an");
    }
    SubgroupPresentation out;
    out.spec.generators = y_alphabet(n);
    out.spec.label      = "H<" + p.label + ">";
    std::vector<PairCoset> cosets;
    for (std::size_t k = 1; k < n; ++k) {
      for (std::size_t l = k + 1; l <= n; ++l) {
        cosets.push_back({k, l});
      }
    }
    for (std::size_t ci = 0; ci < cosets.size(); ++ci) {
      for (std::size_t i = 0; i < p.relations.size(); ++i) {
        auto const lhs = rho_extend(n, cosets[ci], p.relations[i].lhs);
        auto const rhs = rho_extend(n, cosets[ci], p.relations[i].rhs);
        if (lhs.end != rhs.end) {
          throw std::logic_error("relation sides end in different cosets");
        }
        out.spec.relations.push_back({lhs.word, rhs.word});
        out.relation_origins.push_back(
            {RowKind::relation, static_cast<Coset>(ci), i});
      }
    }
    for (std::size_t ci = 0; ci < cosets.size(); ++ci) {
      for (std::size_t i = 0; i < p.relators.size(); ++i) {
        auto const r = rho_extend(n, cosets[ci], p.relators[i]);
        if (r.end != cosets[ci]) {
          throw std::logic_error("relator does not fix its coset");
        }
        out.spec.relators.push_back(r.word);
        out.relator_origins.push_back(
            {RowKind::relator, static_cast<Coset>(ci), i});
      }
    }
    auto const xi = xi_generators(n);
    for (std::size_t i = 0; i < xi.size(); ++i) {
      auto const r = rho_extend(n, PairCoset{}, xi[i].definition);
      if (r.end != PairCoset{}) {
        throw std::logic_error(xi[i].name + " is not in the subgroup");
      }
      out.spec.relators.push_back(r.word
                                  * Word(inv(static_cast<GenIndex>(i))));
      out.relator_origins.push_back({RowKind::generator, 0, i});
    }
    return out;
  }

  //! Index of the pair {k,l} among the cosets of pair_subgroup_presentation
  //! (lexicographic).
  [[nodiscard]] inline Coset pair_coset_index(std::size_t n, PairCoset c) {
    return static_cast<Coset>(pair_index(n, c.k, c.l));
  }

  //! Generic presentation on the Schreier generators: rewrite(c, lhs) =
  //! rewrite(c, rhs) for every coset and relation, rewrite(c, w) for every
  //! coset and extra relator.
  [[nodiscard]] inline SubgroupPresentation
  generic_subgroup_presentation(PresentationSpec const& p,
                                GenericSchreier const&  rs) {
    auto const& table = rs.table();
    if (table.num_generators() != p.num_generators()) {
      throw std::invalid_argument("table and presentation differ in "
                                  "generators");
    }
    SubgroupPresentation out;
    out.spec.generators = rs.alphabet();
    out.spec.label = "RS<" + p.label + ", " + table.description() + ">";
    for (Coset c = 0; c < table.num_cosets(); ++c) {
      for (std::size_t i = 0; i < p.relations.size(); ++i) {
        out.spec.relations.push_back({rs.rewrite(c, p.relations[i].lhs),
                                      rs.rewrite(c, p.relations[i].rhs)});
        out.relation_origins.push_back({RowKind::relation, c, i});
      }
    }
    for (Coset c = 0; c < table.num_cosets(); ++c) {
      for (std::size_t i = 0; i < p.relators.size(); ++i) {
        out.spec.relators.push_back(rs.rewrite(c, p.relators[i]));
        out.relator_origins.push_back({RowKind::relator, c, i});
      }
    }
    return out;
  }

  //! Generic rewriting for the pair stabiliser, with the transversal
  //! t_{k,l}.
  [[nodiscard]] inline GenericSchreier pair_generic_schreier(
      PresentationSpec const& p, std::size_t n) {
    auto table = pair_coset_table(p, n);
    auto tr    = pair_transversal(table, n);
    return GenericSchreier(std::move(table), std::move(tr));
  }

  //! Generic rewriting for the point stabiliser, with the transversal
  //! a_1 ... a_{k-1}.
  [[nodiscard]] inline GenericSchreier point_generic_schreier(
      PresentationSpec const& p, std::size_t n) {
    auto table = point_coset_table(p, n);
    auto tr    = point_transversal(table);
    return GenericSchreier(std::move(table), std::move(tr));
  }

}  // namespace artinq

#endif  // ARTINQ_SCHREIER_HPP_
