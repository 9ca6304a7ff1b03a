// artinq - Artin group quotients, explicit isomorphisms and subgroup
// abelianisations.
//
// Low index subgroups: backtrack search over standardised coset tables,
// keeping one table per conjugacy class.

#ifndef ARTINQ_LOW_INDEX_HPP_
#define ARTINQ_LOW_INDEX_HPP_

#include <algorithm>  // for next_permutation
#include <cstddef>    // for size_t
#include <cstdint>    // for int32_t
#include <stdexcept>  // for invalid_argument
#include <string>     // for string, to_string
#include <vector>     // for vector

#include "diagrams.hpp"
#include "schreier.hpp"
#include "word.hpp"

namespace artinq {

  namespace detail {
    // Columns are 2g (generator g) and 2g+1 (its inverse).
    class PartialCosetTable {
     public:
      static constexpr std::int32_t undefined = -1;

      PartialCosetTable(std::size_t num_gens, std::size_t max_cosets)
          : cols_(2 * num_gens),
            entries_(max_cosets * 2 * num_gens, undefined) {}

      [[nodiscard]] std::size_t active() const noexcept {
        return active_;
      }

      [[nodiscard]] std::int32_t get(std::size_t c, std::size_t x) const {
        return entries_[c * cols_ + x];
      }

      [[nodiscard]] std::size_t cols() const noexcept {
        return cols_;
      }

      static std::size_t column(Letter x) {
        return 2 * x.gen + (x.sign > 0 ? 0 : 1);
      }

      static std::size_t inverse_column(std::size_t x) {
        return x ^ 1U;
      }

      // Defines c.x = d and d.x^-1 = c; false on conflict.
      bool define(std::size_t c, std::size_t x, std::size_t d) {
        auto& fwd = entries_[c * cols_ + x];
        auto& bwd = entries_[d * cols_ + inverse_column(x)];
        if (fwd != undefined && fwd != static_cast<std::int32_t>(d)) {
          return false;
        }
        if (bwd != undefined && bwd != static_cast<std::int32_t>(c)) {
          return false;
        }
        fwd = static_cast<std::int32_t>(d);
        bwd = static_cast<std::int32_t>(c);
        return true;
      }

      std::size_t add_coset() {
        return active_++;
      }

      // First undefined (coset, column) among active cosets.
      [[nodiscard]] bool first_gap(std::size_t& c, std::size_t& x) const {
        for (c = 0; c < active_; ++c) {
          for (x = 0; x < cols_; ++x) {
            if (get(c, x) == undefined) {
              return true;
            }
          }
        }
        return false;
      }

      // Scans every relator from every active coset, filling forced entries,
      // until nothing changes. False on a contradiction.
      bool close_under(std::vector<std::vector<std::size_t>> const& relators) {
        bool changed = true;
        while (changed) {
          changed = false;
          for (auto const& r : relators) {
            for (std::size_t c = 0; c < active_; ++c) {
              int res = scan(c, r);
              if (res < 0) {
                return false;
              }
              changed |= res > 0;
            }
          }
        }
        return true;
      }

      // Standard form comparison against the table renumbered from `base`.
      // Returns true when the renumbered table is provably smaller.
      [[nodiscard]] bool smaller_from(std::size_t base) const {
        std::vector<std::int32_t> to_new(active_, undefined);
        std::vector<std::size_t>  to_old;
        to_new[base] = 0;
        to_old.push_back(base);
        for (std::size_t i = 0; i < active_; ++i) {
          if (i >= to_old.size()) {
            return false;
          }
          for (std::size_t x = 0; x < cols_; ++x) {
            std::int32_t const e   = get(to_old[i], x);
            std::int32_t const cur = get(i, x);
            if (e == undefined || cur == undefined) {
              return false;
            }
            if (to_new[e] == undefined) {
              to_new[e] = static_cast<std::int32_t>(to_old.size());
              to_old.push_back(static_cast<std::size_t>(e));
            }
            if (to_new[e] < cur) {
              return true;
            }
            if (to_new[e] > cur) {
              return false;
            }
          }
        }
        return false;
      }

      [[nodiscard]] bool is_canonical() const {
        for (std::size_t b = 1; b < active_; ++b) {
          if (smaller_from(b)) {
            return false;
          }
        }
        return true;
      }

      [[nodiscard]] CosetTable to_coset_table(std::string description) const {
        std::vector<std::vector<Coset>> rows(cols_ / 2,
                                             std::vector<Coset>(active_));
        for (std::size_t g = 0; g < cols_ / 2; ++g) {
          for (std::size_t c = 0; c < active_; ++c) {
            rows[g][c] = static_cast<Coset>(get(c, 2 * g));
          }
        }
        return CosetTable(std::move(description), std::move(rows));
      }

     private:
      // 1 if something was deduced, 0 if not, -1 on a contradiction.
      int scan(std::size_t c, std::vector<std::size_t> const& r) {
        std::size_t  i = 0;
        std::size_t  j = r.size();
        std::int32_t f = static_cast<std::int32_t>(c);
        while (i < j) {
          std::int32_t const next = get(static_cast<std::size_t>(f), r[i]);
          if (next == undefined) {
            break;
          }
          f = next;
          ++i;
        }
        if (i == j) {
          return f == static_cast<std::int32_t>(c) ? 0 : -1;
        }
        std::int32_t b = static_cast<std::int32_t>(c);
        while (j > i) {
          std::int32_t const prev
              = get(static_cast<std::size_t>(b), inverse_column(r[j - 1]));
          if (prev == undefined) {
            break;
          }
          b = prev;
          --j;
        }
        if (j == i) {
          return f == b ? 0 : -1;
        }
        if (j == i + 1) {
          return define(static_cast<std::size_t>(f), r[i],
                        static_cast<std::size_t>(b))
                     ? 1
                     : -1;
        }
        return 0;
      }

      std::size_t               cols_;
      std::size_t               active_ = 0;
      std::vector<std::int32_t> entries_;
    };

    inline void low_index_search(
        PartialCosetTable                             table,
        std::vector<std::vector<std::size_t>> const& relators,
        std::size_t max_index, std::vector<CosetTable>& out) {
      if (!table.close_under(relators) || !table.is_canonical()) {
        return;
      }
      std::size_t c = 0;
      std::size_t x = 0;
      if (!table.first_gap(c, x)) {
        out.push_back(table.to_coset_table(
            "index " + std::to_string(table.active()) + " subgroup"));
        return;
      }
      std::size_t const xi = PartialCosetTable::inverse_column(x);
      for (std::size_t d = 0; d < table.active(); ++d) {
        if (table.get(d, xi) != PartialCosetTable::undefined) {
          continue;
        }
        PartialCosetTable next = table;
        if (next.define(c, x, d)) {
          low_index_search(std::move(next), relators, max_index, out);
        }
      }
      if (table.active() < max_index) {
        PartialCosetTable next = table;
        std::size_t const d    = next.add_coset();
        if (next.define(c, x, d)) {
          low_index_search(std::move(next), relators, max_index, out);
        }
      }
    }
  }  // namespace detail

  //! One complete coset table per conjugacy class of subgroups of index at
  //! most max_index, in the order found by the search.
  [[nodiscard]] inline std::vector<CosetTable>
  low_index_subgroups(PresentationSpec const& p, std::size_t max_index) {
    if (max_index < 1) {
      throw std::invalid_argument("max_index must be at least 1");
    }
    std::vector<std::vector<std::size_t>> relators;
    for (auto const& w : p.all_relators()) {
      if (w.empty()) {
        continue;
      }
      std::vector<std::size_t> cols;
      for (Letter x : w) {
        cols.push_back(detail::PartialCosetTable::column(x));
      }
      relators.push_back(std::move(cols));
    }
    detail::PartialCosetTable table(p.num_generators(), max_index);
    table.add_coset();
    std::vector<CosetTable> out;
    if (p.num_generators() == 0) {
      out.push_back(table.to_coset_table("index 1 subgroup"));
      return out;
    }
    detail::low_index_search(std::move(table), relators, max_index, out);
    return out;
  }

  [[nodiscard]] inline std::size_t count_classes_of_index(
      PresentationSpec const& p, std::size_t k) {
    std::size_t count = 0;
    for (auto const& t : low_index_subgroups(p, k)) {
      count += t.num_cosets() == k;
    }
    return count;
  }

  //! Whether the two transitive actions are isomorphic, i.e. whether the
  //! coset-0 stabilisers are conjugate. Exhaustive; for small tables only.
  [[nodiscard]] inline bool conjugate_tables(CosetTable const& a,
                                             CosetTable const& b) {
    if (a.num_cosets() != b.num_cosets()
        || a.num_generators() != b.num_generators()) {
      return false;
    }
    std::size_t const  m = a.num_cosets();
    std::vector<Coset> phi(m);
    for (Coset i = 0; i < m; ++i) {
      phi[i] = i;
    }
    do {
      bool ok = true;
      for (GenIndex g = 0; g < a.num_generators() && ok; ++g) {
        for (Coset c = 0; c < m && ok; ++c) {
          ok = phi[a.row(g)[c]] == b.row(g)[phi[c]];
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(phi.begin(), phi.end()));
    return false;
  }

}  // namespace artinq

#endif  // ARTINQ_LOW_INDEX_HPP_
