// artinq - Artin group quotients, explicit isomorphisms and subgroup
// abelianisations.
//
// Exact integer linear algebra: relation matrices of presentations, Smith
// normal form and abelian invariants, lattice membership.

#ifndef ARTINQ_ABELIAN_HPP_
#define ARTINQ_ABELIAN_HPP_

#include <algorithm>  // for sort, unique, swap
#include <cstddef>    // for size_t
#include <cstdint>    // for int64_t, uint32_t
#include <map>        // for map
#include <stdexcept>  // for invalid_argument
#include <string>     // for string
#include <utility>    // for pair, move
#include <vector>     // for vector

#include <boost/multiprecision/cpp_int.hpp>

#include "diagrams.hpp"
#include "word.hpp"

namespace artinq {

  using BigInt = boost::multiprecision::cpp_int;

  //! Sparse integer vector: (column, nonzero value) sorted by column.
  using SparseRow = std::vector<std::pair<std::uint32_t, BigInt>>;

  //! rows x cols integer matrix stored by sparse rows.
  class IntMatrix {
   public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t cols) : cols_(cols) {}

    static IntMatrix from_dense(std::vector<std::vector<std::int64_t>> const& m,
                                std::size_t cols) {
      IntMatrix out(cols);
      for (auto const& r : m) {
        out.add_dense_row(r);
      }
      return out;
    }

    [[nodiscard]] std::size_t rows() const noexcept {
      return rows_.size();
    }

    [[nodiscard]] std::size_t cols() const noexcept {
      return cols_;
    }

    [[nodiscard]] SparseRow const& row(std::size_t r) const {
      return rows_.at(r);
    }

    void add_row(SparseRow r) {
      std::sort(r.begin(), r.end(), [](auto const& x, auto const& y) {
        return x.first < y.first;
      });
      SparseRow clean;
      for (auto& [c, v] : r) {
        if (c >= cols_) {
          throw std::invalid_argument("column out of range");
        }
        if (!clean.empty() && clean.back().first == c) {
          clean.back().second += v;
          if (clean.back().second == 0) {
            clean.pop_back();
          }
        } else if (v != 0) {
          clean.emplace_back(c, std::move(v));
        }
      }
      rows_.push_back(std::move(clean));
    }

    template <typename Int>
    void add_dense_row(std::vector<Int> const& r) {
      if (r.size() != cols_) {
        throw std::invalid_argument("row length differs from column count");
      }
      SparseRow s;
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (r[c] != 0) {
          s.emplace_back(static_cast<std::uint32_t>(c), BigInt(r[c]));
        }
      }
      rows_.push_back(std::move(s));
    }

    [[nodiscard]] BigInt at(std::size_t r, std::size_t c) const {
      for (auto const& [col, v] : rows_.at(r)) {
        if (col == c) {
          return v;
        }
      }
      return 0;
    }

    [[nodiscard]] std::vector<std::vector<BigInt>> dense() const {
      std::vector<std::vector<BigInt>> out(rows_.size(),
                                           std::vector<BigInt>(cols_));
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        for (auto const& [c, v] : rows_[r]) {
          out[r][c] = v;
        }
      }
      return out;
    }

   private:
    std::size_t            cols_ = 0;
    std::vector<SparseRow> rows_;
  };

  //! Exponent sums of w as a sparse row.
  [[nodiscard]] inline SparseRow exponent_row(Word const& w) {
    std::map<std::uint32_t, std::int64_t> sums;
    for (Letter x : w) {
      sums[x.gen] += x.sign;
    }
    SparseRow out;
    for (auto const& [c, v] : sums) {
      if (v != 0) {
        out.emplace_back(c, BigInt(v));
      }
    }
    return out;
  }

  //! One row per relation (exponent sums of lhs rhs^-1), then one per
  //! relator.
  [[nodiscard]] inline IntMatrix exponent_matrix(PresentationSpec const& p) {
    IntMatrix m(p.num_generators());
    for (auto const& rel : p.relations) {
      m.add_row(exponent_row(rel.lhs * rel.rhs.inverse()));
    }
    for (auto const& w : p.relators) {
      m.add_row(exponent_row(w));
    }
    return m;
  }

  //! free_rank copies of Z plus Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ...
  struct AbelianInvariants {
    std::size_t         free_rank = 0;
    std::vector<BigInt> torsion;

    bool operator==(AbelianInvariants const&) const = default;

    [[nodiscard]] bool is_trivial() const {
      return free_rank == 0 && torsion.empty();
    }
  };

  [[nodiscard]] inline std::string to_string(BigInt const& x) {
    return x.str();
  }

  //! "Z/2 + Z/4 + Z^2" style; "0" for the trivial group.
  [[nodiscard]] inline std::string format_invariants(AbelianInvariants const& a) {
    if (a.is_trivial()) {
      return "0";
    }
    std::string out;
    for (auto const& d : a.torsion) {
      out += (out.empty() ? "Z/" : " + Z/") + d.str();
    }
    if (a.free_rank > 0) {
      out += out.empty() ? "" : " + ";
      out += a.free_rank == 1 ? "Z" : "Z^" + std::to_string(a.free_rank);
    }
    return out;
  }

  namespace detail {
    // p^k factors of x, smallest prime first.
    inline std::vector<BigInt> prime_powers(BigInt x) {
      std::vector<BigInt> out;
      for (BigInt p = 2; p * p <= x; ++p) {
        if (x % p == 0) {
          BigInt q = 1;
          while (x % p == 0) {
            x /= p;
            q *= p;
          }
          out.push_back(q);
        }
      }
      if (x > 1) {
        out.push_back(x);
      }
      return out;
    }
  }  // namespace detail

  //! Torsion split into prime powers, e.g. [6] -> Z/2 + Z/3.
  [[nodiscard]] inline std::string
  format_primary(AbelianInvariants const& a) {
    std::vector<BigInt> parts;
    for (auto const& d : a.torsion) {
      auto pp = detail::prime_powers(d);
      parts.insert(parts.end(), pp.begin(), pp.end());
    }
    std::sort(parts.begin(), parts.end());
    std::string       out;
    for (auto const& d : parts) {
      out += (out.empty() ? "Z/" : " + Z/") + d.str();
    }
    if (a.free_rank > 0) {
      out += out.empty() ? "" : " + ";
      out += a.free_rank == 1 ? "Z" : "Z^" + std::to_string(a.free_rank);
    }
    return out.empty() ? "0" : out;
  }

  namespace detail {
    // x -= f * y on sparse rows.
    inline SparseRow axpy(SparseRow const& x, BigInt const& f,
                          SparseRow const& y) {
      SparseRow out;
      out.reserve(x.size() + y.size());
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < x.size() || j < y.size()) {
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
          out.push_back(x[i++]);
        } else if (i == x.size() || y[j].first < x[i].first) {
          out.emplace_back(y[j].first, -f * y[j].second);
          ++j;
        } else {
          BigInt v = x[i].second - f * y[j].second;
          if (v != 0) {
            out.emplace_back(x[i].first, std::move(v));
          }
          ++i;
          ++j;
        }
      }
      return out;
    }

    inline BigInt value_at(SparseRow const& r, std::uint32_t c) {
      auto it = std::lower_bound(
          r.begin(), r.end(), c,
          [](auto const& e, std::uint32_t col) { return e.first < col; });
      return (it != r.end() && it->first == c) ? it->second : BigInt(0);
    }

    // a*x + b*y
    inline SparseRow combine(BigInt const& a, SparseRow const& x,
                             BigInt const& b, SparseRow const& y) {
      SparseRow out;
      std::size_t i = 0;
      std::size_t j = 0;
      while (i < x.size() || j < y.size()) {
        BigInt        v;
        std::uint32_t c;
        if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
          c = x[i].first;
          v = a * x[i++].second;
        } else if (i == x.size() || y[j].first < x[i].first) {
          c = y[j].first;
          v = b * y[j++].second;
        } else {
          c = x[i].first;
          v = a * x[i++].second + b * y[j++].second;
        }
        if (v != 0) {
          out.emplace_back(c, std::move(v));
        }
      }
      return out;
    }

    // g = s*a + t*b with g = gcd(a, b) >= 0.
    inline void extended_gcd(BigInt const& a, BigInt const& b, BigInt& g,
                             BigInt& s, BigInt& t) {
      BigInt old_r = a, r = b, old_s = 1, cur_s = 0, old_t = 0, cur_t = 1;
      while (r != 0) {
        BigInt const q = old_r / r;
        BigInt       tmp = old_r - q * r;
        old_r            = r;
        r                = tmp;
        tmp              = old_s - q * cur_s;
        old_s            = cur_s;
        cur_s            = tmp;
        tmp              = old_t - q * cur_t;
        old_t            = cur_t;
        cur_t            = tmp;
      }
      if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
      }
      g = old_r;
      s = old_s;
      t = old_t;
    }

    inline BigInt abs(BigInt const& x) {
      return x < 0 ? BigInt(-x) : x;
    }

    // Invariant factors (including 1s) of a small dense matrix, smallest
    // absolute pivot first.
    inline std::vector<BigInt> dense_snf(std::vector<std::vector<BigInt>> a) {
      std::vector<BigInt> diag;
      std::size_t const   rows = a.size();
      std::size_t const   cols = rows == 0 ? 0 : a[0].size();
      std::size_t         t    = 0;
      while (t < rows && t < cols) {
        // Smallest nonzero entry in the remaining block.
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (a[i][j] != 0
                && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
              pr = i;
              pc = j;
            }
          }
        }
        if (pr == rows) {
          break;
        }
        std::swap(a[t], a[pr]);
        for (auto& r : a) {
          std::swap(r[t], r[pc]);
        }
        bool done = false;
        while (!done) {
          done = true;
          // Clear the column below the pivot.
          for (std::size_t i = t + 1; i < rows; ++i) {
            if (a[i][t] == 0) {
              continue;
            }
            BigInt const q = a[i][t] / a[t][t];
            for (std::size_t j = t; j < cols; ++j) {
              a[i][j] -= q * a[t][j];
            }
            if (a[i][t] != 0) {
              std::swap(a[t], a[i]);
              done = false;
            }
          }
          // Clear the row right of the pivot.
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (a[t][j] == 0) {
              continue;
            }
            BigInt const q = a[t][j] / a[t][t];
            for (std::size_t i = t; i < rows; ++i) {
              a[i][j] -= q * a[i][t];
            }
            if (a[t][j] != 0) {
              for (auto& r : a) {
                std::swap(r[t], r[j]);
              }
              done = false;
            }
          }
          if (!done) {
            continue;
          }
          // The pivot must divide the rest of the block.
          for (std::size_t i = t + 1; i < rows && done; ++i) {
            for (std::size_t j = t + 1; j < cols; ++j) {
              if (a[i][j] % a[t][t] != 0) {
                for (std::size_t k = t; k < cols; ++k) {
                  a[t][k] += a[i][k];
                }
                done = false;
                break;
              }
            }
          }
        }
        diag.push_back(abs(a[t][t]));
        ++t;
      }
      return diag;
    }
  }  // namespace detail

  //! The subgroup of Z^cols spanned by the rows of a matrix. Keeps the unit
  //! pivots eliminated first, plus an echelon basis of what remains, which
  //! is enough for both the cokernel invariants and membership tests.
  class RelationLattice {
   public:
    explicit RelationLattice(IntMatrix const& m) : cols_(m.cols()) {
      std::vector<SparseRow> rows;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m.row(r).empty()) {
          rows.push_back(m.row(r));
        }
      }
      normalize_and_dedupe(rows);
      eliminate_unit_pivots(rows);
      for (auto& r : rows) {
        insert_echelon(std::move(r));
      }
    }

    [[nodiscard]] std::size_t cols() const noexcept {
      return cols_;
    }

    //! Rank of the lattice.
    [[nodiscard]] std::size_t rank() const noexcept {
      return unit_pivots_.size() + echelon_.size();
    }

    [[nodiscard]] std::size_t num_unit_pivots() const noexcept {
      return unit_pivots_.size();
    }

    //! Invariants of Z^cols / lattice.
    [[nodiscard]] AbelianInvariants cokernel() const {
      std::vector<std::uint32_t> used;
      for (auto const& [c, r] : echelon_) {
        for (auto const& e : r) {
          used.push_back(e.first);
        }
      }
      std::sort(used.begin(), used.end());
      used.erase(std::unique(used.begin(), used.end()), used.end());
      std::vector<std::vector<BigInt>> dense(
          echelon_.size(), std::vector<BigInt>(used.size()));
      std::size_t i = 0;
      for (auto const& [c, r] : echelon_) {
        for (auto const& e : r) {
          auto j = std::lower_bound(used.begin(), used.end(), e.first)
                   - used.begin();
          dense[i][j] = e.second;
        }
        ++i;
      }
      AbelianInvariants out;
      out.free_rank = cols_ - rank();
      for (auto& d : detail::dense_snf(std::move(dense))) {
        if (d > 1) {
          out.torsion.push_back(std::move(d));
        }
      }
      std::sort(out.torsion.begin(), out.torsion.end());
      return out;
    }

    [[nodiscard]] bool contains(SparseRow v) const {
      for (auto const& [c, r] : unit_pivots_) {
        BigInt const x = detail::value_at(v, c);
        if (x != 0) {
          // r[c] is +1 or -1.
          v = detail::axpy(v, x * detail::value_at(r, c), r);
        }
      }
      for (auto const& [c, r] : echelon_) {
        BigInt const x = detail::value_at(v, c);
        if (x == 0) {
          continue;
        }
        BigInt const lead = detail::value_at(r, c);
        if (x % lead != 0) {
          return false;
        }
        v = detail::axpy(v, x / lead, r);
      }
      return v.empty();
    }

    template <typename Int>
    [[nodiscard]] bool contains_dense(std::vector<Int> const& v) const {
      SparseRow s;
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] != 0) {
          s.emplace_back(static_cast<std::uint32_t>(c), BigInt(v[c]));
        }
      }
      return contains(std::move(s));
    }

   private:
    static void normalize_and_dedupe(std::vector<SparseRow>& rows) {
      for (auto& r : rows) {
        if (r.front().second < 0) {
          for (auto& e : r) {
            e.second = -e.second;
          }
        }
      }
      std::sort(rows.begin(), rows.end());
      rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    }

    // Repeatedly picks an entry +-1 with the smallest Markowitz cost,
    // clears its column from the other rows and sets the row aside.
    void eliminate_unit_pivots(std::vector<SparseRow>& rows) {
      std::vector<std::vector<std::size_t>> by_col(cols_);
      std::vector<std::size_t>              col_count(cols_, 0);
      std::vector<bool>                     alive(rows.size(), true);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (auto const& e : rows[i]) {
          by_col[e.first].push_back(i);
          ++col_count[e.first];
        }
      }
      while (true) {
        std::size_t   best_row  = rows.size();
        std::uint32_t best_col  = 0;
        std::size_t   best_cost = 0;
        for (std::size_t i = 0; i < rows.size() && !(best_row != rows.size()
                                                      && best_cost == 0);
             ++i) {
          if (!alive[i]) {
            continue;
          }
          for (auto const& e : rows[i]) {
            if (e.second != 1 && e.second != -1) {
              continue;
            }
            std::size_t const cost
                = (rows[i].size() - 1) * (col_count[e.first] - 1);
            if (best_row == rows.size() || cost < best_cost) {
              best_row  = i;
              best_col  = e.first;
              best_cost = cost;
            }
          }
        }
        if (best_row == rows.size()) {
          break;
        }
        SparseRow const pivot = std::move(rows[best_row]);
        BigInt const    sign  = detail::value_at(pivot, best_col);
        alive[best_row]       = false;
        for (auto const& e : pivot) {
          --col_count[e.first];
        }
        std::vector<std::size_t> touched;
        touched.swap(by_col[best_col]);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()),
                      touched.end());
        for (auto i : touched) {
          if (!alive[i]) {
            continue;
          }
          BigInt const x = detail::value_at(rows[i], best_col);
          if (x == 0) {
            continue;
          }
          for (auto const& e : rows[i]) {
            --col_count[e.first];
          }
          rows[i] = detail::axpy(rows[i], x * sign, pivot);
          for (auto const& e : rows[i]) {
            ++col_count[e.first];
            if (e.first != best_col) {
              by_col[e.first].push_back(i);
            }
          }
          if (rows[i].empty()) {
            alive[i] = false;
          }
        }
        unit_pivots_.emplace_back(best_col, pivot);
      }
      std::vector<SparseRow> rest;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (alive[i] && !rows[i].empty()) {
          rest.push_back(std::move(rows[i]));
        }
      }
      rows = std::move(rest);
    }

    void insert_echelon(SparseRow v) {
      while (!v.empty()) {
        std::uint32_t const c  = v.front().first;
        auto                it = echelon_.find(c);
        if (it == echelon_.end()) {
          if (v.front().second < 0) {
            for (auto& e : v) {
              e.second = -e.second;
            }
          }
          echelon_.emplace(c, std::move(v));
          return;
        }
        SparseRow&   b  = it->second;
        BigInt const bc = b.front().second;
        BigInt const vc = v.front().second;
        if (vc % bc == 0) {
          v = detail::axpy(v, vc / bc, b);
          continue;
        }
        BigInt g, s, t;
        detail::extended_gcd(bc, vc, g, s, t);
        SparseRow nb = detail::combine(s, b, t, v);
        SparseRow nv = detail::combine(vc / g, b, -(bc / g), v);
        b            = std::move(nb);
        v            = std::move(nv);
      }
    }

    std::size_t                                  cols_;
    std::vector<std::pair<std::uint32_t, SparseRow>> unit_pivots_;
    std::map<std::uint32_t, SparseRow>           echelon_;
  };

  //! Invariants of the cokernel of the row space: Z^cols / rows.
  [[nodiscard]] inline AbelianInvariants smith_normal_form(IntMatrix const& m) {
    return RelationLattice(m).cokernel();
  }

  [[nodiscard]] inline AbelianInvariants
  abelianization(PresentationSpec const& p) {
    return smith_normal_form(exponent_matrix(p));
  }

}  // namespace artinq

#endif  // ARTINQ_ABELIAN_HPP_
