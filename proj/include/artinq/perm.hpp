// artinq - Artin group quotients, explicit isomorphisms and subgroup
// abelianisations.
//
// Finite quotients: permutations, signed permutations, generator assignments
// and relation checking. Composition is left to right throughout, so
// (p * q)(x) = q(p(x)).

#ifndef ARTINQ_PERM_HPP_
#define ARTINQ_PERM_HPP_

#include <array>          // for array
#include <cassert>        // for assert
#include <concepts>       // for same_as
#include <cstddef>        // for size_t
#include <cstdint>        // for uint32_t, int8_t
#include <map>            // for map
#include <queue>          // for queue
#include <stdexcept>      // for invalid_argument
#include <string>         // for string
#include <utility>        // for pair, move
#include <variant>        // for variant, visit
#include <vector>         // for vector

#include "diagrams.hpp"
#include "word.hpp"

namespace artinq {

  using Point = std::uint32_t;

  //! Permutation of 1..n, stored 0-based.
  class Perm {
   public:
    Perm() = default;

    static Perm identity(std::size_t n) {
      Perm p;
      p.images_.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        p.images_[i] = static_cast<Point>(i);
      }
      return p;
    }

    //! images[i] is the image of point i+1, given 1-based.
    static Perm from_images(std::vector<Point> const& images) {
      Perm p;
      p.images_.resize(images.size());
      std::vector<bool> hit(images.size(), false);
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i] < 1 || images[i] > images.size() || hit[images[i] - 1]) {
          throw std::invalid_argument("images do not define a permutation");
        }
        hit[images[i] - 1] = true;
        p.images_[i]       = images[i] - 1;
      }
      return p;
    }

    static Perm from_zero_based(std::vector<Point> images) {
      Perm p;
      p.images_ = std::move(images);
      return p;
    }

    //! The transposition (i, j) of 1..n.
    static Perm transposition(std::size_t n, Point i, Point j) {
      Perm p = identity(n);
      std::swap(p.images_.at(i - 1), p.images_.at(j - 1));
      return p;
    }

    //! The cycle (1, 2, ..., n).
    static Perm cycle(std::size_t n) {
      Perm p = identity(n);
      for (std::size_t i = 0; i < n; ++i) {
        p.images_[i] = static_cast<Point>((i + 1) % n);
      }
      return p;
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return images_.size();
    }

    //! Image of the 1-based point x.
    [[nodiscard]] Point operator()(Point x) const {
      return images_.at(x - 1) + 1;
    }

    [[nodiscard]] Point image0(Point x) const {
      return images_[x];
    }

    [[nodiscard]] bool is_identity() const {
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) {
          return false;
        }
      }
      return true;
    }

    [[nodiscard]] Perm inverse() const {
      Perm p;
      p.images_.resize(images_.size());
      for (std::size_t i = 0; i < images_.size(); ++i) {
        p.images_[images_[i]] = static_cast<Point>(i);
      }
      return p;
    }

    //! (p * q)(x) = q(p(x))
    friend Perm operator*(Perm const& p, Perm const& q) {
      if (p.degree() != q.degree()) {
        throw std::invalid_argument("degree mismatch: "
                                    + std::to_string(p.degree()) + " vs "
                                    + std::to_string(q.degree()));
      }
      Perm r;
      r.images_.resize(p.degree());
      for (std::size_t i = 0; i < p.degree(); ++i) {
        r.images_[i] = q.images_[p.images_[i]];
      }
      return r;
    }

    bool operator==(Perm const&) const = default;
    auto operator<=>(Perm const&) const = default;

    //! Cycle notation, e.g. "(1,3,2)"; the identity is "()".
    [[nodiscard]] std::string to_string() const {
      std::string       out;
      std::vector<bool> seen(images_.size(), false);
      for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) {
          continue;
        }
        out += '(';
        std::size_t j = i;
        bool        first = true;
        while (!seen[j]) {
          seen[j] = true;
          if (!first) {
            out += ',';
          }
          out += std::to_string(j + 1);
          first = false;
          j     = images_[j];
        }
        out += ')';
      }
      return out.empty() ? "()" : out;
    }

   private:
    std::vector<Point> images_;
  };

  [[nodiscard]] inline Perm compose(Perm const& p, Perm const& q) {
    return p * q;
  }

  //! Signed permutation of {+-1, ..., +-n}: point i goes to sign_i * pi(i).
  class SignedPerm {
   public:
    SignedPerm() = default;

    static SignedPerm identity(std::size_t n) {
      SignedPerm p;
      p.images_ = Perm::identity(n);
      p.signs_.assign(n, 1);
      return p;
    }

    //! Signed image list, 1-based, e.g. {2, -1, 3}.
    static SignedPerm from_signed_images(std::vector<int> const& images) {
      std::vector<Point> pts;
      SignedPerm         p;
      for (int v : images) {
        pts.push_back(static_cast<Point>(v < 0 ? -v : v));
        p.signs_.push_back(static_cast<std::int8_t>(v < 0 ? -1 : 1));
      }
      p.images_ = Perm::from_images(pts);
      return p;
    }

    //! The reflection swapping i and j: positive (e_i - e_j) or negative
    //! (e_i + e_j, sending i -> -j and j -> -i).
    static SignedPerm transposition(std::size_t n, Point i, Point j,
                                    bool negative = false) {
      SignedPerm p;
      p.images_ = Perm::transposition(n, i, j);
      p.signs_.assign(n, 1);
      if (negative) {
        p.signs_.at(i - 1) = -1;
        p.signs_.at(j - 1) = -1;
      }
      return p;
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return signs_.size();
    }

    [[nodiscard]] Perm const& underlying() const noexcept {
      return images_;
    }

    //! Signed image of the 1-based point x.
    [[nodiscard]] int operator()(Point x) const {
      return signs_.at(x - 1) * static_cast<int>(images_(x));
    }

    [[nodiscard]] bool is_identity() const {
      if (!images_.is_identity()) {
        return false;
      }
      for (auto s : signs_) {
        if (s != 1) {
          return false;
        }
      }
      return true;
    }

    //! Membership in W(D_n): an even number of negative signs.
    [[nodiscard]] bool even_sign_changes() const {
      std::size_t neg = 0;
      for (auto s : signs_) {
        neg += (s < 0);
      }
      return neg % 2 == 0;
    }

    [[nodiscard]] SignedPerm inverse() const {
      SignedPerm p;
      p.images_ = images_.inverse();
      p.signs_.resize(signs_.size());
      for (std::size_t i = 0; i < signs_.size(); ++i) {
        p.signs_[images_.image0(static_cast<Point>(i))] = signs_[i];
      }
      return p;
    }

    friend SignedPerm operator*(SignedPerm const& p, SignedPerm const& q) {
      SignedPerm r;
      r.images_ = p.images_ * q.images_;
      r.signs_.resize(p.degree());
      for (std::size_t i = 0; i < p.degree(); ++i) {
        r.signs_[i] = static_cast<std::int8_t>(
            p.signs_[i] * q.signs_[p.images_.image0(static_cast<Point>(i))]);
      }
      assert(!(p.even_sign_changes() && q.even_sign_changes())
             || r.even_sign_changes());
      return r;
    }

    bool operator==(SignedPerm const&) const = default;
    auto operator<=>(SignedPerm const&) const = default;

    //! Image list with signs, e.g. "[2, -1, 3]".
    [[nodiscard]] std::string to_string() const {
      std::string out = "[";
      for (std::size_t i = 0; i < degree(); ++i) {
        if (i != 0) {
          out += ", ";
        }
        out += std::to_string((*this)(static_cast<Point>(i + 1)));
      }
      return out + "]";
    }

   private:
    Perm                     images_;
    std::vector<std::int8_t> signs_;
  };

  [[nodiscard]] inline SignedPerm compose(SignedPerm const& p,
                                          SignedPerm const& q) {
    return p * q;
  }

  template <typename E>
  concept GroupElement = requires(E const& e, std::size_t n) {
    { e * e } -> std::same_as<E>;
    { e.inverse() } -> std::same_as<E>;
    { E::identity(n) } -> std::same_as<E>;
    { e.is_identity() } -> std::same_as<bool>;
    { e.degree() } -> std::same_as<std::size_t>;
    { e.to_string() } -> std::same_as<std::string>;
  };

  //! One group element per generator of a presentation.
  template <GroupElement E>
  class Assignment {
   public:
    using element_type = E;

    Assignment() = default;

    Assignment(std::string name, std::size_t degree, std::vector<E> images)
        : name_(std::move(name)), degree_(degree), images_(std::move(images)) {
      for (auto const& e : images_) {
        if (e.degree() != degree_) {
          throw std::invalid_argument("assignment \"" + name_
                                      + "\" has mixed degrees");
        }
        inverses_.push_back(e.inverse());
      }
    }

    [[nodiscard]] std::string const& name() const noexcept {
      return name_;
    }

    [[nodiscard]] std::size_t degree() const noexcept {
      return degree_;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return images_.size();
    }

    [[nodiscard]] E const& image(GenIndex g) const {
      if (g >= images_.size()) {
        throw std::out_of_range("generator " + std::to_string(g)
                                + " is not assigned by \"" + name_ + "\"");
      }
      return images_[g];
    }

    [[nodiscard]] E const& image(Letter x) const {
      (void) image(x.gen);
      return x.sign > 0 ? images_[x.gen] : inverses_[x.gen];
    }

    [[nodiscard]] std::vector<E> const& images() const noexcept {
      return images_;
    }

    //! Replaces one image; used for negative controls.
    void set_image(GenIndex g, E e) {
      inverses_.at(g) = e.inverse();
      images_.at(g)   = std::move(e);
    }

   private:
    std::string    name_;
    std::size_t    degree_ = 0;
    std::vector<E> images_;
    std::vector<E> inverses_;
  };

  template <GroupElement E>
  [[nodiscard]] E evaluate(Assignment<E> const& a, Word const& w) {
    E result = E::identity(a.degree());
    for (Letter x : w) {
      result = result * a.image(x);
    }
    return result;
  }

  //! Failures are human readable, naming the violated relation.
  struct Report {
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept {
      return failures.empty();
    }

    void merge(Report const& that, std::string const& prefix = "") {
      for (auto const& f : that.failures) {
        failures.push_back(prefix + f);
      }
    }
  };

  //! Lists every relation and relator of `p` whose image is not the
  //! identity; empty means `a` defines a homomorphism from the presented
  //! group.
  template <GroupElement E>
  [[nodiscard]] Report check_relations(PresentationSpec const& p,
                                       Assignment<E> const&    a) {
    Report report;
    if (a.size() < p.num_generators()) {
      report.failures.push_back("assignment \"" + a.name() + "\" covers "
                                + std::to_string(a.size()) + " of "
                                + std::to_string(p.num_generators())
                                + " generators");
      return report;
    }
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      auto const& rel = p.relations[i];
      if (evaluate(a, rel.lhs) != evaluate(a, rel.rhs)) {
        report.failures.push_back("relation " + std::to_string(i) + ": "
                                  + p.format(rel.lhs) + " = "
                                  + p.format(rel.rhs));
      }
    }
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (!evaluate(a, p.relators[i]).is_identity()) {
        report.failures.push_back("relator " + std::to_string(i) + ": "
                                  + p.format(p.relators[i]));
      }
    }
    return report;
  }

  using AnyAssignment = std::variant<Assignment<Perm>, Assignment<SignedPerm>>;

  [[nodiscard]] inline std::string const& name_of(AnyAssignment const& a) {
    return std::visit([](auto const& x) -> std::string const& { return x.name(); },
                      a);
  }

  [[nodiscard]] inline Report check_relations(PresentationSpec const& p,
                                              AnyAssignment const&    a) {
    return std::visit([&p](auto const& x) { return check_relations(p, x); }, a);
  }

  //! a_i -> (i, i+1) for i < n and a_n -> (1, n).
  [[nodiscard]] inline Assignment<Perm> sigma_assignment(std::size_t n) {
    if (n < 3) {
      throw std::invalid_argument("sigma needs n >= 3");
    }
    std::vector<Perm> images;
    for (Point i = 1; i < n; ++i) {
      images.push_back(Perm::transposition(n, i, i + 1));
    }
    images.push_back(Perm::transposition(n, 1, static_cast<Point>(n)));
    return Assignment<Perm>("sigma", n, std::move(images));
  }

  //! a_i -> (i, i+1) for i < n, a_n -> the negative transposition 1 -> -n,
  //! n -> -1. Lands in W(D_n).
  [[nodiscard]] inline Assignment<SignedPerm>
  ngon_signed_assignment(std::size_t n) {
    if (n < 4) {
      throw std::invalid_argument("ngon signed assignment needs n >= 4");
    }
    std::vector<SignedPerm> images;
    for (Point i = 1; i < n; ++i) {
      images.push_back(SignedPerm::transposition(n, i, i + 1));
    }
    images.push_back(
        SignedPerm::transposition(n, 1, static_cast<Point>(n), true));
    return Assignment<SignedPerm>("ngon-signed", n, std::move(images));
  }

  //! x1 -> negative transposition on {1,2}, x2 -> (1,2), x_i -> (i-1, i)
  //! for 3 <= i <= n: the standard reflections of W(D_n).
  [[nodiscard]] inline Assignment<SignedPerm>
  dn_signed_assignment(std::size_t n) {
    if (n < 4) {
      throw std::invalid_argument("D_n signed assignment needs n >= 4");
    }
    std::vector<SignedPerm> images;
    images.push_back(SignedPerm::transposition(n, 1, 2, true));
    images.push_back(SignedPerm::transposition(n, 1, 2));
    for (Point i = 3; i <= n; ++i) {
      images.push_back(SignedPerm::transposition(n, i - 1, i));
    }
    return Assignment<SignedPerm>("dn-signed", n, std::move(images));
  }

  //! W(D_n) -> Sym(n), forgetting signs.
  [[nodiscard]] inline Assignment<Perm> dn_perm_assignment(std::size_t n) {
    auto const        signed_ = dn_signed_assignment(n);
    std::vector<Perm> images;
    for (auto const& e : signed_.images()) {
      images.push_back(e.underlying());
    }
    return Assignment<Perm>("dn-sym", n, std::move(images));
  }

  //! Every generator -> the m-cycle (1, ..., m); a homomorphism for any
  //! presentation whose relators have exponent sum divisible by m.
  [[nodiscard]] inline Assignment<Perm> cyclic_assignment(std::size_t num_gens,
                                                          std::size_t m) {
    return Assignment<Perm>("cyclic-" + std::to_string(m), m,
                            std::vector<Perm>(num_gens, Perm::cycle(m)));
  }

  //! Index of the unordered pair {k, l}, 1 <= k < l <= n, in lexicographic
  //! order; {1, 2} has index 0.
  [[nodiscard]] inline std::size_t pair_index(std::size_t n, Point k, Point l) {
    if (k > l) {
      std::swap(k, l);
    }
    if (k < 1 || l > n || k == l) {
      throw std::out_of_range("bad pair {" + std::to_string(k) + ","
                              + std::to_string(l) + "}");
    }
    // Pairs with first entry < k come first.
    std::size_t const before = (k - 1) * n - (k - 1) * k / 2;
    return before + (l - k - 1);
  }

  [[nodiscard]] inline std::pair<Point, Point> pair_at(std::size_t n,
                                                       std::size_t index) {
    for (Point k = 1; k < n; ++k) {
      std::size_t const row = n - k;
      if (index < row) {
        return {k, static_cast<Point>(k + 1 + index)};
      }
      index -= row;
    }
    throw std::out_of_range("pair index out of range");
  }

  [[nodiscard]] inline Perm induced_pair_perm(Perm const& p) {
    auto const         n = p.degree();
    std::vector<Point> images(n * (n - 1) / 2);
    for (std::size_t i = 0; i < images.size(); ++i) {
      auto const [k, l] = pair_at(n, i);
      images[i]         = static_cast<Point>(pair_index(n, p(k), p(l)));
    }
    return Perm::from_zero_based(std::move(images));
  }

  //! The action on the n(n-1)/2 unordered pairs induced by a point action;
  //! base point {1,2} is pair 0.
  [[nodiscard]] inline Assignment<Perm>
  pair_action(Assignment<Perm> const& sigma) {
    std::vector<Perm> images;
    for (auto const& p : sigma.images()) {
      images.push_back(induced_pair_perm(p));
    }
    auto const n = sigma.degree();
    return Assignment<Perm>(sigma.name() + "-pairs", n * (n - 1) / 2,
                            std::move(images));
  }

  //! Braid chain y1..yk acting by Hurwitz moves on the orbit of the tuple
  //! ((1,2), (2,3), (1,2), (2,3), ...) of k+1 transpositions in Sym(3).
  //! Generator images are not involutions, unlike the reflection
  //! quotients.
  [[nodiscard]] inline Assignment<Perm> hurwitz_assignment(std::size_t k) {
    // Sym(3) elements as image triples, composed left to right.
    using S3 = std::array<std::uint8_t, 3>;
    auto mul = [](S3 const& p, S3 const& q) {
      return S3{q[p[0]], q[p[1]], q[p[2]]};
    };
    auto invert = [](S3 const& p) {
      S3 r{};
      for (std::uint8_t i = 0; i < 3; ++i) {
        r[p[i]] = i;
      }
      return r;
    };
    S3 const s1{1, 0, 2};
    S3 const s2{0, 2, 1};
    using Tuple = std::vector<S3>;
    Tuple start;
    for (std::size_t i = 0; i <= k; ++i) {
      start.push_back(i % 2 == 0 ? s1 : s2);
    }
    auto move = [&](Tuple t, std::size_t i) {
      // (g, h) -> (g h g^-1, g)
      S3 const g = t[i];
      S3 const h = t[i + 1];
      t[i]       = mul(mul(g, h), invert(g));
      t[i + 1]   = g;
      return t;
    };
    std::map<Tuple, Point> index;
    std::vector<Tuple>     orbit;
    std::queue<Tuple>      todo;
    index.emplace(start, 0);
    orbit.push_back(start);
    todo.push(start);
    while (!todo.empty()) {
      Tuple const t = todo.front();
      todo.pop();
      for (std::size_t i = 0; i < k; ++i) {
        Tuple u = move(t, i);
        if (index.emplace(u, static_cast<Point>(orbit.size())).second) {
          orbit.push_back(u);
          todo.push(std::move(u));
        }
      }
    }
    std::vector<Perm> images;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Point> img(orbit.size());
      for (std::size_t j = 0; j < orbit.size(); ++j) {
        img[j] = index.at(move(orbit[j], i));
      }
      images.push_back(Perm::from_zero_based(std::move(img)));
    }
    return Assignment<Perm>("hurwitz-" + std::to_string(k), orbit.size(),
                            std::move(images));
  }

}  // namespace artinq

#endif  // ARTINQ_PERM_HPP_
