// artinq - Artin group quotients, explicit isomorphisms and subgroup
// abelianisations.
//
// Free group words over named generators.

#ifndef ARTINQ_WORD_HPP_
#define ARTINQ_WORD_HPP_

#include <algorithm>         // for reverse
#include <charconv>          // for from_chars
#include <compare>           // for strong_ordering
#include <cstddef>           // for size_t
#include <cstdint>           // for uint32_t, int8_t, int64_t
#include <initializer_list>  // for initializer_list
#include <optional>          // for optional
#include <span>              // for span
#include <stdexcept>         // for invalid_argument, out_of_range
#include <string>            // for string
#include <string_view>       // for string_view
#include <unordered_map>     // for unordered_map
#include <utility>           // for move
#include <vector>            // for vector

namespace artinq {

  using GenIndex = std::uint32_t;

  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  namespace detail {
    // [a-z][0-9]+
    inline bool valid_generator_name(std::string_view name) {
      if (name.size() < 2 || name[0] < 'a' || name[0] > 'z') {
        return false;
      }
      return std::all_of(name.begin() + 1, name.end(), [](char c) {
        return c >= '0' && c <= '9';
      });
    }
  }  // namespace detail

  //! A generator as seen from its presentation: printable name plus ordinal.
  struct GenId {
    std::string name;
    GenIndex    index = 0;

    bool operator==(GenId const&) const = default;
  };

  //! Ordered list of generator names. Names are unique and follow the word
  //! grammar ([a-z][0-9]+).
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) {
      for (auto& n : names) {
        add(std::move(n));
      }
    }

    GenIndex add(std::string name) {
      if (!detail::valid_generator_name(name)) {
        throw std::invalid_argument("invalid generator name \"" + name + "\"");
      }
      if (index_.count(name) != 0) {
        throw std::invalid_argument("duplicate generator name \"" + name
                                    + "\"");
      }
      auto const i = static_cast<GenIndex>(names_.size());
      index_.emplace(name, i);
      names_.push_back(std::move(name));
      return i;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return names_.size();
    }

    [[nodiscard]] std::string const& name(GenIndex i) const {
      return names_.at(i);
    }

    [[nodiscard]] GenId id(GenIndex i) const {
      return GenId{name(i), i};
    }

    [[nodiscard]] std::optional<GenIndex> find(std::string_view name) const {
      auto it = index_.find(std::string(name));
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    //! Throws std::out_of_range naming the missing generator.
    [[nodiscard]] GenIndex at(std::string_view name) const {
      auto i = find(name);
      if (!i) {
        throw std::out_of_range("unknown generator \"" + std::string(name)
                                + "\"");
      }
      return *i;
    }

    [[nodiscard]] bool contains(std::string_view name) const {
      return find(name).has_value();
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return names_;
    }

    bool operator==(Alphabet const& that) const {
      return names_ == that.names_;
    }

   private:
    std::vector<std::string>                  names_;
    std::unordered_map<std::string, GenIndex> index_;
  };

  struct Letter {
    GenIndex    gen  = 0;
    std::int8_t sign = 1;

    [[nodiscard]] constexpr Letter inverse() const noexcept {
      return Letter{gen, static_cast<std::int8_t>(-sign)};
    }

    [[nodiscard]] constexpr bool cancels(Letter that) const noexcept {
      return gen == that.gen && sign == -that.sign;
    }

    constexpr auto operator<=>(Letter const&) const = default;
  };

  [[nodiscard]] constexpr Letter gen(GenIndex g) noexcept {
    return Letter{g, 1};
  }

  [[nodiscard]] constexpr Letter inv(GenIndex g) noexcept {
    return Letter{g, -1};
  }

  //! An element of the free group, always stored freely reduced.
  class Word {
   public:
    Word() = default;

    Word(std::initializer_list<Letter> raw) {
      append(std::span<Letter const>(raw.begin(), raw.size()));
    }

    explicit Word(std::span<Letter const> raw) {
      append(raw);
    }

    explicit Word(Letter x) {
      letters_.push_back(x);
    }

    //! g^e for a single generator.
    static Word power(GenIndex g, int e) {
      Word w;
      Letter const x{g, static_cast<std::int8_t>(e < 0 ? -1 : 1)};
      for (int i = 0; i < (e < 0 ? -e : e); ++i) {
        w.letters_.push_back(x);
      }
      return w;
    }

    [[nodiscard]] std::span<Letter const> letters() const noexcept {
      return letters_;
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return letters_.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return letters_.empty();
    }

    [[nodiscard]] Letter operator[](std::size_t i) const {
      return letters_[i];
    }

    [[nodiscard]] auto begin() const noexcept {
      return letters_.begin();
    }

    [[nodiscard]] auto end() const noexcept {
      return letters_.end();
    }

    [[nodiscard]] Word inverse() const {
      Word w;
      w.letters_.reserve(letters_.size());
      for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        w.letters_.push_back(it->inverse());
      }
      return w;
    }

    [[nodiscard]] Word pow(int e) const {
      Word const base = e < 0 ? inverse() : *this;
      Word       w;
      for (int i = 0; i < (e < 0 ? -e : e); ++i) {
        w *= base;
      }
      return w;
    }

    Word& operator*=(Word const& that) {
      if (&that == this) {
        Word const copy = that;
        append(copy.letters());
        return *this;
      }
      append(that.letters());
      return *this;
    }

    Word& operator*=(Letter x) {
      push(x);
      return *this;
    }

    friend Word operator*(Word lhs, Word const& rhs) {
      lhs *= rhs;
      return lhs;
    }

    friend Word operator*(Word lhs, Letter x) {
      lhs *= x;
      return lhs;
    }

    bool operator==(Word const&) const = default;
    auto operator<=>(Word const&) const = default;

   private:
    void push(Letter x) {
      if (!letters_.empty() && letters_.back().cancels(x)) {
        letters_.pop_back();
      } else {
        letters_.push_back(x);
      }
    }

    // Stack based, so cascades cancel in one pass.
    void append(std::span<Letter const> raw) {
      letters_.reserve(letters_.size() + raw.size());
      for (Letter x : raw) {
        push(x);
      }
    }

    std::vector<Letter> letters_;
  };

  [[nodiscard]] inline Word reduce(std::span<Letter const> raw) {
    return Word(raw);
  }

  [[nodiscard]] inline Word invert(Word const& w) {
    return w.inverse();
  }

  //! g^h := h^-1 g h
  [[nodiscard]] inline Word conjugate(Word const& g, Word const& h) {
    return h.inverse() * g * h;
  }

  //! [g, h] := g^-1 h^-1 g h
  [[nodiscard]] inline Word commutator(Word const& g, Word const& h) {
    return g.inverse() * h.inverse() * g * h;
  }

  //! [y1, y2 ... y_{n-1} y_n y_{n-1}^-1 ... y2^-1]
  [[nodiscard]] inline Word cycle_commutator(std::span<Word const> ys) {
    if (ys.size() < 3) {
      throw std::invalid_argument(
          "cycle commutator needs at least 3 words, found "
          + std::to_string(ys.size()));
    }
    auto const n = ys.size();
    Word       prefix;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      prefix *= ys[i];
    }
    return commutator(ys[0], prefix * ys[n - 1] * prefix.inverse());
  }

  //! [y1, y2^-1 ... y_{t+1}^-1 y_{t+2} ... y_{n-1} y_n y_{n-1}^-1 ...
  //!  y_{t+2}^-1 y_{t+1} ... y2]
  [[nodiscard]] inline Word twisted_cycle_commutator(std::span<Word const> ys,
                                                     int                   t) {
    auto const n = ys.size();
    if (n < 4) {
      throw std::invalid_argument(
          "twisted cycle commutator needs at least 4 words, found "
          + std::to_string(n));
    }
    if (t < 1 || static_cast<std::size_t>(t) > n - 2) {
      throw std::out_of_range("twist parameter t = " + std::to_string(t)
                              + " outside 1.." + std::to_string(n - 2));
    }
    Word prefix;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      prefix *= (i <= static_cast<std::size_t>(t) ? ys[i].inverse() : ys[i]);
    }
    return commutator(ys[0], prefix * ys[n - 1] * prefix.inverse());
  }

  [[nodiscard]] inline std::vector<std::int64_t>
  exponent_sums(Word const& w, std::size_t num_gens) {
    std::vector<std::int64_t> v(num_gens, 0);
    for (Letter x : w) {
      v.at(x.gen) += x.sign;
    }
    return v;
  }

  [[nodiscard]] inline bool uses_only(Word const& w, std::size_t num_gens) {
    return std::all_of(
        w.begin(), w.end(), [num_gens](Letter x) { return x.gen < num_gens; });
  }

  // Grammar: word := term ('*' term)* | '1' | empty
  //          term := name | name '^' int   (int nonzero)
  [[nodiscard]] inline Word parse_word(std::string_view text,
                                       Alphabet const&  alphabet) {
    auto trim = [](std::string_view s) {
      auto const b = s.find_first_not_of(" \t\n\r");
      if (b == std::string_view::npos) {
        return std::string_view{};
      }
      auto const e = s.find_last_not_of(" \t\n\r");
      return s.substr(b, e - b + 1);
    };
    text = trim(text);
    if (text.empty() || text == "1") {
      return Word{};
    }
    Word        result;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      auto const       star = text.find('*', pos);
      std::string_view term = trim(text.substr(
          pos, star == std::string_view::npos ? std::string_view::npos
                                              : star - pos));
      if (term.empty()) {
        throw ParseError("empty term in word \"" + std::string(text) + "\"");
      }
      int        exponent = 1;
      auto const caret    = term.find('^');
      auto       name     = term;
      if (caret != std::string_view::npos) {
        name          = trim(term.substr(0, caret));
        auto exp_text = trim(term.substr(caret + 1));
        auto const* first = exp_text.data();
        auto const* last  = exp_text.data() + exp_text.size();
        if (!exp_text.empty() && exp_text[0] == '+') {
          ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, exponent);
        if (exp_text.empty() || ec != std::errc{} || ptr != last
            || exponent == 0) {
          throw ParseError("malformed exponent \"" + std::string(exp_text)
                           + "\"");
        }
      }
      auto const g = alphabet.find(name);
      if (!g) {
        if (!detail::valid_generator_name(name)) {
          throw ParseError("malformed generator name \"" + std::string(name)
                           + "\"");
        }
        throw ParseError("unknown generator \"" + std::string(name) + "\"");
      }
      result *= Word::power(*g, exponent);
      if (star == std::string_view::npos) {
        break;
      }
      pos = star + 1;
    }
    return result;
  }

  //! Runs of a repeated letter are written as powers, e.g. "a1*a2^-2".
  [[nodiscard]] inline std::string format_word(Word const&     w,
                                               Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      int const e = static_cast<int>(j - i) * w[i].sign;
      if (!out.empty()) {
        out += '*';
      }
      out += alphabet.name(w[i].gen);
      if (e != 1) {
        out += '^';
        out += std::to_string(e);
      }
      i = j;
    }
    return out;
  }

  //! Replaces the first occurrence of `from` as a contiguous subword of `w`
  //! by `to`, then reduces. Returns nullopt when there is no occurrence.
  [[nodiscard]] inline std::optional<Word>
  substitute_once(Word const& w, Word const& from, Word const& to) {
    if (from.empty() || from.size() > w.size()) {
      return std::nullopt;
    }
    auto const hay    = w.letters();
    auto const needle = from.letters();
    auto const it
        = std::search(hay.begin(), hay.end(), needle.begin(), needle.end());
    if (it == hay.end()) {
      return std::nullopt;
    }
    auto const   offset = static_cast<std::size_t>(it - hay.begin());
    Word         out(hay.subspan(0, offset));
    out *= to;
    out *= Word(hay.subspan(offset + needle.size()));
    return out;
  }

}  // namespace artinq

#endif  // ARTINQ_WORD_HPP_
