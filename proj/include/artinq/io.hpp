// artinq - Artin group quotients, explicit isomorphisms and subgroup
// abelianisations.
//
// Presentation import/export: JSON documents and GAP style text.

#ifndef ARTINQ_IO_HPP_
#define ARTINQ_IO_HPP_

#include <cstddef>      // for size_t
#include <cstdint>      // for int64_t
#include <limits>       // for numeric_limits
#include <string>       // for string
#include <string_view>  // for string_view
#include <vector>       // for vector

#include <json.hpp>

#include "abelian.hpp"
#include "diagrams.hpp"
#include "word.hpp"

namespace artinq {

  using json = nlohmann::ordered_json;

  //! {"label", "generators", "relations": [[lhs, rhs], ...], "relators"}
  [[nodiscard]] inline json to_json(PresentationSpec const& p) {
    json doc;
    doc["label"]      = p.label;
    doc["generators"] = p.generators.names();
    json rels         = json::array();
    for (auto const& r : p.relations) {
      rels.push_back({p.format(r.lhs), p.format(r.rhs)});
    }
    doc["relations"] = std::move(rels);
    json relators    = json::array();
    for (auto const& w : p.relators) {
      relators.push_back(p.format(w));
    }
    doc["relators"] = std::move(relators);
    return doc;
  }

  [[nodiscard]] inline PresentationSpec presentation_from_json(json const& doc) {
    PresentationSpec p;
    try {
      p.label = doc.value("label", std::string());
      for (auto const& g : doc.at("generators")) {
        p.generators.add(g.get<std::string>());
      }
      for (auto const& r : doc.value("relations", json::array())) {
        if (!r.is_array() || r.size() != 2) {
          throw ParseError("relation must be a [lhs, rhs] pair");
        }
        p.relations.push_back({p.word(r[0].get<std::string>()),
                               p.word(r[1].get<std::string>())});
      }
      for (auto const& w : doc.value("relators", json::array())) {
        p.relators.push_back(p.word(w.get<std::string>()));
      }
    } catch (json::exception const& e) {
      throw ParseError(std::string("malformed presentation document: ")
                       + e.what());
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what());
    }
    return p;
  }

  //! < a1, a2 |
  //!   a1*a2*a1 = a2*a1*a2,
  //!   a1^2 >
  [[nodiscard]] inline std::string to_gap(PresentationSpec const& p) {
    std::string out = "< ";
    for (std::size_t i = 0; i < p.num_generators(); ++i) {
      out += (i == 0 ? "" : ", ") + p.generators.name(static_cast<GenIndex>(i));
    }
    out += " |";
    std::vector<std::string> rows;
    for (auto const& r : p.relations) {
      rows.push_back(p.format(r.lhs) + " = " + p.format(r.rhs));
    }
    for (auto const& w : p.relators) {
      rows.push_back(p.format(w));
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      out += "\n  " + rows[i] + (i + 1 < rows.size() ? "," : "");
    }
    out += " >\n";
    return out;
  }

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\n'
                            || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\n'
                            || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
      }
      return s;
    }

    inline std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
          out.push_back(trim(s.substr(start, i - start)));
          start = i + 1;
        }
      }
      return out;
    }
  }  // namespace detail

  //! Inverse of to_gap (the label is not stored in the text).
  [[nodiscard]] inline PresentationSpec presentation_from_gap(
      std::string_view text) {
    text = detail::trim(text);
    if (text.size() < 2 || text.front() != '<' || text.back() != '>') {
      throw ParseError("GAP presentation must be enclosed in < >");
    }
    text           = text.substr(1, text.size() - 2);
    auto const bar = text.find('|');
    if (bar == std::string_view::npos) {
      throw ParseError("GAP presentation needs a '|'");
    }
    PresentationSpec p;
    auto const       gens = detail::trim(text.substr(0, bar));
    if (!gens.empty()) {
      for (auto g : detail::split(gens, ',')) {
        try {
          p.generators.add(std::string(g));
        } catch (std::invalid_argument const& e) {
          throw ParseError(e.what());
        }
      }
    }
    auto const body = detail::trim(text.substr(bar + 1));
    if (body.empty()) {
      return p;
    }
    for (auto row : detail::split(body, ',')) {
      auto const eq = row.find('=');
      if (eq == std::string_view::npos) {
        p.relators.push_back(p.word(row));
      } else {
        p.relations.push_back({p.word(detail::trim(row.substr(0, eq))),
                               p.word(detail::trim(row.substr(eq + 1)))});
      }
    }
    return p;
  }

  //! Small values as JSON numbers, larger ones as decimal strings.
  [[nodiscard]] inline json to_json(BigInt const& x) {
    if (x >= std::numeric_limits<std::int64_t>::min()
        && x <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(x);
    }
    return x.str();
  }

  [[nodiscard]] inline json to_json(AbelianInvariants const& a) {
    json torsion = json::array();
    for (auto const& d : a.torsion) {
      torsion.push_back(to_json(d));
    }
    return json{{"free_rank", a.free_rank},
                {"torsion", std::move(torsion)},
                {"text", format_invariants(a)},
                {"primary", format_primary(a)}};
  }

}  // namespace artinq

#endif  // ARTINQ_IO_HPP_
