//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Green's relations of a finite semigroup computed from principal ideals, and
// an egg-box rendering in DOT.

#ifndef IGWP_GREEN_HPP_
#define IGWP_GREEN_HPP_

#include <algorithm>  // for sort, find
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t
#include <map>        // for map
#include <sstream>    // for ostringstream
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "error.hpp"
#include "mul_table.hpp"

namespace igwp {

  //! Green's structure of a finite semigroup.
  //!
  //! Class ids are numbered in order of the least element of each class, so
  //! the data is a deterministic function of the table.
  struct GreenData {
    size_t                n = 0;
    std::vector<uint32_t> r_class;
    std::vector<uint32_t> l_class;
    std::vector<uint32_t> h_class;
    std::vector<uint32_t> d_class;
    size_t                num_r = 0;
    size_t                num_l = 0;
    size_t                num_h = 0;
    size_t                num_d = 0;

    std::vector<std::vector<element_index>> d_members;
    std::vector<std::vector<element_index>> d_idempotents;
    std::vector<std::vector<element_index>> r_idempotents;
    std::vector<std::vector<element_index>> l_idempotents;

    //! d_leq[x][y] iff D-class x lies below or equals D-class y in the J-order.
    std::vector<std::vector<bool>> d_leq;
    //! Pairs (upper, lower) of D-classes with nothing strictly in between.
    std::vector<std::pair<uint32_t, uint32_t>> covers;

    bool R(element_index a, element_index b) const noexcept {
      return r_class[a] == r_class[b];
    }
    bool L(element_index a, element_index b) const noexcept {
      return l_class[a] == l_class[b];
    }
    bool H(element_index a, element_index b) const noexcept {
      return h_class[a] == h_class[b];
    }
    bool D(element_index a, element_index b) const noexcept {
      return d_class[a] == d_class[b];
    }
  };

  namespace detail {
    // Renumber arbitrary keys by first occurrence.
    template <typename Key>
    std::vector<uint32_t> number_by_first(std::vector<Key> const& keys,
                                          size_t&                  count) {
      std::map<Key, uint32_t> seen;
      std::vector<uint32_t>   out(keys.size());
      for (size_t a = 0; a < keys.size(); ++a) {
        auto it = seen.find(keys[a]);
        if (it == seen.end()) {
          it = seen.emplace(keys[a], static_cast<uint32_t>(seen.size())).first;
        }
        out[a] = it->second;
      }
      count = seen.size();
      return out;
    }
  }  // namespace detail

  inline GreenData green_data(MulTable const& t) {
    require_semigroup(t);
    size_t const n = t.size();
    using Ideal    = std::vector<bool>;

    std::vector<Ideal> right(n, Ideal(n, false)), left(n, Ideal(n, false));
    for (element_index a = 0; a < n; ++a) {
      right[a][a] = true;
      left[a][a]  = true;
      for (element_index s = 0; s < n; ++s) {
        right[a][t(a, s)] = true;
        left[a][t(s, a)]  = true;
      }
    }
    // S^1 a S^1 is the union of the left ideals of the members of a S^1.
    std::vector<Ideal> twosided(n, Ideal(n, false));
    for (element_index a = 0; a < n; ++a) {
      for (element_index x = 0; x < n; ++x) {
        if (right[a][x]) {
          for (element_index y = 0; y < n; ++y) {
            if (left[x][y]) {
              twosided[a][y] = true;
            }
          }
        }
      }
    }

    GreenData g;
    g.n       = n;
    g.r_class = detail::number_by_first(right, g.num_r);
    g.l_class = detail::number_by_first(left, g.num_l);
    std::vector<std::pair<uint32_t, uint32_t>> hk(n);
    for (element_index a = 0; a < n; ++a) {
      hk[a] = {g.r_class[a], g.l_class[a]};
    }
    g.h_class = detail::number_by_first(hk, g.num_h);

    // D = R o L: a D b iff some c has a R c and c L b.
    std::vector<std::vector<bool>> l_in_r(g.num_r,
                                          std::vector<bool>(g.num_l, false));
    for (element_index c = 0; c < n; ++c) {
      l_in_r[g.r_class[c]][g.l_class[c]] = true;
    }
    std::vector<int64_t> dkey(n, -1);
    uint32_t             next = 0;
    g.d_class.assign(n, 0);
    for (element_index a = 0; a < n; ++a) {
      if (dkey[a] != -1) {
        continue;
      }
      dkey[a] = next;
      for (element_index b = a + 1; b < n; ++b) {
        if (dkey[b] == -1 && l_in_r[g.r_class[a]][g.l_class[b]]) {
          dkey[b] = next;
        }
      }
      ++next;
    }
    for (element_index a = 0; a < n; ++a) {
      g.d_class[a] = static_cast<uint32_t>(dkey[a]);
    }
    g.num_d = next;

    // J computed independently; D = J for finite semigroups.
    for (element_index a = 0; a < n; ++a) {
      for (element_index b = 0; b < n; ++b) {
        if ((twosided[a] == twosided[b]) != (g.d_class[a] == g.d_class[b])) {
          fail(ErrorCode::internal,
               "D and J differ at (" + std::to_string(a) + ","
                   + std::to_string(b) + ")");
        }
      }
    }

    g.d_members.assign(g.num_d, {});
    g.d_idempotents.assign(g.num_d, {});
    g.r_idempotents.assign(g.num_r, {});
    g.l_idempotents.assign(g.num_l, {});
    for (element_index a = 0; a < n; ++a) {
      g.d_members[g.d_class[a]].push_back(a);
      if (t.is_idempotent(a)) {
        g.d_idempotents[g.d_class[a]].push_back(a);
        g.r_idempotents[g.r_class[a]].push_back(a);
        g.l_idempotents[g.l_class[a]].push_back(a);
      }
    }

    g.d_leq.assign(g.num_d, std::vector<bool>(g.num_d, false));
    for (uint32_t x = 0; x < g.num_d; ++x) {
      for (uint32_t y = 0; y < g.num_d; ++y) {
        g.d_leq[x][y] = twosided[g.d_members[y][0]][g.d_members[x][0]];
      }
    }
    for (uint32_t up = 0; up < g.num_d; ++up) {
      for (uint32_t lo = 0; lo < g.num_d; ++lo) {
        if (up == lo || !g.d_leq[lo][up]) {
          continue;
        }
        bool cover = true;
        for (uint32_t mid = 0; mid < g.num_d && cover; ++mid) {
          if (mid != up && mid != lo && g.d_leq[lo][mid] && g.d_leq[mid][up]) {
            cover = false;
          }
        }
        if (cover) {
          g.covers.emplace_back(up, lo);
        }
      }
    }
    return g;
  }

  namespace detail {
    inline std::string html_escape(std::string const& s) {
      std::string out;
      for (char c : s) {
        switch (c) {
          case '<':
            out += "&lt;";
            break;
          case '>':
            out += "&gt;";
            break;
          case '&':
            out += "&amp;";
            break;
          case '"':
            out += "&quot;";
            break;
          default:
            out += c;
        }
      }
      return out;
    }
  }  // namespace detail

  //! DOT digraph with one cluster per D-class, drawn as a grid whose rows are
  //! R-classes and columns are L-classes; idempotents carry a trailing '*'.
  //! Edges are the covers of the J-order, pointing downwards.
  inline std::string egg_box_dot(MulTable const& t, GreenData const& g) {
    std::ostringstream out;
    out << "digraph eggbox {\n  node [shape=plaintext];\n";
    for (uint32_t d = 0; d < g.num_d; ++d) {
      std::vector<uint32_t> rows, cols;
      for (element_index a : g.d_members[d]) {
        if (std::find(rows.begin(), rows.end(), g.r_class[a]) == rows.end()) {
          rows.push_back(g.r_class[a]);
        }
        if (std::find(cols.begin(), cols.end(), g.l_class[a]) == cols.end()) {
          cols.push_back(g.l_class[a]);
        }
      }
      out << "  subgraph cluster_D" << d << " {\n    label=\"D" << d
          << "\";\n    D" << d
          << " [label=<<table border=\"0\" cellborder=\"1\" "
             "cellspacing=\"0\">";
      for (uint32_t r : rows) {
        out << "<tr>";
        for (uint32_t l : cols) {
          out << "<td>";
          bool first = true;
          for (element_index a : g.d_members[d]) {
            if (g.r_class[a] == r && g.l_class[a] == l) {
              if (!first) {
                out << " ";
              }
              first = false;
              out << detail::html_escape(t.name(a));
              if (t.is_idempotent(a)) {
                out << "*";
              }
            }
          }
          out << "</td>";
        }
        out << "</tr>";
      }
      out << "</table>>];\n  }\n";
    }
    for (auto const& [up, lo] : g.covers) {
      out << "  D" << up << " -> D" << lo << ";\n";
    }
    out << "}\n";
    return out.str();
  }

}  // namespace igwp

#endif  // IGWP_GREEN_HPP_
