//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Rewriting a group presentation so that every relation reads ab = c.

#ifndef IGWP_GROUP_NORMALIZE_HPP_
#define IGWP_GROUP_NORMALIZE_HPP_

#include <algorithm>  // for find, sort
#include <array>      // for array
#include <cstdint>    // for uint32_t, int32_t
#include <set>        // for set
#include <string>     // for string
#include <vector>     // for vector

#include "../error.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace igwp {

  using Triple = std::array<uint32_t, 3>;

  struct NormalizedPresentation {
    std::vector<std::string> A;
    std::vector<Triple>      triples;  // (a, b, c) means ab = c
    std::vector<uint32_t>    B;        // sorted, closed under inverse_of
    std::vector<int32_t>     inverse_of;  // -1 when no partner is declared
    uint32_t                 z = 0;
    //! Original generator g is A[from_original[g]].
    std::vector<uint32_t> from_original;
    //! Each member of A as a word over the original generators.
    std::vector<GroupWord> as_original;

    GroupPresentation presentation() const {
      GroupPresentation p;
      p.generators = A;
      for (auto const& t : triples) {
        p.relations.push_back({{gen_letter(t[0]), gen_letter(t[1])},
                               {gen_letter(t[2])}});
      }
      p.subgroup = B;
      return p;
    }

    uint32_t index(std::string const& name) const {
      auto it = std::find(A.begin(), A.end(), name);
      if (it == A.end()) {
        fail(ErrorCode::malformed_input, "unknown generator '" + name + "'");
      }
      return static_cast<uint32_t>(it - A.begin());
    }

    void validate() const {
      size_t const n = A.size();
      if (inverse_of.size() != n || z >= n) {
        fail(ErrorCode::malformed_input, "normalized presentation is malformed");
      }
      for (auto const& t : triples) {
        for (uint32_t x : t) {
          if (x >= n) {
            fail(ErrorCode::malformed_input, "triple uses undeclared letter");
          }
        }
      }
      for (uint32_t b : B) {
        if (b >= n || inverse_of[b] < 0
            || !std::binary_search(
                B.begin(), B.end(), static_cast<uint32_t>(inverse_of[b]))) {
          fail(ErrorCode::malformed_input,
               "subgroup generators are not closed under inverses");
        }
      }
    }
  };

  //! Adjoins z with zz = z (so z is the identity) and za = a = az for each
  //! original generator a; an original generator g with the relation gg = g
  //! is used as z instead. Formal inverses a' with aa' = z = a'a are adjoined
  //! when a^-1 occurs in a relation, or when a lies in B and no triples
  //! ac = z = ca already pair it. A relation u = v is rewritten by folding v
  //! into a single letter c (z when v is empty) and then u into prefix
  //! letters p1, p2, ... ending in c. The subgroup becomes B, its inverses and
  //! z.
  inline NormalizedPresentation normalize_presentation(GroupPresentation const& p,
                                                       std::vector<uint32_t> B) {
    p.validate();
    for (uint32_t b : B) {
      if (b >= p.rank()) {
        fail(ErrorCode::malformed_input, "subgroup generator out of range");
      }
    }
    NormalizedPresentation np;
    np.A = p.generators;
    size_t const n = p.rank();
    for (uint32_t g = 0; g < n; ++g) {
      np.from_original.push_back(g);
      np.as_original.push_back({gen_letter(g)});
    }
    std::set<Triple> seen;
    auto             add_triple = [&](uint32_t a, uint32_t b, uint32_t c) {
      if (seen.insert({a, b, c}).second) {
        np.triples.push_back({a, b, c});
      }
    };
    auto fresh = [&](std::string base, GroupWord word) {
      std::string name = base;
      for (int k = 2; std::find(np.A.begin(), np.A.end(), name) != np.A.end();
           ++k) {
        name = base + std::to_string(k);
      }
      np.A.push_back(name);
      np.as_original.push_back(free_reduce(word));
      np.inverse_of.push_back(-1);
      return static_cast<uint32_t>(np.A.size() - 1);
    };
    np.inverse_of.assign(n, -1);

    int32_t zid = -1;
    for (auto const& [u, v] : p.relations) {
      for (auto const& [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
        if (zid < 0 && x.size() == 2 && y.size() == 1 && x[0] > 0
            && x[0] == x[1] && x[0] == y[0]) {
          zid = static_cast<int32_t>(letter_generator(y[0]));
        }
      }
    }
    np.z = zid >= 0 ? static_cast<uint32_t>(zid) : fresh("z", {});
    np.as_original[np.z] = {};
    np.inverse_of[np.z]  = static_cast<int32_t>(np.z);

    auto adjoin_inverse = [&](uint32_t a) {
      uint32_t ai       = fresh(np.A[a] + "'", inverse(np.as_original[a]));
      np.inverse_of[a]  = static_cast<int32_t>(ai);
      np.inverse_of[ai] = static_cast<int32_t>(a);
      add_triple(a, ai, np.z);
      add_triple(ai, a, np.z);
    };

    add_triple(np.z, np.z, np.z);
    for (uint32_t g = 0; g < n; ++g) {
      if (g != np.z) {
        add_triple(np.z, g, g);
        add_triple(g, np.z, g);
      }
    }
    for (auto const& [u, v] : p.relations) {
      for (auto const* w : {&u, &v}) {
        for (int32_t x : *w) {
          uint32_t g = letter_generator(x);
          if (x < 0 && g != np.z && np.inverse_of[g] < 0) {
            adjoin_inverse(g);
          }
        }
      }
    }
    auto convert = [&](GroupWord const& w) {
      std::vector<uint32_t> out;
      for (int32_t x : w) {
        uint32_t g = letter_generator(x);
        out.push_back(x > 0 ? g : static_cast<uint32_t>(np.inverse_of[g]));
      }
      return out;
    };
    size_t counter = 0;
    auto   prefix  = [&](uint32_t x, uint32_t y) {
      uint32_t q = fresh("p" + std::to_string(++counter),
                         np.as_original[x] * np.as_original[y]);
      add_triple(x, y, q);
      return q;
    };

    for (auto const& [u, v] : p.relations) {
      auto U = convert(u), V = convert(v);
      if (U == V) {
        continue;
      }
      if (U.size() == 2 && V.size() == 1) {
        add_triple(U[0], U[1], V[0]);
        continue;
      }
      if (V.size() == 2 && U.size() == 1) {
        add_triple(V[0], V[1], U[0]);
        continue;
      }
      uint32_t cv = np.z;
      if (!V.empty()) {
        cv = V[0];
        for (size_t k = 1; k < V.size(); ++k) {
          cv = prefix(cv, V[k]);
        }
      }
      if (U.empty()) {
        add_triple(np.z, np.z, cv);
      } else if (U.size() == 1) {
        add_triple(np.z, U[0], cv);
      } else {
        uint32_t x = U[0];
        for (size_t k = 1; k + 1 < U.size(); ++k) {
          x = prefix(x, U[k]);
        }
        add_triple(x, U.back(), cv);
      }
    }

    std::set<uint32_t> Bset{np.z};
    for (uint32_t a : B) {
      Bset.insert(a);
      if (np.inverse_of[a] < 0) {
        for (uint32_t c = 0; c < np.A.size(); ++c) {
          if ((np.inverse_of[c] < 0 || c == a)
              && seen.count({a, c, np.z}) != 0 && seen.count({c, a, np.z}) != 0) {
            np.inverse_of[a] = static_cast<int32_t>(c);
            np.inverse_of[c] = static_cast<int32_t>(a);
            break;
          }
        }
      }
      if (np.inverse_of[a] < 0) {
        adjoin_inverse(a);
      }
      Bset.insert(static_cast<uint32_t>(np.inverse_of[a]));
    }
    np.B.assign(Bset.begin(), Bset.end());
    return np;
  }

}  // namespace igwp

#endif  // IGWP_GROUP_NORMALIZE_HPP_
