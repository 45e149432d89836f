//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// The fibre product of F(A) over <A | R> inside F(A) x F(A).

#ifndef IGWP_GROUP_MIHAILOVA_HPP_
#define IGWP_GROUP_MIHAILOVA_HPP_

#include <algorithm>  // for find
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "../error.hpp"
#include "oracle.hpp"
#include "presentation.hpp"
#include "todd_coxeter.hpp"
#include "word.hpp"

namespace igwp {

  struct Mihailova {
    GroupPresentation delta;
    //! F(A) x F(A) on generators "x.1" (first copy) then "x.2".
    GroupPresentation G;
    //! (a, a) for a in A, then (r, 1) for each relation, then the inverses.
    std::vector<GroupWord> bgens;
    size_t                 base_count = 0;  // |A| + |R|

    //! Splits a word of G into its two components, as words over A.
    std::pair<GroupWord, GroupWord> split(GroupWord const& w) const {
      size_t const k = delta.rank();
      GroupWord    a, b;
      for (int32_t x : w) {
        uint32_t g = letter_generator(x);
        if (g < k) {
          a.push_back(x);
        } else {
          b.push_back(gen_letter(g - static_cast<uint32_t>(k), x < 0));
        }
      }
      return {free_reduce(a), free_reduce(b)};
    }

    GroupWord pair(GroupWord const& a, GroupWord const& b) const {
      auto const k = static_cast<uint32_t>(delta.rank());
      GroupWord  out;
      for (int32_t x : a) {
        out.push_back(x);
      }
      for (int32_t x : b) {
        out.push_back(gen_letter(letter_generator(x) + k, x < 0));
      }
      return out;
    }
  };

  inline Mihailova mihailova(GroupPresentation const& delta) {
    delta.validate();
    Mihailova m;
    m.delta      = delta;
    auto const k = static_cast<uint32_t>(delta.rank());
    for (auto const& g : delta.generators) {
      m.G.generators.push_back(g + ".1");
    }
    for (auto const& g : delta.generators) {
      m.G.generators.push_back(g + ".2");
    }
    for (uint32_t x = 0; x < k; ++x) {
      for (uint32_t y = 0; y < k; ++y) {
        m.G.relations.push_back({{gen_letter(x), gen_letter(y + k)},
                                 {gen_letter(y + k), gen_letter(x)}});
      }
    }
    for (uint32_t a = 0; a < k; ++a) {
      m.bgens.push_back({gen_letter(a), gen_letter(a + k)});
    }
    for (auto const& [u, v] : delta.relations) {
      m.bgens.push_back(free_reduce(u * inverse(v)));
    }
    m.base_count = m.bgens.size();
    for (size_t t = 0; t < m.base_count; ++t) {
      GroupWord inv = inverse(m.bgens[t]);
      if (std::find(m.bgens.begin(), m.bgens.end(), inv) == m.bgens.end()) {
        m.bgens.push_back(inv);
      }
    }
    return m;
  }

  //! Equality in F(A) x F(A) by componentwise free reduction; membership in
  //! the fibre product by comparing the two components in Delta, which must
  //! enumerate within \p cap (otherwise a capability error).
  inline GroupOracle product_of_free_oracle(Mihailova const& m, size_t cap) {
    auto eq = [m](GroupWord const& u, GroupWord const& v) {
      return m.split(u) == m.split(v);
    };
    auto member = [m, cap](GroupWord const&              w,
                           std::vector<GroupWord> const& gens) {
      auto norm = [&](std::vector<GroupWord> const& xs) {
        std::vector<std::pair<GroupWord, GroupWord>> out;
        for (auto const& x : xs) {
          out.push_back(m.split(x));
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      };
      if (norm(gens) != norm(m.bgens)) {
        fail(ErrorCode::capability,
             "product-of-free oracle decides membership in the fibre product "
             "only");
      }
      auto t = enumerate_finite(m.delta, cap);
      if (!t) {
        fail(ErrorCode::capability,
             "membership in the fibre product needs the word problem of "
             "Delta, which did not enumerate within cap "
                 + std::to_string(cap));
      }
      auto [a, b] = m.split(w);
      return t->evaluate(a) == t->evaluate(b);
    };
    return GroupOracle::with_callbacks(
        m.G, OracleStrategy::product_of_free, eq, member);
  }

}  // namespace igwp

#endif  // IGWP_GROUP_MIHAILOVA_HPP_
