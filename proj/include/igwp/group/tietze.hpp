//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Generator elimination by Tietze transformations.

#ifndef IGWP_GROUP_TIETZE_HPP_
#define IGWP_GROUP_TIETZE_HPP_

#include <algorithm>  // for sort, unique
#include <cstdint>    // for int32_t
#include <limits>     // for numeric_limits
#include <string>     // for string
#include <vector>     // for vector

#include "presentation.hpp"
#include "word.hpp"

namespace igwp {

  //! A presentation on fewer generators together with the images of the
  //! original generators as words in the new ones.
  struct SimplifiedPresentation {
    std::vector<std::string> generators;
    std::vector<GroupWord>   relators;
    std::vector<GroupWord>   images;

    GroupWord map(GroupWord const& w) const {
      GroupWord out;
      for (int32_t x : w) {
        GroupWord const& im = images.at(letter_generator(x));
        out = out * (x > 0 ? im : inverse(im));
      }
      return free_reduce(out);
    }

    GroupPresentation as_presentation() const {
      GroupPresentation p;
      p.generators = generators;
      for (auto const& r : relators) {
        p.relations.emplace_back(r, GroupWord{});
      }
      return p;
    }
  };

  namespace detail {
    inline GroupWord substitute(GroupWord const& w,
                                uint32_t         g,
                                GroupWord const& by) {
      GroupWord out;
      for (int32_t x : w) {
        if (letter_generator(x) == g) {
          out = out * (x > 0 ? by : inverse(by));
        } else {
          out.push_back(x);
        }
      }
      return out;
    }

    inline void tidy(std::vector<GroupWord>& rels) {
      std::vector<GroupWord> out;
      for (auto& r : rels) {
        GroupWord c = cyclic_reduce(r);
        if (!c.empty()) {
          out.push_back(std::move(c));
        }
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      rels = std::move(out);
    }

    inline size_t total_length(std::vector<GroupWord> const& rels) {
      size_t n = 0;
      for (auto const& r : rels) {
        n += r.size();
      }
      return n;
    }
  }  // namespace detail

  //! Repeatedly eliminates a generator occurring exactly once in some
  //! relator, choosing the elimination that shrinks the presentation most.
  //! Eliminations growing the total relator length past a fixed multiple of
  //! the original are refused.
  inline SimplifiedPresentation tietze_simplify(GroupPresentation const& p) {
    p.validate();
    size_t const           n = p.rank();
    std::vector<GroupWord> rels = p.relators();
    detail::tidy(rels);
    std::vector<GroupWord> images(n);
    for (uint32_t g = 0; g < n; ++g) {
      images[g] = {gen_letter(g)};
    }
    std::vector<bool> alive(n, true);
    size_t const      cap = 4 * detail::total_length(rels) + 64;

    while (true) {
      // occurrence counts per relator
      long     best_delta = std::numeric_limits<long>::max();
      size_t   best_rel = 0, best_len = 0;
      uint32_t best_gen = 0;
      bool     found    = false;
      std::vector<size_t> total(n, 0);
      for (auto const& r : rels) {
        for (int32_t x : r) {
          ++total[letter_generator(x)];
        }
      }
      std::vector<size_t> occ(n, 0);
      for (size_t k = 0; k < rels.size(); ++k) {
        for (int32_t x : rels[k]) {
          ++occ[letter_generator(x)];
        }
        long const len = static_cast<long>(rels[k].size());
        for (int32_t x : rels[k]) {
          uint32_t g = letter_generator(x);
          if (occ[g] != 1) {
            continue;
          }
          long other = static_cast<long>(total[g]) - 1;
          long delta = -len + other * (len - 2);
          if (delta < best_delta
              || (delta == best_delta
                  && (static_cast<size_t>(len) < best_len
                      || (static_cast<size_t>(len) == best_len
                          && g < best_gen)))) {
            best_delta = delta;
            best_rel   = k;
            best_len   = static_cast<size_t>(len);
            best_gen   = g;
            found      = true;
          }
        }
        for (int32_t x : rels[k]) {
          occ[letter_generator(x)] = 0;
        }
      }
      if (!found
          || static_cast<long>(detail::total_length(rels)) + best_delta
                 > static_cast<long>(cap)) {
        break;
      }
      // rotate so the generator leads, then solve for it
      GroupWord r = rels[best_rel];
      size_t    pos = 0;
      while (letter_generator(r[pos]) != best_gen) {
        ++pos;
      }
      std::rotate(r.begin(), r.begin() + pos, r.end());
      GroupWord rest(r.begin() + 1, r.end());
      GroupWord by = r[0] > 0 ? inverse(rest) : rest;
      rels.erase(rels.begin() + best_rel);
      for (auto& x : rels) {
        x = detail::substitute(x, best_gen, by);
      }
      for (auto& im : images) {
        im = free_reduce(detail::substitute(im, best_gen, by));
      }
      detail::tidy(rels);
      alive[best_gen] = false;
    }

    // renumber the survivors
    std::vector<int32_t>   newid(n, -1);
    SimplifiedPresentation s;
    for (uint32_t g = 0; g < n; ++g) {
      if (alive[g]) {
        newid[g] = static_cast<int32_t>(s.generators.size());
        s.generators.push_back(p.generators[g]);
      }
    }
    auto renum = [&](GroupWord const& w) {
      GroupWord out;
      for (int32_t x : w) {
        int32_t id = newid[letter_generator(x)];
        out.push_back(gen_letter(static_cast<uint32_t>(id), x < 0));
      }
      return out;
    };
    for (auto const& r : rels) {
      s.relators.push_back(renum(r));
    }
    for (auto const& im : images) {
      s.images.push_back(renum(im));
    }
    return s;
  }

}  // namespace igwp

#endif  // IGWP_GROUP_TIETZE_HPP_
