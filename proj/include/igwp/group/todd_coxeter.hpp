//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Coset enumeration over the trivial subgroup (HLT strategy), used to realise
// finite groups as Cayley tables.

#ifndef IGWP_GROUP_TODD_COXETER_HPP_
#define IGWP_GROUP_TODD_COXETER_HPP_

#include <algorithm>  // for max
#include <cstdint>    // for int32_t, uint32_t
#include <deque>      // for deque
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "../error.hpp"
#include "presentation.hpp"
#include "smith.hpp"
#include "tietze.hpp"
#include "word.hpp"

namespace igwp {

  //! A finite group as its regular representation. Element 0 is the
  //! identity.
  struct CayleyTable {
    size_t                             order = 0;
    std::vector<std::vector<uint32_t>> mul;
    std::vector<uint32_t>              inv;
    //! Element represented by each generator of the input presentation.
    std::vector<uint32_t> gen_images;
    //! A shortest word over the input generators and their inverses
    //! representing each element, from a breadth-first search.
    std::vector<GroupWord> element_words;

    uint32_t evaluate(GroupWord const& w) const {
      uint32_t x = 0;
      for (int32_t l : w) {
        uint32_t g = gen_images.at(letter_generator(l));
        x          = mul[x][l > 0 ? g : inv[g]];
      }
      return x;
    }
  };

  namespace detail {
    class CosetTable {
     public:
      CosetTable(size_t ngens, size_t limit)
          : _cols(2 * ngens), _limit(limit) {
        new_coset();
      }

      static size_t col(int32_t x) {
        return 2 * letter_generator(x) + (x < 0 ? 1 : 0);
      }
      static size_t inv_col(size_t c) {
        return c ^ 1U;
      }

      // false on exceeding the limit
      bool enumerate(std::vector<GroupWord> const& rels) {
        for (size_t c = 0; c < _table.size(); ++c) {
          if (!alive(c)) {
            continue;
          }
          for (auto const& r : rels) {
            if (!scan_and_fill(c, r)) {
              return false;
            }
            if (!alive(c)) {
              break;
            }
          }
          if (!alive(c)) {
            continue;
          }
          for (size_t x = 0; x < _cols; ++x) {
            if (_table[c][x] < 0 && !define(c, x)) {
              return false;
            }
          }
        }
        return true;
      }

      // Compact to live cosets numbered in order; coset 0 stays 0.
      std::vector<std::vector<uint32_t>> compact() {
        std::vector<int32_t> newid(_table.size(), -1);
        uint32_t             k = 0;
        for (size_t c = 0; c < _table.size(); ++c) {
          if (alive(c)) {
            newid[c] = static_cast<int32_t>(k++);
          }
        }
        std::vector<std::vector<uint32_t>> out;
        for (size_t c = 0; c < _table.size(); ++c) {
          if (alive(c)) {
            std::vector<uint32_t> row(_cols);
            for (size_t x = 0; x < _cols; ++x) {
              if (_table[c][x] < 0) {
                fail(ErrorCode::internal, "incomplete coset table");
              }
              row[x] = static_cast<uint32_t>(newid[find(_table[c][x])]);
            }
            out.push_back(std::move(row));
          }
        }
        return out;
      }

     private:
      bool alive(size_t c) const {
        return _parent[c] == static_cast<int32_t>(c);
      }

      size_t find(int32_t c) {
        while (_parent[c] != c) {
          _parent[c] = _parent[_parent[c]];
          c          = _parent[c];
        }
        return static_cast<size_t>(c);
      }

      int32_t new_coset() {
        _table.emplace_back(_cols, -1);
        _parent.push_back(static_cast<int32_t>(_parent.size()));
        return static_cast<int32_t>(_table.size() - 1);
      }

      bool define(size_t c, size_t x) {
        if (_table.size() >= _limit) {
          return false;
        }
        int32_t d              = new_coset();
        _table[c][x]           = d;
        _table[d][inv_col(x)]  = static_cast<int32_t>(c);
        return true;
      }

      bool scan_and_fill(size_t c, GroupWord const& w) {
        size_t f = c, b = c;
        size_t i = 0, j = w.size();
        while (true) {
          while (i < j && _table[f][col(w[i])] >= 0) {
            f = static_cast<size_t>(_table[f][col(w[i])]);
            ++i;
          }
          if (i == j) {
            if (f != b) {
              coincidence(f, b);
            }
            return true;
          }
          while (j > i && _table[b][inv_col(col(w[j - 1]))] >= 0) {
            b = static_cast<size_t>(_table[b][inv_col(col(w[j - 1]))]);
            --j;
          }
          if (j == i) {
            coincidence(f, b);
            return true;
          }
          if (j == i + 1) {
            _table[f][col(w[i])]          = static_cast<int32_t>(b);
            _table[b][inv_col(col(w[i]))] = static_cast<int32_t>(f);
            return true;
          }
          if (!define(f, col(w[i]))) {
            return false;
          }
        }
      }

      void merge(size_t a, size_t b, std::deque<size_t>& q) {
        size_t x = find(static_cast<int32_t>(a));
        size_t y = find(static_cast<int32_t>(b));
        if (x == y) {
          return;
        }
        if (y < x) {
          std::swap(x, y);
        }
        _parent[y] = static_cast<int32_t>(x);
        q.push_back(y);
      }

      void coincidence(size_t a, size_t b) {
        std::deque<size_t> q;
        merge(a, b, q);
        while (!q.empty()) {
          size_t g = q.front();
          q.pop_front();
          for (size_t x = 0; x < _cols; ++x) {
            if (_table[g][x] < 0) {
              continue;
            }
            size_t d = static_cast<size_t>(_table[g][x]);
            if (_table[d][inv_col(x)] == static_cast<int32_t>(g)) {
              _table[d][inv_col(x)] = -1;
            }
            size_t mu = find(static_cast<int32_t>(g));
            size_t nu = find(static_cast<int32_t>(d));
            if (_table[mu][x] >= 0) {
              merge(nu, static_cast<size_t>(_table[mu][x]), q);
            } else if (_table[nu][inv_col(x)] >= 0) {
              merge(mu, static_cast<size_t>(_table[nu][inv_col(x)]), q);
            } else {
              _table[mu][x]          = static_cast<int32_t>(nu);
              _table[nu][inv_col(x)] = static_cast<int32_t>(mu);
            }
          }
        }
      }

      size_t                            _cols;
      size_t                            _limit;
      std::vector<std::vector<int32_t>> _table;
      std::vector<int32_t>              _parent;
    };
  }  // namespace detail

  //! The Cayley table of the group when its order is at most \p cap, and
  //! std::nullopt (overflow) otherwise. Overflow is also reported for groups
  //! recognised as infinite (free factors survive simplification or the
  //! abelianisation has positive free rank) and when the working coset
  //! limit is exceeded.
  inline std::optional<CayleyTable> enumerate_finite(GroupPresentation const& p,
                                                     size_t cap) {
    if (cap < 1) {
      fail(ErrorCode::precondition, "cap must be at least 1");
    }
    p.validate();
    SimplifiedPresentation s = tietze_simplify(p);
    size_t const           k = s.generators.size();
    if (k > 0 && s.relators.empty()) {
      return std::nullopt;
    }
    if (k > 0 && abelian_invariants(s.as_presentation()).free_rank > 0) {
      return std::nullopt;
    }

    std::vector<std::vector<uint32_t>> cosets;
    if (k == 0) {
      cosets.assign(1, {});
    } else {
      detail::CosetTable t(k, std::max<size_t>(20000, 200 * cap));
      if (!t.enumerate(s.relators)) {
        return std::nullopt;
      }
      cosets = t.compact();
    }
    size_t const n = cosets.size();
    if (n > cap) {
      return std::nullopt;
    }

    // coset words from a breadth-first spanning tree over the new generators
    std::vector<GroupWord> rep(n);
    std::vector<bool>      seen(n, false);
    std::deque<uint32_t>   queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      uint32_t c = queue.front();
      queue.pop_front();
      for (size_t x = 0; x < 2 * k; ++x) {
        uint32_t d = cosets[c][x];
        if (!seen[d]) {
          seen[d] = true;
          rep[d]  = rep[c];
          rep[d].push_back(gen_letter(static_cast<uint32_t>(x / 2), x % 2 == 1));
          queue.push_back(d);
        }
      }
    }
    auto act = [&](uint32_t c, GroupWord const& w) {
      for (int32_t l : w) {
        c = cosets[c][detail::CosetTable::col(l)];
      }
      return c;
    };
    for (uint32_t c = 0; c < n; ++c) {
      for (auto const& r : s.relators) {
        if (act(c, r) != c) {
          fail(ErrorCode::internal, "coset table violates a relator");
        }
      }
    }

    CayleyTable tab;
    tab.order = n;
    tab.mul.assign(n, std::vector<uint32_t>(n, 0));
    for (uint32_t a = 0; a < n; ++a) {
      for (uint32_t b = 0; b < n; ++b) {
        tab.mul[a][b] = act(a, rep[b]);
      }
    }
    tab.inv.assign(n, 0);
    for (uint32_t a = 0; a < n; ++a) {
      for (uint32_t b = 0; b < n; ++b) {
        if (tab.mul[a][b] == 0) {
          tab.inv[a] = b;
          break;
        }
      }
    }
    for (auto const& im : s.images) {
      tab.gen_images.push_back(act(0, im));
    }

    // shortest words over the original generators
    tab.element_words.assign(n, {});
    std::vector<bool> got(n, false);
    got[0] = true;
    queue  = {0};
    while (!queue.empty()) {
      uint32_t c = queue.front();
      queue.pop_front();
      for (uint32_t g = 0; g < p.rank(); ++g) {
        for (bool neg : {false, true}) {
          uint32_t img = tab.gen_images[g];
          uint32_t d   = tab.mul[c][neg ? tab.inv[img] : img];
          if (!got[d]) {
            got[d]                = true;
            tab.element_words[d]  = tab.element_words[c];
            tab.element_words[d].push_back(gen_letter(g, neg));
            queue.push_back(d);
          }
        }
      }
    }
    return tab;
  }

}  // namespace igwp

#endif  // IGWP_GROUP_TODD_COXETER_HPP_
