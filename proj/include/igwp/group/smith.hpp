//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Abelian invariants through the Smith normal form of the relation matrix.

#ifndef IGWP_GROUP_SMITH_HPP_
#define IGWP_GROUP_SMITH_HPP_

#include <cstdint>  // for int64_t
#include <cstdlib>  // for llabs
#include <utility>  // for swap
#include <vector>   // for vector

#include "../error.hpp"
#include "presentation.hpp"

namespace igwp {

  using IntMatrix = std::vector<std::vector<int64_t>>;

  namespace detail {
    inline int64_t checked(__int128 x) {
      if (x > INT64_MAX || x < INT64_MIN) {
        fail(ErrorCode::overflow, "integer overflow in Smith normal form");
      }
      return static_cast<int64_t>(x);
    }
  }  // namespace detail

  //! Nonzero diagonal entries d_1 | d_2 | ... of the Smith normal form.
  inline std::vector<int64_t> smith_diagonal(IntMatrix m) {
    size_t const rows = m.size();
    size_t const cols = rows == 0 ? 0 : m[0].size();
    std::vector<int64_t> diag;
    size_t               t = 0;
    while (t < rows && t < cols) {
      // pivot: smallest nonzero absolute value in the remaining block
      size_t  pr = rows, pc = cols;
      int64_t best = 0;
      for (size_t r = t; r < rows; ++r) {
        for (size_t c = t; c < cols; ++c) {
          int64_t v = std::llabs(m[r][c]);
          if (v != 0 && (best == 0 || v < best)) {
            best = v;
            pr   = r;
            pc   = c;
          }
        }
      }
      if (best == 0) {
        break;
      }
      std::swap(m[t], m[pr]);
      for (auto& row : m) {
        std::swap(row[t], row[pc]);
      }
      bool done = true;
      for (size_t r = t + 1; r < rows; ++r) {
        int64_t q = m[r][t] / m[t][t];
        if (q != 0) {
          for (size_t c = t; c < cols; ++c) {
            m[r][c] = detail::checked(static_cast<__int128>(m[r][c])
                                      - static_cast<__int128>(q) * m[t][c]);
          }
        }
        done = done && m[r][t] == 0;
      }
      for (size_t c = t + 1; c < cols; ++c) {
        int64_t q = m[t][c] / m[t][t];
        if (q != 0) {
          for (size_t r = t; r < rows; ++r) {
            m[r][c] = detail::checked(static_cast<__int128>(m[r][c])
                                      - static_cast<__int128>(q) * m[r][t]);
          }
        }
        done = done && m[t][c] == 0;
      }
      if (!done) {
        continue;  // a smaller remainder exists; pivot again
      }
      // divisibility of the remaining block by the pivot
      bool divides = true;
      for (size_t r = t + 1; r < rows && divides; ++r) {
        for (size_t c = t + 1; c < cols; ++c) {
          if (m[r][c] % m[t][t] != 0) {
            for (size_t cc = t; cc < cols; ++cc) {
              m[t][cc] = detail::checked(static_cast<__int128>(m[t][cc])
                                         + m[r][cc]);
            }
            divides = false;
            break;
          }
        }
      }
      if (!divides) {
        continue;
      }
      diag.push_back(std::llabs(m[t][t]));
      ++t;
    }
    return diag;
  }

  struct AbelianInvariants {
    size_t               free_rank = 0;
    std::vector<int64_t> torsion;  // each > 1, in divisibility order

    bool operator==(AbelianInvariants const&) const = default;
  };

  inline IntMatrix relation_matrix(GroupPresentation const& p) {
    IntMatrix m;
    for (auto const& r : p.relators()) {
      std::vector<int64_t> row(p.rank(), 0);
      for (int32_t x : r) {
        row[letter_generator(x)] += x > 0 ? 1 : -1;
      }
      m.push_back(std::move(row));
    }
    return m;
  }

  inline AbelianInvariants abelian_invariants(GroupPresentation const& p) {
    p.validate();
    AbelianInvariants a;
    auto              diag = smith_diagonal(relation_matrix(p));
    a.free_rank            = p.rank() - diag.size();
    for (int64_t d : diag) {
      if (d > 1) {
        a.torsion.push_back(d);
      }
    }
    return a;
  }

}  // namespace igwp

#endif  // IGWP_GROUP_SMITH_HPP_
