// Brute-force oracles computed straight from multiplication tables,
// independent of the library code paths they check.

#ifndef IGWP_TESTS_ORACLES_HPP_
#define IGWP_TESTS_ORACLES_HPP_

#include <set>
#include <vector>

#include "igwp/mul_table.hpp"

namespace oracle {

  using igwp::element_index;
  using igwp::MulTable;

  struct NaiveGreen {
    std::vector<std::set<element_index>> right, left, two;

    bool R(element_index a, element_index b) const {
      return right[a] == right[b];
    }
    bool L(element_index a, element_index b) const {
      return left[a] == left[b];
    }
    bool J(element_index a, element_index b) const {
      return two[a] == two[b];
    }
    bool D(element_index a, element_index b) const {
      for (element_index c = 0; c < right.size(); ++c) {
        if (R(a, c) && L(c, b)) {
          return true;
        }
      }
      return false;
    }
  };

  //! Principal ideals aS^1, S^1a and S^1aS^1 as explicit sets.
  inline NaiveGreen naive_green(MulTable const& t) {
    size_t const n = t.size();
    NaiveGreen   g;
    g.right.resize(n);
    g.left.resize(n);
    g.two.resize(n);
    for (element_index a = 0; a < n; ++a) {
      g.right[a].insert(a);
      g.left[a].insert(a);
      for (element_index s = 0; s < n; ++s) {
        g.right[a].insert(t(a, s));
        g.left[a].insert(t(s, a));
      }
      for (element_index x : g.left[a]) {
        g.two[a].insert(x);
        for (element_index s = 0; s < n; ++s) {
          g.two[a].insert(t(x, s));
        }
      }
    }
    return g;
  }

  //! The action of the elements of a band on the H-classes of R_e, read off
  //! the table: out[j][f] is the index in `cols` of the L-class of x f for
  //! x in R_e and L_{cols[j]}, or -1 when x f leaves R_e.
  struct DirectAction {
    std::vector<element_index>     cols;  // one element of R_e per L-class
    std::vector<std::vector<int>>  trans;
  };

  inline DirectAction direct_action(MulTable const&   t,
                                    NaiveGreen const& g,
                                    element_index     e) {
    DirectAction a;
    for (element_index x = 0; x < t.size(); ++x) {
      if (!g.R(x, e)) {
        continue;
      }
      bool fresh = true;
      for (element_index c : a.cols) {
        fresh &= !g.L(c, x);
      }
      if (fresh) {
        a.cols.push_back(x);
      }
    }
    for (element_index x : a.cols) {
      std::vector<int> row;
      for (element_index f = 0; f < t.size(); ++f) {
        element_index y = t(x, f);
        int           target = -1;
        if (g.R(y, e)) {
          for (size_t k = 0; k < a.cols.size(); ++k) {
            if (g.L(a.cols[k], y)) {
              target = static_cast<int>(k);
            }
          }
        }
        row.push_back(target);
      }
      a.trans.push_back(row);
    }
    return a;
  }

}  // namespace oracle

#endif  // IGWP_TESTS_ORACLES_HPP_
