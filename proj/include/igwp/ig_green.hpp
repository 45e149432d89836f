//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Green's relations of IG(E) on E, the eight-equation step test, and the
// action of letters on the L-classes of a D-class.

#ifndef IGWP_IG_GREEN_HPP_
#define IGWP_IG_GREEN_HPP_

#include <algorithm>  // for sort
#include <cstddef>    // for size_t
#include <cstdint>    // for uint32_t, int32_t
#include <deque>      // for deque
#include <optional>   // for optional
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "biorder.hpp"
#include "error.hpp"

namespace igwp {

  enum class GreenRel { R, L, D };

  //! Class ids on E for the R, L and D relations of IG(E), each class
  //! numbered by its least idempotent.
  struct IgClasses {
    std::vector<uint32_t> r;
    std::vector<uint32_t> l;
    std::vector<uint32_t> d;
  };

  namespace detail {
    inline bool ig_r(Biorder const& b, element_index e, element_index f) {
      return b(e, f) == static_cast<int32_t>(f)
             && b(f, e) == static_cast<int32_t>(e);
    }
    inline bool ig_l(Biorder const& b, element_index e, element_index f) {
      return b(e, f) == static_cast<int32_t>(e)
             && b(f, e) == static_cast<int32_t>(f);
    }
    inline void check_index(Biorder const& b, element_index e) {
      if (e >= b.size()) {
        fail(ErrorCode::malformed_input,
             "idempotent index " + std::to_string(e) + " out of range");
      }
    }
  }  // namespace detail

  inline IgClasses ig_classes(Biorder const& b) {
    size_t const m = b.size();
    IgClasses    c;
    c.r.assign(m, 0);
    c.l.assign(m, 0);
    c.d.assign(m, UINT32_MAX);
    for (element_index e = 0; e < m; ++e) {
      c.r[e] = c.l[e] = e;
      for (element_index f = 0; f < e; ++f) {
        if (detail::ig_r(b, e, f)) {
          c.r[e] = c.r[f];
          break;
        }
      }
      for (element_index f = 0; f < e; ++f) {
        if (detail::ig_l(b, e, f)) {
          c.l[e] = c.l[f];
          break;
        }
      }
    }
    for (element_index s = 0; s < m; ++s) {
      if (c.d[s] != UINT32_MAX) {
        continue;
      }
      std::deque<element_index> queue{s};
      c.d[s] = s;
      while (!queue.empty()) {
        element_index x = queue.front();
        queue.pop_front();
        for (element_index y = 0; y < m; ++y) {
          if (c.d[y] == UINT32_MAX
              && (detail::ig_r(b, x, y) || detail::ig_l(b, x, y))) {
            c.d[y] = s;
            queue.push_back(y);
          }
        }
      }
    }
    return c;
  }

  //! R: e*f = f and f*e = e; L dually; D by breadth-first search over
  //! alternating R and L edges.
  inline bool
  ig_green(Biorder const& b, element_index e, element_index f, GreenRel rel) {
    detail::check_index(b, e);
    detail::check_index(b, f);
    switch (rel) {
      case GreenRel::R:
        return detail::ig_r(b, e, f);
      case GreenRel::L:
        return detail::ig_l(b, e, f);
      case GreenRel::D:
        break;
    }
    std::vector<bool>         seen(b.size(), false);
    std::deque<element_index> queue{e};
    seen[e] = true;
    while (!queue.empty()) {
      element_index x = queue.front();
      queue.pop_front();
      if (x == f) {
        return true;
      }
      for (element_index y = 0; y < b.size(); ++y) {
        if (!seen[y] && (detail::ig_r(b, x, y) || detail::ig_l(b, x, y))) {
          seen[y] = true;
          queue.push_back(y);
        }
      }
    }
    return false;
  }

  struct Witness {
    element_index g;
    element_index h;

    bool operator==(Witness const&) const = default;
  };

  //! The lexicographically least (g, h) with pg=p, gp=g, gh=h, hg=g, hq=h,
  //! qh=q, fg=g, gf=h, all products defined. Since h = gf, scanning g in
  //! increasing order is an exhaustive search over E x E.
  inline std::optional<Witness> hstep(Biorder const& b,
                                      element_index  p,
                                      element_index  q,
                                      element_index  f) {
    detail::check_index(b, p);
    detail::check_index(b, q);
    detail::check_index(b, f);
    auto is = [](int32_t x, element_index y) {
      return x == static_cast<int32_t>(y);
    };
    for (element_index g = 0; g < b.size(); ++g) {
      if (!is(b(p, g), p) || !is(b(g, p), g) || !is(b(f, g), g)) {
        continue;
      }
      int32_t hh = b(g, f);
      if (hh == Biorder::undefined) {
        continue;
      }
      auto h = static_cast<element_index>(hh);
      if (is(b(g, h), h) && is(b(h, g), g) && is(b(h, q), h)
          && is(b(q, h), q)) {
        return Witness{g, h};
      }
    }
    return std::nullopt;
  }

  //! The action of the letters of E on the L-classes J of D_e, together with
  //! the R-classes I and the idempotent in each cell of the D-class.
  //!
  //! States are 1, ..., |J| with 0 the sink; state 1 is the L-class of e and
  //! the rest are ordered by their representative, the least idempotent in
  //! the class. R-classes are numbered the same way.
  struct ActionAutomaton {
    element_index              base = 0;
    std::vector<element_index> J;  // J[s - 1] represents state s
    std::vector<element_index> I;  // I[i - 1] represents R-class i
    //! trans[s][f] for s in 0..|J|; row 0 is all zero.
    std::vector<std::vector<uint32_t>> trans;
    //! cell[i - 1][j - 1]: idempotent in R_i and L_j, or -1.
    std::vector<std::vector<int32_t>> cell;
    //! Per idempotent of E: its L-state / R-index in D_e, or 0 outside D_e.
    std::vector<uint32_t> l_state;
    std::vector<uint32_t> r_index;

    size_t num_states() const noexcept {
      return J.size();
    }

    size_t alphabet_size() const noexcept {
      return l_state.size();
    }

    element_index rep(uint32_t j) const {
      return J.at(j - 1);
    }

    uint32_t operator()(uint32_t j, element_index f) const {
      return trans[j][f];
    }
  };

  namespace detail {
    inline std::vector<element_index>
    class_reps(std::vector<element_index> const& members,
               std::vector<uint32_t> const&      cls,
               element_index                     base,
               std::vector<uint32_t>&            index_of_class) {
      std::vector<element_index> reps;
      for (element_index x : members) {
        if (cls[x] == x && cls[x] != cls[base]) {
          reps.push_back(x);
        }
      }
      std::sort(reps.begin(), reps.end());
      reps.insert(reps.begin(), cls[base]);
      for (size_t k = 0; k < reps.size(); ++k) {
        index_of_class[reps[k]] = static_cast<uint32_t>(k + 1);
      }
      return reps;
    }
  }  // namespace detail

  inline ActionAutomaton action_automaton(Biorder const&   b,
                                          IgClasses const& c,
                                          element_index    e) {
    detail::check_index(b, e);
    size_t const    m = b.size();
    ActionAutomaton a;
    a.base = e;

    std::vector<element_index> members;
    for (element_index x = 0; x < m; ++x) {
      if (c.d[x] == c.d[e]) {
        members.push_back(x);
      }
    }
    std::vector<uint32_t> l_of_rep(m, 0), r_of_rep(m, 0);
    a.J = detail::class_reps(members, c.l, e, l_of_rep);
    a.I = detail::class_reps(members, c.r, e, r_of_rep);
    a.l_state.assign(m, 0);
    a.r_index.assign(m, 0);
    a.cell.assign(a.I.size(), std::vector<int32_t>(a.J.size(), -1));
    for (element_index x : members) {
      a.l_state[x] = l_of_rep[c.l[x]];
      a.r_index[x] = r_of_rep[c.r[x]];
      a.cell[a.r_index[x] - 1][a.l_state[x] - 1] = static_cast<int32_t>(x);
    }

    a.trans.assign(a.J.size() + 1, std::vector<uint32_t>(m, 0));
    for (uint32_t j = 1; j <= a.J.size(); ++j) {
      for (element_index f = 0; f < m; ++f) {
        uint32_t target = 0;
        for (uint32_t k = 1; k <= a.J.size(); ++k) {
          if (hstep(b, a.rep(j), a.rep(k), f)) {
            if (target != 0) {
              fail(ErrorCode::internal,
                   "ambiguous action of " + b.name(f) + " on L-class of "
                       + b.name(a.rep(j)) + "; the biorder is not valid");
            }
            target = k;
          }
        }
        a.trans[j][f] = target;
      }
    }
    return a;
  }

  inline ActionAutomaton action_automaton(Biorder const& b, element_index e) {
    return action_automaton(b, ig_classes(b), e);
  }

  //! Left-to-right fold of the transitions; 0 is absorbing.
  template <typename Range>
  uint32_t run_action(ActionAutomaton const& a, uint32_t j, Range const& w) {
    if (j > a.num_states()) {
      fail(ErrorCode::precondition,
           "state " + std::to_string(j) + " is not a state of the automaton");
    }
    for (auto f : w) {
      if (static_cast<size_t>(f) >= a.alphabet_size()) {
        fail(ErrorCode::malformed_input,
             "letter " + std::to_string(f) + " is not in E");
      }
      j = a.trans[j][f];
    }
    return j;
  }

}  // namespace igwp

#endif  // IGWP_IG_GREEN_HPP_
