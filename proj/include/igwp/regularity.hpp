//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Deciding whether a word over E represents a regular element of IG(E).

#ifndef IGWP_REGULARITY_HPP_
#define IGWP_REGULARITY_HPP_

#include <cstddef>       // for size_t
#include <map>           // for map
#include <memory>        // for shared_ptr, make_shared
#include <mutex>         // for unique_lock
#include <optional>      // for optional
#include <shared_mutex>  // for shared_mutex, shared_lock
#include <vector>        // for vector

#include "biorder.hpp"
#include "error.hpp"
#include "ig_green.hpp"

namespace igwp {

  using Word = std::vector<element_index>;

  //! A biorder together with its dual and lazily built action automata.
  //! Automata are published under a shared_mutex so that concurrent readers
  //! never observe a partially built entry.
  class IgContext {
   public:
    explicit IgContext(Biorder b)
        : _b(std::move(b)),
          _d(dual(_b)),
          _cb(ig_classes(_b)),
          _cd(ig_classes(_d)) {}

    IgContext(IgContext const&)            = delete;
    IgContext& operator=(IgContext const&) = delete;

    Biorder const& biorder() const noexcept {
      return _b;
    }
    Biorder const& dual_biorder() const noexcept {
      return _d;
    }
    IgClasses const& classes() const noexcept {
      return _cb;
    }

    //! The automaton of e acting on the right on the L-classes of D_e.
    ActionAutomaton const& right(element_index e) const {
      return get(_right, _b, _cb, e);
    }

    //! The automaton of e over the dual biorder; its states are the
    //! R-classes of D_e and letters act on the left.
    ActionAutomaton const& left(element_index e) const {
      return get(_left, _d, _cd, e);
    }

    void check_word(Word const& w) const {
      for (element_index x : w) {
        if (x >= _b.size()) {
          fail(ErrorCode::malformed_input,
               "letter " + std::to_string(x) + " is not in E");
        }
      }
    }

   private:
    using Memo = std::map<element_index, std::shared_ptr<ActionAutomaton const>>;

    ActionAutomaton const& get(Memo&            memo,
                               Biorder const&   b,
                               IgClasses const& c,
                               element_index    e) const {
      {
        std::shared_lock lock(_mtx);
        auto             it = memo.find(e);
        if (it != memo.end()) {
          return *it->second;
        }
      }
      auto built = std::make_shared<ActionAutomaton const>(
          action_automaton(b, c, e));
      std::unique_lock lock(_mtx);
      auto             it = memo.emplace(e, std::move(built)).first;
      return *it->second;
    }

    Biorder                   _b;
    Biorder                   _d;
    IgClasses                 _cb;
    IgClasses                 _cd;
    mutable std::shared_mutex _mtx;
    mutable Memo              _right;
    mutable Memo              _left;
  };

  //! w = u e v with e = w[k], ue L e R ev in IG(E).
  struct RegularityCertificate {
    size_t        k = 0;
    element_index e = 0;
    //! Idempotent R-related to w: the representative of the R-class reached
    //! by the dual automaton of e over u read backwards.
    element_index r_witness = 0;
    //! Idempotent L-related to w: the representative of the final state of
    //! the automaton of e over v.
    element_index l_witness = 0;
    //! States visited by the automaton of e over v, starting with 1.
    std::vector<uint32_t> right_states;
    //! States visited by the dual automaton of e over reversed u, from 1.
    std::vector<uint32_t> left_states;
  };

  //! The certificate with the least position k, or std::nullopt when w is
  //! not regular.
  inline std::optional<RegularityCertificate> is_regular(IgContext const& ctx,
                                                         Word const&      w) {
    if (w.empty()) {
      fail(ErrorCode::malformed_input,
           "the empty word is not an element of IG(E)");
    }
    ctx.check_word(w);
    for (size_t k = 0; k < w.size(); ++k) {
      element_index const    e = w[k];
      ActionAutomaton const& R = ctx.right(e);
      std::vector<uint32_t>  rs{1};
      uint32_t               s = 1;
      for (size_t t = k + 1; t < w.size() && s != 0; ++t) {
        s = R(s, w[t]);
        rs.push_back(s);
      }
      if (s == 0) {
        continue;
      }
      ActionAutomaton const& L = ctx.left(e);
      std::vector<uint32_t>  ls{1};
      uint32_t               q = 1;
      for (size_t t = k; t-- > 0 && q != 0;) {
        q = L(q, w[t]);
        ls.push_back(q);
      }
      if (q == 0) {
        continue;
      }
      RegularityCertificate c;
      c.k            = k;
      c.e            = e;
      c.l_witness    = R.rep(s);
      c.r_witness    = L.rep(q);
      c.right_states = std::move(rs);
      c.left_states  = std::move(ls);
      return c;
    }
    return std::nullopt;
  }

}  // namespace igwp

#endif  // IGWP_REGULARITY_HPP_
