//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Rees coordinates for a regular D-class of IG(E), and the word problem for
// regular elements.

#ifndef IGWP_REES_HPP_
#define IGWP_REES_HPP_

#include <cstdint>     // for uint32_t, int32_t
#include <functional>  // for function
#include <optional>    // for optional
#include <string>      // for string
#include <utility>     // for pair
#include <vector>      // for vector

#include "error.hpp"
#include "group/oracle.hpp"
#include "group/presentation.hpp"
#include "group/word.hpp"
#include "regularity.hpp"
#include "schreier.hpp"

namespace igwp {

  //! An element (i, g, j) of the Rees matrix semigroup over the maximal
  //! subgroup, with g a word over the generators f_ij.
  struct ReesTriple {
    uint32_t  i = 0;
    GroupWord g;
    uint32_t  j = 0;

    bool operator==(ReesTriple const&) const = default;
  };

  //! Schreier data and F-presentation of D_e with index labels.
  class ReesContext {
   public:
    ReesContext(IgContext const&         ctx,
                element_index            e,
                std::vector<std::string> il = {},
                std::vector<std::string> jl = {})
        : _ctx(&ctx), _s(schreier_system(ctx, e)) {
      _il = il.empty() ? default_labels(_s.num_i()) : std::move(il);
      _jl = jl.empty() ? default_labels(_s.num_j()) : std::move(jl);
      _fp = presentation_F_detailed(ctx, _s, _il, _jl);
    }

    IgContext const& context() const noexcept {
      return *_ctx;
    }
    SchreierSystem const& schreier() const noexcept {
      return _s;
    }
    FPresentation const& f_detailed() const noexcept {
      return _fp;
    }
    GroupPresentation const& F() const noexcept {
      return _fp.presentation;
    }
    std::vector<std::string> const& i_labels() const noexcept {
      return _il;
    }
    std::vector<std::string> const& j_labels() const noexcept {
      return _jl;
    }
    element_index base() const noexcept {
      return _s.base;
    }

    uint32_t i_of(std::string const& label) const {
      return find(_il, label, "row");
    }
    uint32_t j_of(std::string const& label) const {
      return find(_jl, label, "column");
    }

    //! The letter f_ij (or its inverse) of the F-presentation.
    int32_t f(uint32_t i, uint32_t j, bool inv = false) const {
      if (i == 0 || j == 0 || i > _s.num_i() || j > _s.num_j()
          || !_s.in_K(i, j)) {
        fail(ErrorCode::precondition,
             "no generator f_" + std::to_string(i) + "_" + std::to_string(j));
      }
      return gen_letter(static_cast<uint32_t>(_fp.fgen[i - 1][j - 1]), inv);
    }

    //! The sandwich entry P(j, i) = f_ij^-1, or std::nullopt for zero.
    std::optional<GroupWord> P(uint32_t j, uint32_t i) const {
      if (!_s.in_K(i, j)) {
        return std::nullopt;
      }
      return GroupWord{f(i, j, true)};
    }

   private:
    static uint32_t find(std::vector<std::string> const& v,
                         std::string const&              s,
                         char const*                     what) {
      for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == s) {
          return static_cast<uint32_t>(k + 1);
        }
      }
      fail(ErrorCode::malformed_input,
           std::string("unknown ") + what + " label '" + s + "'");
    }

    IgContext const*         _ctx;
    SchreierSystem           _s;
    std::vector<std::string> _il;
    std::vector<std::string> _jl;
    FPresentation            _fp;
  };

  //! Rees coordinates of a word over the idempotents of D_e.
  inline ReesTriple pi(ReesContext const& rc, Word const& w) {
    SchreierSystem const& s = rc.schreier();
    if (w.empty()) {
      fail(ErrorCode::malformed_input, "pi: empty word");
    }
    rc.context().check_word(w);
    ReesTriple out;
    uint32_t   prev_j = 0;
    for (size_t t = 0; t < w.size(); ++t) {
      uint32_t i = s.a.r_index[w[t]];
      uint32_t j = s.a.l_state[w[t]];
      if (i == 0) {
        fail(ErrorCode::domain,
             "pi: letter " + rc.context().biorder().name(w[t])
                 + " is outside the D-class");
      }
      if (t == 0) {
        out.i = i;
      } else {
        if (!s.in_K(i, prev_j)) {
          fail(ErrorCode::domain, "pi: word falls out of D");
        }
        out.g.push_back(rc.f(i, prev_j, true));
      }
      out.g.push_back(rc.f(i, j));
      prev_j = j;
    }
    out.j = prev_j;
    return out;
  }

  //! A word over E representing (i, g, j); requires the indices
  //! to be in range and g to use F-generators only.
  inline Word rho(ReesContext const& rc, ReesTriple const& t) {
    SchreierSystem const& s = rc.schreier();
    if (t.i == 0 || t.i > s.num_i() || t.j == 0 || t.j > s.num_j()) {
      fail(ErrorCode::malformed_input, "rho: index out of range");
    }
    GroupPresentation const& F = rc.F();
    auto                     append = [](Word& w, Word const& x) {
      w.insert(w.end(), x.begin(), x.end());
    };
    auto gen_ij = [&](uint32_t g) -> std::pair<uint32_t, uint32_t> {
      for (auto const& [i, j] : s.K) {
        if (rc.f_detailed().fgen[i - 1][j - 1] == static_cast<int32_t>(g)) {
          return {i, j};
        }
      }
      fail(ErrorCode::malformed_input, "rho: unknown generator");
    };
    uint32_t const ji = s.j_of_i[t.i - 1];
    Word           w{s.e_idem(t.i, ji)};
    append(w, s.r_prime_of(ji));
    for (int32_t x : t.g) {
      if (x == 0 || letter_generator(x) >= F.rank()) {
        fail(ErrorCode::malformed_input, "rho: letter outside F");
      }
      auto [i, j]       = gen_ij(letter_generator(x));
      uint32_t const jj = s.j_of_i[i - 1];
      w.push_back(s.base);
      if (x > 0) {
        append(w, s.r_of(jj));
        w.push_back(s.e_idem(i, j));
        append(w, s.r_prime_of(j));
      } else {
        append(w, s.r_of(j));
        w.push_back(s.e_idem(i, jj));
        append(w, s.r_prime_of(jj));
      }
    }
    w.push_back(s.e_idem(1, 1));
    append(w, s.r_of(t.j));
    return w;
  }

  //! The Rees product (i, u, j)(k, v, l) = (i, u P(j, k) v, l), or
  //! std::nullopt when P(j, k) is zero.
  inline std::optional<ReesTriple> rees_multiply(ReesContext const& rc,
                                                 ReesTriple const&  x,
                                                 ReesTriple const&  y) {
    auto p = rc.P(x.j, y.i);
    if (!p) {
      return std::nullopt;
    }
    return ReesTriple{x.i, x.g * *p * y.g, y.j};
  }

  //! The generator [j,f] as a word over the f_ij.
  inline GroupWord b_to_f(ReesContext const& rc, uint32_t j, element_index f) {
    SchreierSystem const& s  = rc.schreier();
    uint32_t const        jf = s.a(j, f);
    if (jf == 0) {
      fail(ErrorCode::precondition, "b_to_f: jf = 0");
    }
    auto wit = hstep(rc.context().biorder(), s.a.rep(j), s.a.rep(jf), f);
    if (!wit) {
      fail(ErrorCode::internal, "b_to_f: no hstep witness");
    }
    Word w{s.base};
    w.insert(w.end(), s.r_of(j).begin(), s.r_of(j).end());
    w.push_back(wit->h);
    w.insert(w.end(), s.r_prime_of(jf).begin(), s.r_prime_of(jf).end());
    return pi(rc, w).g;
  }

  //! A word over the [j,f] as a word over the f_ij.
  inline GroupWord b_word_to_f(ReesContext const& rc, GroupWord const& w) {
    SchreierSystem const& s = rc.schreier();
    GroupWord             out;
    for (int32_t x : w) {
      auto [j, f]  = s.bgens.at(letter_generator(x));
      GroupWord im = b_to_f(rc, j, f);
      out          = out * (x > 0 ? im : inverse(im));
    }
    return free_reduce(out);
  }

  //! The generator f_ij as a word over the [j,f]: phi(1, rho~(f_ij)).
  inline GroupWord f_to_b(ReesContext const& rc, uint32_t i, uint32_t j) {
    SchreierSystem const& s  = rc.schreier();
    uint32_t const        jj = s.j_of_i.at(i - 1);
    Word                  w{s.base};
    w.insert(w.end(), s.r_of(jj).begin(), s.r_of(jj).end());
    w.push_back(s.e_idem(i, j));
    w.insert(w.end(), s.r_prime_of(j).begin(), s.r_prime_of(j).end());
    return phi(s, 1, w);
  }

  enum class WpLevel { B, F };

  using OracleMaker = std::function<GroupOracle(GroupPresentation const&)>;

  struct WpResult {
    bool          equal = false;
    element_index e     = 0;
    //! Set when the question reached the group oracle.
    std::optional<std::pair<GroupWord, GroupWord>> group_words;
  };

  //! Equality in IG(E) of two regular words. The words are compared through
  //! their H-class coordinates inside D_e, e the R-witness of u.
  inline WpResult regular_wp_detailed(IgContext const&   ctx,
                                      Word const&        u,
                                      Word const&        v,
                                      OracleMaker const& make,
                                      WpLevel            level = WpLevel::B) {
    auto cu = is_regular(ctx, u);
    auto cv = is_regular(ctx, v);
    if (!cu || !cv) {
      fail(ErrorCode::precondition,
           "regular-only: the word problem is decided for regular words");
    }
    WpResult res;
    res.e = cu->r_witness;
    Biorder const& b = ctx.biorder();
    if (!ig_green(b, cu->r_witness, cv->r_witness, GreenRel::R)
        || !ig_green(b, cu->l_witness, cv->l_witness, GreenRel::L)) {
      return res;
    }
    SchreierSystem const s = schreier_system(ctx, res.e);
    Word                 eu{res.e}, ev{res.e};
    eu.insert(eu.end(), u.begin(), u.end());
    ev.insert(ev.end(), v.begin(), v.end());
    if (run_action(s.a, 1, eu) != run_action(s.a, 1, ev)) {
      fail(ErrorCode::internal, "H-related words end in different states");
    }
    GroupWord gu = phi(s, 1, eu), gv = phi(s, 1, ev);
    if (level == WpLevel::B) {
      GroupOracle o = make(presentation_B(ctx, s));
      res.equal     = o.equal(gu, gv);
    } else {
      ReesContext rc(ctx, res.e);
      gu            = b_word_to_f(rc, gu);
      gv            = b_word_to_f(rc, gv);
      GroupOracle o = make(rc.F());
      res.equal     = o.equal(gu, gv);
    }
    res.group_words.emplace(gu, gv);
    return res;
  }

  inline bool regular_wp(IgContext const&   ctx,
                         Word const&        u,
                         Word const&        v,
                         OracleMaker const& make,
                         WpLevel            level = WpLevel::B) {
    return regular_wp_detailed(ctx, u, v, make, level).equal;
  }

  inline OracleMaker oracle_maker(OracleStrategy s, size_t cap = 1000) {
    return [s, cap](GroupPresentation const& p) { return GroupOracle(p, s, cap); };
  }

}  // namespace igwp

#endif  // IGWP_REES_HPP_
