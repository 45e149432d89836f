//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// The W(S) and T(S, V, I) constructions, the band B_{G,H} attached to a
// group presentation and a subgroup, and witness chains relating products
// of its two lowest nonzero D-classes.

#ifndef IGWP_BGH_HPP_
#define IGWP_BGH_HPP_

#include <algorithm>  // for find, sort
#include <cstdint>    // for uint32_t, int32_t
#include <deque>      // for deque
#include <map>        // for map
#include <optional>   // for optional
#include <set>        // for set
#include <string>     // for string
#include <utility>    // for pair
#include <vector>     // for vector

#include "biorder.hpp"
#include "error.hpp"
#include "green.hpp"
#include "group/normalize.hpp"
#include "group/oracle.hpp"
#include "group/word.hpp"
#include "mul_table.hpp"
#include "rees.hpp"
#include "regularity.hpp"

namespace igwp {

  //! W(S) on S, S', S'' and 0: st' = s't = s't' = (st)', likewise for '',
  //! s't'' = s''t' = 0. Element s^(k) has index k|S| + s; 0 has index 3|S|.
  inline MulTable build_W(MulTable const& t) {
    size_t const               n = t.size();
    size_t const               N = 3 * n + 1;
    std::vector<element_index> entries(N * N, static_cast<element_index>(3 * n));
    for (size_t x = 0; x < 3 * n; ++x) {
      for (size_t y = 0; y < 3 * n; ++y) {
        size_t const kx = x / n, ky = y / n;
        if (kx != 0 && ky != 0 && kx != ky) {
          continue;
        }
        size_t const k = std::max(kx, ky);
        entries[x * N + y]
            = static_cast<element_index>(k * n + t(x % n, y % n));
      }
    }
    std::vector<std::string> names;
    if (t.has_names()) {
      for (char const* suffix : {"", "'", "''"}) {
        for (size_t x = 0; x < n; ++x) {
          names.push_back(t.name(x) + suffix);
        }
      }
      names.push_back("0");
    }
    MulTable w(N, std::move(entries), std::move(names));
    require_semigroup(w);
    return w;
  }

  //! A subtable together with the indices of its elements in the parent.
  struct SubTable {
    MulTable                   table;
    std::vector<element_index> parent;
  };

  inline SubTable build_T_indexed(MulTable const&                   t,
                                  std::vector<element_index> const& V,
                                  std::vector<element_index> const& I) {
    size_t const n = t.size();
    for (auto const* s : {&V, &I}) {
      for (element_index x : *s) {
        if (x >= n) {
          fail(ErrorCode::malformed_input, "subset element out of range");
        }
      }
    }
    std::vector<bool> inV(n, false), inI(n, false);
    for (element_index x : V) {
      inV[x] = true;
    }
    for (element_index x : I) {
      inI[x] = true;
    }
    for (element_index x : V) {
      for (element_index y : V) {
        if (!inV[t(x, y)]) {
          fail(ErrorCode::precondition,
               "V is not a subsemigroup: " + t.name(x) + " * " + t.name(y)
                   + " = " + t.name(t(x, y)));
        }
      }
    }
    for (element_index s = 0; s < n; ++s) {
      for (element_index x : I) {
        if (!inI[t(s, x)] || !inI[t(x, s)]) {
          element_index bad = inI[t(s, x)] ? t(x, s) : t(s, x);
          fail(ErrorCode::precondition,
               "I is not an ideal: product of " + t.name(s) + " and "
                   + t.name(x) + " gives " + t.name(bad));
        }
      }
    }
    MulTable const             w = build_W(t);
    std::vector<element_index> keep;
    for (element_index x = 0; x < n; ++x) {
      if (inV[x]) {
        keep.push_back(x);
      }
    }
    for (element_index k : {1u, 2u}) {
      for (element_index x = 0; x < n; ++x) {
        if (inI[x]) {
          keep.push_back(static_cast<element_index>(k * n + x));
        }
      }
    }
    keep.push_back(static_cast<element_index>(3 * n));
    std::vector<int32_t> pos(w.size(), -1);
    for (size_t k = 0; k < keep.size(); ++k) {
      pos[keep[k]] = static_cast<int32_t>(k);
    }
    size_t const               m = keep.size();
    std::vector<element_index> entries(m * m);
    for (size_t a = 0; a < m; ++a) {
      for (size_t b = 0; b < m; ++b) {
        int32_t p = pos[w(keep[a], keep[b])];
        if (p < 0) {
          fail(ErrorCode::internal, "T(S, V, I) is not closed");
        }
        entries[a * m + b] = static_cast<element_index>(p);
      }
    }
    std::vector<std::string> names;
    if (w.has_names()) {
      for (element_index x : keep) {
        names.push_back(w.name(x));
      }
    }
    return {MulTable(m, std::move(entries), std::move(names)), std::move(keep)};
  }

  //! T(S, V, I) = V u I' u I'' u {0} inside W(S), for a subsemigroup V and
  //! an ideal I of S.
  inline MulTable build_T(MulTable const&                   t,
                          std::vector<element_index> const& V,
                          std::vector<element_index> const& I) {
    return build_T_indexed(t, V, I).table;
  }

  enum class BghPart { L_G, K_H, K1, K2, zero };

  inline char const* bgh_part_name(BghPart p) noexcept {
    switch (p) {
      case BghPart::L_G:
        return "L_G";
      case BghPart::K_H:
        return "K_H";
      case BghPart::K1:
        return "K_G'";
      case BghPart::K2:
        return "K_G''";
      case BghPart::zero:
        return "0";
    }
    return "?";
  }

  //! x and y are positions in the index sets I and J of the band. For L_G,
  //! x is the position of the element in L_G instead.
  struct BghTag {
    BghPart  part = BghPart::zero;
    uint32_t x    = 0;
    uint32_t y    = 0;

    bool operator==(BghTag const&) const = default;
  };

  //! B_{G,H} with its index sets I = A_1 u ~A_1 and J = A_1 u {inf}.
  //!
  //! Positions in I are 1, A..., ~1, ~A...; positions in J are 1, A...,
  //! inf, with A in the order of the normalized presentation.
  struct BghBand {
    MulTable                 table;
    NormalizedPresentation   np;
    std::vector<std::string> I;
    std::vector<std::string> J;
    std::vector<BghTag>      tags;
    //! sigma[x] over I and tau[x] over J for x in L_G u K_H; empty otherwise.
    std::vector<std::vector<uint32_t>> sigma;
    std::vector<std::vector<uint32_t>> tau;
    //! L_G elements: e_x for x in A_1, e_~x for x in A, e_r per triple.
    std::vector<element_index> l_g;

    size_t a1() const noexcept {
      return np.A.size() + 1;
    }
    uint32_t inf() const noexcept {
      return static_cast<uint32_t>(np.A.size() + 1);
    }
    //! Position in I or J of the generator a of the normalized presentation.
    uint32_t pos(uint32_t a) const noexcept {
      return a + 1;
    }
    uint32_t bar(uint32_t p) const noexcept {
      return static_cast<uint32_t>(p + a1());
    }

    element_index find(BghTag const& t) const {
      for (element_index x = 0; x < tags.size(); ++x) {
        if (tags[x] == t) {
          return x;
        }
      }
      fail(ErrorCode::precondition, "no such element of B_{G,H}");
    }
    element_index k1(uint32_t i, uint32_t j) const {
      return find({BghPart::K1, i, j});
    }
    element_index k2(uint32_t i, uint32_t j) const {
      return find({BghPart::K2, i, j});
    }
    element_index kh(uint32_t a, uint32_t b) const {
      return find({BghPart::K_H, a, b});
    }
    element_index zero() const {
      return find({BghPart::zero, 0, 0});
    }
    //! e_x for a position x in A_1.
    element_index e(uint32_t x) const {
      return l_g.at(x);
    }
    //! e_~a for a generator a.
    element_index e_bar(uint32_t a) const {
      return l_g.at(a1() + a);
    }
    element_index e_r(size_t k) const {
      return l_g.at(a1() + np.A.size() + k);
    }
    uint32_t i_index(std::string const& s) const {
      return label_index(I, s);
    }
    uint32_t j_index(std::string const& s) const {
      return label_index(J, s);
    }

   private:
    static uint32_t label_index(std::vector<std::string> const& v,
                                std::string const&              s) {
      auto it = std::find(v.begin(), v.end(), s);
      if (it == v.end()) {
        fail(ErrorCode::malformed_input, "unknown index label '" + s + "'");
      }
      return static_cast<uint32_t>(it - v.begin());
    }
  };

  namespace detail {
    struct MapPair {
      std::vector<uint32_t> sigma;  // on I, written on the left
      std::vector<uint32_t> tau;    // on J, written on the right
      bool operator<(MapPair const& o) const {
        return std::tie(sigma, tau) < std::tie(o.sigma, o.tau);
      }
      bool operator==(MapPair const&) const = default;
    };

    inline MapPair compose(MapPair const& x, MapPair const& y) {
      MapPair out{x.sigma, x.tau};
      for (size_t i = 0; i < x.sigma.size(); ++i) {
        out.sigma[i] = x.sigma[y.sigma[i]];
      }
      for (size_t j = 0; j < x.tau.size(); ++j) {
        out.tau[j] = y.tau[x.tau[j]];
      }
      return out;
    }
  }  // namespace detail

  //! B_{G,H} = T(B_G, K_H u L_G, K_G) for a normalized presentation; the
  //! subgroup H is generated by np.B.
  inline BghBand build_bgh(NormalizedPresentation const& np) {
    np.validate();
    BghBand bb;
    bb.np             = np;
    size_t const na   = np.A.size();
    size_t const n1   = na + 1;
    size_t const ni   = 2 * n1;
    size_t const nj   = n1 + 1;
    auto const   bar  = [&](size_t p) { return static_cast<uint32_t>(p + n1); };
    auto const   inf  = static_cast<uint32_t>(n1);
    bb.I.push_back("1");
    bb.J.push_back("1");
    for (auto const& a : np.A) {
      if (a == "1" || a == "inf" || a.rfind('~', 0) == 0) {
        fail(ErrorCode::precondition,
             "generator name '" + a + "' clashes with an index label");
      }
      bb.I.push_back(a);
      bb.J.push_back(a);
    }
    for (size_t p = 0; p < n1; ++p) {
      bb.I.push_back("~" + bb.I[p]);
    }
    bb.J.push_back("inf");

    // L_G: sigma maps A_1 to lo and ~A_1 to hi; tau fixes A_1, inf -> t.
    std::vector<detail::MapPair> elems;
    std::vector<std::string>     names;
    auto lg = [&](uint32_t lo, uint32_t hi, uint32_t t, std::string name) {
      detail::MapPair m;
      m.sigma.resize(ni);
      for (size_t i = 0; i < ni; ++i) {
        m.sigma[i] = i < n1 ? lo : hi;
      }
      m.tau.resize(nj);
      for (size_t j = 0; j < n1; ++j) {
        m.tau[j] = static_cast<uint32_t>(j);
      }
      m.tau[inf] = t;
      elems.push_back(m);
      names.push_back(std::move(name));
    };
    for (uint32_t x = 0; x < n1; ++x) {
      lg(0, bar(x), x, "E_" + bb.I[x]);
    }
    for (uint32_t a = 1; a < n1; ++a) {
      lg(a, bar(a), 0, "E_~" + bb.I[a]);
    }
    for (size_t k = 0; k < np.triples.size(); ++k) {
      auto const& t = np.triples[k];
      lg(bb.pos(t[1]), bar(bb.pos(t[2])), bb.pos(t[0]),
         "E_r" + std::to_string(k + 1));
    }
    size_t const nl = elems.size();
    for (uint32_t i = 0; i < ni; ++i) {
      for (uint32_t j = 0; j < nj; ++j) {
        detail::MapPair m;
        m.sigma.assign(ni, i);
        m.tau.assign(nj, j);
        elems.push_back(m);
        names.push_back(bb.I[i] + "_" + bb.J[j]);
      }
    }
    {
      std::set<detail::MapPair> distinct(elems.begin(), elems.end());
      if (distinct.size() != elems.size()) {
        fail(ErrorCode::precondition,
             "two relations of the presentation define the same idempotent");
      }
    }
    std::map<detail::MapPair, element_index> index;
    for (size_t x = 0; x < elems.size(); ++x) {
      index[elems[x]] = static_cast<element_index>(x);
    }
    size_t const               n = elems.size();
    std::vector<element_index> entries(n * n);
    for (size_t x = 0; x < n; ++x) {
      for (size_t y = 0; y < n; ++y) {
        auto it = index.find(detail::compose(elems[x], elems[y]));
        if (it == index.end()) {
          fail(ErrorCode::internal, "B_G is not closed under composition");
        }
        entries[x * n + y] = it->second;
      }
    }
    MulTable const bg(n, std::move(entries), names);

    auto kg = [&](uint32_t i, uint32_t j) {
      return static_cast<element_index>(nl + i * nj + j);
    };
    std::vector<uint32_t> b1{0};
    for (uint32_t b : np.B) {
      b1.push_back(bb.pos(b));
    }
    std::sort(b1.begin(), b1.end());
    std::vector<element_index> V, Iset;
    for (element_index x = 0; x < nl; ++x) {
      V.push_back(x);
    }
    for (uint32_t a = 0; a < n1; ++a) {
      for (uint32_t b : b1) {
        V.push_back(kg(a, b));
      }
    }
    for (uint32_t i = 0; i < ni; ++i) {
      for (uint32_t j = 0; j < nj; ++j) {
        Iset.push_back(kg(i, j));
      }
    }
    SubTable st = build_T_indexed(bg, V, Iset);

    std::vector<std::string> final_names;
    for (element_index p : st.parent) {
      size_t const  copy = p / n;
      element_index s    = p % n;
      BghTag        tag;
      std::string   nm;
      if (copy == 3) {
        tag = {BghPart::zero, 0, 0};
        nm  = "0";
      } else if (s < nl) {
        tag = {BghPart::L_G, s, 0};
        nm  = names[s];
      } else {
        auto const i = static_cast<uint32_t>((s - nl) / nj);
        auto const j = static_cast<uint32_t>((s - nl) % nj);
        if (copy == 0) {
          tag = {BghPart::K_H, i, j};
          nm  = "H_" + bb.I[i] + "_" + bb.J[j];
        } else {
          tag = {copy == 1 ? BghPart::K1 : BghPart::K2, i, j};
          nm  = (copy == 1 ? "K1_" : "K2_") + bb.I[i] + "_" + bb.J[j];
        }
      }
      bb.tags.push_back(tag);
      final_names.push_back(nm);
      if (copy == 0) {
        bb.sigma.push_back(elems[s].sigma);
        bb.tau.push_back(elems[s].tau);
      } else {
        bb.sigma.emplace_back();
        bb.tau.emplace_back();
      }
      if (tag.part == BghPart::L_G) {
        bb.l_g.push_back(static_cast<element_index>(bb.tags.size() - 1));
      }
    }
    std::vector<element_index> flat = st.table.entries();
    bb.table = MulTable(st.table.size(), std::move(flat), std::move(final_names));

    auto report = validate_table(bb.table);
    if (!report.associative() || !report.band) {
      fail(ErrorCode::internal, "B_{G,H} is not a band");
    }
    return bb;
  }

  //! The D-class of each part, checked against the expected structure:
  //! five D-classes with covers L_G > K_H > K_G', K_G'' > 0.
  inline void check_bgh_structure(BghBand const& bb) {
    GreenData const g = green_data(bb.table);
    if (g.num_d != 5) {
      fail(ErrorCode::internal,
           "B_{G,H} has " + std::to_string(g.num_d) + " D-classes");
    }
    std::map<BghPart, std::set<uint32_t>> classes;
    for (element_index x = 0; x < bb.table.size(); ++x) {
      classes[bb.tags[x].part].insert(g.d_class[x]);
    }
    std::map<BghPart, uint32_t> d;
    for (auto const& [p, s] : classes) {
      if (s.size() != 1) {
        fail(ErrorCode::internal,
             std::string("part ") + bgh_part_name(p) + " spans D-classes");
      }
      d[p] = *s.begin();
    }
    std::set<std::pair<uint32_t, uint32_t>> want{
        {d[BghPart::L_G], d[BghPart::K_H]},
        {d[BghPart::K_H], d[BghPart::K1]},
        {d[BghPart::K_H], d[BghPart::K2]},
        {d[BghPart::K1], d[BghPart::zero]},
        {d[BghPart::K2], d[BghPart::zero]}};
    std::set<std::pair<uint32_t, uint32_t>> got(g.covers.begin(),
                                                g.covers.end());
    if (got != want) {
      fail(ErrorCode::internal, "B_{G,H} has the wrong cover relation");
    }
  }

  //! The generator f_ij of G read as a word over A, i and j positions.
  inline GroupWord bgh_dictionary(BghBand const& bb, uint32_t i, uint32_t j) {
    size_t const n1 = bb.a1();
    auto         gen = [](uint32_t p) { return GroupWord{gen_letter(p - 1)}; };
    if (i < n1) {
      if (j == bb.inf() && i != 0) {
        return gen(i);
      }
      return {};
    }
    uint32_t const x = static_cast<uint32_t>(i - n1);
    if (j == bb.inf()) {
      return x == 0 ? GroupWord{} : gen(x);
    }
    return j == 0 ? GroupWord{} : gen(j);
  }

  //! The Rees context of K_G' (copy 1) or K_G'' (copy 2) based at (1,1),
  //! with index labels taken from the band.
  inline ReesContext bgh_rees_context(IgContext const& ctx,
                                      BghBand const&   bb,
                                      int              copy) {
    element_index const e = copy == 1 ? bb.k1(0, 0) : bb.k2(0, 0);
    ActionAutomaton const& a = ctx.right(e);
    std::vector<std::string> il, jl;
    for (element_index x : a.I) {
      il.push_back(bb.I[bb.tags[x].x]);
    }
    for (element_index x : a.J) {
      jl.push_back(bb.J[bb.tags[x].y]);
    }
    return ReesContext(ctx, e, il, jl);
  }

  //! delta applied to an F-word of a B_{G,H} Rees context.
  inline GroupWord bgh_delta(BghBand const&     bb,
                             ReesContext const& rc,
                             GroupWord const&   w) {
    GroupWord             out;
    SchreierSystem const& s = rc.schreier();
    for (int32_t x : w) {
      uint32_t const g = letter_generator(x);
      for (auto const& [i, j] : s.K) {
        if (rc.f_detailed().fgen[i - 1][j - 1] == static_cast<int32_t>(g)) {
          GroupWord im = bgh_dictionary(bb, bb.i_index(rc.i_labels()[i - 1]),
                                        bb.j_index(rc.j_labels()[j - 1]));
          out          = out * (x > 0 ? im : inverse(im));
          break;
        }
      }
    }
    return free_reduce(out);
  }

  enum class ActSide { right_on_k1, left_on_k2 };

  //! The action of e in L_G u K_H on a Rees triple: on the right of
  //! rho'(i, w, j) or on the left of rho''(i, w, j). i_0 and j_0 are the
  //! least positions in the images of sigma and tau.
  inline ReesTriple e_act(BghBand const&     bb,
                          ReesContext const& rc,
                          element_index      e,
                          ActSide            side,
                          ReesTriple const&  t) {
    if (e >= bb.table.size()
        || (bb.tags[e].part != BghPart::L_G && bb.tags[e].part != BghPart::K_H)) {
      fail(ErrorCode::malformed_input,
           "e_act: the idempotent must lie in L_G or K_H");
    }
    std::vector<uint32_t> const& sigma = bb.sigma[e];
    std::vector<uint32_t> const& tau   = bb.tau[e];
    auto ri = [&](uint32_t p) { return rc.i_of(bb.I[p]); };
    auto rj = [&](uint32_t p) { return rc.j_of(bb.J[p]); };
    if (t.i == 0 || t.i > rc.i_labels().size() || t.j == 0
        || t.j > rc.j_labels().size()) {
      fail(ErrorCode::malformed_input, "e_act: index out of range");
    }
    uint32_t const ip = bb.i_index(rc.i_labels()[t.i - 1]);
    uint32_t const jp = bb.j_index(rc.j_labels()[t.j - 1]);
    if (side == ActSide::right_on_k1) {
      uint32_t const i0 = *std::min_element(sigma.begin(), sigma.end());
      uint32_t const jt = tau[jp];
      GroupWord      w  = t.g;
      w.push_back(rc.f(ri(i0), t.j, true));
      w.push_back(rc.f(ri(i0), rj(jt)));
      return {t.i, w, rj(jt)};
    }
    uint32_t const j0 = *std::min_element(tau.begin(), tau.end());
    uint32_t const si = sigma[ip];
    GroupWord      w{rc.f(ri(si), rj(j0)), rc.f(t.i, rj(j0), true)};
    w.insert(w.end(), t.g.begin(), t.g.end());
    return {ri(si), w, t.j};
  }

  //! One step of a witness chain. Type 1: both components equal. Type 2:
  //! u1 = u2 f and f v1 = v2. Type 3: u1 f = u2 and v1 = f v2.
  struct ChainStep {
    int                          type = 1;
    std::optional<element_index> f;
    ReesTriple                   u;
    ReesTriple                   v;
  };

  struct WitnessChain {
    ReesTriple             u0;
    ReesTriple             v0;
    std::vector<ChainStep> steps;

    ReesTriple const& last_u() const {
      return steps.empty() ? u0 : steps.back().u;
    }
    ReesTriple const& last_v() const {
      return steps.empty() ? v0 : steps.back().v;
    }
  };

  //! Both Rees contexts must share the F-presentation that \p f_oracle
  //! answers for.
  struct BghSetting {
    BghBand const&     band;
    ReesContext const& k1;
    ReesContext const& k2;
    GroupOracle const& f_oracle;
  };

  inline bool same_triple(GroupOracle const& o,
                          ReesTriple const&  x,
                          ReesTriple const&  y) {
    return x.i == y.i && x.j == y.j && o.equal(x.g, y.g);
  }

  inline bool verify_step(BghSetting const& s,
                          ReesTriple const& u1,
                          ReesTriple const& v1,
                          ChainStep const&  st) {
    auto const& o = s.f_oracle;
    if (st.type == 1) {
      return same_triple(o, u1, st.u) && same_triple(o, v1, st.v);
    }
    if (!st.f) {
      return false;
    }
    element_index const f = *st.f;
    if (st.type == 2) {
      return same_triple(
                 o, e_act(s.band, s.k1, f, ActSide::right_on_k1, st.u), u1)
             && same_triple(
                 o, e_act(s.band, s.k2, f, ActSide::left_on_k2, v1), st.v);
    }
    return same_triple(o, e_act(s.band, s.k1, f, ActSide::right_on_k1, u1), st.u)
           && same_triple(
               o, e_act(s.band, s.k2, f, ActSide::left_on_k2, st.v), v1);
  }

  inline bool verify_chain(BghSetting const& s, WitnessChain const& c) {
    ReesTriple u = c.u0, v = c.v0;
    for (auto const& st : c.steps) {
      if (!verify_step(s, u, v, st)) {
        return false;
      }
      u = st.u;
      v = st.v;
    }
    return true;
  }

  //! Appends a step after checking it; a failed check is an internal error.
  inline void push_step(BghSetting const& s, WitnessChain& c, ChainStep st) {
    if (!verify_step(s, c.last_u(), c.last_v(), st)) {
      fail(ErrorCode::internal,
           "witness chain step of type " + std::to_string(st.type)
               + " does not verify");
    }
    c.steps.push_back(std::move(st));
  }

  //! The F-word f_{b,inf} standing for the subgroup generator b.
  inline int32_t bgh_letter(BghSetting const& s, uint32_t b, bool inv = false) {
    BghBand const& bb = s.band;
    return s.k1.f(s.k1.i_of(bb.I[bb.pos(b)]), s.k1.j_of("inf"), inv);
  }

  //! Four steps from ((1,w1,1), (1,w2,1)) to ((1,w1 b^-1,1), (1,b w2,1))
  //! through the idempotents (1,b), e_b, e_~b and (1,1), appended to \p c.
  inline void b1b_steps(BghSetting const& s, WitnessChain& c, uint32_t b) {
    BghBand const& bb = s.band;
    if (std::find(bb.np.B.begin(), bb.np.B.end(), b) == bb.np.B.end()) {
      fail(ErrorCode::precondition,
           "'" + bb.np.A.at(b) + "' is not a subgroup generator");
    }
    ReesContext const& k1 = s.k1;
    ReesContext const& k2 = s.k2;
    uint32_t const     pb = bb.pos(b);
    GroupWord const    w1 = c.last_u().g, w2 = c.last_v().g;
    GroupWord          bw2{bgh_letter(s, b)};
    bw2.insert(bw2.end(), w2.begin(), w2.end());
    GroupWord w1b = w1;
    w1b.push_back(bgh_letter(s, b, true));
    uint32_t const i1 = k1.i_of("1"), j1 = k1.j_of("1");
    uint32_t const i1bar = k2.i_of("~1"), ibbar = k2.i_of("~" + bb.I[pb]);

    push_step(s, c, {3, bb.kh(0, pb), {i1, w1, k1.j_of(bb.J[pb])},
                     {i1bar, bw2, k2.j_of("1")}});
    push_step(s, c, {2, bb.e(pb), {i1, w1, k1.j_of("inf")},
                     {ibbar, bw2, k2.j_of("1")}});
    push_step(s, c, {3, bb.e_bar(b), {i1, w1b, j1}, {ibbar, bw2, k2.j_of("1")}});
    push_step(s, c, {2, bb.kh(0, 0), {i1, w1b, j1}, {k2.i_of("1"), bw2, k2.j_of("1")}});
  }

  inline WitnessChain b1b_chain(BghSetting const& s,
                                GroupWord const&  w1,
                                GroupWord const&  w2,
                                uint32_t          b) {
    WitnessChain c;
    c.u0 = {s.k1.i_of("1"), w1, s.k1.j_of("1")};
    c.v0 = {s.k2.i_of("1"), w2, s.k2.j_of("1")};
    b1b_steps(s, c, b);
    return c;
  }

  struct DemoResult {
    bool                         equal = false;
    std::vector<uint32_t>        b_word;  // letters of B, when equal
    std::optional<WitnessChain> chain;
  };

  //! Decides whether rho'(1,1,1) rho''(1,1,1) = rho'(1,w^-1,1) rho''(1,w,1)
  //! through membership of w in H, using \p g_oracle for the normalized
  //! presentation of G. When equal, builds a verified witness chain between
  //! the two pairs.
  inline DemoResult equality_demo(BghSetting const& s,
                                  GroupOracle const& g_oracle,
                                  GroupWord const&   w) {
    BghBand const&        bb = s.band;
    GroupWord const       dw = bgh_delta(bb, s.k1, w);
    std::vector<uint32_t> B  = bb.np.B;
    DemoResult            res;
    res.equal = g_oracle.member(dw, B);
    if (!res.equal) {
      return res;
    }
    CayleyTable const&     t      = g_oracle.table();
    uint32_t const         target = t.evaluate(dw);
    std::vector<int64_t>   from(t.order, -1);
    std::vector<uint32_t>  via(t.order, 0);
    std::deque<uint32_t>   queue{0};
    from[0] = 0;
    while (!queue.empty() && from[target] < 0) {
      uint32_t x = queue.front();
      queue.pop_front();
      for (uint32_t b : B) {
        uint32_t y = t.mul[x][t.gen_images[b]];
        if (from[y] < 0) {
          from[y] = x;
          via[y]  = b;
          queue.push_back(y);
        }
      }
    }
    if (from[target] < 0) {
      fail(ErrorCode::internal, "member of H not reached by subgroup generators");
    }
    for (uint32_t x = target; x != 0; x = static_cast<uint32_t>(from[x])) {
      res.b_word.push_back(via[x]);
    }
    std::reverse(res.b_word.begin(), res.b_word.end());

    WitnessChain c;
    c.u0 = {s.k1.i_of("1"), {}, s.k1.j_of("1")};
    c.v0 = {s.k2.i_of("1"), {}, s.k2.j_of("1")};
    for (size_t k = res.b_word.size(); k-- > 0;) {
      b1b_steps(s, c, res.b_word[k]);
    }
    ReesTriple u = c.last_u(), v = c.last_v();
    u.g          = inverse(w);
    v.g          = w;
    push_step(s, c, {1, std::nullopt, u, v});
    res.chain = std::move(c);
    return res;
  }

}  // namespace igwp

#endif  // IGWP_BGH_HPP_
