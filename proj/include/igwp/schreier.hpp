//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Schreier systems, the rewriting phi, and presentations of the maximal
// subgroups of IG(E) over the generators [j,f] and over the f_ij.

#ifndef IGWP_SCHREIER_HPP_
#define IGWP_SCHREIER_HPP_

#include <cstdint>   // for uint32_t, int32_t
#include <deque>     // for deque
#include <optional>  // for optional
#include <set>       // for set
#include <string>    // for string
#include <tuple>     // for tuple
#include <utility>   // for pair
#include <vector>    // for vector

#include "biorder.hpp"
#include "error.hpp"
#include "group/presentation.hpp"
#include "group/word.hpp"
#include "ig_green.hpp"
#include "regularity.hpp"

namespace igwp {

  struct SchreierSystem {
    element_index   base = 0;
    ActionAutomaton a;
    //! r[j - 1] and r_prime[j - 1] for the L-class j.
    std::vector<Word> r;
    std::vector<Word> r_prime;
    //! Pairs (i, j) whose H-class contains an idempotent, in lexicographic
    //! order.
    std::vector<std::pair<uint32_t, uint32_t>> K;
    //! j_of_i[i - 1]: least j with (i, j) in K.
    std::vector<uint32_t> j_of_i;
    //! bgen[j - 1][f]: index of the generator [j,f], or -1 when jf = 0.
    std::vector<std::vector<int32_t>>           bgen;
    std::vector<std::pair<uint32_t, element_index>> bgens;

    size_t num_i() const noexcept {
      return a.I.size();
    }
    size_t num_j() const noexcept {
      return a.J.size();
    }
    bool in_K(uint32_t i, uint32_t j) const {
      return a.cell.at(i - 1).at(j - 1) >= 0;
    }
    //! The idempotent e_ij for (i, j) in K.
    element_index e_idem(uint32_t i, uint32_t j) const {
      int32_t x = a.cell.at(i - 1).at(j - 1);
      if (x < 0) {
        fail(ErrorCode::precondition,
             "(" + std::to_string(i) + "," + std::to_string(j)
                 + ") is not in K");
      }
      return static_cast<element_index>(x);
    }
    Word const& r_of(uint32_t j) const {
      return r.at(j - 1);
    }
    Word const& r_prime_of(uint32_t j) const {
      return r_prime.at(j - 1);
    }
  };

  //! Breadth-first construction: states in order of discovery, letters in
  //! increasing order; for a new state jf with witness (g, h) from hstep,
  //! r_jf = r_j h and r'_jf = g r'_j.
  inline SchreierSystem schreier_system(IgContext const& ctx, element_index e) {
    Biorder const& b = ctx.biorder();
    if (e >= b.size()) {
      fail(ErrorCode::malformed_input, "idempotent index out of range");
    }
    SchreierSystem s;
    s.base      = e;
    s.a         = ctx.right(e);
    size_t nj   = s.a.J.size();
    s.r.assign(nj, {});
    s.r_prime.assign(nj, {});
    std::vector<bool>    found(nj + 1, false);
    std::deque<uint32_t> queue{1};
    found[1] = true;
    while (!queue.empty()) {
      uint32_t j = queue.front();
      queue.pop_front();
      for (element_index f = 0; f < b.size(); ++f) {
        uint32_t jf = s.a(j, f);
        if (jf == 0 || found[jf]) {
          continue;
        }
        auto w = hstep(b, s.a.rep(j), s.a.rep(jf), f);
        if (!w) {
          fail(ErrorCode::internal, "transition without an hstep witness");
        }
        s.r[jf - 1] = s.r[j - 1];
        s.r[jf - 1].push_back(w->h);
        s.r_prime[jf - 1] = {w->g};
        s.r_prime[jf - 1].insert(s.r_prime[jf - 1].end(),
                                 s.r_prime[j - 1].begin(),
                                 s.r_prime[j - 1].end());
        found[jf] = true;
        queue.push_back(jf);
      }
    }
    for (uint32_t j = 1; j <= nj; ++j) {
      if (!found[j]) {
        fail(ErrorCode::internal,
             "L-class " + std::to_string(j) + " not reached from the base");
      }
    }
    s.j_of_i.assign(s.a.I.size(), 0);
    for (uint32_t i = 1; i <= s.a.I.size(); ++i) {
      for (uint32_t j = 1; j <= nj; ++j) {
        if (s.in_K(i, j)) {
          s.K.emplace_back(i, j);
          if (s.j_of_i[i - 1] == 0) {
            s.j_of_i[i - 1] = j;
          }
        }
      }
      if (s.j_of_i[i - 1] == 0) {
        fail(ErrorCode::domain,
             "principal factor not completely 0-simple for this input");
      }
    }
    s.bgen.assign(nj, std::vector<int32_t>(b.size(), -1));
    for (uint32_t j = 1; j <= nj; ++j) {
      for (element_index f = 0; f < b.size(); ++f) {
        if (s.a(j, f) != 0) {
          s.bgen[j - 1][f] = static_cast<int32_t>(s.bgens.size());
          s.bgens.emplace_back(j, f);
        }
      }
    }
    return s;
  }

  //! [j,e1][je1,e2]...; a domain error if the action reaches 0.
  inline GroupWord phi(SchreierSystem const& s, uint32_t j, Word const& w) {
    if (j == 0 || j > s.num_j()) {
      fail(ErrorCode::precondition, "phi: state out of range");
    }
    GroupWord out;
    for (element_index f : w) {
      if (f >= s.a.alphabet_size()) {
        fail(ErrorCode::malformed_input, "phi: letter not in E");
      }
      int32_t id = s.bgen[j - 1][f];
      if (id < 0) {
        fail(ErrorCode::domain, "phi: the action reaches 0");
      }
      out.push_back(gen_letter(static_cast<uint32_t>(id)));
      j = s.a(j, f);
    }
    return out;
  }

  inline std::string bgen_name(SchreierSystem const& s,
                               Biorder const&        b,
                               uint32_t              id) {
    auto [j, f] = s.bgens.at(id);
    return "[" + std::to_string(j) + "," + b.name(f) + "]";
  }

  inline GroupPresentation presentation_B(IgContext const&      ctx,
                                          SchreierSystem const& s) {
    Biorder const&    b = ctx.biorder();
    GroupPresentation p;
    for (uint32_t id = 0; id < s.bgens.size(); ++id) {
      p.generators.push_back(bgen_name(s, b, id));
    }
    for (uint32_t j = 1; j <= s.num_j(); ++j) {
      for (element_index x = 0; x < b.size(); ++x) {
        for (element_index y = 0; y < b.size(); ++y) {
          int32_t g = b(x, y);
          if (g == Biorder::undefined || run_action(s.a, j, Word{x, y}) == 0) {
            continue;
          }
          Word gw{static_cast<element_index>(g)};
          if (run_action(s.a, j, gw) == 0) {
            fail(ErrorCode::internal, "relation sides act differently");
          }
          p.relations.emplace_back(phi(s, j, Word{x, y}), phi(s, j, gw));
        }
      }
    }
    for (auto const& [j, a] : s.bgens) {
      Word w{s.base};
      w.insert(w.end(), s.r_of(j).begin(), s.r_of(j).end());
      w.push_back(a);
      Word const& rp = s.r_prime_of(s.a(j, a));
      w.insert(w.end(), rp.begin(), rp.end());
      p.relations.emplace_back(
          phi(s, 1, w),
          GroupWord{gen_letter(static_cast<uint32_t>(s.bgen[j - 1][a]))});
    }
    p.relations.emplace_back(phi(s, 1, Word{s.base}), GroupWord{});
    return p;
  }

  inline GroupPresentation presentation_B(IgContext const& ctx, element_index e) {
    return presentation_B(ctx, schreier_system(ctx, e));
  }

  struct SingularSquare {
    uint32_t      i, k, j, l;
    element_index f;
    bool          left_right;  // true: fe_ij = e_ij, ..., e_kj f = e_kl

    bool operator==(SingularSquare const&) const = default;
  };

  //! All squares (i,k;j,l), i != k, j != l, with their least singularising
  //! idempotent of each kind.
  inline std::vector<SingularSquare> singular_squares(Biorder const&        b,
                                                      SchreierSystem const& s) {
    std::vector<SingularSquare> out;
    auto is = [&](element_index x, element_index y, element_index z) {
      return b(x, y) == static_cast<int32_t>(z);
    };
    uint32_t const ni = static_cast<uint32_t>(s.num_i());
    uint32_t const nj = static_cast<uint32_t>(s.num_j());
    for (uint32_t i = 1; i <= ni; ++i) {
      for (uint32_t k = 1; k <= ni; ++k) {
        for (uint32_t j = 1; j <= nj; ++j) {
          for (uint32_t l = 1; l <= nj; ++l) {
            if (i == k || j == l || !s.in_K(i, j) || !s.in_K(i, l)
                || !s.in_K(k, j) || !s.in_K(k, l)) {
              continue;
            }
            element_index eij = s.e_idem(i, j), eil = s.e_idem(i, l),
                          ekj = s.e_idem(k, j), ekl = s.e_idem(k, l);
            for (bool lr : {true, false}) {
              for (element_index f = 0; f < b.size(); ++f) {
                bool ok = lr ? (is(f, eij, eij) && is(f, ekj, ekj)
                                && is(eij, f, eil) && is(ekj, f, ekl))
                             : (is(eij, f, eij) && is(eil, f, eil)
                                && is(f, eij, ekj) && is(f, eil, ekl));
                if (ok) {
                  out.push_back({i, k, j, l, f, lr});
                  break;
                }
              }
            }
          }
        }
      }
    }
    return out;
  }

  struct FPresentation {
    GroupPresentation presentation;
    //! f_ij is generator fgen[i - 1][j - 1], or -1 when (i, j) is not in K.
    std::vector<std::vector<int32_t>> fgen;
    std::vector<SingularSquare>       sigma;
    size_t                            n_equal = 0;    // f_ij = f_il
    size_t                            n_trivial = 0;  // f_i,j(i) = 1
    size_t                            n_square = 0;   // from singular squares
  };

  inline std::vector<std::string> default_labels(size_t n) {
    std::vector<std::string> out;
    for (size_t k = 1; k <= n; ++k) {
      out.push_back(std::to_string(k));
    }
    return out;
  }

  //! Generators f<i>_<j> for (i, j) in K using the given index labels.
  inline FPresentation presentation_F_detailed(IgContext const&      ctx,
                                               SchreierSystem const& s,
                                               std::vector<std::string> il = {},
                                               std::vector<std::string> jl = {}) {
    Biorder const& b = ctx.biorder();
    if (il.empty()) {
      il = default_labels(s.num_i());
    }
    if (jl.empty()) {
      jl = default_labels(s.num_j());
    }
    if (il.size() != s.num_i() || jl.size() != s.num_j()) {
      fail(ErrorCode::malformed_input, "index label count mismatch");
    }
    FPresentation fp;
    fp.fgen.assign(s.num_i(), std::vector<int32_t>(s.num_j(), -1));
    for (auto const& [i, j] : s.K) {
      fp.fgen[i - 1][j - 1]
          = static_cast<int32_t>(fp.presentation.generators.size());
      fp.presentation.generators.push_back("f" + il[i - 1] + "_" + jl[j - 1]);
    }
    auto f = [&](uint32_t i, uint32_t j, bool inv = false) {
      return gen_letter(static_cast<uint32_t>(fp.fgen[i - 1][j - 1]), inv);
    };
    auto& rels = fp.presentation.relations;
    for (auto const& [i, j] : s.K) {
      for (uint32_t l = 1; l <= s.num_j(); ++l) {
        if (!s.in_K(i, l)) {
          continue;
        }
        element_index eil = s.e_idem(i, l);
        if (s.a(j, eil) != l) {
          continue;
        }
        Word w = s.r_of(j);
        w.push_back(eil);
        if (w == s.r_of(l)) {
          rels.push_back({{f(i, j)}, {f(i, l)}});
          ++fp.n_equal;
        }
      }
    }
    for (uint32_t i = 1; i <= s.num_i(); ++i) {
      rels.push_back({{f(i, s.j_of_i[i - 1])}, {}});
      ++fp.n_trivial;
    }
    fp.sigma = singular_squares(b, s);
    std::set<std::tuple<uint32_t, uint32_t, uint32_t, uint32_t>> done;
    for (auto const& q : fp.sigma) {
      if (!done.insert({q.i, q.k, q.j, q.l}).second) {
        continue;
      }
      rels.push_back({{f(q.i, q.j, true), f(q.i, q.l)},
                      {f(q.k, q.j, true), f(q.k, q.l)}});
      ++fp.n_square;
    }
    return fp;
  }

  inline GroupPresentation presentation_F(IgContext const& ctx, element_index e) {
    return presentation_F_detailed(ctx, schreier_system(ctx, e)).presentation;
  }

}  // namespace igwp

#endif  // IGWP_SCHREIER_HPP_
