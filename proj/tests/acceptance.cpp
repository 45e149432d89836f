// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// criteria pass within their time budgets.

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "igwp/igwp.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

using namespace igwp;

namespace {

  struct Outcome {
    bool        ok = true;
    std::string detail;
    size_t      failures = 0;

    void check(bool cond, std::string const& what) {
      if (!cond) {
        if (failures++ < 5) {
          detail += (detail.empty() ? "" : "; ") + what;
        }
        ok = false;
      }
    }
  };

  std::vector<MulTable> const& corpus_bands() {
    static std::vector<MulTable> const c = corpus::band_corpus();
    return c;
  }

  // biorder index of each table element (bands: every element)
  std::vector<element_index> biorder_pos(Biorder const& b, size_t n) {
    std::vector<element_index> pos(n, 0);
    for (element_index k = 0; k < b.size(); ++k) {
      pos[b.element_of()[k]] = k;
    }
    return pos;
  }

  // one idempotent per D-class of IG(E), the least one
  std::vector<element_index> d_reps(IgContext const& ctx) {
    std::vector<element_index> out;
    std::set<uint32_t>         seen;
    for (element_index e = 0; e < ctx.biorder().size(); ++e) {
      if (seen.insert(ctx.classes().d[e]).second) {
        out.push_back(e);
      }
    }
    return out;
  }

  GroupPresentation z2() {
    return GroupPresentation{{"a"}, {{GroupWord{1, 1}, GroupWord{}}}, {}};
  }

  GroupWord random_group_word(std::mt19937_64& rng, size_t rank, size_t max_len) {
    GroupWord w;
    if (rank == 0) {
      return w;
    }
    size_t const len = rng() % (max_len + 1);
    for (size_t k = 0; k < len; ++k) {
      w.push_back(gen_letter(static_cast<uint32_t>(rng() % rank), rng() % 2 == 1));
    }
    return w;
  }

  std::string word_text(Word const& w) {
    std::string s;
    for (element_index x : w) {
      s += (s.empty() ? "" : ",") + std::to_string(x);
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // 1
  ////////////////////////////////////////////////////////////////////////

  Outcome green_equivalence() {
    Outcome out;
    size_t  pairs = 0;
    for (MulTable const& t : corpus_bands()) {
      Biorder const            b  = extract_biorder(t);
      GreenData const          gd = green_data(t);
      oracle::NaiveGreen const ng = oracle::naive_green(t);
      auto const&              el = b.element_of();
      for (element_index e = 0; e < b.size(); ++e) {
        for (element_index f = 0; f < b.size(); ++f) {
          element_index x = el[e], y = el[f];
          out.check(gd.R(x, y) == ng.R(x, y) && gd.L(x, y) == ng.L(x, y)
                        && gd.D(x, y) == ng.D(x, y),
                    "green_data disagrees with ideals");
          out.check(ig_green(b, e, f, GreenRel::R) == gd.R(x, y),
                    "R mismatch at " + b.name(e) + "," + b.name(f));
          out.check(ig_green(b, e, f, GreenRel::L) == gd.L(x, y),
                    "L mismatch at " + b.name(e) + "," + b.name(f));
          out.check(ig_green(b, e, f, GreenRel::D) == gd.D(x, y),
                    "D mismatch at " + b.name(e) + "," + b.name(f));
          ++pairs;
        }
      }
    }
    out.detail = std::to_string(corpus_bands().size()) + " bands, "
                 + std::to_string(pairs) + " pairs"
                 + (out.detail.empty() ? "" : ": " + out.detail);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 2
  ////////////////////////////////////////////////////////////////////////

  Outcome matching_action() {
    Outcome out;
    size_t  automata = 0;
    for (MulTable const& t : corpus_bands()) {
      IgContext const          ctx(extract_biorder(t));
      Biorder const&           b  = ctx.biorder();
      oracle::NaiveGreen const ng = oracle::naive_green(t);
      auto const&              el = b.element_of();
      for (element_index e = 0; e < b.size(); ++e) {
        ActionAutomaton const&     A = ctx.right(e);
        oracle::DirectAction const D = oracle::direct_action(t, ng, el[e]);
        ++automata;
        if (A.num_states() != D.cols.size()) {
          out.check(false, "state count differs");
          continue;
        }
        // state s of A <-> column col[s] of D
        std::vector<int> col(A.num_states() + 1, -1);
        std::set<int>    used;
        for (uint32_t s = 1; s <= A.num_states(); ++s) {
          for (size_t c = 0; c < D.cols.size(); ++c) {
            if (ng.L(el[A.rep(s)], D.cols[c])) {
              col[s] = static_cast<int>(c);
            }
          }
          out.check(col[s] >= 0 && used.insert(col[s]).second,
                    "states do not match L-classes");
        }
        if (!out.ok) {
          continue;
        }
        out.check(ng.L(el[A.rep(1)], el[e]), "state 1 is not L_e");
        for (uint32_t s = 1; s <= A.num_states(); ++s) {
          for (element_index f = 0; f < b.size(); ++f) {
            int const want = D.trans[static_cast<size_t>(col[s])][el[f]];
            uint32_t const got = A(s, f);
            out.check(got == 0 ? want == -1 : want == col[got],
                      "transition differs at state " + std::to_string(s)
                          + " letter " + b.name(f));
          }
        }
        for (element_index f = 0; f < b.size(); ++f) {
          out.check(A(0, f) == 0, "0 is not absorbing");
        }
      }
    }
    out.detail = std::to_string(automata) + " automata"
                 + (out.detail.empty() ? "" : ": " + out.detail);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 3
  ////////////////////////////////////////////////////////////////////////

  bool certificate_verifies(IgContext const&             ctx,
                            Word const&                  w,
                            RegularityCertificate const& c) {
    if (c.k >= w.size() || w[c.k] != c.e) {
      return false;
    }
    ActionAutomaton const& R = ctx.right(c.e);
    uint32_t               s = 1;
    std::vector<uint32_t>  rs{1};
    for (size_t t = c.k + 1; t < w.size(); ++t) {
      s = R(s, w[t]);
      if (s == 0) {
        return false;
      }
      rs.push_back(s);
    }
    ActionAutomaton const& L = ctx.left(c.e);
    uint32_t               q = 1;
    std::vector<uint32_t>  ls{1};
    for (size_t t = c.k; t-- > 0;) {
      q = L(q, w[t]);
      if (q == 0) {
        return false;
      }
      ls.push_back(q);
    }
    Biorder const& b = ctx.biorder();
    return rs == c.right_states && ls == c.left_states
           && R.rep(s) == c.l_witness && L.rep(q) == c.r_witness
           && ig_green(b, c.l_witness, R.rep(s), GreenRel::L)
           && ig_green(b, c.r_witness, c.e, GreenRel::D);
  }

  // Every word one rewrite away: contract a basic pair to its product or
  // expand a letter g into a basic pair e f with ef = g.
  std::vector<Word> one_step_rewrites(Biorder const& b, Word const& w) {
    std::vector<Word> out;
    for (size_t k = 0; k + 1 < w.size(); ++k) {
      if (auto p = basic_product(b, w[k], w[k + 1])) {
        Word x(w.begin(), w.begin() + static_cast<long>(k));
        x.push_back(*p);
        x.insert(x.end(), w.begin() + static_cast<long>(k + 2), w.end());
        out.push_back(std::move(x));
      }
    }
    for (size_t k = 0; k < w.size(); ++k) {
      for (element_index e = 0; e < b.size(); ++e) {
        for (element_index f = 0; f < b.size(); ++f) {
          if (b(e, f) == static_cast<int32_t>(w[k]) && (e != w[k] || f != w[k])) {
            Word x(w.begin(), w.begin() + static_cast<long>(k));
            x.push_back(e);
            x.push_back(f);
            x.insert(x.end(), w.begin() + static_cast<long>(k + 1), w.end());
            out.push_back(std::move(x));
          }
        }
      }
    }
    return out;
  }

  Outcome regularity_certificates() {
    Outcome                 out;
    std::mt19937_64         rng(7011);
    std::vector<MulTable>   pool = corpus_bands();
    BghBand const           bb   = build_bgh(normalize_presentation(z2(), {}));
    pool.push_back(bb.table);
    std::vector<std::unique_ptr<IgContext>> ctxs;
    for (auto const& t : pool) {
      ctxs.push_back(std::make_unique<IgContext>(extract_biorder(t)));
    }
    size_t found = 0, tried = 0, rewrites = 0;
    while (found < 200 && tried < 200000) {
      ++tried;
      // every third word from the B_{Z2} band, whose lower classes are rich
      size_t const     which = tried % 3 == 0 ? pool.size() - 1 : rng() % pool.size();
      IgContext const& ctx   = *ctxs[which];
      size_t const     m     = ctx.biorder().size();
      Word             w(1 + rng() % 8);
      for (auto& x : w) {
        x = static_cast<element_index>(rng() % m);
      }
      auto c = is_regular(ctx, w);
      if (!c) {
        continue;
      }
      ++found;
      out.check(certificate_verifies(ctx, w, *c),
                "certificate fails for " + word_text(w));
      Biorder const& b = ctx.biorder();
      auto           rw = one_step_rewrites(b, w);
      std::shuffle(rw.begin(), rw.end(), rng);
      rw.resize(std::min<size_t>(rw.size(), 12));
      for (Word const& x : rw) {
        ++rewrites;
        auto cx = is_regular(ctx, x);
        if (!cx) {
          out.check(false, "rewrite of " + word_text(w) + " not regular");
          continue;
        }
        out.check(certificate_verifies(ctx, x, *cx), "rewrite certificate fails");
        out.check(ig_green(b, c->r_witness, cx->r_witness, GreenRel::R)
                      && ig_green(b, c->l_witness, cx->l_witness, GreenRel::L)
                      && ig_green(b, c->e, cx->e, GreenRel::D),
                  "witnesses of " + word_text(w) + " and a rewrite differ");
      }
    }
    out.check(found == 200, "only " + std::to_string(found) + " regular words");

    IgContext const& bctx = *ctxs.back();
    auto const       pos  = biorder_pos(bctx.biorder(), bb.table.size());
    Word const       w{pos[bb.k1(0, 0)], pos[bb.k2(0, 0)]};
    out.check(!is_regular(bctx, w), "e'11 e''11 reported regular");

    out.detail = std::to_string(found) + " regular words, "
                 + std::to_string(rewrites) + " rewrites"
                 + (out.detail.empty() ? "" : ": " + out.detail);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 4
  ////////////////////////////////////////////////////////////////////////

  Outcome schreier_identities() {
    Outcome out;
    size_t  classes = 0;
    for (MulTable const& t : corpus_bands()) {
      IgContext const ctx(extract_biorder(t));
      for (element_index e : d_reps(ctx)) {
        ++classes;
        SchreierSystem const s = schreier_system(ctx, e);
        GroupOracle const    ob(presentation_B(ctx, s), OracleStrategy::automatic, 1000);
        ReesContext const    rc(ctx, e);
        GroupOracle const    of(rc.F(), OracleStrategy::automatic, 1000);
        std::set<Word>       words(s.r.begin(), s.r.end());
        out.check(s.r_of(1).empty(), "r_1 is not empty");
        for (uint32_t j = 1; j <= s.num_j(); ++j) {
          Word const& r = s.r_of(j);
          if (!r.empty()) {
            out.check(words.count(Word(r.begin(), r.end() - 1)) == 1,
                      "r is not prefix closed");
          }
          out.check(run_action(s.a, 1, r) == j, "1 r_j != j");
          out.check(run_action(s.a, j, s.r_prime_of(j)) == 1, "j r'_j != 1");
          Word w{e};
          w.insert(w.end(), r.begin(), r.end());
          w.insert(w.end(), s.r_prime_of(j).begin(), s.r_prime_of(j).end());
          out.check(ob.is_identity(phi(s, 1, w)), "phi(1, e r_j r'_j) != 1");
          ReesTriple const p = pi(rc, w);
          out.check(p.i == 1 && p.j == 1 && of.is_identity(p.g),
                    "pi(e r_j r'_j) != (1,1,1)");
        }
      }
    }
    out.detail = std::to_string(classes) + " D-classes"
                 + (out.detail.empty() ? "" : ": " + out.detail);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 5
  ////////////////////////////////////////////////////////////////////////

  Outcome rees_round_trip() {
    Outcome         out;
    std::mt19937_64 rng(5150);
    size_t          classes = 0, triples = 0, products = 0, zeros = 0;
    for (MulTable const& t : corpus_bands()) {
      IgContext const ctx(extract_biorder(t));
      for (element_index e : d_reps(ctx)) {
        ++classes;
        ReesContext const     rc(ctx, e);
        SchreierSystem const& s = rc.schreier();
        GroupOracle const     o(rc.F(), OracleStrategy::automatic, 1000);
        size_t const          rank = rc.F().rank();
        auto                  random_triple = [&] {
          return ReesTriple{static_cast<uint32_t>(1 + rng() % s.num_i()),
                            random_group_word(rng, rank, 4),
                            static_cast<uint32_t>(1 + rng() % s.num_j())};
        };
        for (int n = 0; n < 100; ++n) {
          ReesTriple const x = random_triple();
          ReesTriple const y = random_triple();
          Word const       wx = rho(rc, x);
          ReesTriple const px = pi(rc, wx);
          ++triples;
          out.check(px.i == x.i && px.j == x.j && o.equal(px.g, x.g),
                    "pi(rho(t)) != t");
          Word w = wx;
          Word wy = rho(rc, y);
          w.insert(w.end(), wy.begin(), wy.end());
          if (s.in_K(y.i, x.j)) {
            ++products;
            ReesTriple const p = pi(rc, w);
            GroupWord const  want = x.g * GroupWord{rc.f(y.i, x.j, true)} * y.g;
            out.check(p.i == x.i && p.j == y.j && o.equal(p.g, want),
                      "product law fails");
          } else {
            ++zeros;
            bool threw = false;
            try {
              pi(rc, w);
            } catch (Error const& err) {
              threw = err.code() == ErrorCode::domain;
            }
            out.check(threw, "product outside K stays in D");
          }
        }
        for (auto const& [i, j] : s.K) {
          auto p = rc.P(j, i);
          out.check(p && o.is_identity(*p * GroupWord{rc.f(i, j)}),
                    "p_ji f_ij != 1");
        }
      }
    }
    out.detail = std::to_string(classes) + " D-classes, "
                 + std::to_string(triples) + " triples, "
                 + std::to_string(products) + " products, "
                 + std::to_string(zeros) + " zero products"
                 + (out.detail.empty() ? "" : ": " + out.detail);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 6
  ////////////////////////////////////////////////////////////////////////

  Outcome bgh_max_subgroups() {
    Outcome         out;
    BghBand const   bb = build_bgh(normalize_presentation(z2(), {}));
    IgContext const ctx(extract_biorder(bb.table));
    auto const      pos = biorder_pos(ctx.biorder(), bb.table.size());
    std::vector<std::pair<std::string, element_index>> reps{
        {"L_G", bb.e(0)},
        {"K_H", bb.kh(0, 0)},
        {"K_G'", bb.k1(0, 0)},
        {"K_G''", bb.k2(0, 0)},
        {"0", bb.zero()}};
    std::vector<size_t> const want{1, 1, 2, 2, 1};
    std::string               got;
    for (size_t k = 0; k < reps.size(); ++k) {
      element_index const e  = pos[reps[k].second];
      auto const          tb = enumerate_finite(presentation_B(ctx, e), 64);
      auto const          tf = enumerate_finite(presentation_F(ctx, e), 64);
      size_t const        ob = tb ? tb->order : 0, of = tf ? tf->order : 0;
      got += (k ? " " : "") + reps[k].first + "=" + std::to_string(ob) + "/"
             + std::to_string(of);
      out.check(ob == want[k] && of == want[k], reps[k].first + " wrong order");
    }
    out.detail = "B/F orders " + got + (out.detail.empty() ? "" : ": " + out.detail);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 7
  ////////////////////////////////////////////////////////////////////////

  Outcome rb22_subgroup() {
    Outcome             out;
    IgContext const     ctx(extract_biorder(tables::rectangular_band(2, 2)));
    FPresentation const fp = presentation_F_detailed(ctx, schreier_system(ctx, 0));
    AbelianInvariants const ab = abelian_invariants(fp.presentation);
    out.check(fp.sigma.empty(), "singular squares present");
    out.check(ab.free_rank == 1 && ab.torsion.empty(), "abelianization is not Z");
    for (size_t cap : {3, 4, 5, 8, 16, 64, 256, 1024}) {
      out.check(!enumerate_finite(fp.presentation, cap),
                "enumeration finished at cap " + std::to_string(cap));
    }
    out.detail = std::to_string(fp.presentation.rank()) + " generators, "
                 + std::to_string(fp.presentation.relations.size())
                 + " relations, free rank " + std::to_string(ab.free_rank)
                 + (out.detail.empty() ? "" : ": " + out.detail);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 8
  ////////////////////////////////////////////////////////////////////////

  void all_words(size_t rank, size_t max_len, std::vector<GroupWord>& out) {
    std::vector<GroupWord> layer{{}};
    out.push_back({});
    for (size_t len = 1; len <= max_len; ++len) {
      std::vector<GroupWord> next;
      for (auto const& w : layer) {
        for (uint32_t g = 0; g < rank; ++g) {
          for (bool inv : {false, true}) {
            GroupWord x = w;
            x.push_back(gen_letter(g, inv));
            next.push_back(std::move(x));
          }
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
  }

  void demo_instance(Outcome& out,
                     std::vector<uint32_t> const& H,
                     bool all_true,
                     size_t& words,
                     size_t& chains) {
    NormalizedPresentation const np = normalize_presentation(z2(), H);
    BghBand const                bb = build_bgh(np);
    IgContext const              ctx(extract_biorder(bb.table));
    ReesContext const            k1 = bgh_rees_context(ctx, bb, 1);
    ReesContext const            k2 = bgh_rees_context(ctx, bb, 2);
    out.check(k1.F() == k2.F(), "K' and K'' presentations differ");
    GroupOracle const f_oracle(k1.F(), OracleStrategy::finite_enumeration, 64);
    GroupOracle const g_oracle(np.presentation(), OracleStrategy::finite_enumeration, 64);
    BghSetting const  s{bb, k1, k2, f_oracle};
    std::vector<GroupWord> ws;
    all_words(k1.F().rank(), 3, ws);
    uint32_t const i1 = k1.i_of("1"), j1 = k1.j_of("1");
    uint32_t const i2 = k2.i_of("1"), j2 = k2.j_of("1");
    for (GroupWord const& w : ws) {
      ++words;
      DemoResult const r     = equality_demo(s, g_oracle, w);
      bool const       truth = all_true || f_oracle.is_identity(w);
      out.check(r.equal == truth, "demo answer wrong for a word of length "
                                      + std::to_string(w.size()));
      if (!r.equal) {
        continue;
      }
      if (!r.chain) {
        out.check(false, "equal without a chain");
        continue;
      }
      ++chains;
      WitnessChain const& c = *r.chain;
      out.check(verify_chain(s, c), "chain does not verify");
      out.check(c.u0 == ReesTriple{i1, {}, j1} && c.v0 == ReesTriple{i2, {}, j2},
                "chain starts elsewhere");
      out.check(c.last_u().i == i1 && c.last_u().j == j1
                    && f_oracle.equal(c.last_u().g, inverse(w))
                    && c.last_v().i == i2 && c.last_v().j == j2
                    && f_oracle.equal(c.last_v().g, w),
                "chain ends elsewhere");
    }
  }

  Outcome membership_demo() {
    Outcome out;
    size_t  words = 0, chains = 0;
    demo_instance(out, {}, false, words, chains);
    size_t const first = words, first_chains = chains;
    demo_instance(out, {0}, true, words, chains);
    out.detail = "H={z}: " + std::to_string(first) + " words, "
                 + std::to_string(first_chains) + " chains; H={a,z}: "
                 + std::to_string(words - first) + " words, "
                 + std::to_string(chains - first_chains) + " chains"
                 + (out.detail.empty() ? "" : ": " + out.detail);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // 9
  ////////////////////////////////////////////////////////////////////////

  // An element of B_{G,H} as a pair of maps or a pair of indices.
  struct Concrete {
    int                   kind = 4;  // 0 L_G, 1 K_H, 2 K_G', 3 K_G'', 4 zero
    std::vector<uint32_t> sigma, tau;
    uint32_t              i = 0, j = 0;
    bool operator==(Concrete const&) const = default;
  };

  Concrete concrete(BghBand const& bb, element_index x) {
    BghTag const& t = bb.tags[x];
    Concrete      c;
    switch (t.part) {
      case BghPart::zero:
        return c;
      case BghPart::K_H:
      case BghPart::K1:
      case BghPart::K2:
        c.kind = t.part == BghPart::K_H ? 1 : t.part == BghPart::K1 ? 2 : 3;
        c.i    = t.x;
        c.j    = t.y;
        return c;
      case BghPart::L_G:
        break;
    }
    // Table of L_G: e_x has image {1, ~x} and sends inf to x; e_~a has
    // image {a, ~a} and sends inf to 1; e_r for ab = c has image {b, ~c}
    // and sends inf to a.
    std::string const name = bb.table.name(x);
    std::string       lo, hi, inf_to;
    auto const        label = [&](uint32_t a) { return bb.np.A[a]; };
    if (name.rfind("E_r", 0) == 0 && name.size() > 3
        && std::isdigit(static_cast<unsigned char>(name[3]))) {
      auto const& tr = bb.np.triples.at(std::stoul(name.substr(3)) - 1);
      lo             = label(tr[1]);
      hi             = "~" + label(tr[2]);
      inf_to         = label(tr[0]);
    } else if (name.rfind("E_~", 0) == 0) {
      lo     = name.substr(3);
      hi     = "~" + lo;
      inf_to = "1";
    } else {
      lo     = "1";
      hi     = "~" + name.substr(2);
      inf_to = name.substr(2);
    }
    c.kind = 0;
    for (std::string const& i : bb.I) {
      c.sigma.push_back(bb.i_index(i[0] == '~' ? hi : lo));
    }
    for (std::string const& j : bb.J) {
      c.tau.push_back(bb.j_index(j == "inf" ? inf_to : j));
    }
    return c;
  }

  Concrete multiply(Concrete const& x, Concrete const& y) {
    Concrete z;
    if (x.kind == 4 || y.kind == 4) {
      return z;
    }
    if (x.kind == 0 && y.kind == 0) {
      z.kind = 0;
      for (size_t i = 0; i < x.sigma.size(); ++i) {
        z.sigma.push_back(x.sigma[y.sigma[i]]);
      }
      for (size_t j = 0; j < x.tau.size(); ++j) {
        z.tau.push_back(y.tau[x.tau[j]]);
      }
      return z;
    }
    if (x.kind == 0) {
      z      = y;
      z.i    = x.sigma[y.i];
      return z;
    }
    if (y.kind == 0) {
      z      = x;
      z.j    = y.tau[x.j];
      return z;
    }
    if (x.kind >= 2 && y.kind >= 2 && x.kind != y.kind) {
      return z;
    }
    z.kind = std::max(x.kind, y.kind);
    z.i    = x.i;
    z.j    = y.j;
    return z;
  }

  Outcome bgh_structure() {
    Outcome       out;
    BghBand const bb = build_bgh(normalize_presentation(z2(), {}));
    MulTable const& t = bb.table;
    TableReport const rep = validate_table(t);
    out.check(rep.associative() && rep.band, "not a band");
    out.check(t.size() == 64, "order " + std::to_string(t.size()));

    // D-classes and covers from principal ideals
    oracle::NaiveGreen const ng = oracle::naive_green(t);
    std::vector<element_index> reps;
    std::vector<uint32_t>      cls(t.size());
    for (element_index x = 0; x < t.size(); ++x) {
      uint32_t k = 0;
      while (k < reps.size() && !ng.J(reps[k], x)) {
        ++k;
      }
      if (k == reps.size()) {
        reps.push_back(x);
      }
      cls[x] = k;
    }
    out.check(reps.size() == 5, std::to_string(reps.size()) + " D-classes");
    auto below = [&](uint32_t a, uint32_t b) {  // a strictly below b
      auto const& ia = ng.two[reps[a]];
      auto const& ib = ng.two[reps[b]];
      return a != b && std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
    };
    std::set<std::pair<uint32_t, uint32_t>> covers;
    for (uint32_t a = 0; a < reps.size(); ++a) {
      for (uint32_t b = 0; b < reps.size(); ++b) {
        bool between = false;
        for (uint32_t c = 0; c < reps.size(); ++c) {
          between |= below(a, c) && below(c, b);
        }
        if (below(a, b) && !between) {
          covers.insert({b, a});
        }
      }
    }
    auto d = [&](element_index x) { return cls[x]; };
    std::set<std::pair<uint32_t, uint32_t>> const want{
        {d(bb.e(0)), d(bb.kh(0, 0))},
        {d(bb.kh(0, 0)), d(bb.k1(0, 0))},
        {d(bb.kh(0, 0)), d(bb.k2(0, 0))},
        {d(bb.k1(0, 0)), d(bb.zero())},
        {d(bb.k2(0, 0)), d(bb.zero())}};
    out.check(covers == want, "cover relation differs");
    std::map<BghPart, size_t> sizes;
    for (element_index x = 0; x < t.size(); ++x) {
      ++sizes[bb.tags[x].part];
      for (element_index y = 0; y < t.size(); ++y) {
        out.check(d(x) != d(y) || (bb.tags[x].part == bb.tags[y].part),
                  "a D-class mixes parts");
      }
    }

    std::vector<Concrete> conc;
    for (element_index x = 0; x < t.size(); ++x) {
      conc.push_back(concrete(bb, x));
    }
    for (element_index x = 0; x < t.size(); ++x) {
      for (element_index y = 0; y < x; ++y) {
        out.check(!(conc[x] == conc[y]), "two elements with the same maps");
      }
    }
    size_t cells = 0;
    for (element_index x = 0; x < t.size(); ++x) {
      for (element_index y = 0; y < t.size(); ++y) {
        ++cells;
        out.check(conc[t(x, y)] == multiply(conc[x], conc[y]),
                  "product " + t.name(x) + " * " + t.name(y) + " = "
                      + t.name(t(x, y)));
      }
    }
    std::ostringstream ss;
    ss << "order " << t.size() << ", |L_G|=" << sizes[BghPart::L_G]
       << " |K_H|=" << sizes[BghPart::K_H] << " |K_G'|=" << sizes[BghPart::K1]
       << " |K_G''|=" << sizes[BghPart::K2] << ", " << cells << " cells";
    out.detail = ss.str() + (out.detail.empty() ? "" : ": " + out.detail);
    return out;
  }

  struct Criterion {
    int                      id;
    char const*              name;
    double                   budget;
    std::function<Outcome()> run;
  };

}  // namespace

int main() {
  std::vector<Criterion> const criteria{
      {1, "green-oracle-equivalence", 10, green_equivalence},
      {2, "matching-action", 30, matching_action},
      {3, "regularity-certificates", 30, regularity_certificates},
      {4, "schreier-identities", 10, schreier_identities},
      {5, "rees-round-trip", 60, rees_round_trip},
      {6, "bgh-maximal-subgroups", 60, bgh_max_subgroups},
      {7, "rb22-maximal-subgroup", 5, rb22_subgroup},
      {8, "membership-equality-demo", 120, membership_demo},
      {9, "bgh-structure", 10, bgh_structure}};
  int failed = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    o;
    try {
      o = c.run();
    } catch (std::exception const& e) {
      o.ok     = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double const secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    bool const pass = o.ok && secs < c.budget;
    if (o.ok && !pass) {
      o.detail += "; over the time budget";
    }
    std::printf("%s %d %s (%.2f s of %.0f s) %s\n",
                pass ? "PASS" : "FAIL",
                c.id,
                c.name,
                secs,
                c.budget,
                o.detail.c_str());
    std::fflush(stdout);
    failed += pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
