//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Command line front end.

#include "cli.hpp"

#include <algorithm>   // for reverse
#include <filesystem>  // for path
#include <functional>  // for function
#include <map>         // for map
#include <random>      // for mt19937_64
#include <sstream>     // for stringstream

#include <CLI11.hpp>
#include <json.hpp>

#include "igwp/igwp.hpp"
#include "io.hpp"

namespace igwp::cli {

  using json = nlohmann::ordered_json;

  namespace {

    struct Options {
      std::string table, biorder, presentation, normalized, band, out;
      std::string e, f, word, u, v, rel, i, j, g;
      std::string format = "json";
      std::string oracle = "auto";
      std::string level  = "B";
      size_t      cap    = 1000;
      uint64_t    seed   = 1;
      size_t      check  = 0;
    };

    struct Result {
      Result(json b = {}, int c = ok) : body(std::move(b)), code(c) {}

      json        body;
      int         code = ok;
      std::string raw;  // printed verbatim when set
    };

    std::vector<std::string> split(std::string const& s) {
      std::vector<std::string> out;
      if (s.empty()) {
        return out;
      }
      std::stringstream ss(s);
      std::string       item;
      while (std::getline(ss, item, ',')) {
        out.push_back(item);
      }
      return out;
    }

    element_index resolve(Biorder const& b, std::string const& name) {
      for (element_index x = 0; x < b.size(); ++x) {
        if (b.name(x) == name) {
          return x;
        }
      }
      fail(ErrorCode::malformed_input, "unknown idempotent '" + name + "'");
    }

    Word parse_word(Biorder const& b, std::string const& s) {
      Word w;
      for (auto const& x : split(s)) {
        w.push_back(resolve(b, x));
      }
      return w;
    }

    GroupWord parse_gword(GroupPresentation const& p, std::string const& s) {
      GroupWord w;
      for (auto const& x : split(s)) {
        if (x != "1") {
          w.push_back(parse_letter(x, p.generators));
        }
      }
      return w;
    }

    json names_of(Biorder const& b, Word const& w) {
      json out = json::array();
      for (element_index x : w) {
        out.push_back(b.name(x));
      }
      return out;
    }

    json gword_json(GroupWord const& w, std::vector<std::string> const& gens) {
      json out = json::array();
      for (int32_t x : w) {
        out.push_back(letter_name(x, gens));
      }
      return out;
    }

    std::string need(std::string const& v, char const* what) {
      if (v.empty()) {
        fail(ErrorCode::malformed_input, std::string("missing --") + what);
      }
      return v;
    }

    MulTable load_table(Options const& o) {
      return io::parse_table(io::read_file(need(o.table, "table")));
    }

    Biorder load_biorder(Options const& o) {
      if (!o.biorder.empty()) {
        Biorder b   = io::parse_biorder(io::read_file(o.biorder));
        auto    rep = validate_biorder(b);
        if (!rep.ok()) {
          auto const& v = rep.violations.front();
          fail(ErrorCode::malformed_input,
               "invalid biorder at (" + b.name(v.e) + "," + b.name(v.f)
                   + "): " + v.what);
        }
        return b;
      }
      if (!o.table.empty()) {
        MulTable t = load_table(o);
        require_semigroup(t);
        return extract_biorder(t);
      }
      fail(ErrorCode::malformed_input, "missing --biorder or --table");
    }

    GroupPresentation load_presentation(Options const& o) {
      return io::parse_presentation(
          io::read_file(need(o.presentation, "presentation")));
    }

    OracleStrategy strategy(Options const& o) {
      if (o.oracle == "free") {
        return OracleStrategy::free_reduction;
      }
      if (o.oracle == "enum") {
        return OracleStrategy::finite_enumeration;
      }
      if (o.oracle == "auto") {
        return OracleStrategy::automatic;
      }
      fail(ErrorCode::malformed_input, "unknown oracle '" + o.oracle + "'");
    }

    json triple_json(ReesContext const& rc, ReesTriple const& t) {
      return {{"i", rc.i_labels()[t.i - 1]},
              {"g", gword_json(t.g, rc.F().generators)},
              {"j", rc.j_labels()[t.j - 1]}};
    }

    json presentation_json(GroupPresentation const& p) {
      return json::parse(io::dump_presentation(p));
    }

    // ---------------------------------------------------------------------

    Result cmd_validate(Options const& o) {
      Result r;
      if (!o.biorder.empty()) {
        Biorder b   = io::parse_biorder(io::read_file(o.biorder));
        auto    rep = validate_biorder(b);
        json    vs  = json::array();
        for (auto const& v : rep.violations) {
          vs.push_back({{"e", b.name(v.e)}, {"f", b.name(v.f)}, {"what", v.what}});
        }
        r.body = {{"kind", "biorder"}, {"valid", rep.ok()}, {"violations", vs}};
        r.code = rep.ok() ? ok : decided_false;
        return r;
      }
      MulTable t   = load_table(o);
      auto     rep = validate_table(t);
      json     vs  = json::array();
      for (size_t k = 0; k < rep.violations.size() && k < 10; ++k) {
        auto const& v = rep.violations[k];
        vs.push_back({t.name(v[0]), t.name(v[1]), t.name(v[2])});
      }
      r.body = {{"kind", "table"},
                {"n", t.size()},
                {"associative", rep.associative()},
                {"band", rep.band},
                {"violation_count", rep.violations.size()},
                {"violations", vs}};
      r.code = rep.associative() ? ok : decided_false;
      return r;
    }

    Result cmd_green(Options const& o) {
      MulTable t = load_table(o);
      require_semigroup(t);
      GreenData g = green_data(t);
      json      ds = json::array();
      for (uint32_t d = 0; d < g.num_d; ++d) {
        json members = json::array(), idem = json::array();
        for (element_index x : g.d_members[d]) {
          members.push_back(t.name(x));
        }
        for (element_index x : g.d_idempotents[d]) {
          idem.push_back(t.name(x));
        }
        ds.push_back({{"id", d}, {"members", members}, {"idempotents", idem}});
      }
      json covers = json::array();
      for (auto [a, b] : g.covers) {
        covers.push_back({a, b});
      }
      return {{{"n", t.size()},
               {"r_classes", g.num_r},
               {"l_classes", g.num_l},
               {"h_classes", g.num_h},
               {"d_classes", ds},
               {"covers", covers}}};
    }

    Result cmd_eggbox(Options const& o) {
      MulTable t = load_table(o);
      require_semigroup(t);
      Result r;
      r.raw = egg_box_dot(t, green_data(t));
      return r;
    }

    Result cmd_extract(Options const& o) {
      MulTable t = load_table(o);
      require_semigroup(t);
      Result r;
      r.raw = io::dump_biorder(extract_biorder(t));
      return r;
    }

    Result cmd_ig_green(Options const& o) {
      Biorder b = load_biorder(o);
      if (!o.e.empty() || !o.f.empty()) {
        element_index e = resolve(b, need(o.e, "e"));
        element_index f = resolve(b, need(o.f, "f"));
        std::string const rel = o.rel.empty() ? "D" : o.rel;
        GreenRel          gr  = rel == "R"   ? GreenRel::R
                                : rel == "L" ? GreenRel::L
                                : rel == "D"
                                    ? GreenRel::D
                                    : (fail(ErrorCode::malformed_input,
                                            "--rel must be R, L or D"),
                                       GreenRel::D);
        bool const        res = ig_green(b, e, f, gr);
        return {{{"e", b.name(e)}, {"f", b.name(f)}, {"rel", rel}, {"related", res}},
                res ? ok : decided_false};
      }
      IgClasses c    = ig_classes(b);
      auto      part = [&](std::vector<uint32_t> const& cls) {
        std::map<uint32_t, json> groups;
        for (element_index x = 0; x < b.size(); ++x) {
          groups[cls[x]].push_back(b.name(x));
        }
        json out = json::array();
        for (auto& [k, v] : groups) {
          out.push_back(v);
        }
        return out;
      };
      return {{{"R", part(c.r)}, {"L", part(c.l)}, {"D", part(c.d)}}};
    }

    Result cmd_regular(Options const& o) {
      IgContext ctx(load_biorder(o));
      Biorder const& b = ctx.biorder();
      Word           w = parse_word(b, need(o.word, "word"));
      auto           c = is_regular(ctx, w);
      if (!c) {
        return {{{"word", names_of(b, w)}, {"regular", false}}, decided_false};
      }
      return {{{"word", names_of(b, w)},
               {"regular", true},
               {"k", c->k},
               {"e", b.name(c->e)},
               {"r_witness", b.name(c->r_witness)},
               {"l_witness", b.name(c->l_witness)},
               {"right_states", c->right_states},
               {"left_states", c->left_states}}};
    }

    Result cmd_schreier(Options const& o) {
      IgContext      ctx(load_biorder(o));
      Biorder const& b = ctx.biorder();
      element_index  e = resolve(b, need(o.e, "e"));
      SchreierSystem s = schreier_system(ctx, e);
      json           states = json::array();
      for (uint32_t j = 1; j <= s.num_j(); ++j) {
        json tr = json::object();
        for (element_index f = 0; f < b.size(); ++f) {
          if (s.a(j, f) != 0) {
            tr[b.name(f)] = s.a(j, f);
          }
        }
        states.push_back({{"state", j},
                          {"rep", b.name(s.a.rep(j))},
                          {"r", names_of(b, s.r_of(j))},
                          {"r_prime", names_of(b, s.r_prime_of(j))},
                          {"transitions", tr}});
      }
      json rows = json::array();
      for (uint32_t i = 1; i <= s.num_i(); ++i) {
        json row = json::array();
        for (uint32_t j = 1; j <= s.num_j(); ++j) {
          int32_t x = s.a.cell[i - 1][j - 1];
          row.push_back(x < 0 ? json(nullptr) : json(b.name(static_cast<element_index>(x))));
        }
        rows.push_back(row);
      }
      return {{{"e", b.name(e)}, {"states", states}, {"cells", rows}}};
    }

    Result cmd_present_b(Options const& o) {
      IgContext      ctx(load_biorder(o));
      element_index  e = resolve(ctx.biorder(), need(o.e, "e"));
      Result         r;
      r.raw = io::dump_presentation(presentation_B(ctx, e));
      return r;
    }

    Result cmd_present_f(Options const& o) {
      IgContext      ctx(load_biorder(o));
      Biorder const& b  = ctx.biorder();
      element_index  e  = resolve(b, need(o.e, "e"));
      SchreierSystem s  = schreier_system(ctx, e);
      FPresentation  fp = presentation_F_detailed(ctx, s);
      json           sigma = json::array();
      for (auto const& q : fp.sigma) {
        sigma.push_back({{"i", q.i},
                         {"k", q.k},
                         {"j", q.j},
                         {"l", q.l},
                         {"f", b.name(q.f)},
                         {"type", q.left_right ? "LR" : "UD"}});
      }
      AbelianInvariants ab = abelian_invariants(fp.presentation);
      return {{{"e", b.name(e)},
               {"presentation", presentation_json(fp.presentation)},
               {"singular_squares", sigma},
               {"abelianization", {{"free_rank", ab.free_rank}, {"torsion", ab.torsion}}}}};
    }

    Result cmd_rees(Options const& o) {
      IgContext      ctx(load_biorder(o));
      Biorder const& b = ctx.biorder();
      ReesContext    rc(ctx, resolve(b, need(o.e, "e")));
      json           P = json::array();
      for (uint32_t j = 1; j <= rc.schreier().num_j(); ++j) {
        json row = json::array();
        for (uint32_t i = 1; i <= rc.schreier().num_i(); ++i) {
          auto p = rc.P(j, i);
          row.push_back(p ? gword_json(*p, rc.F().generators) : json(nullptr));
        }
        P.push_back(row);
      }
      json body = {{"e", b.name(rc.base())},
                   {"I", rc.i_labels()},
                   {"J", rc.j_labels()},
                   {"P", P},
                   {"F", presentation_json(rc.F())}};
      int code = ok;
      if (o.check > 0) {
        GroupOracle        oracle(rc.F(), strategy(o), o.cap);
        std::mt19937_64    rng(o.seed);
        SchreierSystem const& s = rc.schreier();
        size_t             passed = 0;
        for (size_t n = 0; n < o.check; ++n) {
          auto      ij = s.K[rng() % s.K.size()];
          GroupWord w;
          for (size_t len = rng() % 5; len > 0; --len) {
            w.push_back(gen_letter(static_cast<uint32_t>(rng() % rc.F().rank()),
                                   rng() % 2 == 1));
          }
          ReesTriple t{ij.first, w, static_cast<uint32_t>(1 + rng() % s.num_j())};
          ReesTriple back = pi(rc, rho(rc, t));
          if (back.i == t.i && back.j == t.j && oracle.equal(back.g, t.g)) {
            ++passed;
          }
        }
        body["check"] = {{"seed", o.seed}, {"trials", o.check}, {"passed", passed}};
        code          = passed == o.check ? ok : decided_false;
      }
      return {body, code};
    }

    Result cmd_pi(Options const& o) {
      IgContext      ctx(load_biorder(o));
      Biorder const& b = ctx.biorder();
      ReesContext    rc(ctx, resolve(b, need(o.e, "e")));
      Word           w = parse_word(b, need(o.word, "word"));
      return {{{"word", names_of(b, w)}, {"triple", triple_json(rc, pi(rc, w))}}};
    }

    Result cmd_rho(Options const& o) {
      IgContext      ctx(load_biorder(o));
      Biorder const& b = ctx.biorder();
      ReesContext    rc(ctx, resolve(b, need(o.e, "e")));
      ReesTriple     t{rc.i_of(need(o.i, "i")), parse_gword(rc.F(), o.g),
                   rc.j_of(need(o.j, "j"))};
      return {{{"triple", triple_json(rc, t)}, {"word", names_of(b, rho(rc, t))}}};
    }

    Result cmd_wp_regular(Options const& o) {
      IgContext      ctx(load_biorder(o));
      Biorder const& b = ctx.biorder();
      Word           u = parse_word(b, need(o.u, "u"));
      Word           v = parse_word(b, need(o.v, "v"));
      WpLevel        level = o.level == "F" ? WpLevel::F : WpLevel::B;
      if (o.level != "B" && o.level != "F") {
        fail(ErrorCode::malformed_input, "--level must be B or F");
      }
      WpResult res = regular_wp_detailed(ctx, u, v, oracle_maker(strategy(o), o.cap), level);
      json body = {{"u", names_of(b, u)},
                   {"v", names_of(b, v)},
                   {"equal", res.equal},
                   {"e", b.name(res.e)},
                   {"oracle", o.oracle},
                   {"level", o.level}};
      return {body, res.equal ? ok : decided_false};
    }

    Result cmd_normalize(Options const& o) {
      GroupPresentation     p = load_presentation(o);
      std::vector<uint32_t> B = p.subgroup.value_or(std::vector<uint32_t>{});
      Result                r;
      r.raw = io::dump_normalized(normalize_presentation(p, B));
      return r;
    }

    Result cmd_mihailova(Options const& o) {
      Mihailova m = mihailova(load_presentation(o));
      json      gens = json::array();
      for (auto const& w : m.bgens) {
        gens.push_back(gword_json(w, m.G.generators));
      }
      return {{{"G", presentation_json(m.G)}, {"subgroup_generators", gens}}};
    }

    NormalizedPresentation load_np(Options const& o) {
      if (!o.normalized.empty()) {
        return io::parse_normalized(io::read_file(o.normalized));
      }
      GroupPresentation     p = load_presentation(o);
      std::vector<uint32_t> B = p.subgroup.value_or(std::vector<uint32_t>{});
      return normalize_presentation(p, B);
    }

    std::string sidecar(std::string const& path) {
      std::filesystem::path p(path);
      return (p.parent_path() / (p.stem().string() + ".prov.json")).string();
    }

    Result cmd_build_bgh(Options const& o) {
      BghBand bb = build_bgh(load_np(o));
      check_bgh_structure(bb);
      std::string const out = need(o.out, "out");
      io::write_file(out, io::dump_table(bb.table));
      io::write_file(sidecar(out), io::dump_bgh_provenance(bb));
      return {{{"band", out},
               {"provenance", sidecar(out)},
               {"order", bb.table.size()},
               {"I", bb.I},
               {"J", bb.J}}};
    }

    Result cmd_demo(Options const& o) {
      std::string const path = need(o.band, "band");
      BghBand bb = io::load_bgh(io::read_file(path), io::read_file(sidecar(path)));
      IgContext   ctx(extract_biorder(bb.table));
      ReesContext k1 = bgh_rees_context(ctx, bb, 1);
      ReesContext k2 = bgh_rees_context(ctx, bb, 2);
      GroupOracle fo(k1.F(), OracleStrategy::finite_enumeration, o.cap);
      GroupOracle go(bb.np.presentation(), OracleStrategy::finite_enumeration, o.cap);
      BghSetting  s{bb, k1, k2, fo};
      GroupWord   w   = parse_gword(k1.F(), o.word);
      DemoResult  res = equality_demo(s, go, w);
      json        body{{"word", gword_json(w, k1.F().generators)}, {"equal", res.equal}};
      if (res.chain) {
        json bw = json::array();
        for (uint32_t x : res.b_word) {
          bw.push_back(bb.np.A[x]);
        }
        body["subgroup_word"] = bw;
        json steps            = json::array();
        for (auto const& st : res.chain->steps) {
          steps.push_back({{"type", st.type},
                           {"idempotent", st.f ? json(bb.table.name(*st.f)) : json(nullptr)},
                           {"u", triple_json(k1, st.u)},
                           {"v", triple_json(k2, st.v)}});
        }
        body["chain"] = {{"u0", triple_json(k1, res.chain->u0)},
                         {"v0", triple_json(k2, res.chain->v0)},
                         {"steps", steps},
                         {"verified", verify_chain(s, *res.chain)}};
      }
      return {body, res.equal ? ok : decided_false};
    }

    void print_text(json const& j, std::ostream& out) {
      size_t width = 0;
      for (auto const& [k, v] : j.items()) {
        width = std::max(width, k.size());
      }
      for (auto const& [k, v] : j.items()) {
        out << k << std::string(width - k.size() + 2, ' ')
            << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }

    int exit_for(ErrorCode c) {
      switch (c) {
        case ErrorCode::capability:
        case ErrorCode::overflow:
          return capability;
        case ErrorCode::internal:
          return internal_error;
        default:
          return input_error;
      }
    }

  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Regularity and the word problem in free idempotent generated "
                 "semigroups"};
    app.require_subcommand(1);
    Options o;

    using Handler = std::function<Result(Options const&)>;
    std::vector<std::pair<CLI::App*, Handler>> cmds;
    auto add = [&](char const* name, char const* help, Handler h) {
      CLI::App* sc = app.add_subcommand(name, help);
      sc->add_option("--format", o.format, "json or text")
          ->check(CLI::IsMember({"json", "text"}));
      sc->add_option("--cap", o.cap, "enumeration bound");
      sc->add_option("--seed", o.seed, "random seed");
      cmds.emplace_back(sc, std::move(h));
      return sc;
    };
    auto with_biorder = [&](CLI::App* sc) {
      sc->add_option("--biorder", o.biorder, "biorder JSON");
      sc->add_option("--table", o.table, "table JSON (the biorder is extracted)");
      return sc;
    };

    auto* v = add("validate", "check a table or a biorder", cmd_validate);
    v->add_option("--table", o.table);
    v->add_option("--biorder", o.biorder);
    add("green", "Green's relations of a table", cmd_green)
        ->add_option("--table", o.table)->required();
    add("eggbox", "egg-box diagram in DOT", cmd_eggbox)
        ->add_option("--table", o.table)->required();
    add("extract-biorder", "biorder of a table", cmd_extract)
        ->add_option("--table", o.table)->required();
    auto* ig = with_biorder(add("ig-green", "Green's relations of IG(E) on E", cmd_ig_green));
    ig->add_option("--e", o.e);
    ig->add_option("--f", o.f);
    ig->add_option("--rel", o.rel, "R, L or D");
    with_biorder(add("regular", "regularity certificate", cmd_regular))
        ->add_option("--word", o.word)->required();
    with_biorder(add("schreier", "Schreier system of D_e", cmd_schreier))
        ->add_option("--e", o.e)->required();
    with_biorder(add("present-b", "maximal subgroup on generators [j,f]", cmd_present_b))
        ->add_option("--e", o.e)->required();
    with_biorder(add("present-f", "maximal subgroup on generators f_ij", cmd_present_f))
        ->add_option("--e", o.e)->required();
    auto* rs = with_biorder(add("rees", "Rees matrix coordinates of D_e", cmd_rees));
    rs->add_option("--e", o.e)->required();
    rs->add_option("--check", o.check, "random pi(rho(t)) round trips");
    rs->add_option("--oracle", o.oracle, "free, enum or auto");
    auto* pc = with_biorder(add("pi", "Rees triple of a word", cmd_pi));
    pc->add_option("--e", o.e)->required();
    pc->add_option("--word", o.word)->required();
    auto* rc = with_biorder(add("rho", "word of a Rees triple", cmd_rho));
    rc->add_option("--e", o.e)->required();
    rc->add_option("--i", o.i)->required();
    rc->add_option("--g", o.g, "comma separated F-letters");
    rc->add_option("--j", o.j)->required();
    auto* wp = with_biorder(add("wp-regular", "equality of regular words", cmd_wp_regular));
    wp->add_option("--u", o.u)->required();
    wp->add_option("--v", o.v)->required();
    wp->add_option("--oracle", o.oracle, "free, enum or auto");
    wp->add_option("--level", o.level, "B or F");
    add("normalize", "relations of the form ab = c", cmd_normalize)
        ->add_option("--presentation", o.presentation)->required();
    add("mihailova", "fibre product in F(A) x F(A)", cmd_mihailova)
        ->add_option("--presentation", o.presentation)->required();
    auto* bg = add("build-bgh", "the band B_{G,H}", cmd_build_bgh);
    bg->add_option("--presentation", o.presentation);
    bg->add_option("--normalized", o.normalized);
    bg->add_option("--out", o.out)->required();
    auto* dm = add("demo-membership", "membership in H as an equality in IG", cmd_demo);
    dm->add_option("--band", o.band)->required();
    dm->add_option("--word", o.word, "comma separated F-letters");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::ParseError const& e) {
      err << e.what() << "\n";
      return input_error;
    }

    try {
      for (auto& [sc, h] : cmds) {
        if (sc->parsed()) {
          Result r = h(o);
          if (!r.raw.empty()) {
            out << r.raw;
          } else if (o.format == "text") {
            print_text(r.body, out);
          } else {
            out << r.body.dump(2) << "\n";
          }
          return r.code;
        }
      }
    } catch (Error const& e) {
      json j{{"error", {{"code", error_code_name(e.code())}, {"message", e.what()}}}};
      err << j.dump() << "\n";
      return exit_for(e.code());
    } catch (std::exception const& e) {
      json j{{"error", {{"code", "internal"}, {"message", e.what()}}}};
      err << j.dump() << "\n";
      return internal_error;
    }
    return input_error;
  }

}  // namespace igwp::cli
