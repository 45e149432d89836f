//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// JSON file formats.

#include "io.hpp"

#include <fstream>    // for ifstream, ofstream
#include <map>        // for map
#include <sstream>    // for stringstream

#include <json.hpp>

#include "igwp/error.hpp"
#include "igwp/group/word.hpp"

namespace igwp::io {

  using json = nlohmann::ordered_json;

  namespace {

    json parse(std::string const& text) {
      try {
        return json::parse(text);
      } catch (json::exception const& e) {
        fail(ErrorCode::malformed_input, std::string("invalid JSON: ") + e.what());
      }
    }

    template <typename F>
    auto guard(F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (json::exception const& e) {
        fail(ErrorCode::malformed_input,
             std::string("unexpected JSON shape: ") + e.what());
      }
    }

    uint32_t resolve(json const&                     x,
                     std::vector<std::string> const& names,
                     size_t                          n,
                     char const*                     what) {
      if (x.is_number_unsigned() || x.is_number_integer()) {
        auto v = x.get<int64_t>();
        if (v < 0 || static_cast<size_t>(v) >= n) {
          fail(ErrorCode::malformed_input,
               std::string(what) + " index out of range");
        }
        return static_cast<uint32_t>(v);
      }
      auto s = x.get<std::string>();
      for (size_t k = 0; k < names.size(); ++k) {
        if (names[k] == s) {
          return static_cast<uint32_t>(k);
        }
      }
      fail(ErrorCode::malformed_input,
           std::string("unknown ") + what + " '" + s + "'");
    }

    GroupWord parse_group_word(json const&                     w,
                               std::vector<std::string> const& gens) {
      GroupWord out;
      for (auto const& x : w) {
        out.push_back(parse_letter(x.get<std::string>(), gens));
      }
      return out;
    }

    json group_word_json(GroupWord const&                w,
                         std::vector<std::string> const& gens) {
      json out = json::array();
      for (int32_t x : w) {
        out.push_back(letter_name(x, gens));
      }
      return out;
    }

    json normalized_json(NormalizedPresentation const& np) {
      json j;
      j["generators"] = np.A;
      j["identity"]   = np.A[np.z];
      json tr         = json::array();
      for (auto const& t : np.triples) {
        tr.push_back({np.A[t[0]], np.A[t[1]], np.A[t[2]]});
      }
      j["triples"] = tr;
      json sg      = json::array();
      for (uint32_t b : np.B) {
        sg.push_back(np.A[b]);
      }
      j["subgroup"] = sg;
      json inv      = json::array();
      for (uint32_t a = 0; a < np.A.size(); ++a) {
        if (np.inverse_of[a] >= 0 && static_cast<uint32_t>(np.inverse_of[a]) >= a) {
          inv.push_back({np.A[a], np.A[static_cast<uint32_t>(np.inverse_of[a])]});
        }
      }
      j["inverses"] = inv;
      return j;
    }

    NormalizedPresentation normalized_from(json const& j) {
      NormalizedPresentation np;
      np.A         = j.at("generators").get<std::vector<std::string>>();
      size_t const n = np.A.size();
      np.z         = resolve(j.at("identity"), np.A, n, "generator");
      for (auto const& t : j.at("triples")) {
        if (t.size() != 3) {
          fail(ErrorCode::malformed_input, "a triple needs three letters");
        }
        np.triples.push_back({resolve(t[0], np.A, n, "generator"),
                              resolve(t[1], np.A, n, "generator"),
                              resolve(t[2], np.A, n, "generator")});
      }
      np.inverse_of.assign(n, -1);
      np.inverse_of[np.z] = static_cast<int32_t>(np.z);
      if (j.contains("inverses")) {
        for (auto const& p : j.at("inverses")) {
          uint32_t a = resolve(p.at(0), np.A, n, "generator");
          uint32_t b = resolve(p.at(1), np.A, n, "generator");
          np.inverse_of[a] = static_cast<int32_t>(b);
          np.inverse_of[b] = static_cast<int32_t>(a);
        }
      }
      for (auto const& b : j.at("subgroup")) {
        np.B.push_back(resolve(b, np.A, n, "generator"));
      }
      std::sort(np.B.begin(), np.B.end());
      np.B.erase(std::unique(np.B.begin(), np.B.end()), np.B.end());
      for (uint32_t g = 0; g < n; ++g) {
        np.from_original.push_back(g);
        np.as_original.push_back({gen_letter(g)});
      }
      np.validate();
      return np;
    }

  }  // namespace

  MulTable parse_table(std::string const& text) {
    json const j = parse(text);
    return guard([&] {
      auto const n = j.at("n").get<size_t>();
      auto const& rows = j.at("table");
      if (rows.size() != n) {
        fail(ErrorCode::malformed_input, "table needs n rows");
      }
      std::vector<element_index> entries;
      for (auto const& row : rows) {
        if (row.size() != n) {
          fail(ErrorCode::malformed_input, "table rows need n entries");
        }
        for (auto const& x : row) {
          auto v = x.get<int64_t>();
          if (v < 0) {
            fail(ErrorCode::malformed_input, "negative table entry");
          }
          entries.push_back(static_cast<element_index>(v));
        }
      }
      std::vector<std::string> names;
      if (j.contains("names")) {
        names = j.at("names").get<std::vector<std::string>>();
      }
      return MulTable(n, std::move(entries), std::move(names));
    });
  }

  std::string dump_table(MulTable const& t) {
    json j;
    j["n"]     = t.size();
    json rows  = json::array();
    for (element_index a = 0; a < t.size(); ++a) {
      json row = json::array();
      for (element_index b = 0; b < t.size(); ++b) {
        row.push_back(t(a, b));
      }
      rows.push_back(row);
    }
    j["table"] = rows;
    if (t.has_names()) {
      j["names"] = t.names();
    }
    return j.dump(2) + "\n";
  }

  Biorder parse_biorder(std::string const& text) {
    json const j = parse(text);
    return guard([&] {
      auto const               m = j.at("m").get<size_t>();
      std::vector<std::string> names;
      if (j.contains("names")) {
        names = j.at("names").get<std::vector<std::string>>();
      }
      std::vector<int32_t> products(m * m, Biorder::undefined);
      for (size_t e = 0; e < m; ++e) {
        products[e * m + e] = static_cast<int32_t>(e);
      }
      for (auto const& p : j.at("products")) {
        uint32_t e  = resolve(p.at("e"), names, m, "idempotent");
        uint32_t f  = resolve(p.at("f"), names, m, "idempotent");
        uint32_t ef = resolve(p.at("ef"), names, m, "idempotent");
        products[e * m + f] = static_cast<int32_t>(ef);
      }
      return Biorder(m, std::move(products), std::move(names),
                     BiorderSource::given);
    });
  }

  std::string dump_biorder(Biorder const& b) {
    json j;
    j["m"] = b.size();
    std::vector<std::string> names;
    for (element_index e = 0; e < b.size(); ++e) {
      names.push_back(b.name(e));
    }
    j["names"]    = names;
    j["source"]   = biorder_source_name(b.source());
    json products = json::array();
    for (element_index e = 0; e < b.size(); ++e) {
      for (element_index f = 0; f < b.size(); ++f) {
        int32_t g = b(e, f);
        if (g != Biorder::undefined) {
          products.push_back({{"e", names[e]},
                              {"f", names[f]},
                              {"ef", names[static_cast<size_t>(g)]}});
        }
      }
    }
    j["products"] = products;
    return j.dump(2) + "\n";
  }

  GroupPresentation parse_presentation(std::string const& text) {
    json const j = parse(text);
    return guard([&] {
      GroupPresentation p;
      p.generators = j.at("generators").get<std::vector<std::string>>();
      for (auto const& r : j.at("relations")) {
        if (r.size() != 2) {
          fail(ErrorCode::malformed_input, "a relation needs two sides");
        }
        p.relations.emplace_back(parse_group_word(r[0], p.generators),
                                 parse_group_word(r[1], p.generators));
      }
      if (j.contains("subgroup")) {
        std::vector<uint32_t> sg;
        for (auto const& b : j.at("subgroup")) {
          sg.push_back(resolve(b, p.generators, p.rank(), "generator"));
        }
        p.subgroup = sg;
      }
      p.validate();
      return p;
    });
  }

  std::string dump_presentation(GroupPresentation const& p) {
    json j;
    j["generators"] = p.generators;
    json rels       = json::array();
    for (auto const& [u, v] : p.relations) {
      rels.push_back(json::array({group_word_json(u, p.generators),
                                  group_word_json(v, p.generators)}));
    }
    j["relations"] = rels;
    if (p.subgroup) {
      json sg = json::array();
      for (uint32_t b : *p.subgroup) {
        sg.push_back(p.generators[b]);
      }
      j["subgroup"] = sg;
    }
    return j.dump(2) + "\n";
  }

  NormalizedPresentation parse_normalized(std::string const& text) {
    json const j = parse(text);
    return guard([&] { return normalized_from(j); });
  }

  std::string dump_normalized(NormalizedPresentation const& np) {
    return normalized_json(np).dump(2) + "\n";
  }

  std::string dump_bgh_provenance(BghBand const& bb) {
    json j;
    j["normalized"] = normalized_json(bb.np);
    j["I"]          = bb.I;
    j["J"]          = bb.J;
    json tags       = json::array();
    for (element_index x = 0; x < bb.table.size(); ++x) {
      BghTag const& t = bb.tags[x];
      json          e;
      e["name"] = bb.table.name(x);
      e["part"] = bgh_part_name(t.part);
      if (t.part == BghPart::K_H || t.part == BghPart::K1
          || t.part == BghPart::K2) {
        e["i"] = bb.I[t.x];
        e["j"] = bb.J[t.y];
      }
      tags.push_back(e);
    }
    j["tags"] = tags;
    return j.dump(2) + "\n";
  }

  BghBand load_bgh(std::string const& table_text,
                   std::string const& provenance_text) {
    MulTable const t = parse_table(table_text);
    json const     j = parse(provenance_text);
    BghBand bb = guard([&] { return build_bgh(normalized_from(j.at("normalized"))); });
    if (!(bb.table == t)) {
      fail(ErrorCode::malformed_input,
           "band table does not match the construction from its provenance");
    }
    return bb;
  }

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      fail(ErrorCode::malformed_input, "cannot read '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write_file(std::string const& path, std::string const& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      fail(ErrorCode::malformed_input, "cannot write '" + path + "'");
    }
  }

}  // namespace igwp::io
