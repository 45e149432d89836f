#include <catch_amalgamated.hpp>

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "io.hpp"

#include "corpus.hpp"

using namespace igwp;

namespace {
  std::string sample(std::string const& name) {
    return std::string(IGWP_SAMPLES_DIR) + "/" + name;
  }

  struct Run {
    int         code;
    std::string out, err;
  };

  Run run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path scratch(std::string const& name) {
    auto dir = std::filesystem::temp_directory_path() / "igwp-tests";
    std::filesystem::create_directories(dir);
    return dir / name;
  }
}  // namespace

TEST_CASE("tables round trip through JSON", "[io]") {
  for (MulTable const& t : corpus::small_bands(3)) {
    CHECK(io::parse_table(io::dump_table(t)) == t);
  }
  MulTable rb = tables::rectangular_band(2, 2);
  CHECK(io::parse_table(io::dump_table(rb)) == rb);
  CHECK(io::parse_table(io::read_file(sample("rb22.json"))) == rb);
}

TEST_CASE("malformed tables are rejected", "[io]") {
  auto code = [](std::string const& text) {
    try {
      io::parse_table(text);
    } catch (Error const& e) {
      return e.code();
    }
    return ErrorCode::internal;
  };
  CHECK(code("{") == ErrorCode::malformed_input);
  CHECK(code(R"({"n": 2, "table": [[0, 1]]})") == ErrorCode::malformed_input);
  CHECK(code(R"({"n": 1, "table": [[3]]})") == ErrorCode::malformed_input);
  CHECK(code(R"({"n": 1, "table": [[-1]]})") == ErrorCode::malformed_input);
  CHECK(code(R"({"n": 1, "table": [["x"]]})") == ErrorCode::malformed_input);
  CHECK(code(R"({"table": [[0]]})") == ErrorCode::malformed_input);
}

TEST_CASE("biorders round trip through JSON", "[io]") {
  Biorder b = extract_biorder(tables::rectangular_band(2, 2));
  Biorder c = io::parse_biorder(io::dump_biorder(b));
  CHECK(c.products() == b.products());
  CHECK(c.source() == BiorderSource::given);
  Biorder s = io::parse_biorder(io::read_file(sample("rb22-biorder.json")));
  CHECK(s.products() == b.products());
  CHECK_THROWS_AS(
      io::parse_biorder(R"({"m": 1, "products": [{"e": "x", "f": 0, "ef": 0}]})"),
      Error);
}

TEST_CASE("presentations round trip through JSON", "[io]") {
  for (auto const& g : corpus::named_groups()) {
    CHECK(io::parse_presentation(io::dump_presentation(g.p)) == g.p);
  }
  GroupPresentation z2 = io::parse_presentation(io::read_file(sample("z2.json")));
  CHECK(z2.rank() == 1);
  CHECK(z2.subgroup == std::vector<uint32_t>{});
  CHECK_THROWS_AS(io::parse_presentation(
                      R"({"generators": ["a"], "relations": [[["b"], []]]})"),
                  Error);

  NormalizedPresentation np = normalize_presentation(z2, {});
  NormalizedPresentation back = io::parse_normalized(io::dump_normalized(np));
  CHECK(back.A == np.A);
  CHECK(back.triples == np.triples);
  CHECK(back.B == np.B);
  CHECK(back.z == np.z);
  CHECK(back.inverse_of == np.inverse_of);
}

TEST_CASE("B_{G,H} reloads from its provenance", "[io]") {
  BghBand bb = build_bgh(normalize_presentation(
      io::parse_presentation(io::read_file(sample("z2.json"))), {}));
  std::string table = io::dump_table(bb.table);
  std::string prov  = io::dump_bgh_provenance(bb);
  BghBand     again = io::load_bgh(table, prov);
  CHECK(again.table == bb.table);
  CHECK(again.tags == bb.tags);
  CHECK(io::load_bgh(io::read_file(sample("bgh-z2.json")),
                     io::read_file(sample("bgh-z2.prov.json")))
            .table
        == bb.table);
  CHECK_THROWS_AS(io::load_bgh(io::dump_table(tables::chain(2)), prov), Error);
}

TEST_CASE("command line exit codes", "[cli]") {
  std::string const rb = sample("rb22.json"), rbb = sample("rb22-biorder.json");
  CHECK(run({"validate", "--table", rb}).code == cli::ok);
  CHECK(run({"green", "--table", rb}).code == cli::ok);
  CHECK(run({"green", "--table", sample("missing.json")}).code == cli::input_error);
  CHECK(run({"frobnicate"}).code == cli::input_error);
  CHECK(run({"regular", "--table", rb, "--word", "e11,e22"}).code == cli::ok);
  CHECK(run({"regular", "--table", rb, "--word", "e11,e99"}).code
        == cli::input_error);
  CHECK(run({"ig-green", "--biorder", rbb, "--e", "e11", "--f", "e12", "--rel", "R"})
            .code
        == cli::ok);
  CHECK(run({"ig-green", "--biorder", rbb, "--e", "e11", "--f", "e22", "--rel", "R"})
            .code
        == cli::decided_false);
  CHECK(run({"wp-regular", "--biorder", rbb, "--u", "e11", "--v", "e11,e22,e11",
             "--oracle", "free"})
            .code
        == cli::decided_false);
  CHECK(run({"wp-regular", "--biorder", rbb, "--u", "e12", "--v", "e11,e12",
             "--level", "F"})
            .code
        == cli::ok);
  CHECK(run({"wp-regular", "--biorder", rbb, "--u", "e11", "--v", "e11",
             "--oracle", "enum", "--cap", "10"})
            .code
        == cli::capability);
  CHECK(run({"rees", "--table", rb, "--e", "e11", "--check", "20", "--seed", "3"})
            .code
        == cli::ok);

  Run f = run({"present-f", "--table", rb, "--e", "e11"});
  CHECK(f.code == cli::ok);
  CHECK(f.out.find("f1_1") != std::string::npos);

  Run bad = run({"schreier", "--table", rb, "--e", "nope"});
  CHECK(bad.code == cli::input_error);
  CHECK(bad.err.find("\"error\"") != std::string::npos);
}

TEST_CASE("build-bgh and demo-membership", "[cli]") {
  auto out = scratch("band.json");
  Run  b   = run({"build-bgh", "--presentation", sample("z2.json"), "--out",
                  out.string()});
  REQUIRE(b.code == cli::ok);
  CHECK(std::filesystem::exists(scratch("band.prov.json")));
  CHECK(run({"demo-membership", "--band", out.string(), "--word", "fa_inf"}).code
        == cli::decided_false);
  CHECK(run({"demo-membership", "--band", out.string(), "--word",
             "fa_inf,fa_inf"})
            .code
        == cli::ok);
  CHECK(run({"demo-membership", "--band", out.string(), "--word", "nonsense"}).code
        == cli::input_error);

  auto full = scratch("band-full.json");
  REQUIRE(run({"build-bgh", "--presentation", sample("z2-full.json"), "--out",
               full.string()})
              .code
          == cli::ok);
  CHECK(run({"demo-membership", "--band", full.string(), "--word", "fa_inf"}).code
        == cli::ok);
}
