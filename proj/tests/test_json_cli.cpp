#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "helpers.hpp"
#include "catlim/dot.hpp"
#include "catlim/json_io.hpp"
#include "catlim/padic.hpp"

using namespace catlim;
using namespace testutil;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  fs::path dir = fs::temp_directory_path() / "catlim_tests";
  fs::create_directories(dir);
  return dir;
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  REQUIRE(out.good());
  out << text;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  return {std::istreambuf_iterator<char>(in),
          std::istreambuf_iterator<char>()};
}

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  fs::path out = scratch_dir() / "cli_out.txt";
  std::string cmd = std::string(CATLIM_CLI_PATH) + " " + args + " > " +
                    out.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, read_file(out)};
}

}  // namespace

TEST_CASE("category JSON round trip") {
  FinCat c = chain_category(2);
  Json j = category_to_json(c);
  FinCat back = category_from_json(j);
  CHECK(back == c);
  CHECK(back.object_name(0) == c.object_name(0));
}

TEST_CASE("identities may be omitted and are auto-named") {
  Json j = Json::parse(R"({
    "objects": ["a", "b"],
    "morphisms": [{"name": "f", "dom": "a", "cod": "b"}]
  })");
  FinCat c = category_from_json(j);
  CHECK(c.object_count() == 2);
  CHECK(c.morphism_count() == 3);
  auto iso = find_isomorphism(share(std::move(c)), share(chain_category(1)));
  CHECK(iso.has_value());
}

TEST_CASE("unknown names and broken tables are parse or validation errors") {
  Json bad = Json::parse(R"({
    "objects": ["a"],
    "morphisms": [{"name": "f", "dom": "a", "cod": "zzz"}]
  })");
  try {
    category_from_json(bad);
    CHECK(false);
  } catch (const CatError& e) {
    CHECK(e.code() == Err::ParseError);
  }
}

TEST_CASE("diagram JSON round trip, including transport auto-fill") {
  PadicParams params{2, 2, 1};
  BiDiagram bd = padic_bidiagram(params);
  Json j = bidiagram_to_json(bd);

  BiDiagram back = bidiagram_from_json(j, scratch_dir());
  CHECK(back.prod.cat->same_shape(*bd.prod.cat));
  for (MorId m = 0; m < bd.prod.cat->morphism_count(); ++m)
    CHECK(same_mapping(back.underlying.transports[m],
                       bd.underlying.transports[m]));

  SUBCASE("generators suffice; composites are derived") {
    Json trimmed = j;
    trimmed["transports"] = Json::array();
    const FinCat& K = *bd.prod.cat;
    for (const Json& t : j["transports"]) {
      // keep only transports of generator morphisms (no non-identity
      // factorization)
      std::string name = t["morphism"].get<std::string>();
      MorId m = kNoMor;
      for (MorId cand = 0; cand < K.morphism_count(); ++cand)
        if (K.morphism_name(cand) == name) m = cand;
      REQUIRE(m != kNoMor);
      bool factors = false;
      for (MorId g = 0; g < K.morphism_count() && !factors; ++g)
        for (MorId f = 0; f < K.morphism_count() && !factors; ++f)
          if (!K.is_identity(g) && !K.is_identity(f) && K.composable(g, f) &&
              K.compose(g, f) == m)
            factors = true;
      if (!factors) trimmed["transports"].push_back(t);
    }
    REQUIRE(trimmed["transports"].size() < j["transports"].size());
    BiDiagram derived = bidiagram_from_json(trimmed, scratch_dir());
    for (MorId m = 0; m < bd.prod.cat->morphism_count(); ++m)
      CHECK(same_mapping(derived.underlying.transports[m],
                         bd.underlying.transports[m]));
  }

  SUBCASE("a diagram reader accepts the same file") {
    CatDiagram plain = diagram_from_json(j, scratch_dir());
    CHECK(plain.index->same_shape(*bd.prod.cat));
  }

  SUBCASE("fibers can live in referenced files") {
    fs::path dir = scratch_dir();
    write_file(dir / "fiber.json", category_to_json(terminal_category()).dump());
    Json d;
    d["index"] = category_to_json(chain_category(1));
    d["fibers"] = Json::array({"fiber.json", "fiber.json"});
    d["transports"] = Json::array();
    Json t = functor_to_json(identity_functor(share(terminal_category())));
    t["morphism"] = 1;  // the generator of chain(1)
    d["transports"].push_back(t);
    CatDiagram dd = diagram_from_json(d, dir);
    CHECK(dd.fibers[0]->object_count() == 1);
  }
}

TEST_CASE("dot export lists every object as a node") {
  FinCat c = chain_category(2);
  std::string dot = dot_category(c);
  std::size_t nodes = 0;
  for (std::size_t at = dot.find("[label="); at != std::string::npos;
       at = dot.find("[label=", at + 1))
    ++nodes;
  CHECK(nodes == c.object_count() + 3);  // 3 non-identity arrows
}

TEST_CASE("cli: validate rejects a broken table with exit 2") {
  fs::path dir = scratch_dir();
  // associativity violation as in the unit tests
  write_file(dir / "broken.json", R"({
    "objects": ["s"],
    "morphisms": [
      {"name": "one", "dom": "s", "cod": "s"},
      {"name": "a", "dom": "s", "cod": "s"},
      {"name": "b", "dom": "s", "cod": "s"}
    ],
    "identities": {"s": "one"},
    "composition": [
      ["a","a","b"], ["a","b","a"], ["b","a","one"], ["b","b","one"],
      ["one","a","a"], ["a","one","a"], ["one","b","b"], ["b","one","b"],
      ["one","one","one"]
    ]
  })");
  RunResult r = run_cli("validate --category " + (dir / "broken.json").string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("AssociativityViolation") != std::string::npos);

  write_file(dir / "ok.json", category_to_json(chain_category(2)).dump());
  RunResult ok = run_cli("validate --category " + (dir / "ok.json").string());
  CHECK(ok.exit_code == 0);
}

TEST_CASE("cli: padic then verify round trip") {
  fs::path dir = scratch_dir();
  fs::path grid = dir / "grid.json";
  RunResult gen =
      run_cli("padic --p 2 --M 2 --N 1 --emit " + grid.string());
  CHECK(gen.exit_code == 0);
  RunResult ver = run_cli("verify --diagram " + grid.string());
  CHECK(ver.exit_code == 0);
  CHECK(ver.output.find("\"all_pass\": true") != std::string::npos);
  CHECK(ver.output.find("p_iota_identity") != std::string::npos);
}

TEST_CASE("cli: holim dot node count matches the explicit object count") {
  fs::path dir = scratch_dir();
  // the projection tower Z/4 -> Z/2
  auto ixp = share(opposite_category(chain_category(1)));
  CatDiagram d;
  d.index = ixp;
  d.fibers = {share(discrete_category(2)), share(discrete_category(4))};
  d.transports.resize(ixp->morphism_count());
  d.transports[ixp->identity(0)] = identity_functor(d.fibers[0]);
  d.transports[ixp->identity(1)] = identity_functor(d.fibers[1]);
  Functor mod2;
  mod2.source = d.fibers[1];
  mod2.target = d.fibers[0];
  mod2.obj_map = {0, 1, 0, 1};
  mod2.mor_map = {0, 1, 0, 1};
  d.transports[ixp->hom(1, 0).front()] = mod2;
  d = validate_diagram(std::move(d));
  write_file(dir / "tower.json", diagram_to_json(d).dump());

  Holim h = holim_explicit(d);
  RunResult r =
      run_cli("holim --diagram " + (dir / "tower.json").string() +
              " --format dot");
  CHECK(r.exit_code == 0);
  std::size_t nodes = 0;
  for (std::size_t at = r.output.find("[label="); at != std::string::npos;
       at = r.output.find("[label=", at + 1))
    ++nodes;
  CHECK(nodes == h.cat->object_count());  // discrete: no arrows drawn
}

TEST_CASE("cli: interchange and diagnose round trips") {
  fs::path dir = scratch_dir();
  fs::path grid = dir / "grid11.json";
  REQUIRE(run_cli("padic --p 2 --M 1 --N 1 --emit " + grid.string()).exit_code ==
          0);
  RunResult inter = run_cli("interchange --diagram " + grid.string());
  CHECK(inter.exit_code == 0);
  CHECK(inter.output.find("\"iota\"") != std::string::npos);
  CHECK(inter.output.find("\"theta\"") != std::string::npos);

  write_file(dir / "ok2.json", category_to_json(chain_category(2)).dump());
  RunResult diag =
      run_cli("diagnose --category " + (dir / "ok2.json").string());
  CHECK(diag.exit_code == 0);
  CHECK(diag.output.find("\"pi0\"") != std::string::npos);
  CHECK(diag.output.find("\"groupoid\": false") != std::string::npos);
  CHECK(diag.output.find("\"final\"") != std::string::npos);
}

TEST_CASE("cli: CATLIM_SIZE_CAP caps constructions from the environment") {
  RunResult r = run_cli("padic --p 3 --M 2 --N 1", "CATLIM_SIZE_CAP=8,20");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("SizeCapExceeded") != std::string::npos);
  RunResult ok = run_cli("padic --p 3 --M 2 --N 1", "CATLIM_SIZE_CAP=64,512");
  CHECK(ok.exit_code == 0);
}

TEST_CASE("cli: identical seed gives byte-identical random verification") {
  RunResult a = run_cli("--seed 7 verify --random --count 2");
  RunResult b = run_cli("--seed 7 verify --random --count 2");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(a.output.find("\"seed\": 7") != std::string::npos);
}

TEST_CASE("cli: hocolim and holim-pullback consume diagram files") {
  fs::path dir = scratch_dir();
  Json d;
  d["index"] = category_to_json(terminal_category());
  d["fibers"] = Json::array({category_to_json(idempotent_monoid())});
  CatDiagram parsed = diagram_from_json(d, dir);
  write_file(dir / "point.json", d.dump());
  RunResult hoco = run_cli("hocolim --diagram " + (dir / "point.json").string());
  CHECK(hoco.exit_code == 0);
  RunResult pull =
      run_cli("holim-pullback --diagram " + (dir / "point.json").string());
  CHECK(pull.exit_code == 0);
  RunResult inter = run_cli("interchange --diagram " + (dir / "point.json").string());
  CHECK(inter.exit_code == 2);  // not a bidiagram: I and J are required
}
