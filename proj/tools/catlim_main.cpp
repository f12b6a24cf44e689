// catlim: compute Grothendieck constructions, homotopy limits of finite
// diagrams of finite categories, and verify the interchange retract.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "catlim/corpus.hpp"
#include "catlim/dot.hpp"
#include "catlim/json_io.hpp"

namespace {

using namespace catlim;

struct GlobalOpts {
  std::optional<std::size_t> max_objects, max_morphisms;
  unsigned long long seed = 0;
  std::string out_path;  // empty: stdout
};

SizeCap caps_from_env_and_flags(const GlobalOpts& g) {
  SizeCap cap = global_size_cap();
  if (const char* env = std::getenv("CATLIM_SIZE_CAP")) {
    std::string s(env);
    auto comma = s.find(',');
    try {
      if (comma == std::string::npos) {
        cap.max_objects = std::stoull(s);
        cap.max_morphisms = cap.max_objects;
      } else {
        cap.max_objects = std::stoull(s.substr(0, comma));
        cap.max_morphisms = std::stoull(s.substr(comma + 1));
      }
    } catch (const std::exception&) {
      throw CatError(Err::InvalidParameter, "CATLIM_SIZE_CAP must be N or N,M");
    }
  }
  if (g.max_objects) cap.max_objects = *g.max_objects;
  if (g.max_morphisms) cap.max_morphisms = *g.max_morphisms;
  return cap;
}

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(g.out_path);
  if (!out) throw CatError(Err::ParseError, "cannot write " + g.out_path);
  out << text << "\n";
}

void emit_json(const GlobalOpts& g, Json j) {
  j["seed"] = g.seed;
  emit(g, j.dump(2));
}

int failure_json(const GlobalOpts& g, const CatError& e) {
  Json j;
  j["error"] = Json{{"code", err_name(e.code())}, {"message", e.what()}};
  j["seed"] = g.seed;
  std::cout << j.dump(2) << "\n";
  return 2;
}

int run_validate(const GlobalOpts& g, const std::string& path,
                 const SizeCap& cap) {
  FinCat c = read_category_file(path, cap);
  Json j;
  j["valid"] = true;
  j["objects"] = c.object_count();
  j["morphisms"] = c.morphism_count();
  emit_json(g, j);
  return 0;
}

int run_colimit_like(const GlobalOpts& g, const std::string& path,
                     const std::string& format, const std::string& codecs_path,
                     const SizeCap& cap, const std::string& which) {
  CatDiagram d = read_diagram_file(path, cap);
  Json codecs;
  std::string dot_text;
  Json body;
  if (which == "hocolim") {
    Hocolim h = hocolim(d, cap);
    body = category_to_json(*h.cat);
    body["projection"] = functor_to_json(h.projection);
    dot_text = dot_hocolim(h);
    codecs["objects"] = Json::array();
    for (const GrothObject& o : h.objects)
      codecs["objects"].push_back(Json{{"i", o.i}, {"x", o.x}});
    codecs["morphisms"] = Json::array();
    for (const GrothMorphism& m : h.morphisms)
      codecs["morphisms"].push_back(Json{{"alpha", m.alpha}, {"rho", m.rho}});
  } else if (which == "holim") {
    Holim h = holim_explicit(d, cap);
    body = category_to_json(*h.cat);
    dot_text = dot_category(*h.cat);
    codecs["objects"] = Json::array();
    for (const HolimObject& o : h.objects)
      codecs["objects"].push_back(Json{{"x", o.x}, {"rho", o.rho}});
    codecs["morphisms"] = Json::array();
    for (const HolimMorphism& m : h.morphisms)
      codecs["morphisms"].push_back(Json{{"f", m.f}});
  } else {  // holim-pullback
    HolimPullback pb = holim_pullback(d, cap);
    body = category_to_json(*pb.cat);
    dot_text = dot_category(*pb.cat);
    codecs["sections"] = Json::array();
    for (ObjId o = 0; o < pb.cat->object_count(); ++o)
      codecs["sections"].push_back(functor_to_json(pb.section(o)));
  }
  if (!codecs_path.empty()) {
    std::ofstream out(codecs_path);
    if (!out) throw CatError(Err::ParseError, "cannot write " + codecs_path);
    codecs["seed"] = g.seed;
    out << codecs.dump(2) << "\n";
  }
  if (format == "dot")
    emit(g, dot_text);
  else
    emit_json(g, body);
  return 0;
}

int run_interchange(const GlobalOpts& g, const std::string& path,
                    const SizeCap& cap) {
  BiDiagram bd = read_bidiagram_file(path, cap);
  InterchangePair pair = inner_outer(bd, cap);
  Functor io = iota(pair);
  Json j;
  j["A"] = category_to_json(*pair.A.cat);
  j["B"] = category_to_json(*pair.B.cat);
  j["iota"] = functor_to_json(io);
  std::vector<PseudoFinal> pfs = find_pseudo_finals(*bd.I());
  if (!pfs.empty()) {
    j["p"] = functor_to_json(retraction_p(pair, pfs.front()));
    j["theta"] = nat_trans_to_json(theta(pair, pfs.front()));
    j["pseudo_final"] = Json{{"e", pfs.front().e}, {"eps", pfs.front().eps}};
  }
  emit_json(g, j);
  return 0;
}

int run_verify(const GlobalOpts& g, const std::string& path, bool random,
               std::size_t count, const SizeCap& cap) {
  if (!random) {
    BiDiagram bd = read_bidiagram_file(path, cap);
    RetractReport rep = verify_retract(bd, cap);
    emit_json(g, retract_report_to_json(rep));
    return rep.all_pass() ? 0 : 1;
  }
  CorpusRng rng(g.seed);
  CorpusOptions opts;
  Json j;
  j["instances"] = Json::array();
  bool all = true;
  for (std::size_t k = 0; k < count; ++k) {
    BiDiagram bd = random_bidiagram(rng, opts, cap);
    RetractReport rep = verify_retract(bd, cap);
    Json inst = retract_report_to_json(rep);
    inst["instance"] = k;
    j["instances"].push_back(inst);
    all = all && rep.all_pass();
  }
  j["count"] = count;
  j["all_pass"] = all;
  emit_json(g, j);
  return all ? 0 : 1;
}

int run_diagnose(const GlobalOpts& g, const std::string& path,
                 std::size_t max_dim, const SizeCap& cap) {
  FinCat c = read_category_file(path, cap);
  emit_json(g, diagnostics_to_json(c, max_dim));
  return 0;
}

int run_padic(const GlobalOpts& g, unsigned p, unsigned M, unsigned N,
              const std::string& emit_path, const SizeCap& cap) {
  BiDiagram bd = padic_bidiagram(PadicParams{p, M, N}, cap);
  Json j = bidiagram_to_json(bd);
  if (!emit_path.empty()) {
    std::ofstream out(emit_path);
    if (!out) throw CatError(Err::ParseError, "cannot write " + emit_path);
    j["seed"] = g.seed;
    out << j.dump(2) << "\n";
    Json note;
    note["emitted"] = emit_path;
    emit_json(g, note);
  } else {
    emit_json(g, j);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "homotopy limits and colimits of finite diagrams of finite categories"};
  app.require_subcommand(1);

  GlobalOpts g;
  app.add_option("--seed", g.seed, "random seed, recorded in every output");
  app.add_option("--out", g.out_path, "write output here instead of stdout");
  std::size_t mo = 0, mm = 0;
  auto* mo_opt = app.add_option("--max-objects", mo, "per-category object cap");
  auto* mm_opt =
      app.add_option("--max-morphisms", mm, "per-category morphism cap");

  std::string category_path, diagram_path, format = "json", codecs_path,
              emit_path;
  bool random = false;
  std::size_t count = 10, max_dim = 3;
  unsigned p = 2, M = 1, N = 1;

  auto* validate = app.add_subcommand("validate", "check a category file");
  validate->add_option("--category", category_path)->required();

  auto* hoco = app.add_subcommand("hocolim", "Grothendieck construction");
  hoco->add_option("--diagram", diagram_path)->required();
  hoco->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  hoco->add_option("--codecs", codecs_path);

  auto* holi = app.add_subcommand("holim", "explicit homotopy limit");
  holi->add_option("--diagram", diagram_path)->required();
  holi->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  holi->add_option("--codecs", codecs_path);

  auto* pull = app.add_subcommand("holim-pullback",
                                  "homotopy limit via the functor category");
  pull->add_option("--diagram", diagram_path)->required();
  pull->add_option("--format", format)->check(CLI::IsMember({"json", "dot"}));
  pull->add_option("--codecs", codecs_path);

  auto* inter = app.add_subcommand(
      "interchange",
      "build both interchange categories and the comparison functors");
  inter->add_option("--diagram", diagram_path)->required();

  auto* verify = app.add_subcommand("verify", "run the retract checks");
  verify->add_option("--diagram", diagram_path);
  verify->add_flag("--random", random, "verify a seeded random corpus");
  verify->add_option("--count", count, "corpus size for --random");

  auto* diag = app.add_subcommand(
      "diagnose", "nerve counts, groupoid test, initial/final search, pi0");
  diag->add_option("--category", category_path)->required();
  diag->add_option("--max-dim", max_dim);

  auto* padic = app.add_subcommand("padic", "generate the modular tower grid");
  padic->add_option("--p", p)->required();
  padic->add_option("--M", M)->required();
  padic->add_option("--N", N)->required();
  padic->add_option("--emit", emit_path);

  // Let global flags appear after the subcommand as well.
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  CLI11_PARSE(app, argc, argv);
  if (mo_opt->count()) g.max_objects = mo;
  if (mm_opt->count()) g.max_morphisms = mm;

  try {
    SizeCap cap = caps_from_env_and_flags(g);
    if (validate->parsed()) return run_validate(g, category_path, cap);
    if (hoco->parsed())
      return run_colimit_like(g, diagram_path, format, codecs_path, cap,
                              "hocolim");
    if (holi->parsed())
      return run_colimit_like(g, diagram_path, format, codecs_path, cap,
                              "holim");
    if (pull->parsed())
      return run_colimit_like(g, diagram_path, format, codecs_path, cap,
                              "holim-pullback");
    if (inter->parsed()) return run_interchange(g, diagram_path, cap);
    if (verify->parsed()) {
      if (!random && diagram_path.empty()) {
        std::cerr << "verify: --diagram or --random required\n";
        return 2;
      }
      return run_verify(g, diagram_path, random, count, cap);
    }
    if (diag->parsed()) return run_diagnose(g, category_path, max_dim, cap);
    if (padic->parsed()) return run_padic(g, p, M, N, emit_path, cap);
  } catch (const CatError& e) {
    return failure_json(g, e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
