#include "catlim/json_io.hpp"

#include <fstream>
#include <map>

namespace catlim {

namespace {

// Serialized names must be unique keys; labels from constructed categories
// already are, but user input is not trusted.
std::vector<std::string> unique_names(const std::vector<std::string>& in) {
  std::vector<std::string> out;
  std::map<std::string, int> seen;
  for (const std::string& n : in) {
    int k = seen[n]++;
    out.push_back(k == 0 ? n : n + "#" + std::to_string(k));
  }
  return out;
}

Json parse_text(const std::string& text, const std::string& what) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw CatError(Err::ParseError, what + ": invalid JSON");
  return j;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw CatError(Err::ParseError, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

FinCat category_from_value(const Json& v, const std::filesystem::path& base,
                           const SizeCap& cap) {
  if (v.is_string())
    return read_category_file(base / v.get<std::string>(), cap);
  return category_from_json(v, cap);
}

MorId morphism_ref(const FinCat& c, const Json& v, const std::string& what) {
  if (v.is_number_integer()) {
    long long raw = v.get<long long>();
    if (raw < 0 || static_cast<std::size_t>(raw) >= c.morphism_count())
      throw CatError(Err::ParseError, what + ": morphism index out of range");
    return static_cast<MorId>(raw);
  }
  if (v.is_string()) {
    std::string name = v.get<std::string>();
    for (MorId m = 0; m < c.morphism_count(); ++m)
      if (c.morphism_name(m) == name) return m;
    throw CatError(Err::ParseError, what + ": unknown morphism '" + name + "'");
  }
  throw CatError(Err::ParseError, what + ": morphism reference must be a name or index");
}

Functor functor_from_json(const Json& j, FinCatPtr source, FinCatPtr target,
                          const std::string& what) {
  if (!j.contains("obj_map") || !j.contains("mor_map"))
    throw CatError(Err::ParseError, what + ": obj_map/mor_map required");
  Functor f;
  f.source = std::move(source);
  f.target = std::move(target);
  for (const Json& o : j.at("obj_map")) f.obj_map.push_back(o.get<ObjId>());
  for (const Json& m : j.at("mor_map")) f.mor_map.push_back(m.get<MorId>());
  if (f.obj_map.size() != f.source->object_count() ||
      f.mor_map.size() != f.source->morphism_count())
    throw CatError(Err::ParseError, what + ": mapping sizes do not match");
  for (ObjId o : f.obj_map)
    if (o >= f.target->object_count())
      throw CatError(Err::ParseError, what + ": obj_map entry out of range");
  for (MorId m : f.mor_map)
    if (m >= f.target->morphism_count())
      throw CatError(Err::ParseError, what + ": mor_map entry out of range");
  return f;
}

// Shared by diagram and bidiagram readers once the index is known.
CatDiagram diagram_body_from_json(const Json& j, FinCatPtr index,
                                  const std::filesystem::path& base,
                                  const SizeCap& cap) {
  CatDiagram d;
  d.index = std::move(index);
  if (!j.contains("fibers") || !j.at("fibers").is_array() ||
      j.at("fibers").size() != d.index->object_count())
    throw CatError(Err::ParseError, "diagram: one fiber per index object required");
  for (const Json& f : j.at("fibers"))
    d.fibers.push_back(share(category_from_value(f, base, cap)));

  std::vector<Functor> ts(d.index->morphism_count());
  std::vector<bool> assigned(d.index->morphism_count(), false);
  for (ObjId i = 0; i < d.index->object_count(); ++i) {
    ts[d.index->identity(i)] = identity_functor(d.fibers[i]);
    assigned[d.index->identity(i)] = true;
  }
  if (j.contains("transports"))
    for (const Json& t : j.at("transports")) {
      MorId m = morphism_ref(*d.index, t.at("morphism"), "transport");
      if (assigned[m] && !d.index->is_identity(m))
        throw CatError(Err::ParseError,
                       "transport for " + d.index->morphism_name(m) +
                           " given twice");
      ts[m] = functor_from_json(t, d.fibers[d.index->dom(m)],
                                d.fibers[d.index->cod(m)],
                                "transport of " + d.index->morphism_name(m));
      assigned[m] = true;
    }
  // Close under composition: generators determine the rest.
  bool progress = true;
  while (progress) {
    progress = false;
    for (MorId g = 0; g < d.index->morphism_count(); ++g)
      for (MorId f = 0; f < d.index->morphism_count(); ++f) {
        if (!d.index->composable(g, f)) continue;
        MorId gf = d.index->compose(g, f);
        if (assigned[gf] || !assigned[g] || !assigned[f]) continue;
        ts[gf] = compose_functors(ts[g], ts[f]);
        assigned[gf] = true;
        progress = true;
      }
  }
  for (MorId m = 0; m < d.index->morphism_count(); ++m)
    if (!assigned[m])
      throw CatError(Err::ParseError,
                     "transport for " + d.index->morphism_name(m) +
                         " missing and not derivable");
  d.transports = std::move(ts);
  return validate_diagram(std::move(d));
}

}  // namespace

Json category_to_json(const FinCat& c) {
  Json j;
  std::vector<std::string> onames, mnames;
  for (ObjId o = 0; o < c.object_count(); ++o)
    onames.push_back(c.object_name(o));
  for (MorId m = 0; m < c.morphism_count(); ++m)
    mnames.push_back(c.morphism_name(m));
  onames = unique_names(onames);
  mnames = unique_names(mnames);

  j["objects"] = onames;
  j["morphisms"] = Json::array();
  for (MorId m = 0; m < c.morphism_count(); ++m)
    j["morphisms"].push_back({{"name", mnames[m]},
                              {"dom", onames[c.dom(m)]},
                              {"cod", onames[c.cod(m)]}});
  j["identities"] = Json::object();
  for (ObjId o = 0; o < c.object_count(); ++o)
    j["identities"][onames[o]] = mnames[c.identity(o)];
  j["composition"] = Json::array();
  for (MorId g = 0; g < c.morphism_count(); ++g)
    for (MorId f = 0; f < c.morphism_count(); ++f)
      if (c.composable(g, f))
        j["composition"].push_back(
            {mnames[g], mnames[f], mnames[c.compose(g, f)]});
  return j;
}

FinCat category_from_json(const Json& j, const SizeCap& cap) {
  if (!j.is_object() || !j.contains("objects") || !j.contains("morphisms"))
    throw CatError(Err::ParseError, "category: objects and morphisms required");
  RawCategory raw;
  std::map<std::string, ObjId> obj_of;
  for (const Json& o : j.at("objects")) {
    std::string name = o.get<std::string>();
    if (obj_of.count(name))
      throw CatError(Err::ParseError, "duplicate object name '" + name + "'");
    obj_of[name] = static_cast<ObjId>(raw.object_names.size());
    raw.object_names.push_back(name);
  }
  raw.object_count = raw.object_names.size();

  std::map<std::string, MorId> mor_of;
  auto obj_ref = [&](const Json& v) {
    std::string name = v.get<std::string>();
    auto it = obj_of.find(name);
    if (it == obj_of.end())
      throw CatError(Err::ParseError, "unknown object '" + name + "'");
    return it->second;
  };
  for (const Json& m : j.at("morphisms")) {
    std::string name = m.at("name").get<std::string>();
    if (mor_of.count(name))
      throw CatError(Err::ParseError, "duplicate morphism name '" + name + "'");
    mor_of[name] = static_cast<MorId>(raw.morphisms.size());
    raw.morphisms.push_back({obj_ref(m.at("dom")), obj_ref(m.at("cod")), name});
  }
  auto mor_ref = [&](const Json& v) {
    std::string name = v.get<std::string>();
    auto it = mor_of.find(name);
    if (it == mor_of.end())
      throw CatError(Err::ParseError, "unknown morphism '" + name + "'");
    return it->second;
  };

  if (j.contains("identities")) {
    for (auto it = j.at("identities").begin(); it != j.at("identities").end();
         ++it)
      raw.identities.emplace_back(obj_ref(Json(it.key())), mor_ref(it.value()));
  }
  // Objects without a declared identity get a synthesized, auto-named one.
  {
    std::vector<bool> has_id(raw.object_count, false);
    for (auto [o, m] : raw.identities) has_id[o] = true;
    for (ObjId o = 0; o < raw.object_count; ++o) {
      if (has_id[o]) continue;
      std::string name = "1_" + raw.object_names[o];
      while (mor_of.count(name)) name += "'";
      MorId m = static_cast<MorId>(raw.morphisms.size());
      mor_of[name] = m;
      raw.morphisms.push_back({o, o, name});
      raw.identities.emplace_back(o, m);
    }
  }
  if (j.contains("composition"))
    for (const Json& e : j.at("composition")) {
      if (!e.is_array() || e.size() != 3)
        throw CatError(Err::ParseError, "composition entries are [g, f, gf]");
      raw.composition.push_back({mor_ref(e[0]), mor_ref(e[1]), mor_ref(e[2])});
    }
  return FinCat::validate(std::move(raw), cap);
}

Json functor_to_json(const Functor& f) {
  return Json{{"obj_map", f.obj_map}, {"mor_map", f.mor_map}};
}

Json nat_trans_to_json(const NatTrans& t) {
  return Json{{"from", functor_to_json(t.from)},
              {"to", functor_to_json(t.to)},
              {"components", t.components}};
}

Json diagram_to_json(const CatDiagram& d) {
  Json j;
  j["index"] = category_to_json(*d.index);
  j["fibers"] = Json::array();
  for (const FinCatPtr& f : d.fibers) j["fibers"].push_back(category_to_json(*f));
  j["transports"] = Json::array();
  for (MorId m = 0; m < d.index->morphism_count(); ++m) {
    if (d.index->is_identity(m)) continue;
    Json t = functor_to_json(d.transports[m]);
    t["morphism"] = d.index->morphism_name(m);
    Json entry;
    entry["morphism"] = t["morphism"];
    entry["obj_map"] = t["obj_map"];
    entry["mor_map"] = t["mor_map"];
    j["transports"].push_back(entry);
  }
  return j;
}

CatDiagram diagram_from_json(const Json& j,
                             const std::filesystem::path& base_dir,
                             const SizeCap& cap) {
  if (!j.is_object())
    throw CatError(Err::ParseError, "diagram: object expected");
  FinCatPtr index;
  if (j.contains("index")) {
    index = share(category_from_value(j.at("index"), base_dir, cap));
  } else if (j.contains("I") && j.contains("J")) {
    // A bidiagram file without an explicit product: rebuild it.
    FinCatPtr I = share(category_from_value(j.at("I"), base_dir, cap));
    FinCatPtr J = share(category_from_value(j.at("J"), base_dir, cap));
    index = product_category(I, J, cap).cat;
  } else {
    throw CatError(Err::ParseError, "diagram: index required");
  }
  return diagram_body_from_json(j, index, base_dir, cap);
}

Json bidiagram_to_json(const BiDiagram& b) {
  Json j;
  j["I"] = category_to_json(*b.I());
  j["J"] = category_to_json(*b.J());
  Json body = diagram_to_json(b.underlying);
  j["index"] = body["index"];
  j["fibers"] = body["fibers"];
  j["transports"] = body["transports"];
  return j;
}

BiDiagram bidiagram_from_json(const Json& j,
                              const std::filesystem::path& base_dir,
                              const SizeCap& cap) {
  if (!j.is_object() || !j.contains("I") || !j.contains("J"))
    throw CatError(Err::ParseError, "bidiagram: I and J required");
  BiDiagram b;
  FinCatPtr I = share(category_from_value(j.at("I"), base_dir, cap));
  FinCatPtr J = share(category_from_value(j.at("J"), base_dir, cap));
  b.prod = product_category(I, J, cap);
  if (j.contains("index")) {
    FinCat given = category_from_value(j.at("index"), base_dir, cap);
    if (!given.same_shape(*b.prod.cat))
      throw CatError(Err::ParseError,
                     "bidiagram: index is not the product of I and J "
                     "in canonical order");
  }
  b.underlying = diagram_body_from_json(j, b.prod.cat, base_dir, cap);
  return validate_bidiagram(std::move(b));
}

Json retract_report_to_json(const RetractReport& r) {
  Json j;
  j["checks"] = Json::array();
  for (const CheckEntry& c : r.checks) {
    Json e;
    e["name"] = c.name;
    if (c.status == CheckStatus::Skipped)
      e["skipped"] = true;
    else
      e["pass"] = c.status == CheckStatus::Pass;
    if (!c.witness.empty()) e["witness"] = c.witness;
    j["checks"].push_back(e);
  }
  j["sizes"] = Json{{"A_objects", r.a_objects},
                    {"A_morphisms", r.a_morphisms},
                    {"B_objects", r.b_objects},
                    {"B_morphisms", r.b_morphisms}};
  j["pseudo_finals"] = r.pseudo_final_count;
  j["all_pass"] = r.all_pass();
  return j;
}

Json homset_report_to_json(const HomsetReport& r) {
  Json j;
  j["m"] = r.m;
  j["objects"] = r.objects;
  j["pairs_checked"] = r.pairs_checked;
  j["mismatches"] = Json::array();
  for (const HomsetMismatch& mm : r.mismatches)
    j["mismatches"].push_back(Json{{"from", mm.from},
                                   {"to", mm.to},
                                   {"got", mm.got},
                                   {"expected_single", mm.expected_single}});
  j["ok"] = r.ok();
  return j;
}

Json diagnostics_to_json(const FinCat& c, std::size_t nerve_k) {
  Json j;
  GroupoidCheck g = is_groupoid(c);
  j["groupoid"] = g.is_groupoid;
  if (g.witness) j["witness"] = c.morphism_name(*g.witness);
  InitialFinal io = initial_final(c);
  if (io.initial) j["initial"] = c.object_name(*io.initial);
  if (io.final_obj) j["final"] = c.object_name(*io.final_obj);
  j["pi0"] = Json::array();
  for (const auto& cls : pi0(c)) {
    Json names = Json::array();
    for (ObjId o : cls) names.push_back(c.object_name(o));
    j["pi0"].push_back(names);
  }
  NerveTruncation n = nerve_counts(c, nerve_k);
  j["nerve"] = Json{{"counts", n.counts}, {"nondegenerate", n.nondegenerate}};
  return j;
}

FinCat read_category_file(const std::filesystem::path& path,
                          const SizeCap& cap) {
  return category_from_json(parse_text(slurp(path), path.string()), cap);
}

CatDiagram read_diagram_file(const std::filesystem::path& path,
                             const SizeCap& cap) {
  return diagram_from_json(parse_text(slurp(path), path.string()),
                           path.parent_path(), cap);
}

BiDiagram read_bidiagram_file(const std::filesystem::path& path,
                              const SizeCap& cap) {
  return bidiagram_from_json(parse_text(slurp(path), path.string()),
                             path.parent_path(), cap);
}

}  // namespace catlim
