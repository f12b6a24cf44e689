#include "catlim/holim.hpp"

#include <algorithm>

#include "catlim/enumerate.hpp"

namespace catlim {

ObjId Holim::object_index(const HolimObject& o) const {
  auto it = obj_lookup.find({o.x, o.rho});
  if (it == obj_lookup.end())
    throw CatError(Err::ConstructionMismatch, "holim object lookup failed");
  return it->second;
}

MorId Holim::morphism_index(ObjId dom, ObjId cod,
                            const std::vector<MorId>& comps) const {
  auto it = mor_lookup.find({dom, cod, comps});
  if (it == mor_lookup.end())
    throw CatError(Err::ConstructionMismatch, "holim morphism lookup failed");
  return it->second;
}

bool check_holim_object(const CatDiagram& d, const HolimObject& o) {
  const FinCat& ix = *d.index;
  if (o.x.size() != ix.object_count() || o.rho.size() != ix.morphism_count())
    return false;
  for (ObjId i = 0; i < ix.object_count(); ++i)
    if (o.x[i] >= d.fiber(i).object_count()) return false;
  for (MorId a = 0; a < ix.morphism_count(); ++a) {
    const FinCat& fib = d.fiber(ix.cod(a));
    MorId r = o.rho[a];
    if (r >= fib.morphism_count()) return false;
    if (fib.dom(r) != d.transport(a).on_object(o.x[ix.dom(a)])) return false;
    if (fib.cod(r) != o.x[ix.cod(a)]) return false;
  }
  for (ObjId i = 0; i < ix.object_count(); ++i)
    if (o.rho[ix.identity(i)] != d.fiber(i).identity(o.x[i])) return false;
  for (MorId a = 0; a < ix.morphism_count(); ++a)
    for (MorId b = 0; b < ix.morphism_count(); ++b) {
      if (!ix.composable(a, b)) continue;  // a ∘ b
      const FinCat& fib = d.fiber(ix.cod(a));
      MorId lhs = o.rho[ix.compose(a, b)];
      MorId rhs = fib.compose(o.rho[a], d.transport(a).on_morphism(o.rho[b]));
      if (lhs != rhs) return false;
    }
  return true;
}

bool check_holim_morphism(const CatDiagram& d, const HolimObject& a,
                          const HolimObject& b, const HolimMorphism& m) {
  const FinCat& ix = *d.index;
  if (m.f.size() != ix.object_count()) return false;
  for (ObjId i = 0; i < ix.object_count(); ++i) {
    const FinCat& fib = d.fiber(i);
    if (m.f[i] >= fib.morphism_count() || fib.dom(m.f[i]) != a.x[i] ||
        fib.cod(m.f[i]) != b.x[i])
      return false;
  }
  for (MorId al = 0; al < ix.morphism_count(); ++al) {
    ObjId i = ix.dom(al), j = ix.cod(al);
    const FinCat& fib = d.fiber(j);
    MorId lhs = fib.compose(b.rho[al], d.transport(al).on_morphism(m.f[i]));
    MorId rhs = fib.compose(m.f[j], a.rho[al]);
    if (lhs != rhs) return false;
  }
  return true;
}

namespace {

// Assigns rho over index morphisms in declaration order, pruning with the
// unit constraint (identities are pre-forced) and every cocycle instance
// whose three entries are all assigned.
// TODO: assign rho on a generating set only and derive the composites from
// the cocycle; the full assignment is simpler but does redundant work.
void assign_rho(const CatDiagram& d, const std::vector<ObjId>& x,
                std::vector<MorId>& rho, MorId next,
                std::vector<HolimObject>& out) {
  const FinCat& ix = *d.index;
  const std::size_t n_mor = ix.morphism_count();
  while (next < n_mor && rho[next] != kNoMor) ++next;
  if (next == n_mor) {
    out.push_back({x, rho});
    return;
  }
  ObjId i = ix.dom(next), j = ix.cod(next);
  ObjId ax = d.transport(next).on_object(x[i]);
  for (MorId cand : d.fiber(j).hom(ax, x[j])) {
    rho[next] = cand;
    bool ok = true;
    for (MorId a = 0; a < n_mor && ok; ++a) {
      if (rho[a] == kNoMor) continue;
      for (MorId b = 0; b < n_mor && ok; ++b) {
        if (rho[b] == kNoMor || !ix.composable(a, b)) continue;
        MorId ab = ix.compose(a, b);
        if (rho[ab] == kNoMor) continue;
        const FinCat& fib = d.fiber(ix.cod(a));
        ok = rho[ab] ==
             fib.compose(rho[a], d.transport(a).on_morphism(rho[b]));
      }
    }
    if (ok) assign_rho(d, x, rho, next + 1, out);
    rho[next] = kNoMor;
  }
}

void assign_components(const CatDiagram& d, const HolimObject& a,
                       const HolimObject& b, std::vector<MorId>& f,
                       ObjId next, std::vector<HolimMorphism>& out) {
  const FinCat& ix = *d.index;
  if (next == ix.object_count()) {
    out.push_back({f});
    return;
  }
  for (MorId cand : d.fiber(next).hom(a.x[next], b.x[next])) {
    f[next] = cand;
    bool ok = true;
    for (MorId al = 0; al < ix.morphism_count() && ok; ++al) {
      ObjId i = ix.dom(al), j = ix.cod(al);
      if (f[i] == kNoMor || f[j] == kNoMor) continue;
      const FinCat& fib = d.fiber(j);
      ok = fib.compose(b.rho[al], d.transport(al).on_morphism(f[i])) ==
           fib.compose(f[j], a.rho[al]);
    }
    if (ok) assign_components(d, a, b, f, next + 1, out);
    f[next] = kNoMor;
  }
}

}  // namespace

Holim holim_explicit(const CatDiagram& d, const SizeCap& cap) {
  const FinCat& ix = *d.index;
  Holim h;
  h.diagram = d;

  // Objects: x assignments in lexicographic order, then rho backtracking.
  const std::size_t n_io = ix.object_count();
  bool any_empty_fiber = false;
  for (ObjId i = 0; i < n_io; ++i)
    if (d.fiber(i).object_count() == 0) any_empty_fiber = true;
  if (!any_empty_fiber) {
    std::vector<std::size_t> pick(n_io, 0), radix(n_io);
    for (ObjId i = 0; i < n_io; ++i) radix[i] = d.fiber(i).object_count();
    do {
      std::vector<ObjId> x(n_io);
      for (ObjId i = 0; i < n_io; ++i) x[i] = static_cast<ObjId>(pick[i]);
      std::vector<MorId> rho(ix.morphism_count(), kNoMor);
      for (ObjId i = 0; i < n_io; ++i)
        rho[ix.identity(i)] = d.fiber(i).identity(x[i]);
      assign_rho(d, x, rho, 0, h.objects);
      if (h.objects.size() > cap.max_objects)
        throw CatError(Err::SizeCapExceeded, "holim objects");
    } while (n_io > 0 && next_odometer(pick, radix));
  }

  for (ObjId o = 0; o < h.objects.size(); ++o) {
    if (!check_holim_object(d, h.objects[o]))
      throw CatError(Err::ConstructionMismatch,
                     "holim search produced an invalid family");
    h.obj_lookup[{h.objects[o].x, h.objects[o].rho}] = o;
  }

  RawCategory raw;
  raw.object_count = h.objects.size();
  for (const HolimObject& o : h.objects) {
    std::string name = "x=(";
    for (ObjId i = 0; i < n_io; ++i)
      name += (i ? "," : "") + d.fiber(i).object_name(o.x[i]);
    name += ");rho=(";
    bool first = true;
    for (MorId a = 0; a < ix.morphism_count(); ++a) {
      if (ix.is_identity(a)) continue;
      name += (first ? "" : ",") + d.fiber(ix.cod(a)).morphism_name(o.rho[a]);
      first = false;
    }
    raw.object_names.push_back(name + ")");
  }

  for (ObjId a = 0; a < h.objects.size(); ++a)
    for (ObjId b = 0; b < h.objects.size(); ++b) {
      std::vector<HolimMorphism> found;
      std::vector<MorId> f(n_io, kNoMor);
      assign_components(d, h.objects[a], h.objects[b], f, 0, found);
      for (HolimMorphism& m : found) {
        if (!check_holim_morphism(d, h.objects[a], h.objects[b], m))
          throw CatError(Err::ConstructionMismatch,
                         "holim search produced an invalid morphism family");
        if (h.morphisms.size() >= cap.max_morphisms)
          throw CatError(Err::SizeCapExceeded, "holim morphisms");
        MorId idx = static_cast<MorId>(h.morphisms.size());
        h.mor_lookup[{a, b, m.f}] = idx;
        raw.morphisms.push_back({a, b, ""});
        h.morphisms.push_back(std::move(m));
      }
    }

  for (ObjId o = 0; o < h.objects.size(); ++o) {
    std::vector<MorId> f(n_io);
    for (ObjId i = 0; i < n_io; ++i)
      f[i] = d.fiber(i).identity(h.objects[o].x[i]);
    raw.identities.emplace_back(o, h.morphism_index(o, o, f));
  }

  for (MorId s = 0; s < h.morphisms.size(); ++s)
    for (MorId t = 0; t < h.morphisms.size(); ++t) {
      if (raw.morphisms[t].cod != raw.morphisms[s].dom) continue;
      std::vector<MorId> f(n_io);
      for (ObjId i = 0; i < n_io; ++i)
        f[i] = d.fiber(i).compose(h.morphisms[s].f[i], h.morphisms[t].f[i]);
      raw.composition.push_back(
          {s, t,
           h.morphism_index(raw.morphisms[t].dom, raw.morphisms[s].cod, f)});
    }

  h.cat = share(FinCat::validate(std::move(raw), cap));
  return h;
}

HolimPullback holim_pullback(const CatDiagram& d, const SizeCap& cap) {
  HolimPullback pb;
  pb.diagram = d;
  pb.groth = hocolim(d, cap);
  pb.hom_cat = functor_category(d.index, pb.groth.cat, cap);

  const FinCat& ix = *d.index;
  const FinCat& hom = *pb.hom_cat.cat;
  Functor ident = identity_functor(d.index);

  pb.hom_to_section.assign(hom.object_count(), kNoObj);
  for (ObjId o = 0; o < hom.object_count(); ++o) {
    Functor composed =
        compose_functors(pb.groth.projection, pb.hom_cat.objects[o]);
    if (same_mapping(composed, ident)) {
      pb.hom_to_section[o] = static_cast<ObjId>(pb.section_to_hom.size());
      pb.section_to_hom.push_back(o);
    }
  }

  pb.hom_to_trans.assign(hom.morphism_count(), kNoMor);
  RawCategory raw;
  raw.object_count = pb.section_to_hom.size();
  for (ObjId o = 0; o < raw.object_count; ++o)
    raw.object_names.push_back(hom.object_name(pb.section_to_hom[o]));
  for (MorId m = 0; m < hom.morphism_count(); ++m) {
    ObjId from = hom.dom(m), to = hom.cod(m);
    if (pb.hom_to_section[from] == kNoObj || pb.hom_to_section[to] == kNoObj)
      continue;
    bool fiberwise = true;
    for (ObjId i = 0; i < ix.object_count() && fiberwise; ++i) {
      MorId comp = pb.hom_cat.morphisms[m].components[i];
      fiberwise = pb.groth.projection.mor_map[comp] == ix.identity(i);
    }
    if (!fiberwise) continue;
    pb.hom_to_trans[m] = static_cast<MorId>(pb.trans_to_hom.size());
    raw.morphisms.push_back(
        {pb.hom_to_section[from], pb.hom_to_section[to], hom.morphism_name(m)});
    pb.trans_to_hom.push_back(m);
  }
  for (ObjId o = 0; o < raw.object_count; ++o) {
    MorId id_hom = hom.identity(pb.section_to_hom[o]);
    if (pb.hom_to_trans[id_hom] == kNoMor)
      throw CatError(Err::ConstructionMismatch,
                     "identity transformation is not fiberwise");
    raw.identities.emplace_back(o, pb.hom_to_trans[id_hom]);
  }
  for (MorId s = 0; s < pb.trans_to_hom.size(); ++s)
    for (MorId t = 0; t < pb.trans_to_hom.size(); ++t) {
      if (raw.morphisms[t].cod != raw.morphisms[s].dom) continue;
      MorId comp_hom = hom.compose(pb.trans_to_hom[s], pb.trans_to_hom[t]);
      if (pb.hom_to_trans[comp_hom] == kNoMor)
        throw CatError(Err::ConstructionMismatch,
                       "fiberwise transformations are not closed");
      raw.composition.push_back({s, t, pb.hom_to_trans[comp_hom]});
    }

  pb.cat = share(FinCat::validate(std::move(raw), cap));
  return pb;
}

std::pair<Functor, Functor> canonical_iso(const Holim& h,
                                          const HolimPullback& pb) {
  if (!h.diagram.index->same_shape(*pb.diagram.index))
    throw CatError(Err::ShapeMismatch, "canonical_iso: different indices");
  const FinCat& ix = *h.diagram.index;

  Functor fwd;
  fwd.source = h.cat;
  fwd.target = pb.cat;
  for (const HolimObject& o : h.objects) {
    Functor section;
    section.source = h.diagram.index;
    section.target = pb.groth.cat;
    for (ObjId i = 0; i < ix.object_count(); ++i)
      section.obj_map.push_back(pb.groth.object_index(i, o.x[i]));
    for (MorId a = 0; a < ix.morphism_count(); ++a)
      section.mor_map.push_back(pb.groth.morphism_index(
          section.obj_map[ix.dom(a)], a, o.rho[a]));
    auto hom_idx = pb.hom_cat.object_index(section);
    if (!hom_idx || pb.hom_to_section[*hom_idx] == kNoObj)
      throw CatError(Err::ConstructionMismatch,
                     "family does not name a section");
    fwd.obj_map.push_back(pb.hom_to_section[*hom_idx]);
  }
  for (MorId m = 0; m < h.morphisms.size(); ++m) {
    ObjId a = h.cat->dom(m), b = h.cat->cod(m);
    std::vector<MorId> comps(ix.object_count());
    for (ObjId i = 0; i < ix.object_count(); ++i)
      comps[i] = pb.groth.morphism_index(
          pb.groth.object_index(i, h.objects[a].x[i]), ix.identity(i),
          h.morphisms[m].f[i]);
    auto hom_idx = pb.hom_cat.morphism_index(pb.section_to_hom[fwd.obj_map[a]],
                                             pb.section_to_hom[fwd.obj_map[b]],
                                             comps);
    if (!hom_idx || pb.hom_to_trans[*hom_idx] == kNoMor)
      throw CatError(Err::ConstructionMismatch,
                     "family does not name a fiberwise transformation");
    fwd.mor_map.push_back(pb.hom_to_trans[*hom_idx]);
  }

  Functor bwd;
  bwd.source = pb.cat;
  bwd.target = h.cat;
  for (ObjId o = 0; o < pb.cat->object_count(); ++o) {
    const Functor& section = pb.section(o);
    HolimObject fam;
    for (ObjId i = 0; i < ix.object_count(); ++i)
      fam.x.push_back(pb.groth.objects[section.obj_map[i]].x);
    for (MorId a = 0; a < ix.morphism_count(); ++a)
      fam.rho.push_back(pb.groth.morphisms[section.mor_map[a]].rho);
    bwd.obj_map.push_back(h.object_index(fam));
  }
  for (MorId m = 0; m < pb.cat->morphism_count(); ++m) {
    const NatTrans& t = pb.hom_cat.morphisms[pb.trans_to_hom[m]];
    std::vector<MorId> comps(ix.object_count());
    for (ObjId i = 0; i < ix.object_count(); ++i)
      comps[i] = pb.groth.morphisms[t.components[i]].rho;
    bwd.mor_map.push_back(
        h.morphism_index(bwd.obj_map[pb.cat->dom(m)],
                         bwd.obj_map[pb.cat->cod(m)], comps));
  }

  CheckResult rf = check_functor(fwd), rb = check_functor(bwd);
  if (!rf.ok || !rb.ok)
    throw CatError(Err::ConstructionMismatch,
                   "canonical comparison is not a functor: " +
                       (rf.ok ? rb.detail : rf.detail));
  if (!same_mapping(compose_functors(bwd, fwd), identity_functor(h.cat)) ||
      !same_mapping(compose_functors(fwd, bwd), identity_functor(pb.cat)))
    throw CatError(Err::ConstructionMismatch,
                   "canonical comparison is not mutually inverse");
  return {fwd, bwd};
}

Functor holim_induced(const DiagramMap& t, const Holim& src,
                      const Holim& dst) {
  if (!src.diagram.index->same_shape(*t.from.index) ||
      !dst.diagram.index->same_shape(*t.to.index))
    throw CatError(Err::ShapeMismatch, "holim_induced: index mismatch");
  const FinCat& ix = *src.diagram.index;
  Functor out;
  out.source = src.cat;
  out.target = dst.cat;
  for (const HolimObject& o : src.objects) {
    HolimObject img;
    img.x.resize(ix.object_count());
    img.rho.resize(ix.morphism_count());
    for (ObjId i = 0; i < ix.object_count(); ++i)
      img.x[i] = t.components[i].on_object(o.x[i]);
    for (MorId a = 0; a < ix.morphism_count(); ++a)
      img.rho[a] = t.components[ix.cod(a)].on_morphism(o.rho[a]);
    out.obj_map.push_back(dst.object_index(img));
  }
  for (MorId m = 0; m < src.morphisms.size(); ++m) {
    std::vector<MorId> comps(ix.object_count());
    for (ObjId i = 0; i < ix.object_count(); ++i)
      comps[i] = t.components[i].on_morphism(src.morphisms[m].f[i]);
    out.mor_map.push_back(dst.morphism_index(
        out.obj_map[src.cat->dom(m)], out.obj_map[src.cat->cod(m)], comps));
  }
  return out;
}

}  // namespace catlim
