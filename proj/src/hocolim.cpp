#include "catlim/hocolim.hpp"

namespace catlim {

ObjId Hocolim::object_index(ObjId i, ObjId x) const {
  return obj_offset[i] + x;
}

MorId Hocolim::morphism_index(ObjId dom_obj, MorId alpha, MorId rho) const {
  auto it = mor_lookup.find({dom_obj, alpha, rho});
  if (it == mor_lookup.end())
    throw CatError(Err::ConstructionMismatch,
                   "hocolim morphism lookup failed");
  return it->second;
}

Hocolim hocolim(const CatDiagram& d, const SizeCap& cap) {
  const FinCat& ix = *d.index;
  Hocolim g;
  g.diagram = d;

  std::size_t n_obj = 0;
  g.obj_offset.resize(ix.object_count());
  for (ObjId i = 0; i < ix.object_count(); ++i) {
    g.obj_offset[i] = static_cast<ObjId>(n_obj);
    n_obj += d.fiber(i).object_count();
  }
  if (n_obj > cap.max_objects)
    throw CatError(Err::SizeCapExceeded, "hocolim objects");

  RawCategory raw;
  raw.object_count = n_obj;
  for (ObjId i = 0; i < ix.object_count(); ++i)
    for (ObjId x = 0; x < d.fiber(i).object_count(); ++x) {
      g.objects.push_back({i, x});
      raw.object_names.push_back("(" + ix.object_name(i) + "," +
                                 d.fiber(i).object_name(x) + ")");
    }

  // Morphisms in lexicographic (dom object, cod object, α, ρ) order.
  for (ObjId a = 0; a < n_obj; ++a) {
    auto [i, x] = std::pair{g.objects[a].i, g.objects[a].x};
    for (ObjId b = 0; b < n_obj; ++b) {
      auto [j, y] = std::pair{g.objects[b].i, g.objects[b].x};
      for (MorId alpha : ix.hom(i, j)) {
        ObjId ax = d.transport(alpha).on_object(x);
        for (MorId rho : d.fiber(j).hom(ax, y)) {
          if (g.morphisms.size() >= cap.max_morphisms)
            throw CatError(Err::SizeCapExceeded, "hocolim morphisms");
          MorId m = static_cast<MorId>(g.morphisms.size());
          g.morphisms.push_back({alpha, rho});
          g.mor_lookup[{a, alpha, rho}] = m;
          raw.morphisms.push_back(
              {a, b,
               "(" + ix.morphism_name(alpha) + "," +
                   d.fiber(j).morphism_name(rho) + ")"});
        }
      }
    }
  }

  for (ObjId a = 0; a < n_obj; ++a) {
    auto [i, x] = std::pair{g.objects[a].i, g.objects[a].x};
    raw.identities.emplace_back(
        a, g.morphism_index(a, ix.identity(i), d.fiber(i).identity(x)));
  }

  // (α,ρ): (j,y) -> (k,z) after (β,μ): (i,x) -> (j,y) gives
  // (α∘β, ρ ∘ α(μ)): the transported μ lands in the fiber over k.
  const std::size_t n_mor = g.morphisms.size();
  for (MorId s = 0; s < n_mor; ++s)
    for (MorId t = 0; t < n_mor; ++t) {
      ObjId dom_t = raw.morphisms[t].dom;
      if (raw.morphisms[t].cod != raw.morphisms[s].dom) continue;
      MorId alpha = g.morphisms[s].alpha, beta = g.morphisms[t].alpha;
      MorId rho = g.morphisms[s].rho, mu = g.morphisms[t].rho;
      ObjId k = ix.cod(alpha);
      MorId ab = ix.compose(alpha, beta);
      MorId amu = d.transport(alpha).on_morphism(mu);
      MorId comp_rho = d.fiber(k).compose(rho, amu);
      raw.composition.push_back({s, t, g.morphism_index(dom_t, ab, comp_rho)});
    }

  g.cat = share(FinCat::validate(std::move(raw), cap));

  g.projection.source = g.cat;
  g.projection.target = d.index;
  for (const GrothObject& o : g.objects) g.projection.obj_map.push_back(o.i);
  for (const GrothMorphism& m : g.morphisms)
    g.projection.mor_map.push_back(m.alpha);
  CheckResult pr = check_functor(g.projection);
  if (!pr.ok)
    throw CatError(Err::ConstructionMismatch, "projection: " + pr.detail);
  return g;
}

Functor hocolim_induced(const DiagramMap& t, const Hocolim& src,
                        const Hocolim& dst) {
  if (!src.diagram.index->same_shape(*t.from.index) ||
      !dst.diagram.index->same_shape(*t.to.index))
    throw CatError(Err::ShapeMismatch, "hocolim_induced: index mismatch");
  const FinCat& ix = *src.diagram.index;
  Functor f;
  f.source = src.cat;
  f.target = dst.cat;
  for (const GrothObject& o : src.objects)
    f.obj_map.push_back(
        dst.object_index(o.i, t.components[o.i].on_object(o.x)));
  for (MorId m = 0; m < src.morphisms.size(); ++m) {
    const GrothMorphism& gm = src.morphisms[m];
    ObjId dom_obj = f.obj_map[src.cat->dom(m)];
    MorId rho = t.components[ix.cod(gm.alpha)].on_morphism(gm.rho);
    f.mor_map.push_back(dst.morphism_index(dom_obj, gm.alpha, rho));
  }
  return f;
}

}  // namespace catlim
