#include "catlim/functor.hpp"

#include <algorithm>

#include "catlim/enumerate.hpp"

namespace catlim {

Functor identity_functor(FinCatPtr c) {
  Functor f;
  f.source = c;
  f.target = c;
  f.obj_map.resize(c->object_count());
  f.mor_map.resize(c->morphism_count());
  for (ObjId o = 0; o < c->object_count(); ++o) f.obj_map[o] = o;
  for (MorId m = 0; m < c->morphism_count(); ++m) f.mor_map[m] = m;
  return f;
}

Functor constant_functor(FinCatPtr source, FinCatPtr target, ObjId at) {
  if (at >= target->object_count())
    throw CatError(Err::IndexOutOfRange, "constant_functor object");
  Functor f;
  f.source = source;
  f.target = target;
  f.obj_map.assign(source->object_count(), at);
  f.mor_map.assign(source->morphism_count(), target->identity(at));
  return f;
}

CheckResult check_functor(const Functor& f) {
  const FinCat& s = *f.source;
  const FinCat& t = *f.target;
  if (f.obj_map.size() != s.object_count() ||
      f.mor_map.size() != s.morphism_count())
    throw CatError(Err::SourceTargetMismatch, "functor maps are not total");
  for (ObjId o = 0; o < s.object_count(); ++o)
    if (f.obj_map[o] >= t.object_count())
      throw CatError(Err::SourceTargetMismatch, "obj_map out of range");
  for (MorId m = 0; m < s.morphism_count(); ++m) {
    if (f.mor_map[m] >= t.morphism_count())
      throw CatError(Err::SourceTargetMismatch, "mor_map out of range");
    if (t.dom(f.mor_map[m]) != f.obj_map[s.dom(m)] ||
        t.cod(f.mor_map[m]) != f.obj_map[s.cod(m)])
      return {false, "endpoints of image of " + s.morphism_name(m) +
                         " do not match"};
  }
  for (ObjId o = 0; o < s.object_count(); ++o)
    if (f.mor_map[s.identity(o)] != t.identity(f.obj_map[o]))
      return {false, "identity of " + s.object_name(o) + " not preserved"};
  for (MorId g = 0; g < s.morphism_count(); ++g)
    for (MorId h = 0; h < s.morphism_count(); ++h) {
      if (!s.composable(g, h)) continue;
      if (f.mor_map[s.compose(g, h)] !=
          t.compose(f.mor_map[g], f.mor_map[h]))
        return {false, "composite (" + s.morphism_name(g) + " ∘ " +
                           s.morphism_name(h) + ") not preserved"};
    }
  return {};
}

Functor compose_functors(const Functor& g, const Functor& f) {
  if (!f.target->same_shape(*g.source))
    throw CatError(Err::SourceTargetMismatch,
                   "compose_functors: target of inner != source of outer");
  Functor out;
  out.source = f.source;
  out.target = g.target;
  out.obj_map.resize(f.obj_map.size());
  out.mor_map.resize(f.mor_map.size());
  for (std::size_t o = 0; o < f.obj_map.size(); ++o)
    out.obj_map[o] = g.obj_map[f.obj_map[o]];
  for (std::size_t m = 0; m < f.mor_map.size(); ++m)
    out.mor_map[m] = g.mor_map[f.mor_map[m]];
  return out;
}

bool same_mapping(const Functor& a, const Functor& b) {
  return a.obj_map == b.obj_map && a.mor_map == b.mor_map;
}

CheckResult check_nat_trans(const NatTrans& t) {
  if (!t.from.source->same_shape(*t.to.source) ||
      !t.from.target->same_shape(*t.to.target))
    throw CatError(Err::ShapeMismatch,
                   "check_nat_trans: functors do not share source/target");
  const FinCat& s = *t.from.source;
  const FinCat& d = *t.from.target;
  if (t.components.size() != s.object_count())
    throw CatError(Err::ShapeMismatch, "component family is not total");
  for (ObjId i = 0; i < s.object_count(); ++i) {
    MorId c = t.components[i];
    if (c >= d.morphism_count() || d.dom(c) != t.from.obj_map[i] ||
        d.cod(c) != t.to.obj_map[i])
      return {false, "component at " + s.object_name(i) + " mistyped"};
  }
  for (MorId a = 0; a < s.morphism_count(); ++a) {
    ObjId i = s.dom(a), j = s.cod(a);
    if (d.compose(t.to.mor_map[a], t.components[i]) !=
        d.compose(t.components[j], t.from.mor_map[a]))
      return {false, "naturality square fails at " + s.morphism_name(a)};
  }
  return {};
}

NatTrans identity_nat_trans(const Functor& f) {
  NatTrans t;
  t.from = f;
  t.to = f;
  t.components.resize(f.source->object_count());
  for (ObjId i = 0; i < f.source->object_count(); ++i)
    t.components[i] = f.target->identity(f.obj_map[i]);
  return t;
}

NatTrans vertical_compose(const NatTrans& s, const NatTrans& t) {
  if (!same_mapping(s.from, t.to))
    throw CatError(Err::ShapeMismatch, "vertical_compose: endpoints differ");
  NatTrans out;
  out.from = t.from;
  out.to = s.to;
  out.components.resize(t.components.size());
  const FinCat& d = *t.from.target;
  for (std::size_t i = 0; i < t.components.size(); ++i)
    out.components[i] = d.compose(s.components[i], t.components[i]);
  return out;
}

namespace {

// Backtracking assignment of morphism images once an object map is fixed.
// Prunes on every composite whose factors are both assigned.
void assign_morphisms(const FinCat& s, const FinCat& d, const Functor& base,
                      std::vector<MorId>& mor_map, MorId next,
                      std::vector<Functor>& out) {
  const std::size_t n_mor = s.morphism_count();
  while (next < n_mor && mor_map[next] != kNoMor) ++next;
  if (next == n_mor) {
    Functor f = base;
    f.mor_map = mor_map;
    out.push_back(std::move(f));
    return;
  }
  ObjId a = base.obj_map[s.dom(next)], b = base.obj_map[s.cod(next)];
  for (MorId cand : d.hom(a, b)) {
    mor_map[next] = cand;
    bool ok = true;
    for (MorId g = 0; g < n_mor && ok; ++g) {
      if (mor_map[g] == kNoMor) continue;
      for (MorId f = 0; f < n_mor && ok; ++f) {
        if (mor_map[f] == kNoMor || !s.composable(g, f)) continue;
        MorId gf = s.compose(g, f);
        if (mor_map[gf] == kNoMor) continue;
        if (d.compose(mor_map[g], mor_map[f]) != mor_map[gf]) ok = false;
      }
    }
    if (ok) assign_morphisms(s, d, base, mor_map, next + 1, out);
    mor_map[next] = kNoMor;
  }
}

}  // namespace

std::vector<Functor> enumerate_functors(FinCatPtr source, FinCatPtr target) {
  const FinCat& s = *source;
  const FinCat& d = *target;
  std::vector<Functor> out;
  if (s.object_count() == 0) {
    Functor f;
    f.source = source;
    f.target = target;
    out.push_back(std::move(f));
    return out;
  }
  if (d.object_count() == 0) return out;

  std::vector<std::size_t> pick(s.object_count(), 0),
      radix(s.object_count(), d.object_count());
  do {
    Functor base;
    base.source = source;
    base.target = target;
    base.obj_map.resize(s.object_count());
    for (ObjId o = 0; o < s.object_count(); ++o)
      base.obj_map[o] = static_cast<ObjId>(pick[o]);
    std::vector<MorId> mor_map(s.morphism_count(), kNoMor);
    for (ObjId o = 0; o < s.object_count(); ++o)
      mor_map[s.identity(o)] = d.identity(base.obj_map[o]);
    assign_morphisms(s, d, base, mor_map, 0, out);
  } while (next_odometer(pick, radix));
  return out;
}

std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g) {
  const FinCat& s = *f.source;
  const FinCat& d = *f.target;
  std::vector<NatTrans> out;
  const std::size_t n = s.object_count();
  std::vector<std::vector<MorId>> candidates(n);
  for (ObjId i = 0; i < n; ++i) {
    candidates[i] = d.hom(f.obj_map[i], g.obj_map[i]);
    if (candidates[i].empty()) return out;
  }
  std::vector<std::size_t> pick(n, 0), radix(n);
  for (ObjId i = 0; i < n; ++i) radix[i] = candidates[i].size();
  do {
    NatTrans t;
    t.from = f;
    t.to = g;
    t.components.resize(n);
    for (ObjId i = 0; i < n; ++i) t.components[i] = candidates[i][pick[i]];
    bool natural = true;
    for (MorId a = 0; a < s.morphism_count() && natural; ++a) {
      ObjId i = s.dom(a), j = s.cod(a);
      natural = d.compose(g.mor_map[a], t.components[i]) ==
                d.compose(t.components[j], f.mor_map[a]);
    }
    if (natural) out.push_back(std::move(t));
  } while (next_odometer(pick, radix));
  return out;
}

Functor ProductCat::pr1() const {
  Functor f;
  f.source = cat;
  f.target = left;
  f.obj_map.resize(cat->object_count());
  f.mor_map.resize(cat->morphism_count());
  for (ObjId o = 0; o < cat->object_count(); ++o)
    f.obj_map[o] = object_pair(o).first;
  for (MorId m = 0; m < cat->morphism_count(); ++m)
    f.mor_map[m] = morphism_pair(m).first;
  return f;
}

Functor ProductCat::pr2() const {
  Functor f;
  f.source = cat;
  f.target = right;
  f.obj_map.resize(cat->object_count());
  f.mor_map.resize(cat->morphism_count());
  for (ObjId o = 0; o < cat->object_count(); ++o)
    f.obj_map[o] = object_pair(o).second;
  for (MorId m = 0; m < cat->morphism_count(); ++m)
    f.mor_map[m] = morphism_pair(m).second;
  return f;
}

ProductCat product_category(FinCatPtr a, FinCatPtr b, const SizeCap& cap) {
  const std::size_t n_obj = a->object_count() * b->object_count();
  const std::size_t n_mor = a->morphism_count() * b->morphism_count();
  if (n_obj > cap.max_objects || n_mor > cap.max_morphisms)
    throw CatError(Err::SizeCapExceeded, "product_category");

  RawCategory raw;
  raw.object_count = n_obj;
  raw.object_names.resize(n_obj);
  for (ObjId oa = 0; oa < a->object_count(); ++oa)
    for (ObjId ob = 0; ob < b->object_count(); ++ob)
      raw.object_names[oa * b->object_count() + ob] =
          "(" + a->object_name(oa) + "," + b->object_name(ob) + ")";
  raw.morphisms.resize(n_mor);
  for (MorId ma = 0; ma < a->morphism_count(); ++ma)
    for (MorId mb = 0; mb < b->morphism_count(); ++mb) {
      MorId m = static_cast<MorId>(ma * b->morphism_count() + mb);
      raw.morphisms[m].dom =
          static_cast<ObjId>(a->dom(ma) * b->object_count() + b->dom(mb));
      raw.morphisms[m].cod =
          static_cast<ObjId>(a->cod(ma) * b->object_count() + b->cod(mb));
      raw.morphisms[m].name =
          "(" + a->morphism_name(ma) + "," + b->morphism_name(mb) + ")";
    }
  for (ObjId oa = 0; oa < a->object_count(); ++oa)
    for (ObjId ob = 0; ob < b->object_count(); ++ob)
      raw.identities.emplace_back(
          static_cast<ObjId>(oa * b->object_count() + ob),
          static_cast<MorId>(a->identity(oa) * b->morphism_count() +
                             b->identity(ob)));
  for (MorId ga = 0; ga < a->morphism_count(); ++ga)
    for (MorId fa = 0; fa < a->morphism_count(); ++fa) {
      if (!a->composable(ga, fa)) continue;
      for (MorId gb = 0; gb < b->morphism_count(); ++gb)
        for (MorId fb = 0; fb < b->morphism_count(); ++fb) {
          if (!b->composable(gb, fb)) continue;
          raw.composition.push_back(
              {static_cast<MorId>(ga * b->morphism_count() + gb),
               static_cast<MorId>(fa * b->morphism_count() + fb),
               static_cast<MorId>(a->compose(ga, fa) * b->morphism_count() +
                                  b->compose(gb, fb))});
        }
    }

  ProductCat prod;
  prod.cat = share(FinCat::validate(std::move(raw), cap));
  prod.left = std::move(a);
  prod.right = std::move(b);
  return prod;
}

std::optional<ObjId> FunctorCategory::object_index(const Functor& f) const {
  auto it = obj_lookup.find({f.obj_map, f.mor_map});
  if (it == obj_lookup.end()) return std::nullopt;
  return it->second;
}

std::optional<MorId> FunctorCategory::morphism_index(
    ObjId from, ObjId to, const std::vector<MorId>& comps) const {
  auto it = mor_lookup.find({from, to, comps});
  if (it == mor_lookup.end()) return std::nullopt;
  return it->second;
}

FunctorCategory functor_category(FinCatPtr index, FinCatPtr base,
                                 const SizeCap& cap) {
  FunctorCategory fc;
  fc.index = index;
  fc.base = base;
  fc.objects = enumerate_functors(index, base);
  if (fc.objects.size() > cap.max_objects)
    throw CatError(Err::SizeCapExceeded, "functor_category objects");

  RawCategory raw;
  raw.object_count = fc.objects.size();
  for (ObjId o = 0; o < fc.objects.size(); ++o) {
    fc.obj_lookup[{fc.objects[o].obj_map, fc.objects[o].mor_map}] = o;
    std::string name = "F" + std::to_string(o) + "[";
    for (std::size_t i = 0; i < fc.objects[o].obj_map.size(); ++i)
      name += (i ? "," : "") + base->object_name(fc.objects[o].obj_map[i]);
    raw.object_names.push_back(name + "]");
  }
  for (ObjId from = 0; from < fc.objects.size(); ++from)
    for (ObjId to = 0; to < fc.objects.size(); ++to)
      for (NatTrans& t : enumerate_nat_trans(fc.objects[from], fc.objects[to])) {
        if (fc.morphisms.size() >= cap.max_morphisms)
          throw CatError(Err::SizeCapExceeded, "functor_category morphisms");
        MorId m = static_cast<MorId>(fc.morphisms.size());
        raw.morphisms.push_back({from, to, ""});
        fc.mor_lookup[{from, to, t.components}] = m;
        fc.morphisms.push_back(std::move(t));
      }

  const FinCat& d = *base;
  for (ObjId o = 0; o < fc.objects.size(); ++o) {
    NatTrans idt = identity_nat_trans(fc.objects[o]);
    auto idx = fc.morphism_index(o, o, idt.components);
    if (!idx)
      throw CatError(Err::ConstructionMismatch,
                     "identity transformation missing from enumeration");
    raw.identities.emplace_back(o, *idx);
  }
  for (MorId s = 0; s < fc.morphisms.size(); ++s)
    for (MorId t = 0; t < fc.morphisms.size(); ++t) {
      // s ∘ t, defined when t ends where s starts.
      if (raw.morphisms[t].cod != raw.morphisms[s].dom) continue;
      std::vector<MorId> comps(index->object_count());
      for (ObjId i = 0; i < index->object_count(); ++i)
        comps[i] =
            d.compose(fc.morphisms[s].components[i], fc.morphisms[t].components[i]);
      auto idx = fc.morphism_index(raw.morphisms[t].dom, raw.morphisms[s].cod,
                                   comps);
      if (!idx)
        throw CatError(Err::ConstructionMismatch,
                       "vertical composite missing from enumeration");
      raw.composition.push_back({s, t, *idx});
    }

  fc.cat = share(FinCat::validate(std::move(raw), cap));
  return fc;
}

}  // namespace catlim
