#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "catlim/fincat.hpp"

namespace catlim {

/// A functor between table categories, stored as explicit index maps.
/// Equality of functors is extensional equality of obj_map and mor_map.
struct Functor {
  FinCatPtr source, target;
  std::vector<ObjId> obj_map;
  std::vector<MorId> mor_map;

  ObjId on_object(ObjId o) const { return obj_map[o]; }
  MorId on_morphism(MorId m) const { return mor_map[m]; }
};

/// Outcome of a law check; `detail` describes the first violation found.
struct CheckResult {
  bool ok = true;
  std::string detail;
};

Functor identity_functor(FinCatPtr c);
/// Sends every object to `at` and every morphism to its identity.
Functor constant_functor(FinCatPtr source, FinCatPtr target, ObjId at);

CheckResult check_functor(const Functor& f);
Functor compose_functors(const Functor& g, const Functor& f);  // g ∘ f

/// Extensional equality; sources/targets must have the same shape.
bool same_mapping(const Functor& a, const Functor& b);

struct NatTrans {
  Functor from, to;
  std::vector<MorId> components;  // per source object, in the target
};

CheckResult check_nat_trans(const NatTrans& t);
NatTrans identity_nat_trans(const Functor& f);
/// Vertical composite (s ∘ t)_i = s_i ∘ t_i.
NatTrans vertical_compose(const NatTrans& s, const NatTrans& t);

/// All functors source -> target in lexicographic (obj_map, mor_map) order.
std::vector<Functor> enumerate_functors(FinCatPtr source, FinCatPtr target);

/// All natural transformations F -> G in lexicographic component order.
std::vector<NatTrans> enumerate_nat_trans(const Functor& f, const Functor& g);

/// The product category with its projection data. Object (a,b) has index
/// a*|obj D|+b; morphism (f,g) has index f*|mor D|+g.
struct ProductCat {
  FinCatPtr cat;
  FinCatPtr left, right;

  ObjId pair_object(ObjId a, ObjId b) const {
    return static_cast<ObjId>(a * right->object_count() + b);
  }
  std::pair<ObjId, ObjId> object_pair(ObjId o) const {
    return {static_cast<ObjId>(o / right->object_count()),
            static_cast<ObjId>(o % right->object_count())};
  }
  MorId pair_morphism(MorId f, MorId g) const {
    return static_cast<MorId>(f * right->morphism_count() + g);
  }
  std::pair<MorId, MorId> morphism_pair(MorId m) const {
    return {static_cast<MorId>(m / right->morphism_count()),
            static_cast<MorId>(m % right->morphism_count())};
  }
  Functor pr1() const;
  Functor pr2() const;
};

ProductCat product_category(FinCatPtr a, FinCatPtr b,
                            const SizeCap& cap = global_size_cap());

/// HOM(I, D): objects enumerate all functors I -> D, morphisms all natural
/// transformations, composition is vertical.
struct FunctorCategory {
  FinCatPtr cat;
  FinCatPtr index, base;  // I and D
  std::vector<Functor> objects;
  std::vector<NatTrans> morphisms;  // aligned with cat morphism indices

  std::optional<ObjId> object_index(const Functor& f) const;
  std::optional<MorId> morphism_index(ObjId from, ObjId to,
                                      const std::vector<MorId>& comps) const;

  std::map<std::pair<std::vector<ObjId>, std::vector<MorId>>, ObjId> obj_lookup;
  std::map<std::tuple<ObjId, ObjId, std::vector<MorId>>, MorId> mor_lookup;
};

FunctorCategory functor_category(FinCatPtr index, FinCatPtr base,
                                 const SizeCap& cap = global_size_cap());

}  // namespace catlim
