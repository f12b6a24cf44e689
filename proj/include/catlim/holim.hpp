#pragma once

#include "catlim/hocolim.hpp"

namespace catlim {

/// A compatible family: an object x(i) per index object and a transition
/// map rho(α): transport(α)(x(i)) -> x(j) per index morphism α: i -> j,
/// subject to the unit and cocycle conditions.
struct HolimObject {
  std::vector<ObjId> x;
  std::vector<MorId> rho;

  auto operator<=>(const HolimObject&) const = default;
};

/// A family f(i): x(i) -> y(i) making every transition square commute.
struct HolimMorphism {
  std::vector<MorId> f;
};

struct Holim {
  CatDiagram diagram;
  FinCatPtr cat;
  std::vector<HolimObject> objects;
  std::vector<HolimMorphism> morphisms;  // aligned with cat morphisms

  ObjId object_index(const HolimObject& o) const;
  MorId morphism_index(ObjId dom, ObjId cod,
                       const std::vector<MorId>& comps) const;

  std::map<std::pair<std::vector<ObjId>, std::vector<MorId>>, ObjId> obj_lookup;
  std::map<std::tuple<ObjId, ObjId, std::vector<MorId>>, MorId> mor_lookup;
};

/// Independent validity checks, used both as search post-conditions and in
/// tests: every unit/cocycle instance for objects, every square for
/// morphisms.
bool check_holim_object(const CatDiagram& d, const HolimObject& o);
bool check_holim_morphism(const CatDiagram& d, const HolimObject& a,
                          const HolimObject& b, const HolimMorphism& m);

/// The explicit description: objects found by backtracking over x then rho
/// with unit/cocycle pruning, morphisms by backtracking over components
/// with square pruning. Composition and identities are componentwise.
Holim holim_explicit(const CatDiagram& d,
                     const SizeCap& cap = global_size_cap());

/// The pullback description: the subcategory of HOM(I, hocolim D) of
/// functors that project to the identity on I and transformations whose
/// components project to identities.
struct HolimPullback {
  CatDiagram diagram;
  Hocolim groth;
  FunctorCategory hom_cat;
  FinCatPtr cat;
  std::vector<ObjId> section_to_hom;   // pullback object -> HOM object
  std::vector<MorId> trans_to_hom;     // pullback morphism -> HOM morphism
  std::vector<ObjId> hom_to_section;   // kNoObj when not a section
  std::vector<MorId> hom_to_trans;     // kNoMor when not fiberwise

  const Functor& section(ObjId o) const {
    return hom_cat.objects[section_to_hom[o]];
  }
};

HolimPullback holim_pullback(const CatDiagram& d,
                             const SizeCap& cap = global_size_cap());

/// Mutually inverse functors between the two descriptions; verifies that
/// both pass check_functor and compose to identities strictly, and throws
/// ConstructionMismatch otherwise.
std::pair<Functor, Functor> canonical_iso(const Holim& h,
                                          const HolimPullback& pb);

/// The functor holim(from) -> holim(to) induced by a diagram map.
Functor holim_induced(const DiagramMap& t, const Holim& src, const Holim& dst);

}  // namespace catlim
