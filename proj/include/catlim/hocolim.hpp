#pragma once

#include <map>

#include "catlim/diagram.hpp"

namespace catlim {

/// Object (i, x): i in the index, x in the fiber over i.
struct GrothObject {
  ObjId i = 0;
  ObjId x = 0;
};

/// Morphism (α, ρ): (i,x) -> (j,y) with α: i -> j in the index and
/// ρ: transport(α)(x) -> y in the fiber over j.
struct GrothMorphism {
  MorId alpha = 0;
  MorId rho = 0;
};

/// The Grothendieck construction of a diagram, with its projection onto
/// the index and codecs between table indices and the pair descriptions.
struct Hocolim {
  CatDiagram diagram;
  FinCatPtr cat;
  Functor projection;  // cat -> index, forgets the fiber datum
  std::vector<GrothObject> objects;
  std::vector<GrothMorphism> morphisms;

  ObjId object_index(ObjId i, ObjId x) const;
  /// Morphism index from (dom object, α, ρ); the codomain is determined.
  MorId morphism_index(ObjId dom_obj, MorId alpha, MorId rho) const;

  std::vector<ObjId> obj_offset;  // per index object
  std::map<std::tuple<ObjId, MorId, MorId>, MorId> mor_lookup;
};

/// Objects are all pairs (i,x) in lexicographic order; hom((i,x),(j,y))
/// enumerates pairs (α,ρ); composition follows the semidirect-product law
/// (α,ρ) ∘ (β,μ) = (α∘β, ρ ∘ α(μ)).
Hocolim hocolim(const CatDiagram& d, const SizeCap& cap = global_size_cap());

/// The functor hocolim(from) -> hocolim(to) induced by a diagram map:
/// (i,x) ↦ (i, t_i(x)) and (α,ρ) ↦ (α, t_(cod α)(ρ)).
Functor hocolim_induced(const DiagramMap& t, const Hocolim& src,
                        const Hocolim& dst);

}  // namespace catlim
