#pragma once

#include "catlim/functor.hpp"

namespace catlim {

/// A strict functor from a finite index category to categories: one fiber
/// per index object, one transport functor per index morphism.
struct CatDiagram {
  FinCatPtr index;
  std::vector<FinCatPtr> fibers;     // per index object
  std::vector<Functor> transports;   // per index morphism

  const FinCat& fiber(ObjId i) const { return *fibers[i]; }
  const Functor& transport(MorId a) const { return transports[a]; }
};

/// Exhaustively checks fibers/transport shapes, transport of identities,
/// and strict functoriality transport(β∘α) = transport(β)∘transport(α).
CatDiagram validate_diagram(CatDiagram raw);

CatDiagram constant_diagram(FinCatPtr index, FinCatPtr fiber);

/// A strict map of diagrams over a shared index.
struct DiagramMap {
  CatDiagram from, to;
  std::vector<Functor> components;  // per index object
};

/// True iff components(i') ∘ transport_from(α) = transport_to(α) ∘
/// components(i) strictly, for every index morphism α.
CheckResult check_diagram_map(const DiagramMap& t);

DiagramMap identity_diagram_map(const CatDiagram& d);
DiagramMap compose_diagram_maps(const DiagramMap& s, const DiagramMap& t);

/// A diagram indexed by a product category, with its two factors kept
/// around so it can be curried in either variable.
struct BiDiagram {
  ProductCat prod;        // prod.left = I, prod.right = J
  CatDiagram underlying;  // index == prod.cat

  const FinCatPtr& I() const { return prod.left; }
  const FinCatPtr& J() const { return prod.right; }
  const FinCat& fiber_at(ObjId i, ObjId j) const {
    return *underlying.fibers[prod.pair_object(i, j)];
  }
  /// The transport of the product morphism (alpha, beta).
  const Functor& transport_at(MorId alpha, MorId beta) const {
    return underlying.transports[prod.pair_morphism(alpha, beta)];
  }
};

/// Validates the underlying diagram and the index factorization.
BiDiagram validate_bidiagram(BiDiagram raw);

/// Fixing j yields the diagram i ↦ C_(i,j) over I with transports C(α, 1_j).
CatDiagram curry_fix_j(const BiDiagram& b, ObjId j);
/// Fixing i yields the diagram j ↦ C_(i,j) over J with transports C(1_i, β).
CatDiagram curry_fix_i(const BiDiagram& b, ObjId i);

/// The map between curried row diagrams induced by α: i -> i', with
/// components C(α, 1_j): C_(i,j) -> C_(i',j).
DiagramMap row_map(const BiDiagram& b, MorId alpha);
/// The map between curried column diagrams induced by β: j -> j'.
DiagramMap column_map(const BiDiagram& b, MorId beta);

}  // namespace catlim
