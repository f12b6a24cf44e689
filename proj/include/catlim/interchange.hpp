#pragma once

#include "catlim/holim.hpp"

namespace catlim {

/// Both interchange categories for a bidiagram, built purely from the
/// generic curry/holim/hocolim/induced operations, together with the
/// codecs that trace their objects and morphisms back to nested data.
///
/// A = hocolim over J of (j ↦ holim over I of the j-th column),
/// B = holim over I of (i ↦ hocolim over J of the i-th row).
struct InterchangePair {
  BiDiagram bidiagram;
  std::vector<Holim> column_holims;   // per object of J
  CatDiagram a_diagram;               // over J
  Hocolim A;
  std::vector<Hocolim> row_hocolims;  // per object of I
  CatDiagram b_diagram;               // over I
  Holim B;
};

InterchangePair inner_outer(const BiDiagram& bd,
                            const SizeCap& cap = global_size_cap());

/// The faithful comparison functor A -> B: the object (j, x) goes to the
/// family with constant column j and identity transition maps in J.
Functor iota(const InterchangePair& pair);

/// The retraction B -> A collapsing a family onto its value over the
/// pseudo-final object e; satisfies p ∘ ι = 1 strictly.
Functor retraction_p(const InterchangePair& pair, const PseudoFinal& pf);

/// The natural map 1 -> ι∘p whose component at a family is built from the
/// transition maps along eps; the component at every ι-image is an identity.
NatTrans theta(const InterchangePair& pair, const PseudoFinal& pf);

enum class CheckStatus { Fail, Pass, Skipped };

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::Fail;
  std::string witness;  // counterexample description on failure
};

struct RetractReport {
  std::vector<CheckEntry> checks;
  std::size_t a_objects = 0, a_morphisms = 0;
  std::size_t b_objects = 0, b_morphisms = 0;
  std::size_t pseudo_final_count = 0;

  bool all_pass() const {
    for (const CheckEntry& c : checks)
      if (c.status == CheckStatus::Fail) return false;
    return true;
  }
};

/// Runs every mechanized claim on one bidiagram: construction re-validation,
/// decode cross-checks of both categories against their nested description,
/// ι functoriality/faithfulness/image characterization, and, per
/// pseudo-final structure on I, the identities p ∘ ι = 1, naturality of θ,
/// and θ∘ι = 1.
/// When I has no pseudo-final object the retract checks report as skipped.
RetractReport verify_retract(const BiDiagram& bd,
                             const SizeCap& cap = global_size_cap());
RetractReport verify_retract(const InterchangePair& pair);

// Decoded views used by the report's independent cross-checks and by tests.

/// B-object data in nested form: per index object i the pair (j(i), x_i),
/// per index morphism α the pair (β_α, ρ_α).
struct BObjectDecoded {
  std::vector<ObjId> j;        // j(i)
  std::vector<ObjId> x;        // x_i in fiber (i, j(i))
  std::vector<MorId> beta;     // β_α in J
  std::vector<MorId> rho;      // ρ_α in fiber (cod α, j(cod α))
};
BObjectDecoded decode_b_object(const InterchangePair& pair, ObjId bo);

/// B-morphism data: per index object i the pair (β_i, f_i).
struct BMorphismDecoded {
  std::vector<MorId> beta;  // β_i in J
  std::vector<MorId> f;     // f_i in fiber (i, k(i))
};
BMorphismDecoded decode_b_morphism(const InterchangePair& pair, MorId bm);

}  // namespace catlim
