#pragma once

#include <random>

#include "catlim/diagram.hpp"

namespace catlim {

/// How the first index category of a generated instance is constrained.
enum class IndexMode {
  Any,
  ForceFinal,      // guaranteed genuine final object
  NoPseudoFinal,   // rejection-sampled until no pseudo-final object exists
};

struct CorpusOptions {
  std::size_t max_index_objects = 3;
  std::size_t max_fiber_objects = 3;
  std::size_t max_fiber_morphisms = 6;
  IndexMode index_mode = IndexMode::ForceFinal;
  // Desk-scale budget on the product of row-hocolim sizes, which bounds the
  // nested holim search space.
  std::size_t max_row_object_product = 400;
  std::size_t max_row_morphism_product = 3000;
};

using CorpusRng = std::mt19937_64;

/// Random poset category on 1..max_objects objects (2..max for
/// NoPseudoFinal). Posets guarantee associativity by construction.
FinCat random_poset(CorpusRng& rng, std::size_t max_objects, IndexMode mode);

/// Random fiber: a random poset, optionally enriched with one extra parallel
/// hom element whose composites are drawn at random and rejection-sampled
/// against the category laws.
FinCat random_fiber(CorpusRng& rng, std::size_t max_objects,
                    std::size_t max_morphisms);

/// Random strict diagram over a random poset index with at most
/// max_index_objects objects. Transports are drawn from the exhaustive
/// functor enumeration on generators, derived on composites, and the whole
/// assignment is rejection-sampled until validate_diagram accepts.
CatDiagram random_diagram(CorpusRng& rng, std::size_t max_index_objects,
                          const CorpusOptions& opts,
                          const SizeCap& cap = global_size_cap());

/// Random bidiagram honoring the options; instances whose nested
/// constructions would exceed the cap or the row budgets are regenerated.
BiDiagram random_bidiagram(CorpusRng& rng, const CorpusOptions& opts,
                           const SizeCap& cap = global_size_cap());

}  // namespace catlim
