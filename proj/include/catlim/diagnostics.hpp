#pragma once

#include <optional>

#include "catlim/fincat.hpp"

namespace catlim {

/// Chain counts of the truncated nerve: counts[n] is the number of
/// composable n-chains, nondegenerate[n] the number with no identity
/// factor. counts[0] is the object count.
struct NerveTruncation {
  std::size_t max_dim = 0;
  std::vector<unsigned long long> counts;
  std::vector<unsigned long long> nondegenerate;
};

NerveTruncation nerve_counts(const FinCat& c, std::size_t k);

struct GroupoidCheck {
  bool is_groupoid = true;
  std::optional<MorId> witness;  // a morphism with no two-sided inverse
};

GroupoidCheck is_groupoid(const FinCat& c);

struct InitialFinal {
  std::optional<ObjId> initial;
  std::optional<ObjId> final_obj;
};

/// initial: singleton hom to every object; final: dually.
InitialFinal initial_final(const FinCat& c);

/// Connected components under zigzags of morphisms, via union-find.
/// Classes are sorted internally and listed by smallest member.
std::vector<std::vector<ObjId>> pi0(const FinCat& c);

}  // namespace catlim
