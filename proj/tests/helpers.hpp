#pragma once

#include <optional>

#include "catlim/corpus.hpp"
#include "catlim/diagnostics.hpp"
#include "catlim/interchange.hpp"

// Test-only utilities. The isomorphism search and the recursive chain
// enumeration are deliberately independent of the library's own
// constructions so they can serve as oracles.
namespace testutil {

using namespace catlim;

inline bool extend_iso_morphisms(const FinCat& a, const FinCat& b,
                                 const std::vector<ObjId>& sigma,
                                 std::vector<MorId>& mmap,
                                 std::vector<bool>& used, MorId next) {
  if (next == a.morphism_count()) return true;
  for (MorId cand : b.hom(sigma[a.dom(next)], sigma[a.cod(next)])) {
    if (used[cand]) continue;
    if (a.is_identity(next) != b.is_identity(cand)) continue;
    mmap[next] = cand;
    used[cand] = true;
    bool ok = true;
    for (MorId g = 0; g <= next && ok; ++g) {
      if (mmap[g] == kNoMor) continue;
      for (MorId f = 0; f <= next && ok; ++f) {
        if (mmap[f] == kNoMor || !a.composable(g, f)) continue;
        MorId gf = a.compose(g, f);
        if (gf > next || mmap[gf] == kNoMor) continue;
        ok = b.compose(mmap[g], mmap[f]) == mmap[gf];
      }
    }
    if (ok && extend_iso_morphisms(a, b, sigma, mmap, used, next + 1))
      return true;
    used[cand] = false;
    mmap[next] = kNoMor;
  }
  return false;
}

inline bool extend_iso_objects(const FinCat& a, const FinCat& b,
                               std::vector<ObjId>& sigma,
                               std::vector<bool>& used, ObjId next,
                               std::vector<MorId>& mmap) {
  if (next == a.object_count()) {
    std::vector<bool> mused(b.morphism_count(), false);
    mmap.assign(a.morphism_count(), kNoMor);
    return extend_iso_morphisms(a, b, sigma, mmap, mused, 0);
  }
  for (ObjId cand = 0; cand < b.object_count(); ++cand) {
    if (used[cand]) continue;
    bool ok = a.hom(next, next).size() == b.hom(cand, cand).size();
    for (ObjId prev = 0; prev < next && ok; ++prev)
      ok = a.hom(next, prev).size() == b.hom(cand, sigma[prev]).size() &&
           a.hom(prev, next).size() == b.hom(sigma[prev], cand).size();
    if (!ok) continue;
    sigma[next] = cand;
    used[cand] = true;
    if (extend_iso_objects(a, b, sigma, used, next + 1, mmap)) return true;
    used[cand] = false;
  }
  return false;
}

/// Exhaustive isomorphism search with hom-profile pruning.
inline std::optional<Functor> find_isomorphism(FinCatPtr a, FinCatPtr b) {
  if (a->object_count() != b->object_count() ||
      a->morphism_count() != b->morphism_count())
    return std::nullopt;
  std::vector<ObjId> sigma(a->object_count());
  std::vector<bool> used(b->object_count(), false);
  std::vector<MorId> mmap;
  if (!extend_iso_objects(*a, *b, sigma, used, 0, mmap)) return std::nullopt;
  Functor f;
  f.source = std::move(a);
  f.target = std::move(b);
  f.obj_map = std::move(sigma);
  f.mor_map = std::move(mmap);
  return f;
}

/// Recursive enumeration of composable n-chains, independent of the matrix
/// recurrence used by nerve_counts.
inline unsigned long long count_chains_rec(const FinCat& c, std::size_t n,
                                           bool nondegenerate,
                                           std::optional<ObjId> at = {}) {
  if (n == 0) return at ? 1 : c.object_count();
  unsigned long long total = 0;
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    if (at && c.dom(m) != *at) continue;
    if (nondegenerate && c.is_identity(m)) continue;
    total += count_chains_rec(c, n - 1, nondegenerate, c.cod(m));
  }
  return total;
}

/// The idempotent two-element monoid {1, z} with z∘z = z.
inline FinCat idempotent_monoid() {
  return monoid_category({{0, 1}, {1, 1}}, 0);
}

/// The two-element group {1, z} with z∘z = 1.
inline FinCat involution_monoid() {
  return monoid_category({{0, 1}, {1, 0}}, 0);
}

/// Bijectivity of a functor's maps (an isomorphism of table categories).
inline bool is_bijective_on_tables(const Functor& f) {
  if (f.obj_map.size() != f.target->object_count() ||
      f.mor_map.size() != f.target->morphism_count())
    return false;
  std::vector<bool> oseen(f.target->object_count(), false);
  for (ObjId o : f.obj_map) {
    if (oseen[o]) return false;
    oseen[o] = true;
  }
  std::vector<bool> mseen(f.target->morphism_count(), false);
  for (MorId m : f.mor_map) {
    if (mseen[m]) return false;
    mseen[m] = true;
  }
  return true;
}

}  // namespace testutil
