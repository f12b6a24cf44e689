#include "catlim/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "catlim/interchange.hpp"

namespace catlim {

namespace {

std::size_t draw(CorpusRng& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

bool coin(CorpusRng& rng, double prob) {
  return (rng() % 10000) < static_cast<unsigned long long>(prob * 10000);
}

std::vector<std::vector<bool>> random_order(CorpusRng& rng, std::size_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) leq[i][j] = coin(rng, 0.45);
  // Relations only point from lower to higher indices, so closure keeps the
  // order antisymmetric.
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
  return leq;
}

bool has_maximum(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool top = true;
    for (std::size_t i = 0; i < n && top; ++i) top = leq[i][e];
    if (top) return true;
  }
  return false;
}

}  // namespace

FinCat random_poset(CorpusRng& rng, std::size_t max_objects, IndexMode mode) {
  for (;;) {
    std::size_t lo = mode == IndexMode::NoPseudoFinal ? 2 : 1;
    std::size_t n = draw(rng, lo, std::max(lo, max_objects));
    auto leq = random_order(rng, n);
    if (mode == IndexMode::ForceFinal) {
      for (std::size_t i = 0; i < n; ++i) leq[i][n - 1] = true;
    }
    if (mode == IndexMode::NoPseudoFinal && has_maximum(leq)) continue;
    return poset_category(n, leq);
  }
}

FinCat random_fiber(CorpusRng& rng, std::size_t max_objects,
                    std::size_t max_morphisms) {
  std::size_t n = draw(rng, 1, max_objects);
  auto leq = random_order(rng, n);
  FinCat base = poset_category(n, leq);
  if (base.morphism_count() >= max_morphisms || !coin(rng, 0.55)) return base;

  // Enrichment: one extra hom element z parallel to some a <= b, with its
  // composites drawn at random and the whole table rejection-sampled.
  std::vector<std::pair<ObjId, ObjId>> pairs;
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      if (leq[a][b]) pairs.emplace_back(a, b);
  auto [za, zb] = pairs[draw(rng, 0, pairs.size() - 1)];

  std::vector<std::vector<MorId>> idx(n, std::vector<MorId>(n, kNoMor));
  RawCategory proto;
  proto.object_count = n;
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b)
      if (leq[a][b]) {
        idx[a][b] = static_cast<MorId>(proto.morphisms.size());
        proto.morphisms.push_back({a, b, ""});
        if (a == b) proto.identities.emplace_back(a, idx[a][b]);
      }
  const MorId z = static_cast<MorId>(proto.morphisms.size());
  proto.morphisms.push_back({za, zb, "z"});
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      for (ObjId c = 0; c < n; ++c)
        if (leq[b][c])
          proto.composition.push_back({idx[b][c], idx[a][b], idx[a][c]});
    }
  auto hom_elems = [&](ObjId a, ObjId b) {
    std::vector<MorId> out;
    if (leq[a][b]) out.push_back(idx[a][b]);
    if (a == za && b == zb) out.push_back(z);
    return out;
  };

  for (int attempt = 0; attempt < 20; ++attempt) {
    RawCategory raw = proto;
    bool feasible = true;
    // z ∘ f for non-identity f into za (including z itself when composable).
    for (MorId f = 0; f < raw.morphisms.size() && feasible; ++f) {
      if (raw.morphisms[f].cod != za) continue;
      if (raw.morphisms[f].dom == raw.morphisms[f].cod && f != z) continue;
      auto cands = hom_elems(raw.morphisms[f].dom, zb);
      if (cands.empty()) feasible = false;
      else raw.composition.push_back({z, f, cands[draw(rng, 0, cands.size() - 1)]});
    }
    // g ∘ z for non-identity g out of zb (the (z,z) pair is covered above).
    for (MorId g = 0; g < raw.morphisms.size() && feasible; ++g) {
      if (raw.morphisms[g].dom != zb || g == z) continue;
      if (raw.morphisms[g].dom == raw.morphisms[g].cod) continue;
      auto cands = hom_elems(za, raw.morphisms[g].cod);
      if (cands.empty()) feasible = false;
      else raw.composition.push_back({g, z, cands[draw(rng, 0, cands.size() - 1)]});
    }
    if (!feasible) break;
    try {
      return FinCat::validate(std::move(raw));
    } catch (const CatError&) {
      // retry with fresh draws
    }
  }
  return base;
}

namespace {

// Transport assignment over a poset-shaped index: pick random functors on
// generators (morphisms with no non-identity factorization), derive the
// composites, and let validate_diagram reject inconsistent squares.
struct TransportSampler {
  const FinCat& index;

  std::vector<bool> generator_flags() const {
    std::vector<bool> gen(index.morphism_count(), false);
    for (MorId m = 0; m < index.morphism_count(); ++m) {
      if (index.is_identity(m)) continue;
      bool factors = false;
      for (MorId g = 0; g < index.morphism_count() && !factors; ++g)
        for (MorId f = 0; f < index.morphism_count() && !factors; ++f)
          if (!index.is_identity(g) && !index.is_identity(f) &&
              index.composable(g, f) && index.compose(g, f) == m)
            factors = true;
      gen[m] = !factors;
    }
    return gen;
  }

  // Derives non-generator transports from assigned factors; returns false
  // if some morphism could not be filled (cannot happen over a poset).
  bool derive(std::vector<Functor>& ts) const {
    bool progress = true;
    while (progress) {
      progress = false;
      for (MorId m = 0; m < index.morphism_count(); ++m) {
        if (!ts[m].obj_map.empty() || index.is_identity(m)) continue;
        for (MorId g = 0; g < index.morphism_count(); ++g) {
          if (index.is_identity(g) || ts[g].obj_map.empty()) continue;
          for (MorId f = 0; f < index.morphism_count(); ++f) {
            if (index.is_identity(f) || ts[f].obj_map.empty()) continue;
            if (!index.composable(g, f) || index.compose(g, f) != m) continue;
            ts[m] = compose_functors(ts[g], ts[f]);
            progress = true;
            break;
          }
          if (!ts[m].obj_map.empty()) break;
        }
      }
    }
    for (MorId m = 0; m < index.morphism_count(); ++m)
      if (!index.is_identity(m) && ts[m].obj_map.empty()) return false;
    return true;
  }
};

CatDiagram assemble_diagram(CorpusRng& rng, FinCatPtr index,
                            std::vector<FinCatPtr> fibers, bool constant_mode) {
  CatDiagram d;
  d.index = index;
  d.fibers = std::move(fibers);

  TransportSampler sampler{*index};
  std::vector<bool> gen = sampler.generator_flags();
  std::vector<std::vector<Functor>> choices(index->morphism_count());
  for (MorId m = 0; m < index->morphism_count(); ++m)
    if (gen[m])
      choices[m] =
          enumerate_functors(d.fibers[index->dom(m)], d.fibers[index->cod(m)]);

  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<Functor> ts(index->morphism_count());
    for (ObjId i = 0; i < index->object_count(); ++i)
      ts[index->identity(i)] = identity_functor(d.fibers[i]);
    bool ok = true;
    for (MorId m = 0; m < index->morphism_count() && ok; ++m) {
      if (!gen[m]) continue;
      if (choices[m].empty()) ok = false;
      else ts[m] = choices[m][draw(rng, 0, choices[m].size() - 1)];
    }
    if (!ok) break;
    if (!sampler.derive(ts)) continue;
    CatDiagram cand = d;
    cand.transports = std::move(ts);
    try {
      return validate_diagram(std::move(cand));
    } catch (const CatError&) {
      // squares disagreed; redraw
    }
  }

  // Fallback. With a shared fiber, identity transports always satisfy
  // functoriality; otherwise collapse every non-identity transport onto a
  // fixed object of its target fiber, which does too.
  std::vector<Functor> ts(index->morphism_count());
  for (ObjId i = 0; i < index->object_count(); ++i)
    ts[index->identity(i)] = identity_functor(d.fibers[i]);
  for (MorId m = 0; m < index->morphism_count(); ++m) {
    if (index->is_identity(m)) continue;
    ts[m] = constant_mode ? identity_functor(d.fibers[index->dom(m)])
                          : constant_functor(d.fibers[index->dom(m)],
                                             d.fibers[index->cod(m)], 0);
  }
  d.transports = std::move(ts);
  return validate_diagram(std::move(d));
}

}  // namespace

CatDiagram random_diagram(CorpusRng& rng, std::size_t max_index_objects,
                          const CorpusOptions& opts, const SizeCap& cap) {
  FinCatPtr index = share(random_poset(rng, max_index_objects, IndexMode::Any));
  bool constant_mode = coin(rng, 0.3);
  std::vector<FinCatPtr> fibers;
  if (constant_mode) {
    FinCatPtr one = share(
        random_fiber(rng, opts.max_fiber_objects, opts.max_fiber_morphisms));
    fibers.assign(index->object_count(), one);
  } else {
    for (ObjId i = 0; i < index->object_count(); ++i)
      fibers.push_back(share(random_fiber(rng, opts.max_fiber_objects,
                                          opts.max_fiber_morphisms)));
  }
  (void)cap;
  return assemble_diagram(rng, index, std::move(fibers), constant_mode);
}

BiDiagram random_bidiagram(CorpusRng& rng, const CorpusOptions& opts,
                           const SizeCap& cap) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    FinCatPtr I =
        share(random_poset(rng, opts.max_index_objects, opts.index_mode));
    FinCatPtr J =
        share(random_poset(rng, opts.max_index_objects, IndexMode::Any));
    ProductCat prod = product_category(I, J, cap);

    bool constant_mode = coin(rng, 0.4);
    std::vector<FinCatPtr> fibers;
    if (constant_mode) {
      FinCatPtr one = share(
          random_fiber(rng, opts.max_fiber_objects, opts.max_fiber_morphisms));
      fibers.assign(prod.cat->object_count(), one);
    } else {
      for (ObjId o = 0; o < prod.cat->object_count(); ++o)
        fibers.push_back(share(random_fiber(rng, opts.max_fiber_objects,
                                            opts.max_fiber_morphisms)));
    }

    BiDiagram bd;
    bd.prod = prod;
    bd.underlying = assemble_diagram(rng, prod.cat, std::move(fibers),
                                     constant_mode);
    bd = validate_bidiagram(std::move(bd));

    // Budget check: the row hocolims bound the nested holim search space.
    try {
      std::size_t obj_product = 1, mor_product = 1;
      for (ObjId i = 0; i < I->object_count(); ++i) {
        Hocolim row = hocolim(curry_fix_i(bd, i), cap);
        obj_product *= std::max<std::size_t>(row.cat->object_count(), 1);
        mor_product *= std::max<std::size_t>(row.cat->morphism_count(), 1);
      }
      if (obj_product > opts.max_row_object_product ||
          mor_product > opts.max_row_morphism_product)
        continue;
      inner_outer(bd, cap);  // rejection-sample instances that exceed the cap
    } catch (const CatError& e) {
      if (e.code() == Err::SizeCapExceeded) continue;
      throw;
    }
    return bd;
  }
  throw CatError(Err::ConstructionMismatch,
                 "could not generate a bidiagram within the budget");
}

}  // namespace catlim
