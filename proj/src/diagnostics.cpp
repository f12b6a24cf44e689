#include "catlim/diagnostics.hpp"

#include <algorithm>
#include <numeric>

namespace catlim {

namespace {

constexpr unsigned long long kCountCap = 1ull << 62;

// One step of the chain count recurrence: next[b] = Σ_a cur[a]·edges(a,b).
std::vector<unsigned long long> step(
    const FinCat& c, const std::vector<unsigned long long>& cur,
    bool skip_identities) {
  std::vector<unsigned long long> next(c.object_count(), 0);
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    if (skip_identities && c.is_identity(m)) continue;
    next[c.cod(m)] += cur[c.dom(m)];
    if (next[c.cod(m)] > kCountCap)
      throw CatError(Err::SizeCapExceeded, "nerve chain count overflow");
  }
  return next;
}

}  // namespace

NerveTruncation nerve_counts(const FinCat& c, std::size_t k) {
  NerveTruncation out;
  out.max_dim = k;
  std::vector<unsigned long long> all(c.object_count(), 1);
  std::vector<unsigned long long> nondeg(c.object_count(), 1);
  for (std::size_t n = 0; n <= k; ++n) {
    out.counts.push_back(std::accumulate(all.begin(), all.end(), 0ull));
    out.nondegenerate.push_back(
        std::accumulate(nondeg.begin(), nondeg.end(), 0ull));
    if (n == k) break;
    all = step(c, all, false);
    nondeg = step(c, nondeg, true);
  }
  return out;
}

GroupoidCheck is_groupoid(const FinCat& c) {
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    bool invertible = false;
    for (MorId g : c.hom(c.cod(m), c.dom(m))) {
      if (c.compose(g, m) == c.identity(c.dom(m)) &&
          c.compose(m, g) == c.identity(c.cod(m))) {
        invertible = true;
        break;
      }
    }
    if (!invertible) return {false, m};
  }
  return {};
}

InitialFinal initial_final(const FinCat& c) {
  InitialFinal out;
  for (ObjId a = 0; a < c.object_count(); ++a) {
    bool initial = true, final_o = true;
    for (ObjId b = 0; b < c.object_count(); ++b) {
      if (c.hom(a, b).size() != 1) initial = false;
      if (c.hom(b, a).size() != 1) final_o = false;
    }
    if (initial && !out.initial) out.initial = a;
    if (final_o && !out.final_obj) out.final_obj = a;
  }
  return out;
}

std::vector<std::vector<ObjId>> pi0(const FinCat& c) {
  std::vector<ObjId> parent(c.object_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ObjId a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (MorId m = 0; m < c.morphism_count(); ++m) {
    ObjId a = find(c.dom(m)), b = find(c.cod(m));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<ObjId>> classes;
  std::vector<std::size_t> class_of(c.object_count(), SIZE_MAX);
  for (ObjId o = 0; o < c.object_count(); ++o) {
    ObjId root = find(o);
    if (class_of[root] == SIZE_MAX) {
      class_of[root] = classes.size();
      classes.emplace_back();
    }
    classes[class_of[root]].push_back(o);
  }
  return classes;
}

}  // namespace catlim
