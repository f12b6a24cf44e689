#include "catlim/fincat.hpp"

#include <algorithm>
#include <mutex>

#include "catlim/enumerate.hpp"

namespace catlim {

namespace {

std::mutex g_cap_mutex;
SizeCap g_cap{};

std::string mor_desc(const RawCategory& raw, MorId m) {
  if (m < raw.morphisms.size() && !raw.morphisms[m].name.empty())
    return raw.morphisms[m].name;
  return "#" + std::to_string(m);
}

}  // namespace

SizeCap global_size_cap() {
  std::lock_guard<std::mutex> lock(g_cap_mutex);
  return g_cap;
}

void set_global_size_cap(SizeCap cap) {
  std::lock_guard<std::mutex> lock(g_cap_mutex);
  g_cap = cap;
}

const char* err_name(Err e) {
  switch (e) {
    case Err::MissingComposite: return "MissingComposite";
    case Err::SpuriousComposite: return "SpuriousComposite";
    case Err::CompositeTypeMismatch: return "CompositeTypeMismatch";
    case Err::AssociativityViolation: return "AssociativityViolation";
    case Err::IdentityViolation: return "IdentityViolation";
    case Err::DanglingIndex: return "DanglingIndex";
    case Err::InvalidParameter: return "InvalidParameter";
    case Err::SizeCapExceeded: return "SizeCapExceeded";
    case Err::IndexOutOfRange: return "IndexOutOfRange";
    case Err::SourceTargetMismatch: return "SourceTargetMismatch";
    case Err::ShapeMismatch: return "ShapeMismatch";
    case Err::FunctorialityViolation: return "FunctorialityViolation";
    case Err::FiberMismatch: return "FiberMismatch";
    case Err::ConstructionMismatch: return "ConstructionMismatch";
    case Err::NotPseudoFinal: return "NotPseudoFinal";
    case Err::ParseError: return "ParseError";
  }
  return "UnknownError";
}

FinCat FinCat::validate(RawCategory raw, const SizeCap& cap) {
  const std::size_t n_obj = raw.object_count;
  const std::size_t n_mor = raw.morphisms.size();
  if (n_obj > cap.max_objects || n_mor > cap.max_morphisms)
    throw CatError(Err::SizeCapExceeded,
                   "category with " + std::to_string(n_obj) + " objects / " +
                       std::to_string(n_mor) + " morphisms exceeds cap " +
                       std::to_string(cap.max_objects) + "/" +
                       std::to_string(cap.max_morphisms));

  for (MorId m = 0; m < n_mor; ++m) {
    if (raw.morphisms[m].dom >= n_obj || raw.morphisms[m].cod >= n_obj)
      throw CatError(Err::DanglingIndex,
                     "morphism " + mor_desc(raw, m) + " has endpoint out of range");
  }

  // Identities: one per object, typed as an endomorphism.
  std::vector<MorId> identities(n_obj, kNoMor);
  for (auto [o, m] : raw.identities) {
    if (o >= n_obj || m >= n_mor)
      throw CatError(Err::DanglingIndex, "identity entry out of range");
    if (identities[o] != kNoMor && identities[o] != m)
      throw CatError(Err::IdentityViolation,
                     "two identities declared for object " + std::to_string(o));
    identities[o] = m;
  }
  for (ObjId o = 0; o < n_obj; ++o) {
    if (identities[o] == kNoMor)
      throw CatError(Err::IdentityViolation,
                     "no identity declared for object " + std::to_string(o));
    MorId m = identities[o];
    if (raw.morphisms[m].dom != o || raw.morphisms[m].cod != o)
      throw CatError(Err::IdentityViolation,
                     "identity of object " + std::to_string(o) +
                         " is not an endomorphism of it");
  }

  // Composition table.
  std::vector<MorId> comp(n_mor * n_mor, kNoMor);
  auto at = [&](MorId g, MorId f) -> MorId& {
    return comp[static_cast<std::size_t>(g) * n_mor + f];
  };
  for (const auto& entry : raw.composition) {
    MorId g = entry[0], f = entry[1], gf = entry[2];
    if (g >= n_mor || f >= n_mor || gf >= n_mor)
      throw CatError(Err::DanglingIndex, "composition entry out of range");
    if (raw.morphisms[f].cod != raw.morphisms[g].dom)
      throw CatError(Err::SpuriousComposite,
                     "(" + mor_desc(raw, g) + ", " + mor_desc(raw, f) +
                         ") is not a composable pair");
    if (at(g, f) != kNoMor && at(g, f) != gf)
      throw CatError(Err::SpuriousComposite,
                     "conflicting entries for (" + mor_desc(raw, g) + ", " +
                         mor_desc(raw, f) + ")");
    if (raw.morphisms[gf].dom != raw.morphisms[f].dom ||
        raw.morphisms[gf].cod != raw.morphisms[g].cod)
      throw CatError(Err::CompositeTypeMismatch,
                     "composite of (" + mor_desc(raw, g) + ", " +
                         mor_desc(raw, f) + ") has wrong endpoints");
    at(g, f) = gf;
  }

  // Identity laws force the entries with an identity factor; fill the
  // missing ones and reject the wrong ones.
  for (MorId f = 0; f < n_mor; ++f) {
    MorId idc = identities[raw.morphisms[f].cod];
    MorId idd = identities[raw.morphisms[f].dom];
    if (at(idc, f) == kNoMor) at(idc, f) = f;
    if (at(f, idd) == kNoMor) at(f, idd) = f;
    if (at(idc, f) != f)
      throw CatError(Err::IdentityViolation,
                     "id ∘ " + mor_desc(raw, f) + " != " + mor_desc(raw, f));
    if (at(f, idd) != f)
      throw CatError(Err::IdentityViolation,
                     mor_desc(raw, f) + " ∘ id != " + mor_desc(raw, f));
  }

  // Totality over composable pairs.
  std::vector<std::vector<MorId>> into(n_obj);  // morphisms by codomain
  for (MorId m = 0; m < n_mor; ++m) into[raw.morphisms[m].cod].push_back(m);
  for (MorId g = 0; g < n_mor; ++g) {
    for (MorId f : into[raw.morphisms[g].dom]) {
      if (at(g, f) == kNoMor)
        throw CatError(Err::MissingComposite,
                       "no composite for (" + mor_desc(raw, g) + ", " +
                           mor_desc(raw, f) + ")");
    }
  }

  // Associativity, iterating actual composable triples only.
  for (MorId h = 0; h < n_mor; ++h) {
    for (MorId g : into[raw.morphisms[h].dom]) {
      for (MorId f : into[raw.morphisms[g].dom]) {
        if (at(h, at(g, f)) != at(at(h, g), f))
          throw CatError(Err::AssociativityViolation,
                         "(" + mor_desc(raw, h) + ", " + mor_desc(raw, g) +
                             ", " + mor_desc(raw, f) + ")");
      }
    }
  }

  FinCat c;
  c.object_count_ = n_obj;
  c.dom_.resize(n_mor);
  c.cod_.resize(n_mor);
  for (MorId m = 0; m < n_mor; ++m) {
    c.dom_[m] = raw.morphisms[m].dom;
    c.cod_[m] = raw.morphisms[m].cod;
  }
  c.identities_ = std::move(identities);
  c.comp_ = std::move(comp);
  c.object_names_.resize(n_obj);
  for (ObjId o = 0; o < n_obj; ++o)
    c.object_names_[o] = o < raw.object_names.size() && !raw.object_names[o].empty()
                             ? raw.object_names[o]
                             : std::to_string(o);
  c.morphism_names_.resize(n_mor);
  for (MorId m = 0; m < n_mor; ++m) {
    if (!raw.morphisms[m].name.empty())
      c.morphism_names_[m] = raw.morphisms[m].name;
    else if (c.identities_[c.dom_[m]] == m && c.dom_[m] == c.cod_[m])
      c.morphism_names_[m] = "1_" + c.object_names_[c.dom_[m]];
    else
      c.morphism_names_[m] = "m" + std::to_string(m);
  }
  return c;
}

std::vector<MorId> FinCat::hom(ObjId a, ObjId b) const {
  std::vector<MorId> out;
  for (MorId m = 0; m < morphism_count(); ++m)
    if (dom_[m] == a && cod_[m] == b) out.push_back(m);
  return out;
}

RawCategory FinCat::to_raw() const {
  RawCategory raw;
  raw.object_count = object_count_;
  raw.object_names = object_names_;
  raw.morphisms.resize(morphism_count());
  for (MorId m = 0; m < morphism_count(); ++m)
    raw.morphisms[m] = {dom_[m], cod_[m], morphism_names_[m]};
  for (ObjId o = 0; o < object_count_; ++o)
    raw.identities.emplace_back(o, identities_[o]);
  for (MorId g = 0; g < morphism_count(); ++g)
    for (MorId f = 0; f < morphism_count(); ++f) {
      MorId gf = comp_[static_cast<std::size_t>(g) * morphism_count() + f];
      if (gf != kNoMor) raw.composition.push_back({g, f, gf});
    }
  return raw;
}

bool FinCat::same_shape(const FinCat& other) const {
  return object_count_ == other.object_count_ && dom_ == other.dom_ &&
         cod_ == other.cod_ && identities_ == other.identities_ &&
         comp_ == other.comp_;
}

FinCat validate_category(RawCategory raw, const SizeCap& cap) {
  return FinCat::validate(std::move(raw), cap);
}

std::vector<MorId> hom_set(const FinCat& c, ObjId a, ObjId b) {
  if (a >= c.object_count() || b >= c.object_count())
    throw CatError(Err::IndexOutOfRange, "hom_set: object index");
  return c.hom(a, b);
}

FinCat terminal_category() { return discrete_category(1); }

FinCat discrete_category(std::size_t n, const SizeCap& cap) {
  RawCategory raw;
  raw.object_count = n;
  for (ObjId o = 0; o < n; ++o) {
    raw.morphisms.push_back({o, o, ""});
    raw.identities.emplace_back(o, o);
  }
  return FinCat::validate(std::move(raw), cap);
}

FinCat poset_category(std::size_t n, const std::vector<std::vector<bool>>& leq,
                      const SizeCap& cap) {
  if (leq.size() != n)
    throw CatError(Err::InvalidParameter, "poset relation has wrong size");
  RawCategory raw;
  raw.object_count = n;
  std::vector<std::vector<MorId>> idx(n, std::vector<MorId>(n, kNoMor));
  for (ObjId a = 0; a < n; ++a) {
    if (leq[a].size() != n || !leq[a][a])
      throw CatError(Err::InvalidParameter, "poset relation not reflexive");
    for (ObjId b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      if (a != b && leq[b][a])
        throw CatError(Err::InvalidParameter, "poset relation not antisymmetric");
      idx[a][b] = static_cast<MorId>(raw.morphisms.size());
      raw.morphisms.push_back({a, b, ""});
      if (a == b) raw.identities.emplace_back(a, idx[a][b]);
    }
  }
  for (ObjId a = 0; a < n; ++a)
    for (ObjId b = 0; b < n; ++b) {
      if (!leq[a][b]) continue;
      for (ObjId c = 0; c < n; ++c) {
        if (!leq[b][c]) continue;
        if (!leq[a][c])
          throw CatError(Err::InvalidParameter, "poset relation not transitive");
        raw.composition.push_back({idx[b][c], idx[a][b], idx[a][c]});
      }
    }
  return FinCat::validate(std::move(raw), cap);
}

FinCat chain_category(std::size_t n, const SizeCap& cap) {
  std::size_t size = n + 1;
  std::vector<std::vector<bool>> leq(size, std::vector<bool>(size, false));
  for (ObjId a = 0; a < size; ++a)
    for (ObjId b = a; b < size; ++b) leq[a][b] = true;
  return poset_category(size, leq, cap);
}

FinCat opposite_category(const FinCat& c) {
  RawCategory raw = c.to_raw();
  for (auto& m : raw.morphisms) std::swap(m.dom, m.cod);
  for (auto& e : raw.composition) std::swap(e[0], e[1]);
  SizeCap roomy{c.object_count(), c.morphism_count()};
  SizeCap cap = global_size_cap();
  cap.max_objects = std::max(cap.max_objects, roomy.max_objects);
  cap.max_morphisms = std::max(cap.max_morphisms, roomy.max_morphisms);
  return FinCat::validate(std::move(raw), cap);
}

FinCat monoid_category(const std::vector<std::vector<MorId>>& table,
                       MorId unit) {
  const std::size_t n = table.size();
  if (unit >= n)
    throw CatError(Err::InvalidParameter, "monoid unit out of range");
  RawCategory raw;
  raw.object_count = 1;
  for (MorId m = 0; m < n; ++m) raw.morphisms.push_back({0, 0, ""});
  raw.identities.emplace_back(0, unit);
  for (MorId g = 0; g < n; ++g) {
    if (table[g].size() != n)
      throw CatError(Err::InvalidParameter, "monoid table not square");
    for (MorId f = 0; f < n; ++f) {
      if (table[g][f] >= n)
        throw CatError(Err::InvalidParameter, "monoid table entry out of range");
      raw.composition.push_back({g, f, table[g][f]});
    }
  }
  return FinCat::validate(std::move(raw));
}

std::vector<PseudoFinal> find_pseudo_finals(const FinCat& c) {
  std::vector<PseudoFinal> out;
  const std::size_t n = c.object_count();
  for (ObjId e = 0; e < n; ++e) {
    // Candidate components per object, in declaration order.
    std::vector<std::vector<MorId>> candidates(n);
    bool feasible = true;
    for (ObjId i = 0; i < n && feasible; ++i) {
      candidates[i] = c.hom(i, e);
      feasible = !candidates[i].empty();
    }
    if (!feasible) continue;
    std::vector<std::size_t> pick(n, 0), radix(n);
    for (ObjId i = 0; i < n; ++i) radix[i] = candidates[i].size();
    do {
      PseudoFinal pf;
      pf.e = e;
      pf.eps.resize(n);
      for (ObjId i = 0; i < n; ++i) pf.eps[i] = candidates[i][pick[i]];
      if (check_pseudo_final(c, pf)) out.push_back(pf);
    } while (next_odometer(pick, radix));
  }
  return out;
}

bool check_pseudo_final(const FinCat& c, const PseudoFinal& pf) {
  if (pf.e >= c.object_count() || pf.eps.size() != c.object_count())
    return false;
  for (ObjId i = 0; i < c.object_count(); ++i) {
    MorId m = pf.eps[i];
    if (m >= c.morphism_count() || c.dom(m) != i || c.cod(m) != pf.e)
      return false;
  }
  for (MorId a = 0; a < c.morphism_count(); ++a) {
    if (c.compose(pf.eps[c.cod(a)], a) != pf.eps[c.dom(a)]) return false;
  }
  return true;
}

}  // namespace catlim
