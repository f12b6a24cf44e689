#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace catlim {

using ObjId = std::uint32_t;
using MorId = std::uint32_t;

inline constexpr MorId kNoMor = 0xffffffffu;
inline constexpr ObjId kNoObj = 0xffffffffu;

/// Per-category construction limits. Constructions that would exceed the
/// active cap throw CatError with Err::SizeCapExceeded instead of hanging.
struct SizeCap {
  std::size_t max_objects = 64;
  std::size_t max_morphisms = 512;
};

SizeCap global_size_cap();
void set_global_size_cap(SizeCap cap);

enum class Err {
  MissingComposite,
  SpuriousComposite,
  CompositeTypeMismatch,
  AssociativityViolation,
  IdentityViolation,
  DanglingIndex,
  InvalidParameter,
  SizeCapExceeded,
  IndexOutOfRange,
  SourceTargetMismatch,
  ShapeMismatch,
  FunctorialityViolation,
  FiberMismatch,
  ConstructionMismatch,
  NotPseudoFinal,
  ParseError,
};

const char* err_name(Err e);

class CatError : public std::runtime_error {
 public:
  CatError(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg),
        code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

struct RawMorphism {
  ObjId dom = 0;
  ObjId cod = 0;
  std::string name;  // optional, auto-named when empty
};

/// Unvalidated category description. Composition lists entries (g, f, g∘f)
/// for composable pairs; entries forced by the identity laws may be omitted
/// and are filled in during validation.
struct RawCategory {
  std::size_t object_count = 0;
  std::vector<std::string> object_names;  // optional
  std::vector<RawMorphism> morphisms;
  std::vector<std::pair<ObjId, MorId>> identities;  // object -> morphism
  std::vector<std::array<MorId, 3>> composition;    // {g, f, g∘f}
};

/// A finite category as a validated composition table. Immutable after
/// validation; all operations are pure, so values may be shared freely
/// across threads.
class FinCat {
 public:
  FinCat() = default;

  /// Exhaustively checks the category laws and returns the validated value.
  /// Throws CatError on any violation (MissingComposite, SpuriousComposite,
  /// CompositeTypeMismatch, AssociativityViolation, IdentityViolation,
  /// DanglingIndex, SizeCapExceeded).
  static FinCat validate(RawCategory raw,
                         const SizeCap& cap = global_size_cap());

  std::size_t object_count() const { return object_count_; }
  std::size_t morphism_count() const { return dom_.size(); }

  ObjId dom(MorId m) const { return dom_[m]; }
  ObjId cod(MorId m) const { return cod_[m]; }
  MorId identity(ObjId o) const { return identities_[o]; }
  bool is_identity(MorId m) const { return identities_[dom_[m]] == m && dom_[m] == cod_[m]; }

  bool composable(MorId g, MorId f) const { return cod_[f] == dom_[g]; }

  /// g ∘ f; defined exactly when cod(f) = dom(g).
  MorId compose(MorId g, MorId f) const {
    if (g >= morphism_count() || f >= morphism_count())
      throw CatError(Err::IndexOutOfRange, "compose: morphism index");
    MorId r = comp_[static_cast<std::size_t>(g) * morphism_count() + f];
    if (r == kNoMor)
      throw CatError(Err::IndexOutOfRange,
                     "compose: pair not composable (" + morphism_name(g) +
                         ", " + morphism_name(f) + ")");
    return r;
  }

  /// Morphisms a -> b in declaration order.
  std::vector<MorId> hom(ObjId a, ObjId b) const;

  const std::string& object_name(ObjId o) const { return object_names_[o]; }
  const std::string& morphism_name(MorId m) const { return morphism_names_[m]; }

  /// Full table round-trip (used for serialization and re-validation).
  RawCategory to_raw() const;

  /// Structural equality of the tables; labels are ignored.
  bool same_shape(const FinCat& other) const;
  friend bool operator==(const FinCat& a, const FinCat& b) {
    return a.same_shape(b);
  }

 private:
  std::size_t object_count_ = 0;
  std::vector<ObjId> dom_, cod_;
  std::vector<MorId> identities_;
  std::vector<MorId> comp_;  // dense m×m partial table, kNoMor = undefined
  std::vector<std::string> object_names_, morphism_names_;
};

using FinCatPtr = std::shared_ptr<const FinCat>;

inline FinCatPtr share(FinCat c) {
  return std::make_shared<const FinCat>(std::move(c));
}

FinCat validate_category(RawCategory raw,
                         const SizeCap& cap = global_size_cap());

/// Morphisms a -> b with range checking (IndexOutOfRange).
std::vector<MorId> hom_set(const FinCat& c, ObjId a, ObjId b);

// Standard constructors.
FinCat terminal_category();
FinCat discrete_category(std::size_t n,
                         const SizeCap& cap = global_size_cap());
FinCat chain_category(std::size_t n, const SizeCap& cap = global_size_cap());
FinCat opposite_category(const FinCat& c);
/// One-object category from a monoid multiplication table;
/// table[g][f] = g∘f, `unit` names the identity element.
FinCat monoid_category(const std::vector<std::vector<MorId>>& table,
                       MorId unit);
/// Poset category on n objects: one morphism a -> b whenever leq[a][b].
/// leq must be reflexive, transitive and antisymmetric.
FinCat poset_category(std::size_t n, const std::vector<std::vector<bool>>& leq,
                      const SizeCap& cap = global_size_cap());

/// An object e with a map eps(i): i -> e for every i, natural against the
/// constant functor: eps(cod α) ∘ α = eps(dom α) for every α.
struct PseudoFinal {
  ObjId e = 0;
  std::vector<MorId> eps;
};

/// All pseudo-final structures, exhaustively: e ascending, component
/// assignments in lexicographic order. Empty when none exist.
std::vector<PseudoFinal> find_pseudo_finals(const FinCat& c);

/// Independent checker: iterates all morphisms and tests naturality.
bool check_pseudo_final(const FinCat& c, const PseudoFinal& pf);

}  // namespace catlim
