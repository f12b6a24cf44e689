#include "catlim/diagram.hpp"

namespace catlim {

CatDiagram validate_diagram(CatDiagram raw) {
  const FinCat& ix = *raw.index;
  if (raw.fibers.size() != ix.object_count())
    throw CatError(Err::FiberMismatch, "one fiber per index object required");
  if (raw.transports.size() != ix.morphism_count())
    throw CatError(Err::FiberMismatch,
                   "one transport per index morphism required");
  for (MorId a = 0; a < ix.morphism_count(); ++a) {
    const Functor& t = raw.transports[a];
    if (!t.source->same_shape(*raw.fibers[ix.dom(a)]) ||
        !t.target->same_shape(*raw.fibers[ix.cod(a)]))
      throw CatError(Err::FiberMismatch,
                     "transport of " + ix.morphism_name(a) +
                         " does not match its fibers");
    CheckResult r = check_functor(t);
    if (!r.ok)
      throw CatError(Err::FunctorialityViolation,
                     "transport of " + ix.morphism_name(a) + ": " + r.detail);
  }
  for (ObjId i = 0; i < ix.object_count(); ++i) {
    const Functor& t = raw.transports[ix.identity(i)];
    if (!same_mapping(t, identity_functor(raw.fibers[i])))
      throw CatError(Err::FunctorialityViolation,
                     "transport of 1_" + ix.object_name(i) +
                         " is not the identity functor");
  }
  for (MorId b = 0; b < ix.morphism_count(); ++b)
    for (MorId a = 0; a < ix.morphism_count(); ++a) {
      if (!ix.composable(b, a)) continue;
      Functor ba = compose_functors(raw.transports[b], raw.transports[a]);
      if (!same_mapping(ba, raw.transports[ix.compose(b, a)]))
        throw CatError(Err::FunctorialityViolation,
                       "transport of (" + ix.morphism_name(b) + " ∘ " +
                           ix.morphism_name(a) + ") is not the composite");
    }
  return raw;
}

CatDiagram constant_diagram(FinCatPtr index, FinCatPtr fiber) {
  CatDiagram d;
  d.index = index;
  d.fibers.assign(index->object_count(), fiber);
  d.transports.assign(index->morphism_count(), identity_functor(fiber));
  return validate_diagram(std::move(d));
}

CheckResult check_diagram_map(const DiagramMap& t) {
  const FinCat& ix = *t.from.index;
  if (!ix.same_shape(*t.to.index))
    throw CatError(Err::ShapeMismatch, "diagram map requires a shared index");
  if (t.components.size() != ix.object_count())
    throw CatError(Err::ShapeMismatch, "one component per index object");
  for (ObjId i = 0; i < ix.object_count(); ++i) {
    const Functor& c = t.components[i];
    if (!c.source->same_shape(*t.from.fibers[i]) ||
        !c.target->same_shape(*t.to.fibers[i]))
      return {false, "component at " + ix.object_name(i) + " mistyped"};
    CheckResult r = check_functor(c);
    if (!r.ok)
      return {false, "component at " + ix.object_name(i) + ": " + r.detail};
  }
  for (MorId a = 0; a < ix.morphism_count(); ++a) {
    Functor lhs = compose_functors(t.components[ix.cod(a)], t.from.transports[a]);
    Functor rhs = compose_functors(t.to.transports[a], t.components[ix.dom(a)]);
    if (!same_mapping(lhs, rhs))
      return {false, "square at " + ix.morphism_name(a) + " does not commute"};
  }
  return {};
}

DiagramMap identity_diagram_map(const CatDiagram& d) {
  DiagramMap t;
  t.from = d;
  t.to = d;
  for (const FinCatPtr& f : d.fibers)
    t.components.push_back(identity_functor(f));
  return t;
}

DiagramMap compose_diagram_maps(const DiagramMap& s, const DiagramMap& t) {
  DiagramMap out;
  out.from = t.from;
  out.to = s.to;
  for (std::size_t i = 0; i < t.components.size(); ++i)
    out.components.push_back(
        compose_functors(s.components[i], t.components[i]));
  return out;
}

BiDiagram validate_bidiagram(BiDiagram raw) {
  if (!raw.underlying.index->same_shape(*raw.prod.cat))
    throw CatError(Err::ShapeMismatch,
                   "bidiagram must be indexed by the product category");
  raw.underlying = validate_diagram(std::move(raw.underlying));
  return raw;
}

CatDiagram curry_fix_j(const BiDiagram& b, ObjId j) {
  if (j >= b.J()->object_count())
    throw CatError(Err::IndexOutOfRange, "curry_fix_j");
  CatDiagram d;
  d.index = b.I();
  MorId idj = b.J()->identity(j);
  for (ObjId i = 0; i < b.I()->object_count(); ++i)
    d.fibers.push_back(b.underlying.fibers[b.prod.pair_object(i, j)]);
  for (MorId a = 0; a < b.I()->morphism_count(); ++a)
    d.transports.push_back(
        b.underlying.transports[b.prod.pair_morphism(a, idj)]);
  return d;
}

CatDiagram curry_fix_i(const BiDiagram& b, ObjId i) {
  if (i >= b.I()->object_count())
    throw CatError(Err::IndexOutOfRange, "curry_fix_i");
  CatDiagram d;
  d.index = b.J();
  MorId idi = b.I()->identity(i);
  for (ObjId j = 0; j < b.J()->object_count(); ++j)
    d.fibers.push_back(b.underlying.fibers[b.prod.pair_object(i, j)]);
  for (MorId be = 0; be < b.J()->morphism_count(); ++be)
    d.transports.push_back(
        b.underlying.transports[b.prod.pair_morphism(idi, be)]);
  return d;
}

DiagramMap row_map(const BiDiagram& b, MorId alpha) {
  if (alpha >= b.I()->morphism_count())
    throw CatError(Err::IndexOutOfRange, "row_map");
  DiagramMap t;
  t.from = curry_fix_i(b, b.I()->dom(alpha));
  t.to = curry_fix_i(b, b.I()->cod(alpha));
  for (ObjId j = 0; j < b.J()->object_count(); ++j)
    t.components.push_back(
        b.underlying.transports[b.prod.pair_morphism(alpha, b.J()->identity(j))]);
  return t;
}

DiagramMap column_map(const BiDiagram& b, MorId beta) {
  if (beta >= b.J()->morphism_count())
    throw CatError(Err::IndexOutOfRange, "column_map");
  DiagramMap t;
  t.from = curry_fix_j(b, b.J()->dom(beta));
  t.to = curry_fix_j(b, b.J()->cod(beta));
  for (ObjId i = 0; i < b.I()->object_count(); ++i)
    t.components.push_back(
        b.underlying.transports[b.prod.pair_morphism(b.I()->identity(i), beta)]);
  return t;
}

}  // namespace catlim
