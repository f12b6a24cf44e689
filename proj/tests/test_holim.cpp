#include "doctest.h"
#include "helpers.hpp"

using namespace catlim;
using namespace testutil;

namespace {

// Tower Z/4 -> Z/2 over opposite(chain(1)): one projection arrow 1 -> 0.
CatDiagram projection_tower() {
  auto ixp = share(opposite_category(chain_category(1)));
  auto z4 = share(discrete_category(4));
  auto z2 = share(discrete_category(2));
  CatDiagram d;
  d.index = ixp;
  d.fibers = {z2, z4};
  d.transports.resize(ixp->morphism_count());
  d.transports[ixp->identity(0)] = identity_functor(z2);
  d.transports[ixp->identity(1)] = identity_functor(z4);
  Functor mod2;
  mod2.source = z4;
  mod2.target = z2;
  mod2.obj_map = {0, 1, 0, 1};
  mod2.mor_map = {0, 1, 0, 1};
  d.transports[ixp->hom(1, 0).front()] = mod2;
  return validate_diagram(std::move(d));
}

}  // namespace

TEST_CASE("holim over the terminal index returns the fiber") {
  auto fiber = share(idempotent_monoid());
  Holim h = holim_explicit(constant_diagram(share(terminal_category()), fiber));
  Functor unpack;
  unpack.source = h.cat;
  unpack.target = fiber;
  for (const HolimObject& o : h.objects) unpack.obj_map.push_back(o.x[0]);
  for (const HolimMorphism& m : h.morphisms) unpack.mor_map.push_back(m.f[0]);
  CHECK(check_functor(unpack).ok);
  CHECK(is_bijective_on_tables(unpack));
}

TEST_CASE("holim of a constant diagram is the functor category") {
  CorpusRng rng(31415);
  for (int k = 0; k < 8; ++k) {
    auto ix = share(random_poset(rng, 3, IndexMode::Any));
    auto fiber = share(random_fiber(rng, 3, 6));
    Holim h = holim_explicit(constant_diagram(ix, fiber), SizeCap{512, 4096});
    FunctorCategory fc = functor_category(ix, fiber, SizeCap{512, 4096});

    // A compatible family of a constant diagram is literally a functor
    // (x = obj_map, rho = mor_map); morphism families are the component
    // families of natural transformations.
    REQUIRE(h.cat->object_count() == fc.cat->object_count());
    REQUIRE(h.cat->morphism_count() == fc.cat->morphism_count());
    Functor to_fc;
    to_fc.source = h.cat;
    to_fc.target = fc.cat;
    for (const HolimObject& o : h.objects) {
      Functor f;
      f.source = ix;
      f.target = fiber;
      f.obj_map = o.x;
      f.mor_map = o.rho;
      auto idx = fc.object_index(f);
      REQUIRE(idx.has_value());
      to_fc.obj_map.push_back(*idx);
    }
    for (MorId m = 0; m < h.morphisms.size(); ++m) {
      auto idx = fc.morphism_index(to_fc.obj_map[h.cat->dom(m)],
                                   to_fc.obj_map[h.cat->cod(m)],
                                   h.morphisms[m].f);
      REQUIRE(idx.has_value());
      to_fc.mor_map.push_back(*idx);
    }
    CHECK(check_functor(to_fc).ok);
    CHECK(is_bijective_on_tables(to_fc));
  }
}

TEST_CASE("the projection tower has a discrete holim on 4 objects") {
  Holim h = holim_explicit(projection_tower());
  CHECK(h.cat->object_count() == 4);
  CHECK(h.cat->morphism_count() == 4);  // identities only
  for (MorId m = 0; m < h.cat->morphism_count(); ++m)
    CHECK(h.cat->is_identity(m));

  HolimPullback pb = holim_pullback(projection_tower());
  CHECK(pb.cat->object_count() == 4);
  CHECK(pb.cat->morphism_count() == 4);
}

TEST_CASE("pullback description of degenerate shapes") {
  SUBCASE("terminal index returns the fiber") {
    auto fiber = share(idempotent_monoid());
    HolimPullback pb =
        holim_pullback(constant_diagram(share(terminal_category()), fiber));
    auto iso = find_isomorphism(pb.cat, fiber);
    REQUIRE(iso.has_value());
    CHECK(check_functor(*iso).ok);
  }
  SUBCASE("all-terminal fibers leave only the unit section") {
    auto point = share(terminal_category());
    HolimPullback pb =
        holim_pullback(constant_diagram(share(chain_category(2)), point));
    CHECK(pb.cat->object_count() == 1);
    CHECK(pb.cat->morphism_count() == 1);
  }
}

TEST_CASE("canonical iso between the two descriptions") {
  SUBCASE("terminal index") {
    auto fiber = share(chain_category(1));
    CatDiagram d = constant_diagram(share(terminal_category()), fiber);
    auto [fwd, bwd] = canonical_iso(holim_explicit(d), holim_pullback(d));
    CHECK(check_functor(fwd).ok);
    CHECK(check_functor(bwd).ok);
  }
  SUBCASE("projection tower: mutually inverse on 4 objects") {
    CatDiagram d = projection_tower();
    Holim h = holim_explicit(d);
    HolimPullback pb = holim_pullback(d);
    auto [fwd, bwd] = canonical_iso(h, pb);
    CHECK(same_mapping(compose_functors(bwd, fwd),
                       identity_functor(h.cat)));
    CHECK(same_mapping(compose_functors(fwd, bwd),
                       identity_functor(pb.cat)));
  }
  SUBCASE("random corpus instances round-trip") {
    CorpusRng rng(999);
    CorpusOptions opts;
    for (int k = 0; k < 6; ++k) {
      CatDiagram d = random_diagram(rng, 2, opts);
      Holim h = holim_explicit(d, SizeCap{2048, 6000});
      HolimPullback pb = holim_pullback(d, SizeCap{2048, 6000});
      CHECK(h.cat->object_count() == pb.cat->object_count());
      CHECK(h.cat->morphism_count() == pb.cat->morphism_count());
      CHECK_NOTHROW(canonical_iso(h, pb));
    }
  }
}

TEST_CASE("families pass the independent law checks") {
  CorpusRng rng(2718);
  CorpusOptions opts;
  CatDiagram d = random_diagram(rng, 3, opts);
  Holim h = holim_explicit(d, SizeCap{512, 4096});
  for (const HolimObject& o : h.objects) CHECK(check_holim_object(d, o));
  for (MorId m = 0; m < h.morphisms.size(); ++m)
    CHECK(check_holim_morphism(d, h.objects[h.cat->dom(m)],
                               h.objects[h.cat->cod(m)], h.morphisms[m]));

  // Componentwise composition of valid families stays valid.
  for (MorId s = 0; s < h.cat->morphism_count(); ++s)
    for (MorId t = 0; t < h.cat->morphism_count(); ++t) {
      if (!h.cat->composable(s, t)) continue;
      MorId st = h.cat->compose(s, t);
      CHECK(check_holim_morphism(d, h.objects[h.cat->dom(t)],
                                 h.objects[h.cat->cod(s)],
                                 h.morphisms[st]));
    }
}

TEST_CASE("holim_induced applies the map pointwise") {
  CatDiagram top = projection_tower();
  CatDiagram bottom =
      constant_diagram(top.index, top.fibers[0]);  // constant Z/2
  Functor mod2 = top.transports[top.index->hom(1, 0).front()];
  DiagramMap t;
  t.from = top;
  t.to = bottom;
  t.components = {identity_functor(top.fibers[0]), mod2};
  REQUIRE(check_diagram_map(t).ok);

  Holim ht = holim_explicit(top);
  Holim hb = holim_explicit(bottom);
  Functor ind = holim_induced(t, ht, hb);
  CHECK(check_functor(ind).ok);
  for (ObjId o = 0; o < ht.cat->object_count(); ++o) {
    const HolimObject& src = ht.objects[o];
    const HolimObject& dst = hb.objects[ind.obj_map[o]];
    for (ObjId i = 0; i < 2; ++i)
      CHECK(dst.x[i] == t.components[i].on_object(src.x[i]));
  }
  SUBCASE("identity map induces the identity") {
    CHECK(same_mapping(holim_induced(identity_diagram_map(top), ht, ht),
                       identity_functor(ht.cat)));
  }
  SUBCASE("composition of maps induces composition of functors") {
    DiagramMap tt = compose_diagram_maps(identity_diagram_map(bottom), t);
    Functor both = holim_induced(tt, ht, hb);
    Functor stacked = compose_functors(
        holim_induced(identity_diagram_map(bottom), hb, hb), ind);
    CHECK(same_mapping(both, stacked));
  }
}

TEST_CASE("explicit and pullback counts agree on the corpus") {
  CorpusRng rng(171);
  CorpusOptions opts;
  for (int k = 0; k < 5; ++k) {
    CatDiagram d = random_diagram(rng, 2, opts);
    Holim h = holim_explicit(d, SizeCap{2048, 6000});
    HolimPullback pb = holim_pullback(d, SizeCap{2048, 6000});
    CHECK(h.cat->object_count() == pb.cat->object_count());
    CHECK(h.cat->morphism_count() == pb.cat->morphism_count());
  }
}
