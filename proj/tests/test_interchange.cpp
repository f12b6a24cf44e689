#include "doctest.h"
#include "helpers.hpp"

using namespace catlim;
using namespace testutil;

namespace {

BiDiagram small_bidiagram(FinCatPtr I, FinCatPtr J, FinCatPtr fiber) {
  BiDiagram bd;
  bd.prod = product_category(I, J);
  bd.underlying = constant_diagram(bd.prod.cat, fiber);
  return validate_bidiagram(std::move(bd));
}

// Self-maps of a bidiagram: per-fiber functors commuting with every
// transport, found by backtracking. Used to exercise naturality in the
// diagram variable.
void search_self_maps(const BiDiagram& bd, std::vector<Functor>& acc,
                      std::vector<std::vector<Functor>>& choices,
                      std::size_t next, std::vector<DiagramMap>& out,
                      std::size_t limit) {
  const FinCat& K = *bd.prod.cat;
  if (out.size() >= limit) return;
  if (next == K.object_count()) {
    DiagramMap t;
    t.from = bd.underlying;
    t.to = bd.underlying;
    t.components = acc;
    if (check_diagram_map(t).ok) out.push_back(std::move(t));
    return;
  }
  for (const Functor& cand : choices[next]) {
    acc.push_back(cand);
    bool ok = true;
    for (MorId m = 0; m < K.morphism_count() && ok; ++m) {
      ObjId d = K.dom(m), c = K.cod(m);
      if (d >= acc.size() || c >= acc.size()) continue;
      ok = same_mapping(
          compose_functors(acc[c], bd.underlying.transports[m]),
          compose_functors(bd.underlying.transports[m], acc[d]));
    }
    if (ok) search_self_maps(bd, acc, choices, next + 1, out, limit);
    acc.pop_back();
  }
}

std::vector<DiagramMap> bidiagram_self_maps(const BiDiagram& bd,
                                            std::size_t limit) {
  const FinCat& K = *bd.prod.cat;
  std::vector<std::vector<Functor>> choices(K.object_count());
  for (ObjId o = 0; o < K.object_count(); ++o)
    choices[o] = enumerate_functors(bd.underlying.fibers[o],
                                    bd.underlying.fibers[o]);
  std::vector<Functor> acc;
  std::vector<DiagramMap> out;
  search_self_maps(bd, acc, choices, 0, out, limit);
  return out;
}

}  // namespace

TEST_CASE("terminal first index: both categories reduce to hocolim over J") {
  auto I = share(terminal_category());
  auto J = share(chain_category(1));
  auto fiber = share(idempotent_monoid());
  BiDiagram bd = small_bidiagram(I, J, fiber);
  InterchangePair pair = inner_outer(bd);

  Hocolim direct = hocolim(curry_fix_i(bd, 0));
  auto isoA = find_isomorphism(pair.A.cat, direct.cat);
  REQUIRE(isoA.has_value());
  CHECK(check_functor(*isoA).ok);
  auto isoB = find_isomorphism(pair.B.cat, direct.cat);
  REQUIRE(isoB.has_value());

  Functor io = iota(pair);
  CHECK(check_functor(io).ok);
  CHECK(is_bijective_on_tables(io));
}

TEST_CASE("terminal second index: both categories reduce to holim over I") {
  auto I = share(chain_category(1));
  auto J = share(terminal_category());
  auto fiber = share(chain_category(1));
  BiDiagram bd = small_bidiagram(I, J, fiber);
  InterchangePair pair = inner_outer(bd);

  Holim direct = holim_explicit(curry_fix_j(bd, 0));
  auto isoA = find_isomorphism(pair.A.cat, direct.cat);
  REQUIRE(isoA.has_value());
  auto isoB = find_isomorphism(pair.B.cat, direct.cat);
  REQUIRE(isoB.has_value());
}

TEST_CASE("retract report on seeded instances with a final object") {
  CorpusRng rng(60601);
  CorpusOptions opts;
  opts.index_mode = IndexMode::ForceFinal;
  SizeCap cap{1024, 4096};
  for (int k = 0; k < 8; ++k) {
    BiDiagram bd = random_bidiagram(rng, opts, cap);
    RetractReport rep = verify_retract(bd, cap);
    for (const CheckEntry& c : rep.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.status != CheckStatus::Fail);
    }
    CHECK(rep.pseudo_final_count >= 1);
  }
}

TEST_CASE("without a pseudo-final object the retract checks are skipped") {
  CorpusRng rng(60602);
  CorpusOptions opts;
  opts.index_mode = IndexMode::NoPseudoFinal;
  SizeCap cap{1024, 4096};
  BiDiagram bd = random_bidiagram(rng, opts, cap);
  RetractReport rep = verify_retract(bd, cap);
  CHECK(rep.pseudo_final_count == 0);
  std::size_t skipped = 0;
  for (const CheckEntry& c : rep.checks) {
    CHECK(c.status != CheckStatus::Fail);
    if (c.status == CheckStatus::Skipped) ++skipped;
  }
  CHECK(skipped == 4);
  CHECK(rep.all_pass());
}

TEST_CASE("retraction_p rejects a bogus pseudo-final structure") {
  auto I = share(discrete_category(2));
  auto J = share(terminal_category());
  BiDiagram bd = small_bidiagram(I, J, share(terminal_category()));
  InterchangePair pair = inner_outer(bd);
  PseudoFinal bogus;
  bogus.e = 0;
  bogus.eps = {I->identity(0), I->identity(1)};  // eps_1 does not reach e
  CHECK_THROWS_AS(retraction_p(pair, bogus), CatError);
}

TEST_CASE("every pseudo-final witness yields the same retract identities") {
  // The idempotent monoid has a pseudo-final structure that is not a
  // genuine final object; the retract identities must hold for it too.
  auto I = share(idempotent_monoid());
  auto J = share(chain_category(1));
  auto fiber = share(chain_category(1));
  BiDiagram bd = small_bidiagram(I, J, fiber);
  RetractReport rep = verify_retract(bd);
  REQUIRE(rep.pseudo_final_count >= 1);
  for (const CheckEntry& c : rep.checks) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.status != CheckStatus::Fail);
  }
}

TEST_CASE("monoid-shaped indexes run the full pipeline") {
  // Non-poset indexes exercise the cocycle conditions with genuinely
  // composable non-identity arrows on both sides of the grid.
  auto fiber = share(chain_category(1));
  SUBCASE("second index a monoid") {
    BiDiagram bd = small_bidiagram(share(chain_category(1)),
                                   share(idempotent_monoid()), fiber);
    RetractReport rep = verify_retract(bd);
    for (const CheckEntry& c : rep.checks) {
      INFO(c.name << ": " << c.witness);
      CHECK(c.status != CheckStatus::Fail);
    }
  }
  SUBCASE("second index a group") {
    BiDiagram bd = small_bidiagram(share(chain_category(1)),
                                   share(involution_monoid()), fiber);
    RetractReport rep = verify_retract(bd);
    for (const CheckEntry& c : rep.checks)
      CHECK(c.status != CheckStatus::Fail);
  }
}

TEST_CASE("all pseudo-final witnesses are exercised") {
  // The codiscrete category on two objects: exactly one arrow between any
  // ordered pair, so both objects are final and the search returns two
  // witnesses; the retract identities must hold for each.
  RawCategory raw;
  raw.object_count = 2;
  raw.morphisms = {{0, 0, ""}, {0, 1, ""}, {1, 0, ""}, {1, 1, ""}};
  raw.identities = {{0, 0}, {1, 3}};
  raw.composition = {{1, 2, 3}, {2, 1, 0}, {1, 0, 1}, {3, 1, 1},
                     {2, 3, 2}, {0, 2, 2}};
  auto codiscrete = share(validate_category(raw));
  REQUIRE(find_pseudo_finals(*codiscrete).size() == 2);

  BiDiagram bd = small_bidiagram(codiscrete, share(chain_category(1)),
                                 share(chain_category(1)));
  RetractReport rep = verify_retract(bd);
  CHECK(rep.pseudo_final_count == 2);
  std::size_t p_checks = 0;
  for (const CheckEntry& c : rep.checks) {
    INFO(c.name << ": " << c.witness);
    CHECK(c.status != CheckStatus::Fail);
    if (c.name.rfind("p_iota_identity", 0) == 0) ++p_checks;
  }
  CHECK(p_checks == 2);
}

TEST_CASE("iota is natural in the diagram variable") {
  CorpusRng rng(60603);
  CorpusOptions opts;
  SizeCap cap{1024, 4096};
  BiDiagram bd = random_bidiagram(rng, opts, cap);
  InterchangePair pair = inner_outer(bd, cap);
  Functor io = iota(pair);
  const FinCat& I = *bd.I();
  const FinCat& J = *bd.J();

  for (const DiagramMap& t : bidiagram_self_maps(bd, 3)) {
    // Column restriction of t, pushed through the holims: a map of the
    // A-side diagram over J.
    DiagramMap a_map;
    a_map.from = pair.a_diagram;
    a_map.to = pair.a_diagram;
    for (ObjId j = 0; j < J.object_count(); ++j) {
      DiagramMap col;
      col.from = curry_fix_j(bd, j);
      col.to = col.from;
      for (ObjId i = 0; i < I.object_count(); ++i)
        col.components.push_back(t.components[bd.prod.pair_object(i, j)]);
      a_map.components.push_back(holim_induced(col, pair.column_holims[j],
                                               pair.column_holims[j]));
    }
    REQUIRE(check_diagram_map(a_map).ok);
    Functor a_ind = hocolim_induced(a_map, pair.A, pair.A);

    DiagramMap b_map;
    b_map.from = pair.b_diagram;
    b_map.to = pair.b_diagram;
    for (ObjId i = 0; i < I.object_count(); ++i) {
      DiagramMap row;
      row.from = curry_fix_i(bd, i);
      row.to = row.from;
      for (ObjId j = 0; j < J.object_count(); ++j)
        row.components.push_back(t.components[bd.prod.pair_object(i, j)]);
      b_map.components.push_back(hocolim_induced(row, pair.row_hocolims[i],
                                                 pair.row_hocolims[i]));
    }
    REQUIRE(check_diagram_map(b_map).ok);
    Functor b_ind = holim_induced(b_map, pair.B, pair.B);

    CHECK(same_mapping(compose_functors(io, a_ind),
                       compose_functors(b_ind, io)));
  }
}

TEST_CASE("report JSON shape is stable") {
  auto I = share(chain_category(1));
  auto J = share(terminal_category());
  BiDiagram bd = small_bidiagram(I, J, share(discrete_category(2)));
  RetractReport rep = verify_retract(bd);
  CHECK(rep.a_objects == rep.b_objects);
  CHECK(rep.all_pass());
}
