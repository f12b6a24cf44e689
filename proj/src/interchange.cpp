#include "catlim/interchange.hpp"

#include <algorithm>

namespace catlim {

InterchangePair inner_outer(const BiDiagram& bd, const SizeCap& cap) {
  InterchangePair p;
  p.bidiagram = bd;
  const FinCat& I = *bd.I();
  const FinCat& J = *bd.J();

  for (ObjId j = 0; j < J.object_count(); ++j)
    p.column_holims.push_back(holim_explicit(curry_fix_j(bd, j), cap));
  p.a_diagram.index = bd.J();
  for (ObjId j = 0; j < J.object_count(); ++j)
    p.a_diagram.fibers.push_back(p.column_holims[j].cat);
  for (MorId be = 0; be < J.morphism_count(); ++be)
    p.a_diagram.transports.push_back(
        holim_induced(column_map(bd, be), p.column_holims[J.dom(be)],
                      p.column_holims[J.cod(be)]));
  p.a_diagram = validate_diagram(std::move(p.a_diagram));
  p.A = hocolim(p.a_diagram, cap);

  for (ObjId i = 0; i < I.object_count(); ++i)
    p.row_hocolims.push_back(hocolim(curry_fix_i(bd, i), cap));
  p.b_diagram.index = bd.I();
  for (ObjId i = 0; i < I.object_count(); ++i)
    p.b_diagram.fibers.push_back(p.row_hocolims[i].cat);
  for (MorId al = 0; al < I.morphism_count(); ++al)
    p.b_diagram.transports.push_back(
        hocolim_induced(row_map(bd, al), p.row_hocolims[I.dom(al)],
                        p.row_hocolims[I.cod(al)]));
  p.b_diagram = validate_diagram(std::move(p.b_diagram));
  p.B = holim_explicit(p.b_diagram, cap);
  return p;
}

BObjectDecoded decode_b_object(const InterchangePair& pair, ObjId bo) {
  const FinCat& I = *pair.bidiagram.I();
  const HolimObject& fam = pair.B.objects[bo];
  BObjectDecoded d;
  d.j.resize(I.object_count());
  d.x.resize(I.object_count());
  d.beta.resize(I.morphism_count());
  d.rho.resize(I.morphism_count());
  for (ObjId i = 0; i < I.object_count(); ++i) {
    const GrothObject& go = pair.row_hocolims[i].objects[fam.x[i]];
    d.j[i] = go.i;
    d.x[i] = go.x;
  }
  for (MorId al = 0; al < I.morphism_count(); ++al) {
    const GrothMorphism& gm =
        pair.row_hocolims[I.cod(al)].morphisms[fam.rho[al]];
    d.beta[al] = gm.alpha;
    d.rho[al] = gm.rho;
  }
  return d;
}

BMorphismDecoded decode_b_morphism(const InterchangePair& pair, MorId bm) {
  const FinCat& I = *pair.bidiagram.I();
  const HolimMorphism& m = pair.B.morphisms[bm];
  BMorphismDecoded d;
  d.beta.resize(I.object_count());
  d.f.resize(I.object_count());
  for (ObjId i = 0; i < I.object_count(); ++i) {
    const GrothMorphism& gm = pair.row_hocolims[i].morphisms[m.f[i]];
    d.beta[i] = gm.alpha;
    d.f[i] = gm.rho;
  }
  return d;
}

Functor iota(const InterchangePair& pair) {
  const FinCat& I = *pair.bidiagram.I();
  const FinCat& J = *pair.bidiagram.J();
  Functor f;
  f.source = pair.A.cat;
  f.target = pair.B.cat;
  for (ObjId ao = 0; ao < pair.A.objects.size(); ++ao) {
    ObjId j = pair.A.objects[ao].i;
    const HolimObject& col =
        pair.column_holims[j].objects[pair.A.objects[ao].x];
    HolimObject fam;
    fam.x.resize(I.object_count());
    fam.rho.resize(I.morphism_count());
    for (ObjId i = 0; i < I.object_count(); ++i)
      fam.x[i] = pair.row_hocolims[i].object_index(j, col.x[i]);
    for (MorId al = 0; al < I.morphism_count(); ++al) {
      ObjId dom_row_obj =
          pair.b_diagram.transports[al].on_object(fam.x[I.dom(al)]);
      fam.rho[al] = pair.row_hocolims[I.cod(al)].morphism_index(
          dom_row_obj, J.identity(j), col.rho[al]);
    }
    f.obj_map.push_back(pair.B.object_index(fam));
  }
  for (MorId am = 0; am < pair.A.morphisms.size(); ++am) {
    MorId beta = pair.A.morphisms[am].alpha;  // β: j -> j' in J
    const HolimMorphism& colm =
        pair.column_holims[J.cod(beta)].morphisms[pair.A.morphisms[am].rho];
    ObjId a_dom = pair.A.cat->dom(am), a_cod = pair.A.cat->cod(am);
    ObjId j_dom = pair.A.objects[a_dom].i;
    const HolimObject& col_dom =
        pair.column_holims[j_dom].objects[pair.A.objects[a_dom].x];
    std::vector<MorId> comps(I.object_count());
    for (ObjId i = 0; i < I.object_count(); ++i) {
      ObjId dom_row_obj =
          pair.row_hocolims[i].object_index(j_dom, col_dom.x[i]);
      comps[i] =
          pair.row_hocolims[i].morphism_index(dom_row_obj, beta, colm.f[i]);
    }
    f.mor_map.push_back(
        pair.B.morphism_index(f.obj_map[a_dom], f.obj_map[a_cod], comps));
  }
  return f;
}

Functor retraction_p(const InterchangePair& pair, const PseudoFinal& pf) {
  const FinCat& I = *pair.bidiagram.I();
  const BiDiagram& bd = pair.bidiagram;
  if (!check_pseudo_final(I, pf))
    throw CatError(Err::NotPseudoFinal,
                   "retraction_p: (e, eps) fails naturality in this index");

  Functor p;
  p.source = pair.B.cat;
  p.target = pair.A.cat;

  for (ObjId bo = 0; bo < pair.B.objects.size(); ++bo) {
    BObjectDecoded d = decode_b_object(pair, bo);
    ObjId je = d.j[pf.e];
    HolimObject col;
    col.x.resize(I.object_count());
    col.rho.resize(I.morphism_count());
    for (ObjId i = 0; i < I.object_count(); ++i) {
      MorId beta_eps = d.beta[pf.eps[i]];  // β along ε_i: j(i) -> j(e)
      col.x[i] = bd.transport_at(I.identity(i), beta_eps).on_object(d.x[i]);
    }
    for (MorId al = 0; al < I.morphism_count(); ++al) {
      // rho lives in the fiber at cod(al), so only the component of eps at
      // the target index can transport it into column j(e).
      ObjId ip = I.cod(al);
      MorId beta_eps = d.beta[pf.eps[ip]];
      col.rho[al] =
          bd.transport_at(I.identity(ip), beta_eps).on_morphism(d.rho[al]);
    }
    ObjId xo = pair.column_holims[je].object_index(col);
    p.obj_map.push_back(pair.A.object_index(je, xo));
  }

  for (MorId bm = 0; bm < pair.B.morphisms.size(); ++bm) {
    ObjId b_dom = pair.B.cat->dom(bm), b_cod = pair.B.cat->cod(bm);
    BMorphismDecoded dm = decode_b_morphism(pair, bm);
    BObjectDecoded dy = decode_b_object(pair, b_cod);
    MorId beta_e = dm.beta[pf.e];  // β_e: j(e) -> k(e)
    ObjId ke = dy.j[pf.e];
    HolimMorphism g;
    g.f.resize(I.object_count());
    for (ObjId i = 0; i < I.object_count(); ++i) {
      MorId beta_eps_y = dy.beta[pf.eps[i]];
      g.f[i] = bd.transport_at(I.identity(i), beta_eps_y).on_morphism(dm.f[i]);
    }
    ObjId a_dom = p.obj_map[b_dom], a_cod = p.obj_map[b_cod];
    ObjId dom_col_obj =
        pair.a_diagram.transports[beta_e].on_object(pair.A.objects[a_dom].x);
    MorId fm = pair.column_holims[ke].morphism_index(
        dom_col_obj, pair.A.objects[a_cod].x, g.f);
    p.mor_map.push_back(pair.A.morphism_index(a_dom, beta_e, fm));
  }
  return p;
}

NatTrans theta(const InterchangePair& pair, const PseudoFinal& pf) {
  const FinCat& I = *pair.bidiagram.I();
  const BiDiagram& bd = pair.bidiagram;
  if (!check_pseudo_final(I, pf))
    throw CatError(Err::NotPseudoFinal,
                   "theta: (e, eps) fails naturality in this index");
  Functor p = retraction_p(pair, pf);
  Functor io = iota(pair);
  NatTrans t;
  t.from = identity_functor(pair.B.cat);
  t.to = compose_functors(io, p);
  t.components.resize(pair.B.objects.size());
  for (ObjId bo = 0; bo < pair.B.objects.size(); ++bo) {
    BObjectDecoded d = decode_b_object(pair, bo);
    std::vector<MorId> comps(I.object_count());
    for (ObjId i = 0; i < I.object_count(); ++i) {
      MorId beta_eps = d.beta[pf.eps[i]];
      const Functor& tr = bd.transport_at(I.identity(i), beta_eps);
      ObjId xprime = tr.on_object(d.x[i]);
      const FinCat& fib = bd.fiber_at(i, d.j[pf.e]);
      comps[i] = pair.row_hocolims[i].morphism_index(
          pair.B.objects[bo].x[i], beta_eps, fib.identity(xprime));
    }
    t.components[bo] = pair.B.morphism_index(bo, t.to.obj_map[bo], comps);
  }
  return t;
}

namespace {

void add_check(std::vector<CheckEntry>& cs, std::string name, bool ok,
               std::string wit = "") {
  cs.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail,
                ok ? std::string{} : std::move(wit)});
}

// The decode laws below recompute the nested-family description straight
// from the raw bidiagram tables, independently of the holim/hocolim search
// that produced A and B.

bool a_object_law(const InterchangePair& pair, ObjId ao, std::string* why) {
  const FinCat& I = *pair.bidiagram.I();
  const BiDiagram& bd = pair.bidiagram;
  ObjId j = pair.A.objects[ao].i;
  const HolimObject& col =
      pair.column_holims[j].objects[pair.A.objects[ao].x];
  MorId idj = bd.J()->identity(j);
  for (MorId al = 0; al < I.morphism_count(); ++al) {
    const FinCat& fib = bd.fiber_at(I.cod(al), j);
    MorId r = col.rho[al];
    if (fib.dom(r) != bd.transport_at(al, idj).on_object(col.x[I.dom(al)]) ||
        fib.cod(r) != col.x[I.cod(al)]) {
      *why = "transition map mistyped at " + I.morphism_name(al);
      return false;
    }
  }
  for (ObjId i = 0; i < I.object_count(); ++i)
    if (col.rho[I.identity(i)] != bd.fiber_at(i, j).identity(col.x[i])) {
      *why = "unit law fails at " + I.object_name(i);
      return false;
    }
  for (MorId a = 0; a < I.morphism_count(); ++a)
    for (MorId b = 0; b < I.morphism_count(); ++b) {
      if (!I.composable(a, b)) continue;
      const FinCat& fib = bd.fiber_at(I.cod(a), j);
      if (col.rho[I.compose(a, b)] !=
          fib.compose(col.rho[a],
                      bd.transport_at(a, idj).on_morphism(col.rho[b]))) {
        *why = "cocycle fails at (" + I.morphism_name(a) + ", " +
               I.morphism_name(b) + ")";
        return false;
      }
    }
  return true;
}

bool a_morphism_law(const InterchangePair& pair, MorId am, std::string* why) {
  const FinCat& I = *pair.bidiagram.I();
  const FinCat& J = *pair.bidiagram.J();
  const BiDiagram& bd = pair.bidiagram;
  MorId beta = pair.A.morphisms[am].alpha;
  ObjId j = J.dom(beta), jp = J.cod(beta);
  ObjId a_dom = pair.A.cat->dom(am), a_cod = pair.A.cat->cod(am);
  const HolimObject& x = pair.column_holims[j].objects[pair.A.objects[a_dom].x];
  const HolimObject& y =
      pair.column_holims[jp].objects[pair.A.objects[a_cod].x];
  const HolimMorphism& f =
      pair.column_holims[jp].morphisms[pair.A.morphisms[am].rho];
  for (ObjId i = 0; i < I.object_count(); ++i) {
    const FinCat& fib = bd.fiber_at(i, jp);
    if (fib.dom(f.f[i]) !=
            bd.transport_at(I.identity(i), beta).on_object(x.x[i]) ||
        fib.cod(f.f[i]) != y.x[i]) {
      *why = "component mistyped at " + I.object_name(i);
      return false;
    }
  }
  for (MorId al = 0; al < I.morphism_count(); ++al) {
    ObjId i = I.dom(al), ip = I.cod(al);
    const FinCat& fib = bd.fiber_at(ip, jp);
    MorId lhs = fib.compose(
        y.rho[al], bd.transport_at(al, J.identity(jp)).on_morphism(f.f[i]));
    MorId rhs = fib.compose(
        f.f[ip], bd.transport_at(I.identity(ip), beta).on_morphism(x.rho[al]));
    if (lhs != rhs) {
      *why = "square fails at " + I.morphism_name(al);
      return false;
    }
  }
  return true;
}

bool b_object_law(const InterchangePair& pair, ObjId bo, std::string* why) {
  const FinCat& I = *pair.bidiagram.I();
  const FinCat& J = *pair.bidiagram.J();
  const BiDiagram& bd = pair.bidiagram;
  BObjectDecoded d = decode_b_object(pair, bo);
  for (ObjId i = 0; i < I.object_count(); ++i) {
    MorId id_i = I.identity(i);
    if (d.beta[id_i] != J.identity(d.j[i]) ||
        d.rho[id_i] != bd.fiber_at(i, d.j[i]).identity(d.x[i])) {
      *why = "unit law fails at " + I.object_name(i);
      return false;
    }
  }
  for (MorId al = 0; al < I.morphism_count(); ++al) {
    ObjId i = I.dom(al), ip = I.cod(al);
    if (J.dom(d.beta[al]) != d.j[i] || J.cod(d.beta[al]) != d.j[ip]) {
      *why = "beta mistyped at " + I.morphism_name(al);
      return false;
    }
    const FinCat& fib = bd.fiber_at(ip, d.j[ip]);
    ObjId expected_dom =
        bd.transport_at(I.identity(ip), d.beta[al])
            .on_object(
                bd.transport_at(al, J.identity(d.j[i])).on_object(d.x[i]));
    if (fib.dom(d.rho[al]) != expected_dom || fib.cod(d.rho[al]) != d.x[ip]) {
      *why = "rho mistyped at " + I.morphism_name(al);
      return false;
    }
  }
  for (MorId a = 0; a < I.morphism_count(); ++a)
    for (MorId b = 0; b < I.morphism_count(); ++b) {
      if (!I.composable(a, b)) continue;  // a: i' -> i'', b: i -> i'
      MorId ab = I.compose(a, b);
      if (d.beta[ab] != J.compose(d.beta[a], d.beta[b])) {
        *why = "beta cocycle fails at (" + I.morphism_name(a) + ", " +
               I.morphism_name(b) + ")";
        return false;
      }
      ObjId ip = I.dom(a), ipp = I.cod(a);
      const FinCat& fib = bd.fiber_at(ipp, d.j[ipp]);
      MorId transported =
          bd.transport_at(I.identity(ipp), d.beta[a])
              .on_morphism(bd.transport_at(a, J.identity(d.j[ip]))
                               .on_morphism(d.rho[b]));
      if (d.rho[ab] != fib.compose(d.rho[a], transported)) {
        *why = "rho cocycle fails at (" + I.morphism_name(a) + ", " +
               I.morphism_name(b) + ")";
        return false;
      }
    }
  return true;
}

bool b_morphism_law(const InterchangePair& pair, MorId bm, std::string* why) {
  const FinCat& I = *pair.bidiagram.I();
  const FinCat& J = *pair.bidiagram.J();
  const BiDiagram& bd = pair.bidiagram;
  ObjId b_dom = pair.B.cat->dom(bm), b_cod = pair.B.cat->cod(bm);
  BObjectDecoded dx = decode_b_object(pair, b_dom);
  BObjectDecoded dy = decode_b_object(pair, b_cod);
  BMorphismDecoded dm = decode_b_morphism(pair, bm);
  for (ObjId i = 0; i < I.object_count(); ++i) {
    if (J.dom(dm.beta[i]) != dx.j[i] || J.cod(dm.beta[i]) != dy.j[i]) {
      *why = "beta_i mistyped at " + I.object_name(i);
      return false;
    }
    const FinCat& fib = bd.fiber_at(i, dy.j[i]);
    if (fib.dom(dm.f[i]) !=
            bd.transport_at(I.identity(i), dm.beta[i]).on_object(dx.x[i]) ||
        fib.cod(dm.f[i]) != dy.x[i]) {
      *why = "f_i mistyped at " + I.object_name(i);
      return false;
    }
  }
  for (MorId al = 0; al < I.morphism_count(); ++al) {
    ObjId i = I.dom(al), ip = I.cod(al);
    if (J.compose(dy.beta[al], dm.beta[i]) !=
        J.compose(dm.beta[ip], dx.beta[al])) {
      *why = "beta square fails at " + I.morphism_name(al);
      return false;
    }
    const FinCat& fib = bd.fiber_at(ip, dy.j[ip]);
    MorId lhs = fib.compose(
        dy.rho[al],
        bd.transport_at(I.identity(ip), dy.beta[al])
            .on_morphism(bd.transport_at(al, J.identity(dy.j[i]))
                             .on_morphism(dm.f[i])));
    MorId rhs = fib.compose(
        dm.f[ip],
        bd.transport_at(I.identity(ip), dm.beta[ip]).on_morphism(dx.rho[al]));
    if (lhs != rhs) {
      *why = "component square fails at " + I.morphism_name(al);
      return false;
    }
  }
  return true;
}

bool revalidates(const FinCatPtr& cat) {
  try {
    FinCat::validate(cat->to_raw(),
                     SizeCap{cat->object_count(), cat->morphism_count()});
    return true;
  } catch (const CatError&) {
    return false;
  }
}

}  // namespace

RetractReport verify_retract(const InterchangePair& pair) {
  RetractReport rep;
  const FinCat& I = *pair.bidiagram.I();
  const FinCat& J = *pair.bidiagram.J();
  rep.a_objects = pair.A.cat->object_count();
  rep.a_morphisms = pair.A.cat->morphism_count();
  rep.b_objects = pair.B.cat->object_count();
  rep.b_morphisms = pair.B.cat->morphism_count();

  add_check(rep.checks, "a_category_valid", revalidates(pair.A.cat));
  add_check(rep.checks, "b_category_valid", revalidates(pair.B.cat));

  {
    bool ok = true;
    std::string why, wit;
    for (ObjId ao = 0; ao < rep.a_objects && ok; ++ao)
      if (!a_object_law(pair, ao, &why)) {
        ok = false;
        wit = "A object " + pair.A.cat->object_name(ao) + ": " + why;
      }
    add_check(rep.checks, "a_objects_decode", ok, wit);
  }
  {
    bool ok = true;
    std::string why, wit;
    for (MorId am = 0; am < rep.a_morphisms && ok; ++am)
      if (!a_morphism_law(pair, am, &why)) {
        ok = false;
        wit = "A morphism " + pair.A.cat->morphism_name(am) + ": " + why;
      }
    add_check(rep.checks, "a_morphisms_decode", ok, wit);
  }
  {
    bool ok = true;
    std::string why, wit;
    for (ObjId bo = 0; bo < rep.b_objects && ok; ++bo)
      if (!b_object_law(pair, bo, &why)) {
        ok = false;
        wit = "B object " + std::to_string(bo) + ": " + why;
      }
    add_check(rep.checks, "b_objects_decode", ok, wit);
  }
  {
    bool ok = true;
    std::string why, wit;
    for (MorId bm = 0; bm < rep.b_morphisms && ok; ++bm)
      if (!b_morphism_law(pair, bm, &why)) {
        ok = false;
        wit = "B morphism " + std::to_string(bm) + ": " + why;
      }
    add_check(rep.checks, "b_morphisms_decode", ok, wit);
  }

  Functor io = iota(pair);
  {
    CheckResult r = check_functor(io);
    add_check(rep.checks, "iota_functor", r.ok, r.detail);
  }
  {
    bool ok = true;
    std::string wit;
    for (MorId g = 0; g < rep.a_morphisms && ok; ++g)
      for (MorId h = static_cast<MorId>(g + 1); h < rep.a_morphisms && ok;
           ++h) {
        if (pair.A.cat->dom(g) != pair.A.cat->dom(h) ||
            pair.A.cat->cod(g) != pair.A.cat->cod(h))
          continue;
        if (io.mor_map[g] == io.mor_map[h]) {
          ok = false;
          wit = "parallel pair (" + pair.A.cat->morphism_name(g) + ", " +
                pair.A.cat->morphism_name(h) + ") collapses";
        }
      }
    add_check(rep.checks, "iota_faithful", ok, wit);
  }
  {
    // Image characterization: objects with constant column and identity
    // transition maps in J; arrows between them with a constant J part.
    bool ok = true;
    std::string wit;
    std::vector<bool> obj_in_image(rep.b_objects, false);
    for (ObjId ao = 0; ao < rep.a_objects; ++ao)
      obj_in_image[io.obj_map[ao]] = true;
    for (ObjId bo = 0; bo < rep.b_objects && ok; ++bo) {
      BObjectDecoded d = decode_b_object(pair, bo);
      bool constant = I.object_count() > 0;
      for (ObjId i = 0; i < I.object_count(); ++i)
        constant = constant && d.j[i] == d.j[0];
      for (MorId al = 0; al < I.morphism_count(); ++al)
        constant = constant && d.beta[al] == J.identity(d.j[I.dom(al)]);
      if (constant != obj_in_image[bo]) {
        ok = false;
        wit = "B object " + std::to_string(bo) +
              (constant ? " is constant but not hit" : " hit but not constant");
      }
    }
    std::vector<bool> mor_in_image(rep.b_morphisms, false);
    for (MorId am = 0; am < rep.a_morphisms; ++am)
      mor_in_image[io.mor_map[am]] = true;
    for (MorId bm = 0; bm < rep.b_morphisms && ok; ++bm) {
      ObjId b_dom = pair.B.cat->dom(bm), b_cod = pair.B.cat->cod(bm);
      bool expected = obj_in_image[b_dom] && obj_in_image[b_cod];
      if (expected) {
        BMorphismDecoded dm = decode_b_morphism(pair, bm);
        for (ObjId i = 0; i < I.object_count(); ++i)
          expected = expected && dm.beta[i] == dm.beta[0];
      }
      if (expected != mor_in_image[bm]) {
        ok = false;
        wit = "B morphism " + std::to_string(bm) +
              (expected ? " is constant but not hit" : " hit but not constant");
      }
    }
    add_check(rep.checks, "iota_image", ok, wit);
  }

  std::vector<PseudoFinal> pfs = find_pseudo_finals(I);
  rep.pseudo_final_count = pfs.size();
  if (pfs.empty()) {
    for (const char* name : {"p_functor", "p_iota_identity", "theta_natural",
                             "theta_iota_identity"})
      rep.checks.push_back(
          {name, CheckStatus::Skipped, "no pseudo-final object"});
    return rep;
  }

  for (std::size_t w = 0; w < pfs.size(); ++w) {
    const PseudoFinal& pf = pfs[w];
    std::string tag = pfs.size() == 1
                          ? ""
                          : "[e=" + I.object_name(pf.e) + "#" +
                                std::to_string(w) + "]";
    Functor p = retraction_p(pair, pf);
    {
      CheckResult r = check_functor(p);
      add_check(rep.checks, "p_functor" + tag, r.ok, r.detail);
    }
    add_check(
        rep.checks, "p_iota_identity" + tag,
        same_mapping(compose_functors(p, io), identity_functor(pair.A.cat)));
    NatTrans th = theta(pair, pf);
    {
      CheckResult r = check_nat_trans(th);
      add_check(rep.checks, "theta_natural" + tag, r.ok, r.detail);
    }
    {
      bool ok = true;
      std::string wit;
      for (ObjId ao = 0; ao < rep.a_objects && ok; ++ao) {
        ObjId im = io.obj_map[ao];
        if (th.components[im] != pair.B.cat->identity(im)) {
          ok = false;
          wit = "component at image of A object " +
                pair.A.cat->object_name(ao) + " is not an identity";
        }
      }
      add_check(rep.checks, "theta_iota_identity" + tag, ok, wit);
    }
  }
  return rep;
}

RetractReport verify_retract(const BiDiagram& bd, const SizeCap& cap) {
  return verify_retract(inner_outer(bd, cap));
}

}  // namespace catlim
