#include "catlim/padic.hpp"

namespace catlim {

namespace {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned long long pow_u(unsigned base, unsigned exp) {
  unsigned long long r = 1;
  while (exp--) {
    r *= base;
    if (r > (1ull << 40))
      throw CatError(Err::SizeCapExceeded, "modulus overflow");
  }
  return r;
}

void check_params(const PadicParams& params, const SizeCap& cap) {
  if (!is_prime(params.p))
    throw CatError(Err::InvalidParameter,
                   "p = " + std::to_string(params.p) + " is not prime");
  if (params.M < 1 || params.N < 1)
    throw CatError(Err::InvalidParameter, "M and N must be at least 1");
  if (pow_u(params.p, params.M) > cap.max_objects)
    throw CatError(Err::SizeCapExceeded, "top fiber exceeds object cap");
}

}  // namespace

BiDiagram padic_bidiagram(const PadicParams& params, const SizeCap& cap) {
  check_params(params, cap);
  const unsigned p = params.p, M = params.M, N = params.N;

  // Rows, with maps running toward row 1 (the final object).
  std::vector<std::vector<bool>> leq(M, std::vector<bool>(M, false));
  for (ObjId r = 0; r < M; ++r)
    for (ObjId rp = 0; rp < M; ++rp) leq[r][rp] = r >= rp;
  FinCat rows = poset_category(M, leq, cap);
  {
    RawCategory raw = rows.to_raw();
    for (ObjId r = 0; r < M; ++r)
      raw.object_names[r] = "m=" + std::to_string(r + 1);
    rows = FinCat::validate(std::move(raw), cap);
  }
  FinCat cols = chain_category(N, cap);
  {
    RawCategory raw = cols.to_raw();
    for (ObjId n = 0; n <= N; ++n)
      raw.object_names[n] = "n=" + std::to_string(n);
    cols = FinCat::validate(std::move(raw), cap);
  }

  BiDiagram bd;
  bd.prod = product_category(share(std::move(rows)), share(std::move(cols)), cap);
  const FinCat& I = *bd.I();
  const FinCat& J = *bd.J();

  std::vector<FinCatPtr> fibers(M);
  for (ObjId r = 0; r < M; ++r)
    fibers[r] =
        share(discrete_category(static_cast<std::size_t>(pow_u(p, r + 1)), cap));

  bd.underlying.index = bd.prod.cat;
  for (ObjId o = 0; o < bd.prod.cat->object_count(); ++o)
    bd.underlying.fibers.push_back(fibers[bd.prod.object_pair(o).first]);
  for (MorId m = 0; m < bd.prod.cat->morphism_count(); ++m) {
    auto [alpha, beta] = bd.prod.morphism_pair(m);
    ObjId r = I.dom(alpha), rp = I.cod(alpha);
    ObjId n = J.dom(beta), np = J.cod(beta);
    unsigned long long mod = pow_u(p, rp + 1);
    unsigned long long mult = pow_u(p, np - n) % mod;
    Functor t;
    t.source = fibers[r];
    t.target = fibers[rp];
    for (ObjId a = 0; a < fibers[r]->object_count(); ++a) {
      ObjId img = static_cast<ObjId>((a * mult) % mod);
      t.obj_map.push_back(img);
      t.mor_map.push_back(img);  // discrete fiber: morphisms are identities
    }
    bd.underlying.transports.push_back(std::move(t));
  }
  return validate_bidiagram(std::move(bd));
}

Hocolim padic_row_hocolim(const PadicParams& params, unsigned m,
                          const SizeCap& cap) {
  check_params(params, cap);
  if (m < 1 || m > params.M)
    throw CatError(Err::IndexOutOfRange, "row index out of range");
  BiDiagram bd = padic_bidiagram(params, cap);
  return hocolim(curry_fix_i(bd, m - 1), cap);
}

HomsetReport row_hocolim_homset_check(const PadicParams& params, unsigned m,
                                      const SizeCap& cap) {
  Hocolim row = padic_row_hocolim(params, m, cap);
  unsigned long long mod = pow_u(params.p, m);
  HomsetReport rep;
  rep.m = m;
  rep.objects = row.cat->object_count();
  for (ObjId from = 0; from < row.cat->object_count(); ++from)
    for (ObjId to = 0; to < row.cat->object_count(); ++to) {
      ++rep.pairs_checked;
      ObjId n0 = row.objects[from].i, a = row.objects[from].x;
      ObjId n1 = row.objects[to].i, b = row.objects[to].x;
      bool expect = false;
      if (n0 <= n1) {
        unsigned long long image = (a * (pow_u(params.p, n1 - n0) % mod)) % mod;
        expect = image == b;
      }
      std::size_t got = row.cat->hom(from, to).size();
      if (got != (expect ? 1u : 0u))
        rep.mismatches.push_back({from, to, got, expect});
    }
  return rep;
}

}  // namespace catlim
