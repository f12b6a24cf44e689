#pragma once

#include "catlim/hocolim.hpp"

namespace catlim {

/// Truncation parameters of the modular tower grid: rows m = 1..M carry
/// the cyclic set of residues mod p^m, columns n = 0..N.
struct PadicParams {
  unsigned p = 2;  // prime
  unsigned M = 1;  // rows
  unsigned N = 1;  // columns
};

/// The grid as a bidiagram: the first index is the truncated tower of rows
/// (morphisms m -> m' whenever m >= m', so row 1 is final), the second is
/// the chain 0 -> 1 -> ... -> N. Fibers are discrete on Z/p^m; horizontal
/// transports multiply by p, vertical transports reduce modulo p^(m').
BiDiagram padic_bidiagram(const PadicParams& params,
                          const SizeCap& cap = global_size_cap());

struct HomsetMismatch {
  ObjId from, to;
  std::size_t got;       // enumerated hom-set size
  bool expected_single;  // closed-form prediction
};

struct HomsetReport {
  unsigned m = 0;
  std::size_t objects = 0;
  std::size_t pairs_checked = 0;
  std::vector<HomsetMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Builds L_m = hocolim of row m (over the column chain) and compares every
/// hom-set against the closed form: hom((n0,a),(n1,b)) is a singleton iff
/// n0 <= n1 and p^(n1-n0)·a ≡ b (mod p^m), and empty otherwise.
HomsetReport row_hocolim_homset_check(const PadicParams& params, unsigned m,
                                      const SizeCap& cap = global_size_cap());

/// The row-m hocolim itself (exposed for diagnostics and tests).
Hocolim padic_row_hocolim(const PadicParams& params, unsigned m,
                          const SizeCap& cap = global_size_cap());

}  // namespace catlim
