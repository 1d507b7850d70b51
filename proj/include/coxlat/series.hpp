#pragma once

#include <cstddef>
#include <cstdint>

#include "coxlat/exact_arith.hpp"
#include "coxlat/lattice.hpp"
#include "coxlat/star.hpp"

namespace coxlat {

/// A lattice with an ordered root basis and a distinguished root a.
struct RootedLattice {
  Lattice lattice;
  RootBasis basis;
  IntVector root;

  RootedLattice(Lattice lattice, RootBasis basis, IntVector root);
};

/// (V_0, E) for a tower: the centre of V_- viewed inside V_0.
RootedLattice rooted_at_center(const LatticeTower& tower);

/// deg D^(k) = k (b - r) + sum_i floor(k (alpha_i - beta_i) / alpha_i).
std::int64_t divisor_degree(const OrbitInvariants& inv, SingularityKind kind, std::int64_t k);

/// Poincare series from dim L(D^(k)) = 1 + deg D^(k) on a genus-0 curve;
/// for Fuchsian data dim A_1 = dim L(D_0) = g = 0.
PowerSeries poincare_direct(const OrbitInvariants& inv, SingularityKind kind, std::size_t order);

// The two evaluations of each Hilbert-Poincare series. The orbit route sums
// <a, tau^l a> along the orbit of a under the reflection-product Coxeter
// element; the form route reads (a, tau^k a) off the unitriangular form
// with tau = -A^{-1} A^t.
struct HilbertRoutes {
  PowerSeries orbit;
  PowerSeries form;
};

HilbertRoutes hilbert_P_routes(const RootedLattice& rl, std::size_t order);
HilbertRoutes hilbert_Q_routes(const RootedLattice& rl, std::size_t order);

/// P: coefficient 1 + sum_{l=0}^{k-1} <a, tau^l a>. Throws RouteMismatch if
/// the two routes disagree.
PowerSeries hilbert_P(const RootedLattice& rl, std::size_t order);

/// Q: coefficient 1 - sum_{l=1}^{k} <a, tau^{-l} a>.
PowerSeries hilbert_Q(const RootedLattice& rl, std::size_t order);

}  // namespace coxlat
