#include "coxlat/series.hpp"

#include "coxlat/error.hpp"

namespace coxlat {

RootedLattice::RootedLattice(Lattice lat, RootBasis b, IntVector a)
    : lattice(std::move(lat)), basis(std::move(b)), root(std::move(a)) {
  if (root.size() != lattice.rank()) throw Error(ErrorCode::DimensionMismatch, "root has wrong length");
  if (lattice.pairing(root, root) != -2) throw Error(ErrorCode::NotARoot, "distinguished vector is not a root");
}

RootedLattice rooted_at_center(const LatticeTower& tower) {
  const Lattice& v0 = tower.zero.lattice;
  return RootedLattice(v0, tower.zero.basis, basis_vector(v0.rank(), tower.center));
}

std::int64_t divisor_degree(const OrbitInvariants& inv, SingularityKind, std::int64_t k) {
  std::int64_t deg = k * (inv.b - static_cast<std::int64_t>(inv.r()));
  for (const auto& p : inv.pairs) deg += floor_div(k * (p.alpha - p.beta), p.alpha);
  return deg;
}

PowerSeries poincare_direct(const OrbitInvariants& inv, SingularityKind kind, std::size_t order) {
  if (validate(inv) != kind) {
    throw Error(ErrorCode::InvalidInput, "invariants " + inv.to_string() + " are not " +
                                             std::string(kind_name(kind)));
  }
  PowerSeries out(order);
  for (std::size_t k = 0; k <= order; ++k) {
    if (kind == SingularityKind::Fuchsian && k == 1) continue;
    const std::int64_t dim = 1 + divisor_degree(inv, kind, static_cast<std::int64_t>(k));
    if (dim < 0) {
      throw Error(ErrorCode::NegativeDimension,
                  "1 + deg D^(" + std::to_string(k) + ") = " + std::to_string(dim));
    }
    out[k] = dim;
  }
  return out;
}

namespace {

// Evaluates x^t F y for the (non-symmetric) form matrix in basis order.
Integer bilinear(const IntMatrix& form, const IntVector& x, const IntVector& y) {
  IntVector fy = form * y;
  Integer acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) acc += x[i] * fy[i];
  }
  return acc;
}

// Orbit sums: c_0 = 1, c_k = c_{k-1} + sign * <a, step^l a> with l running
// over [0, k-1] (shift 0) or [1, k] (shift 1).
PowerSeries orbit_route(const RootedLattice& rl, const IntMatrix& step, std::size_t order, int sign,
                        std::size_t shift) {
  PowerSeries out(order);
  IntVector v = rl.root;
  for (std::size_t s = 0; s < shift; ++s) v = step * v;
  Integer acc = 1;
  out[0] = acc;
  for (std::size_t k = 1; k <= order; ++k) {
    acc += sign * rl.lattice.pairing(rl.root, v);
    out[k] = acc;
    v = step * v;
  }
  return out;
}

// Coefficient k is (a, step^k a), with step given in basis order.
PowerSeries form_route(const RootedLattice& rl, const IntMatrix& form, const IntMatrix& step,
                       std::size_t order) {
  PowerSeries out(order);
  const IntVector a = rl.basis.to_ordered(rl.root);
  IntVector v = a;
  for (std::size_t k = 0; k <= order; ++k) {
    out[k] = bilinear(form, a, v);
    v = step * v;
  }
  return out;
}

PowerSeries checked(const HilbertRoutes& routes, const char* name) {
  const SeriesComparison cmp = series_equal(routes.orbit, routes.form);
  if (!cmp.equal) {
    const std::size_t k = *cmp.first_mismatch;
    throw Error(ErrorCode::RouteMismatch, std::string(name) + " coefficient " + std::to_string(k) +
                                              ": orbit route " + routes.orbit[k].str() + ", form route " +
                                              routes.form[k].str());
  }
  return routes.orbit;
}

}  // namespace

HilbertRoutes hilbert_P_routes(const RootedLattice& rl, std::size_t order) {
  const IntMatrix tau = coxeter_matrix(rl.lattice, rl.basis);
  const IntMatrix form = asym_form_matrix(rl.lattice, rl.basis);
  const IntMatrix tau_form = coxeter_via_form(form);
  return {orbit_route(rl, tau, order, 1, 0), form_route(rl, form, tau_form, order)};
}

HilbertRoutes hilbert_Q_routes(const RootedLattice& rl, std::size_t order) {
  const IntMatrix tau_inv = coxeter_inverse_matrix(rl.lattice, rl.basis);
  const IntMatrix form = asym_form_matrix(rl.lattice, rl.basis);
  // tau^{-1} = -(A^t)^{-1} A.
  const IntMatrix tau_inv_form = -(unitriangular_inverse(form).transpose() * form);
  return {orbit_route(rl, tau_inv, order, -1, 1), form_route(rl, form, tau_inv_form, order)};
}

PowerSeries hilbert_P(const RootedLattice& rl, std::size_t order) {
  return checked(hilbert_P_routes(rl, order), "P");
}

PowerSeries hilbert_Q(const RootedLattice& rl, std::size_t order) {
  return checked(hilbert_Q_routes(rl, order), "Q");
}

}  // namespace coxlat
