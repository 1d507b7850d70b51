#include "coxlat/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "coxlat/error.hpp"
#include "coxlat/series.hpp"

namespace coxlat {

std::string_view status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "unknown";
}

namespace {

using Clock = std::chrono::steady_clock;

struct CheckOutcome {
  CheckStatus status = CheckStatus::Pass;
  std::optional<Witness> witness;
  std::string detail;
};

CheckOutcome pass(std::string detail = {}) { return {CheckStatus::Pass, std::nullopt, std::move(detail)}; }

CheckOutcome skipped(std::string why) { return {CheckStatus::Skipped, std::nullopt, std::move(why)}; }

CheckOutcome fail(std::size_t index, std::string expected, std::string got, std::string detail = {}) {
  return {CheckStatus::Fail, Witness{index, std::move(expected), std::move(got)}, std::move(detail)};
}

// Runs one check, timing it and turning library errors into failures.
VerificationReport run_check(const VerificationInput& in, std::string check, std::size_t order,
                             const std::function<CheckOutcome()>& body) {
  VerificationReport report{in.name, std::move(check), CheckStatus::Pass, order, std::nullopt, {}, 0.0};
  const auto start = Clock::now();
  CheckOutcome outcome;
  try {
    outcome = body();
  } catch (const Error& e) {
    outcome = fail(0, "no error", e.what(), "check raised an error");
  }
  report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  report.status = outcome.status;
  report.witness = std::move(outcome.witness);
  report.detail = std::move(outcome.detail);
  return report;
}

CheckOutcome compare_series(const PowerSeries& expected, const PowerSeries& got) {
  const SeriesComparison cmp = series_equal(expected, got);
  if (cmp.equal) return pass();
  const std::size_t k = *cmp.first_mismatch;
  return fail(k, expected[k].str(), got[k].str(), "first differing coefficient");
}

CheckOutcome compare_matrices(const IntMatrix& expected, const IntMatrix& got) {
  if (expected.rows() != got.rows() || expected.cols() != got.cols()) {
    return fail(0, "shape " + std::to_string(expected.rows()) + "x" + std::to_string(expected.cols()),
                "shape " + std::to_string(got.rows()) + "x" + std::to_string(got.cols()));
  }
  if (auto k = expected.first_difference(got)) {
    const std::size_t i = *k / expected.cols();
    const std::size_t j = *k % expected.cols();
    return fail(*k, expected(i, j).str(), got(i, j).str(),
                "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return pass();
}

std::string vector_string(const IntVector& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

PowerSeries add_t(PowerSeries s) {
  if (s.order() >= 1) s[1] += 1;
  return s;
}

struct NamedLattice {
  const char* name;
  const RootedBasisLattice* lattice;
  const IntMatrix* tau;
  const IntPoly* delta;
};

std::vector<NamedLattice> named_lattices(const VerificationInput& in) {
  return {{"V-", &in.tower.minus, &in.tau_minus, &in.delta_minus},
          {"V0", &in.tower.zero, &in.tau_zero, &in.delta_zero},
          {"V+", &in.tower.plus, &in.tau_plus, &in.delta_plus}};
}

// tau restricted to basis order.
IntMatrix ordered_matrix(const IntMatrix& m, const RootBasis& basis) {
  const std::size_t n = basis.size();
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = m(basis[i], basis[j]);
  return out;
}

CheckOutcome check_reflections(const RootedBasisLattice& rbl) {
  const Lattice& lat = rbl.lattice;
  const std::size_t n = lat.rank();
  const IntMatrix id = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    const IntMatrix s = reflection_matrix(lat, i);
    // s differs from the identity only in row i, so det s = s(i, i).
    for (std::size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (s(r, c) != id(r, c)) return fail(i, "identity outside row " + std::to_string(i), "differs");
      }
    }
    if (s(i, i) != -1) return fail(i, "det -1", "det " + s(i, i).str(), "reflection " + lat.labels()[i]);
    if (s * s != id) return fail(i, "s^2 = I", "s^2 != I", "reflection " + lat.labels()[i]);
    if (s.transpose() * lat.gram() * s != lat.gram()) {
      return fail(i, "s^t G s = G", "form not preserved", "reflection " + lat.labels()[i]);
    }
  }
  return pass(std::to_string(n) + " reflections");
}

CheckOutcome check_bilinear(const RootedBasisLattice& rbl, const IntMatrix& tau) {
  const IntMatrix form = asym_form_matrix(rbl.lattice, rbl.basis);
  const IntMatrix tb = ordered_matrix(tau, rbl.basis);
  const IntMatrix rhs = -(form * tb);  // entry (i, j) = -(e_i, tau e_j)
  const std::size_t n = form.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (form(j, i) != rhs(i, j)) {
        return fail(i * n + j, form(j, i).str(), rhs(i, j).str(),
                    "(e_" + std::to_string(j) + ", e_" + std::to_string(i) + ") vs -(e_" + std::to_string(i) +
                        ", tau e_" + std::to_string(j) + ")");
      }
    }
  }
  return pass();
}

CheckOutcome check_char_poly(const IntMatrix& tau, const IntPoly& delta) {
  const std::size_t n = tau.rows();
  if (delta.degree() != static_cast<long>(n)) {
    return fail(0, "degree " + std::to_string(n), "degree " + std::to_string(delta.degree()));
  }
  if (delta.coeff(0) != 1) return fail(0, "1", delta.coeff(0).str(), "constant term");
  const int eps = delta.coeff(n) == delta.coeff(0) ? 1 : -1;
  for (std::size_t i = 0; i <= n; ++i) {
    if (delta.coeff(i) != eps * delta.coeff(n - i)) {
      return fail(i, (eps * delta.coeff(n - i)).str(), delta.coeff(i).str(),
                  "palindromic with sign " + std::to_string(eps));
    }
  }
  const Integer det = determinant(tau);
  const Integer want = n % 2 ? -1 : 1;
  if (det != want) return fail(0, want.str(), det.str(), "det tau");
  std::ostringstream os;
  os << "sign " << eps << ", det " << det;
  return pass(os.str());
}

}  // namespace

std::string default_input_name(const OrbitInvariants& inv) {
  std::ostringstream os;
  SingularityKind kind = validate(inv);
  os << kind_name(kind) << '(';
  for (std::size_t i = 0; i < inv.pairs.size(); ++i) os << (i ? "," : "") << inv.pairs[i].alpha;
  os << ')';
  return os.str();
}

namespace {

void fill_derived(VerificationInput& in) {
  in.tau_minus = coxeter_matrix(in.tower.minus.lattice, in.tower.minus.basis);
  in.tau_zero = coxeter_matrix(in.tower.zero.lattice, in.tower.zero.basis);
  in.tau_plus = coxeter_matrix(in.tower.plus.lattice, in.tower.plus.basis);
  in.delta_minus = char_poly(in.tau_minus);
  in.delta_zero = char_poly(in.tau_zero);
  in.delta_plus = char_poly(in.tau_plus);
}

}  // namespace

VerificationInput VerificationInput::from_invariants(const OrbitInvariants& inv, std::string name) {
  const SingularityKind kind = validate(inv);
  StarLattices star = build(inv);
  VerificationInput in{name.empty() ? default_input_name(inv) : std::move(name),
                       inv,
                       kind,
                       std::move(star.tower),
                       std::move(star.arms),
                       {}, {}, {}, {}, {}, {}};
  fill_derived(in);
  return in;
}

VerificationInput VerificationInput::from_lattice(std::string name, const Lattice& minus,
                                                  std::optional<OrbitInvariants> claimed) {
  std::optional<SingularityKind> kind;
  std::optional<std::vector<ArmRange>> arms = detect_star(minus);
  if (claimed) {
    kind = validate(*claimed);
    // Arm data is only meaningful when the lattice really is the claimed star.
    if (arms) {
      std::vector<std::int64_t> found;
      for (const auto& a : *arms) found.push_back(a.alpha);
      if (found != claimed->alphas()) arms.reset();
    }
  } else if (arms) {
    std::vector<std::int64_t> alpha;
    for (const auto& a : *arms) alpha.push_back(a.alpha);
    std::vector<std::int64_t> sorted = alpha;
    std::sort(sorted.begin(), sorted.end());
    if (sorted == alpha) {
      for (SingularityKind k : {SingularityKind::Kleinian, SingularityKind::Fuchsian}) {
        OrbitInvariants inv = OrbitInvariants::of_kind(k, alpha);
        try {
          if (validate(inv) == k) {
            claimed = inv;
            kind = k;
            break;
          }
        } catch (const Error&) {
        }
      }
    }
    if (!claimed) arms.reset();
  }
  VerificationInput in{std::move(name), std::move(claimed), kind, extend_tower(minus), std::move(arms),
                       {}, {}, {}, {}, {}, {}};
  fill_derived(in);
  return in;
}

VerificationReport verify_theorem(const VerificationInput& in, std::size_t order) {
  const bool kleinian = in.kind == SingularityKind::Kleinian;
  const char* check = !in.kind ? "theorem" : kleinian ? "theorem.i" : "theorem.ii";
  return run_check(in, check, order, [&]() -> CheckOutcome {
    if (!in.invariants || !in.kind) return skipped("no orbit invariants for this lattice");
    const PowerSeries direct = poincare_direct(*in.invariants, *in.kind, order);
    const IntPoly& num = kleinian ? in.delta_minus : in.delta_plus;
    const PowerSeries quotient = series_from_rational(num, in.delta_zero, order);
    return compare_series(direct, quotient);
  });
}

VerificationReport verify_theorem(const OrbitInvariants& inv, std::size_t order) {
  return verify_theorem(VerificationInput::from_invariants(inv), order);
}

std::vector<VerificationReport> verify_prop_lp(const VerificationInput& in, std::size_t order) {
  std::vector<VerificationReport> out;
  const RootedLattice at_e = rooted_at_center(in.tower);
  out.push_back(run_check(in, "prop_lp.i", order, [&] {
    return compare_series(series_from_rational(in.delta_minus, in.delta_zero, order), hilbert_Q(at_e, order));
  }));
  out.push_back(run_check(in, "prop_lp.ii", order, [&] {
    return compare_series(series_from_rational(in.delta_plus, in.delta_zero, order),
                          add_t(hilbert_P(at_e, order)));
  }));
  out.push_back(run_check(in, "prop_lp.radical_shift", order, [&] {
    const Lattice& v0 = in.tower.zero.lattice;
    const RootedLattice at_f(v0, in.tower.zero.basis, basis_vector(v0.rank(), in.tower.shifted_center()));
    CheckOutcome p = compare_series(hilbert_P(at_e, order), hilbert_P(at_f, order));
    if (p.status != CheckStatus::Pass) return p;
    return compare_series(hilbert_Q(at_e, order), hilbert_Q(at_f, order));
  }));
  return out;
}

std::vector<VerificationReport> verify_prop_lp(const OrbitInvariants& inv, std::size_t order) {
  return verify_prop_lp(VerificationInput::from_invariants(inv), order);
}

VerificationReport verify_composed(const VerificationInput& in, std::size_t order) {
  const bool kleinian = in.kind == SingularityKind::Kleinian;
  return run_check(in, kleinian ? "direct_vs_Q" : "direct_vs_P_plus_t", order, [&]() -> CheckOutcome {
    if (!in.invariants || !in.kind) return skipped("no orbit invariants for this lattice");
    const PowerSeries direct = poincare_direct(*in.invariants, *in.kind, order);
    const RootedLattice at_e = rooted_at_center(in.tower);
    return compare_series(direct, kleinian ? hilbert_Q(at_e, order) : add_t(hilbert_P(at_e, order)));
  });
}

std::vector<VerificationReport> verify_orbit_formulas(const VerificationInput& in, std::size_t k_max) {
  std::vector<VerificationReport> out;
  const Lattice& v0 = in.tower.zero.lattice;
  const std::size_t n0 = v0.rank();
  const std::size_t e = in.tower.center;
  const std::size_t f = in.tower.shifted_center();
  const RadicalQuotient quotient = quotient_by_radical(v0);

  out.push_back(run_check(in, "quotient.sE_sf_identity", 0, [&] {
    const IntMatrix product = reflection_matrix(v0, e) * reflection_matrix(v0, f);
    return compare_matrices(IntMatrix::identity(quotient.lattice.rank()), quotient.induced(product));
  }));

  if (!in.arms || !in.invariants || !in.kind) {
    for (const char* name : {"quotient.arm_factorization", "arm_orbits", "arm_periods", "divisor_sums"}) {
      out.push_back(run_check(in, name, 0, [] { return skipped("lattice is not a recognised star"); }));
    }
    return out;
  }
  const std::vector<ArmRange>& arms = *in.arms;

  // tau_i = s_{E_i^1} ... s_{E_i^{alpha_i - 1}} on V_0.
  std::vector<IntMatrix> arm_factors;
  for (const ArmRange& arm : arms) {
    IntMatrix t = IntMatrix::identity(n0);
    for (std::size_t k = arm.begin; k < arm.end; ++k) t = t * reflection_matrix(v0, k);
    arm_factors.push_back(std::move(t));
  }

  out.push_back(run_check(in, "quotient.arm_factorization", 0, [&] {
    IntMatrix product = IntMatrix::identity(quotient.lattice.rank());
    for (const IntMatrix& t : arm_factors) product = product * quotient.induced(t);
    return compare_matrices(quotient.induced(in.tau_zero), product);
  }));

  out.push_back(run_check(in, "arm_orbits", 0, [&]() -> CheckOutcome {
    const IntVector ev = basis_vector(n0, e);
    for (std::size_t i = 0; i < arms.size(); ++i) {
      const ArmRange& arm = arms[i];
      const auto len = static_cast<std::size_t>(arm.alpha - 1);
      IntMatrix inverse = IntMatrix::identity(n0);
      for (std::size_t k = arm.end; k-- > arm.begin;) inverse = inverse * reflection_matrix(v0, k);
      IntVector fwd = ev;
      IntVector back = ev;
      for (std::size_t k = 1; k <= len; ++k) {
        fwd = arm_factors[i] * fwd;
        back = inverse * back;
        // tau_i^k e = e + sum_{j >= k} E_i^j ; tau_i^{-k} e = e + sum_{j > len - k} E_i^j.
        IntVector want_fwd = ev;
        IntVector want_back = ev;
        for (std::size_t j = k; j <= len; ++j) want_fwd[arm.begin + j - 1] = 1;
        for (std::size_t j = len - k + 1; j <= len; ++j) want_back[arm.begin + j - 1] = 1;
        if (fwd != want_fwd) return fail(k, vector_string(want_fwd), vector_string(fwd), "arm " + std::to_string(i + 1));
        if (back != want_back) {
          return fail(k, vector_string(want_back), vector_string(back), "inverse, arm " + std::to_string(i + 1));
        }
      }
    }
    return pass();
  }));

  out.push_back(run_check(in, "arm_periods", 0, [&]() -> CheckOutcome {
    const IntVector ebar = quotient.project(basis_vector(n0, e));
    std::ostringstream periods;
    for (std::size_t i = 0; i < arms.size(); ++i) {
      const IntMatrix t = quotient.induced(arm_factors[i]);
      IntVector v = t * ebar;
      std::size_t period = 1;
      while (v != ebar && period <= static_cast<std::size_t>(arms[i].alpha)) {
        v = t * v;
        ++period;
      }
      if (period != static_cast<std::size_t>(arms[i].alpha)) {
        return fail(i, std::to_string(arms[i].alpha), std::to_string(period), "period of tau_i on E");
      }
      periods << (i ? "," : "") << period;
    }
    return pass("periods " + periods.str());
  }));

  out.push_back(run_check(in, "divisor_sums", k_max, [&]() -> CheckOutcome {
    const OrbitInvariants& inv = *in.invariants;
    const bool fuchsian = *in.kind == SingularityKind::Fuchsian;
    const IntVector ev = basis_vector(n0, e);
    const IntMatrix step = fuchsian ? in.tau_zero : coxeter_inverse_matrix(v0, in.tower.zero.basis);
    IntVector v = fuchsian ? ev : step * ev;
    Integer sum = 0;
    for (std::size_t k = 1; k <= k_max; ++k) {
      sum += v0.pairing(ev, v);
      v = step * v;
      const Integer lhs = fuchsian ? Integer(1 + sum) : Integer(1 - sum);
      // The divisor kE + sum_i c_i E_i^{alpha_i - 1} restricted to E.
      IntVector divisor(n0);
      divisor[e] = static_cast<std::int64_t>(k);
      for (const ArmRange& arm : arms) {
        const auto kk = static_cast<std::int64_t>(k);
        divisor[arm.end - 1] = fuchsian ? floor_div(kk * (arm.alpha - 1), arm.alpha) : kk - floor_div(kk, arm.alpha);
      }
      const Integer middle = fuchsian ? Integer(1 + v0.pairing(ev, divisor)) : Integer(1 - v0.pairing(ev, divisor));
      const Integer rhs = 1 + divisor_degree(inv, *in.kind, static_cast<std::int64_t>(k));
      if (lhs != middle) return fail(k, middle.str(), lhs.str(), "orbit sum vs divisor pairing");
      if (middle != rhs) return fail(k, rhs.str(), middle.str(), "divisor pairing vs 1 + deg D^(k)");
    }
    return pass(fuchsian ? "Fuchsian orbit sums" : "Kleinian orbit sums");
  }));
  return out;
}

std::vector<VerificationReport> verify_orbit_formulas(const OrbitInvariants& inv, std::size_t k_max) {
  return verify_orbit_formulas(VerificationInput::from_invariants(inv), k_max);
}

std::vector<VerificationReport> verify_identities(const VerificationInput& in) {
  std::vector<VerificationReport> out;
  for (const NamedLattice& nl : named_lattices(in)) {
    const std::string prefix = nl.name;
    out.push_back(run_check(in, prefix + ".reflections", 0, [&] { return check_reflections(*nl.lattice); }));
    out.push_back(run_check(in, prefix + ".coxeter_via_form", 0, [&] {
      const IntMatrix via = coxeter_via_form(asym_form_matrix(nl.lattice->lattice, nl.lattice->basis));
      return compare_matrices(*nl.tau, nl.lattice->basis.from_ordered(via));
    }));
    out.push_back(run_check(in, prefix + ".bilinear_identity", 0,
                            [&] { return check_bilinear(*nl.lattice, *nl.tau); }));
    out.push_back(run_check(in, prefix + ".char_poly", 0, [&] { return check_char_poly(*nl.tau, *nl.delta); }));
  }

  out.push_back(run_check(in, "V0.radical", 0, [&]() -> CheckOutcome {
    const std::vector<IntVector> rad = radical_basis(in.tower.zero.lattice);
    IntVector u(in.tower.zero.lattice.rank());
    u[in.tower.center] = 1;
    u[in.tower.shifted_center()] = -1;
    if (rad.size() != 1) return fail(0, "rank 1", "rank " + std::to_string(rad.size()));
    IntVector neg = u;
    for (auto& x : neg) x = -x;
    if (rad[0] != u && rad[0] != neg) return fail(0, vector_string(u), vector_string(rad[0]), "generator");
    return pass("spanned by " + vector_string(rad[0]));
  }));

  out.push_back(run_check(in, "V0.quotient_nondegenerate", 0, [&]() -> CheckOutcome {
    const RadicalQuotient q = quotient_by_radical(in.tower.zero.lattice);
    if (q.lattice.rank() + 1 != in.tower.zero.lattice.rank()) {
      return fail(0, std::to_string(in.tower.zero.lattice.rank() - 1), std::to_string(q.lattice.rank()),
                  "quotient rank");
    }
    const Integer det = determinant(q.lattice.gram());
    if (det == 0) return fail(0, "nonzero", "0", "quotient Gram determinant");
    return pass("det " + det.str());
  }));

  out.push_back(run_check(in, "V+.hyperbolic_plane", 0, [&]() -> CheckOutcome {
    // In the basis (B_-, u, w) the form of V_+ is V_- (+) U.
    const LatticeTower& t = in.tower;
    const std::size_t n = t.minus.lattice.rank();
    IntMatrix change(n + 2, n + 2);
    for (std::size_t i = 0; i < n; ++i) change(i, i) = 1;
    const IntVector u = t.u_in_plus();
    const IntVector w = t.w_in_plus();
    for (std::size_t i = 0; i < n + 2; ++i) {
      change(i, n) = u[i];
      change(i, n + 1) = w[i];
    }
    IntMatrix want(n + 2, n + 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) want(i, j) = t.minus.lattice.pairing(i, j);
    want(n, n + 1) = want(n + 1, n) = 1;
    return compare_matrices(want, change.transpose() * t.plus.lattice.gram() * change);
  }));

  if (in.kind == SingularityKind::Kleinian) {
    out.push_back(run_check(in, "V-.negative_definite_radical", 0, [&]() -> CheckOutcome {
      const auto rad = radical_basis(in.tower.minus.lattice);
      if (!rad.empty()) return fail(0, "empty radical", "rank " + std::to_string(rad.size()));
      return pass();
    }));
    out.push_back(run_check(in, "V-.coxeter_order", 0, [&]() -> CheckOutcome {
      const auto order = matrix_order(in.tau_minus);
      if (!order) return fail(0, "finite order", "exceeds cap " + std::to_string(kDefaultOrderCap));
      return pass("order " + std::to_string(*order));
    }));
  }

  out.push_back(run_check(in, "V0.coxeter_infinite_order", 0, [&]() -> CheckOutcome {
    if (auto order = matrix_order(in.tau_zero)) return fail(0, "no finite order", std::to_string(*order));
    return pass("exceeds cap " + std::to_string(kDefaultOrderCap));
  }));
  return out;
}

std::vector<VerificationReport> verify_identities(const OrbitInvariants& inv) {
  return verify_identities(VerificationInput::from_invariants(inv));
}

std::vector<VerificationReport> verify_all(const VerificationInput& in, std::size_t order) {
  std::vector<VerificationReport> out;
  out.push_back(verify_theorem(in, order));
  for (auto& r : verify_prop_lp(in, order)) out.push_back(std::move(r));
  out.push_back(verify_composed(in, order));
  for (auto& r : verify_orbit_formulas(in, order)) out.push_back(std::move(r));
  for (auto& r : verify_identities(in)) out.push_back(std::move(r));
  return out;
}

std::vector<VerificationReport> run_suite(const std::vector<VerificationInput>& inputs, std::size_t order,
                                          std::size_t threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(1, inputs.size()));
  std::vector<std::vector<VerificationReport>> slots(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) slots[i] = verify_all(inputs[i], order);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  std::vector<VerificationReport> out;
  for (auto& s : slots) {
    for (auto& r : s) out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationInput> standard_inputs(std::size_t random_count, std::uint64_t seed) {
  std::vector<VerificationInput> out;
  for (const CatalogEntry& entry : catalog_entries()) {
    out.push_back(VerificationInput::from_invariants(entry.invariants, entry.name));
  }
  for (const OrbitInvariants& inv : random_fuchsian(random_count, seed)) {
    out.push_back(VerificationInput::from_invariants(inv));
  }
  return out;
}

std::string format_report_text(const VerificationReport& report) {
  std::ostringstream os;
  std::string status(status_name(report.status));
  std::transform(status.begin(), status.end(), status.begin(), [](unsigned char c) { return std::toupper(c); });
  os << std::left << std::setw(8) << status << std::setw(21) << report.input << ' ' << std::setw(31) << report.check << ' ';
  if (report.order) os << "order=" << report.order << ' ';
  os << std::fixed << std::setprecision(1) << '(' << report.elapsed_ms << " ms)";
  if (report.witness) {
    os << "  witness index=" << report.witness->index << " expected=" << report.witness->expected
       << " got=" << report.witness->got;
  }
  if (!report.detail.empty()) os << "  " << report.detail;
  return os.str();
}

}  // namespace coxlat
