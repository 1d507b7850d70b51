// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "coxlat/error.hpp"
#include "coxlat/io.hpp"
#include "coxlat/series.hpp"
#include "coxlat/verifier.hpp"

using namespace coxlat;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

struct Tally {
  std::size_t checked = 0;
  std::vector<std::string> failures;

  void expect(bool cond, const std::string& what) {
    ++checked;
    if (cond) return;
    if (failures.size() < 4) {
      failures.push_back(what);
    } else if (failures.size() == 4) {
      failures.push_back("...");
    }
  }
  Outcome outcome(const std::string& note) const {
    std::string n = note + ", " + std::to_string(checked) + " checks";
    for (const auto& f : failures) n += "; failed: " + f;
    return {failures.empty(), n};
  }
};

std::string series_mismatch(const PowerSeries& a, const PowerSeries& b) {
  const auto cmp = series_equal(a, b);
  if (cmp.equal) return {};
  const std::size_t k = *cmp.first_mismatch;
  return "k=" + std::to_string(k) + " (" + a[k].str() + " vs " + b[k].str() + ")";
}

struct Deltas {
  IntPoly minus, zero, plus;
};

Deltas deltas_of(const LatticeTower& t) {
  return {char_poly(coxeter_matrix(t.minus.lattice, t.minus.basis)),
          char_poly(coxeter_matrix(t.zero.lattice, t.zero.basis)),
          char_poly(coxeter_matrix(t.plus.lattice, t.plus.basis))};
}

// Numerator delta_- (Kleinian) or delta_+ (Fuchsian) over delta_0 against the direct series.
void compare_ratio(Tally& tally, const OrbitInvariants& inv, SingularityKind kind, std::size_t order) {
  const Deltas d = deltas_of(build(inv).tower);
  const IntPoly& num = kind == SingularityKind::Kleinian ? d.minus : d.plus;
  const PowerSeries ratio = series_from_rational(num, d.zero, order);
  const PowerSeries direct = poincare_direct(inv, kind, order);
  const std::string diff = series_mismatch(direct, ratio);
  tally.expect(diff.empty(), inv.to_string() + " " + diff);
}

// (1 - t^d) / prod (1 - t^w) by counting monomials.
PowerSeries hypersurface_series(const std::vector<int>& w, int d, std::size_t order) {
  const int n = static_cast<int>(order);
  std::vector<long long> count(order + 1, 0);
  for (int a = 0; a * w[0] <= n; ++a)
    for (int b = 0; a * w[0] + b * w[1] <= n; ++b)
      for (int c = 0; a * w[0] + b * w[1] + c * w[2] <= n; ++c) ++count[a * w[0] + b * w[1] + c * w[2]];
  IntVector out(order + 1);
  for (int k = 0; k <= n; ++k) out[k] = count[k] - (k >= d ? count[k - d] : 0);
  return PowerSeries(out);
}

std::vector<OrbitInvariants> kleinian_inputs() {
  std::vector<OrbitInvariants> out{OrbitInvariants::kleinian({})};
  for (std::int64_t a = 2; a <= 6; ++a) out.push_back(OrbitInvariants::kleinian({a, a}));
  for (std::int64_t n = 2; n <= 10; ++n) out.push_back(OrbitInvariants::kleinian({2, 2, n}));
  for (std::int64_t c : {3, 4, 5}) out.push_back(OrbitInvariants::kleinian({2, 3, c}));
  return out;
}

std::vector<OrbitInvariants> fuchsian_inputs() {
  std::vector<OrbitInvariants> out;
  for (std::int64_t a = 2; a <= 12; ++a)
    for (std::int64_t b = a; b <= 12; ++b)
      for (std::int64_t c = b; c <= 12; ++c)
        if (Rational(1, a) + Rational(1, b) + Rational(1, c) < 1) out.push_back(OrbitInvariants::fuchsian({a, b, c}));
  for (std::size_t r : {4u, 5u})
    for (const auto& inv : random_fuchsian(20, kDefaultSeed + r, {r})) out.push_back(inv);
  return out;
}

// Catalog plus 50 seeded random Fuchsian tuples.
std::vector<VerificationInput> suite_inputs() { return standard_inputs(50, kDefaultSeed); }

Outcome criterion1() {
  Tally tally;
  const auto inputs = kleinian_inputs();
  for (const auto& inv : inputs) compare_ratio(tally, inv, SingularityKind::Kleinian, 200);
  return tally.outcome(std::to_string(inputs.size()) + " Kleinian inputs, delta_-/delta_0 vs direct to order 200");
}

Outcome criterion2() {
  Tally tally;
  const auto inputs = fuchsian_inputs();
  for (const auto& inv : inputs) compare_ratio(tally, inv, SingularityKind::Fuchsian, 200);
  return tally.outcome(std::to_string(inputs.size()) + " Fuchsian inputs, delta_+/delta_0 vs direct to order 200");
}

Outcome criterion3() {
  struct Case {
    const char* name;
    OrbitInvariants inv;
    SingularityKind kind;
    std::vector<int> w;
    int d;
  };
  const std::vector<Case> cases = {
      {"E6", catalog("E6"), SingularityKind::Kleinian, {3, 4, 6}, 12},
      {"E7", catalog("E7"), SingularityKind::Kleinian, {4, 6, 9}, 18},
      {"E8", catalog("E8"), SingularityKind::Kleinian, {6, 10, 15}, 30},
      {"A3", catalog("A3"), SingularityKind::Kleinian, {1, 2, 2}, 4},
      {"A1", catalog("A1"), SingularityKind::Kleinian, {1, 1, 1}, 2},
      {"(2,3,7)", OrbitInvariants::fuchsian({2, 3, 7}), SingularityKind::Fuchsian, {6, 14, 21}, 42},
  };
  Tally tally;
  for (const auto& c : cases) {
    const std::string diff = series_mismatch(hypersurface_series(c.w, c.d, 100), poincare_direct(c.inv, c.kind, 100));
    tally.expect(diff.empty(), std::string(c.name) + " " + diff);
  }
  return tally.outcome("weighted monomial counts vs direct to order 100");
}

Outcome criterion4() {
  Tally tally;
  const auto inputs = suite_inputs();
  for (const auto& in : inputs) {
    const RootedLattice at_e = rooted_at_center(in.tower);
    const PowerSeries q = hilbert_Q(at_e, 100);
    PowerSeries p_plus_t = hilbert_P(at_e, 100);
    p_plus_t[1] += 1;
    const std::string dq = series_mismatch(series_from_rational(in.delta_minus, in.delta_zero, 100), q);
    const std::string dp = series_mismatch(series_from_rational(in.delta_plus, in.delta_zero, 100), p_plus_t);
    tally.expect(dq.empty(), in.name + " Q " + dq);
    tally.expect(dp.empty(), in.name + " P+t " + dp);
  }
  return tally.outcome(std::to_string(inputs.size()) + " inputs, Q and P+t vs char poly ratios to order 100");
}

Outcome criterion5() {
  Tally tally;
  const auto inputs = suite_inputs();
  for (const auto& in : inputs) {
    std::vector<VerificationReport> reports = verify_identities(in);
    for (auto& r : verify_orbit_formulas(in, 200)) reports.push_back(std::move(r));
    for (const auto& r : reports) tally.expect(r.status == CheckStatus::Pass, in.name + " " + r.check);
  }
  return tally.outcome(std::to_string(inputs.size()) + " inputs, identity and orbit-formula checks, k <= 200");
}

Outcome criterion6() {
  Tally tally;
  const StarLattices e8 = build_star({2, 3, 5});
  const IntMatrix tau = coxeter_matrix(e8.tower.minus.lattice, e8.tower.minus.basis);
  tally.expect(char_poly(tau) == IntPoly{1, 1, 0, -1, -1, -1, 0, 1, 1}, "char poly of (2,3,5)");
  tally.expect(matrix_order(tau) == 30, "order of (2,3,5) Coxeter element");

  const PowerSeries q = hilbert_Q(rooted_at_center(build_star({}).tower), 50);
  bool odd = true;
  for (std::size_t k = 0; k <= 50; ++k) odd = odd && q[k] == 2 * static_cast<long long>(k) + 1;
  tally.expect(odd, "Q of the empty-arm V0");

  const PowerSeries f = poincare_direct(OrbitInvariants::fuchsian({2, 3, 7}), SingularityKind::Fuchsian, 14);
  tally.expect(f.coeffs() == IntVector{1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 1}, "(2,3,7) direct series");
  return tally.outcome("spot values");
}

Outcome criterion7() {
  Tally tally;
  const StarLattices e8 = build_star({2, 3, 5});
  const Lattice& minus = e8.tower.minus.lattice;
  IntMatrix g = minus.gram();
  const std::size_t i = *minus.index_of("E_3^3"), j = *minus.index_of("E_3^4");
  g(i, j) = g(j, i) = 0;
  const auto bad = VerificationInput::from_lattice("e8-deleted-edge", Lattice(minus.labels(), g),
                                                   OrbitInvariants::kleinian({2, 3, 5}));
  const auto report = verify_theorem(bad, 200);
  tally.expect(report.status == CheckStatus::Fail && report.witness.has_value(), "deleted edge not detected");
  std::string witness = report.witness ? "witness index " + std::to_string(report.witness->index) : "no witness";

  for (auto inv : {OrbitInvariants::fuchsian({2, 3, 6}), OrbitInvariants::kleinian({2, 3, 6})}) {
    bool rejected = false;
    try {
      validate(inv);
    } catch (const Error& e) {
      rejected = e.code() == ErrorCode::NeitherKind;
    }
    tally.expect(rejected, inv.to_string() + " not rejected as NeitherKind");
  }
  return tally.outcome("negative controls (" + witness + ")");
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, 5.0, criterion1},   {2, 30.0, criterion2}, {3, 0.0, criterion3}, {4, 0.0, criterion4},
      {5, 0.0, criterion5},   {6, 0.0, criterion6},  {7, 0.0, criterion7},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      out.ok = false;
      out.note += "; over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (out.ok ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << out.note << " (" << timing << ")"
              << std::endl;
    if (!out.ok) ++failed;
  }
  std::cout << (failed ? "FAIL" : "PASS") << "  " << criteria.size() - failed << "/" << criteria.size()
            << " criteria" << std::endl;
  return failed ? 1 : 0;
}
