#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxlat/exact_arith.hpp"
#include "coxlat/lattice.hpp"
#include "coxlat/star.hpp"

namespace coxlat {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus status);

struct Witness {
  std::size_t index = 0;
  std::string expected;
  std::string got;
};

/// Outcome of one named check on one input. Failing reports always carry a
/// witness.
struct VerificationReport {
  std::string input;
  std::string check;
  CheckStatus status = CheckStatus::Pass;
  std::size_t order = 0;
  std::optional<Witness> witness;
  std::string detail;
  double elapsed_ms = 0.0;

  bool failed() const { return status == CheckStatus::Fail; }
};

/// Everything the checks need about one input. Lattices supplied directly
/// may lack orbit invariants or a star layout; checks that need them are
/// reported as skipped.
struct VerificationInput {
  std::string name;
  std::optional<OrbitInvariants> invariants;
  std::optional<SingularityKind> kind;
  LatticeTower tower;
  std::optional<std::vector<ArmRange>> arms;
  // Coxeter matrices and characteristic polynomials of V_-, V_0, V_+.
  IntMatrix tau_minus, tau_zero, tau_plus;
  IntPoly delta_minus, delta_zero, delta_plus;

  static VerificationInput from_invariants(const OrbitInvariants& inv, std::string name = {});
  static VerificationInput from_lattice(std::string name, const Lattice& minus,
                                        std::optional<OrbitInvariants> claimed = std::nullopt);
};

std::string default_input_name(const OrbitInvariants& inv);

/// p_A against Delta_-/Delta_0 (Kleinian) or Delta_+/Delta_0 (Fuchsian).
VerificationReport verify_theorem(const VerificationInput& in, std::size_t order);
VerificationReport verify_theorem(const OrbitInvariants& inv, std::size_t order);

/// Q_(V0,E) = Delta_-/Delta_0 and P_(V0,E) + t = Delta_+/Delta_0, plus
/// invariance of P and Q under E -> E - u.
std::vector<VerificationReport> verify_prop_lp(const VerificationInput& in, std::size_t order);
std::vector<VerificationReport> verify_prop_lp(const OrbitInvariants& inv, std::size_t order);

/// p_A against Q (Kleinian) or P + t (Fuchsian) directly.
VerificationReport verify_composed(const VerificationInput& in, std::size_t order);

/// Quotient identities on V_0 / rad V_0, arm orbits, and the divisor-degree
/// orbit sums for 1 <= k <= k_max.
std::vector<VerificationReport> verify_orbit_formulas(const VerificationInput& in, std::size_t k_max);
std::vector<VerificationReport> verify_orbit_formulas(const OrbitInvariants& inv, std::size_t k_max);

/// Reflection, Coxeter-form, bilinear, characteristic-polynomial, radical and
/// order identities on V_-, V_0, V_+.
std::vector<VerificationReport> verify_identities(const VerificationInput& in);
std::vector<VerificationReport> verify_identities(const OrbitInvariants& inv);

/// All of the above for one input.
std::vector<VerificationReport> verify_all(const VerificationInput& in, std::size_t order);

/// verify_all over many inputs on up to `threads` workers; reports come back
/// in input order.
std::vector<VerificationReport> run_suite(const std::vector<VerificationInput>& inputs, std::size_t order,
                                          std::size_t threads = 0);

/// Catalog plus seeded random Fuchsian tuples.
std::vector<VerificationInput> standard_inputs(std::size_t random_count = 50,
                                               std::uint64_t seed = kDefaultSeed);

std::string format_report_text(const VerificationReport& report);

}  // namespace coxlat
