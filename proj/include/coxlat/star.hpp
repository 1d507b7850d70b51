#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxlat/exact_arith.hpp"
#include "coxlat/lattice.hpp"

namespace coxlat {

enum class SingularityKind { Kleinian, Fuchsian };

std::string_view kind_name(SingularityKind kind);
// The integer R of the Gorenstein relations: -1 Kleinian, +1 Fuchsian.
int gorenstein_index(SingularityKind kind);

struct OrbitPair {
  std::int64_t alpha = 0;
  std::int64_t beta = 0;
  friend bool operator==(const OrbitPair&, const OrbitPair&) = default;
};

/// Orbit invariants {g; b; (alpha_1, beta_1), ..., (alpha_r, beta_r)}.
/// Pairs are kept sorted by alpha.
struct OrbitInvariants {
  std::int64_t g = 0;
  std::int64_t b = 0;
  std::vector<OrbitPair> pairs;

  // {0; 2; (a_i, a_i - 1)}.
  static OrbitInvariants kleinian(std::vector<std::int64_t> alpha);
  // {0; r - 2; (a_i, 1)}.
  static OrbitInvariants fuchsian(std::vector<std::int64_t> alpha);
  static OrbitInvariants of_kind(SingularityKind kind, std::vector<std::int64_t> alpha);

  std::size_t r() const noexcept { return pairs.size(); }
  std::vector<std::int64_t> alphas() const;
  Rational inverse_alpha_sum() const;
  // vdeg(L) = -b + sum beta_i / alpha_i.
  Rational vdeg() const;

  std::string to_string() const;
  friend bool operator==(const OrbitInvariants&, const OrbitInvariants&) = default;
};

/// Checks the pair constraints, decides the kind and checks the Gorenstein
/// relations for R = -1 (Kleinian) or R = +1 (Fuchsian).
SingularityKind validate(const OrbitInvariants& inv);

/// A lattice together with the ordered root basis used for its Coxeter element.
struct RootedBasisLattice {
  Lattice lattice;
  RootBasis basis;
};

/// V_-, V_0 = V_-[u], V_+ = V_-[u, w] with bases B_-, (B_-, e_n - u),
/// (B_-, e_n - u, u - w), where e_n is the last element of B_-.
struct LatticeTower {
  RootedBasisLattice minus;
  RootedBasisLattice zero;
  RootedBasisLattice plus;
  // Index of e_n (the centre E for star lattices).
  std::size_t center = 0;

  // Index of e_n - u and of u - w in the V_+ basis.
  std::size_t shifted_center() const { return center + 1; }
  std::size_t hyperbolic_root() const { return center + 2; }
  // Coordinates of u and w in the V_+ basis.
  IntVector u_in_plus() const;
  IntVector w_in_plus() const;
};

/// Builds the tower on an arbitrary lattice whose last basis vector is a root.
LatticeTower extend_tower(const Lattice& minus);

struct ArmRange {
  std::size_t begin = 0;  // index of E_i^1
  std::size_t end = 0;    // one past E_i^{alpha_i - 1}
  std::int64_t alpha = 0;
};

struct StarLattices {
  LatticeTower tower;
  std::vector<ArmRange> arms;
  std::size_t center() const { return tower.center; }
};

/// Star configuration of r chains of (alpha_i - 1) (-2)-vertices whose last
/// vertex meets the centre E. Only the alpha_i are used.
StarLattices build(const OrbitInvariants& inv);
StarLattices build_star(const std::vector<std::int64_t>& alpha);

/// Recovers the arm data when a lattice has exactly the layout produced by
/// build_star; nullopt otherwise.
std::optional<std::vector<ArmRange>> detect_star(const Lattice& minus);

struct CatalogEntry {
  std::string name;
  OrbitInvariants invariants;
};

OrbitInvariants catalog(const std::string& name);
/// Finite listing used by "verify --all" and "catalog".
std::vector<CatalogEntry> catalog_entries();

/// Deterministic Fuchsian tuples: r drawn from arm_counts, alpha_i from
/// [2, max_alpha], rejected unless sum 1/alpha_i < r - 2.
std::vector<OrbitInvariants> random_fuchsian(std::size_t count, std::uint64_t seed,
                                             std::vector<std::size_t> arm_counts = {3, 4, 5},
                                             std::int64_t max_alpha = 12);

inline constexpr std::uint64_t kDefaultSeed = 20080101;

}  // namespace coxlat
