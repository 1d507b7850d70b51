#include "coxlat/star.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include "coxlat/error.hpp"

namespace coxlat {

std::string_view kind_name(SingularityKind kind) {
  return kind == SingularityKind::Kleinian ? "kleinian" : "fuchsian";
}

int gorenstein_index(SingularityKind kind) { return kind == SingularityKind::Kleinian ? -1 : 1; }

namespace {

void sort_pairs(std::vector<OrbitPair>& pairs) {
  std::stable_sort(pairs.begin(), pairs.end(),
                   [](const OrbitPair& x, const OrbitPair& y) { return x.alpha < y.alpha; });
}

std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

// Fails with the first Gorenstein relation that does not hold for R.
void check_gorenstein(const OrbitInvariants& inv, int R) {
  for (std::size_t i = 0; i < inv.pairs.size(); ++i) {
    const auto [alpha, beta] = inv.pairs[i];
    const std::int64_t residue = ((R * beta - 1) % alpha + alpha) % alpha;
    if (residue != 0) {
      throw Error(ErrorCode::GorensteinViolation,
                  "R*beta_" + std::to_string(i + 1) + " = " + std::to_string(R * beta) +
                      " is not 1 mod " + std::to_string(alpha) + " (R = " + std::to_string(R) + ")");
    }
  }
  const Rational lhs = Rational(R) * inv.vdeg();
  const Rational rhs = Rational(2 - 2 * inv.g - static_cast<std::int64_t>(inv.r())) + inv.inverse_alpha_sum();
  if (lhs != rhs) {
    throw Error(ErrorCode::GorensteinViolation, "R*vdeg = " + rational_string(lhs) +
                                                    " but 2 - 2g - r + sum 1/alpha_i = " +
                                                    rational_string(rhs) + " (R = " + std::to_string(R) + ")");
  }
}

std::string arm_label(std::size_t arm, std::size_t j) {
  return "E_" + std::to_string(arm + 1) + "^" + std::to_string(j + 1);
}

}  // namespace

OrbitInvariants OrbitInvariants::kleinian(std::vector<std::int64_t> alpha) {
  OrbitInvariants inv{0, 2, {}};
  for (auto a : alpha) inv.pairs.push_back({a, a - 1});
  sort_pairs(inv.pairs);
  return inv;
}

OrbitInvariants OrbitInvariants::fuchsian(std::vector<std::int64_t> alpha) {
  OrbitInvariants inv{0, static_cast<std::int64_t>(alpha.size()) - 2, {}};
  for (auto a : alpha) inv.pairs.push_back({a, 1});
  sort_pairs(inv.pairs);
  return inv;
}

OrbitInvariants OrbitInvariants::of_kind(SingularityKind kind, std::vector<std::int64_t> alpha) {
  return kind == SingularityKind::Kleinian ? kleinian(std::move(alpha)) : fuchsian(std::move(alpha));
}

std::vector<std::int64_t> OrbitInvariants::alphas() const {
  std::vector<std::int64_t> out;
  for (const auto& p : pairs) out.push_back(p.alpha);
  return out;
}

Rational OrbitInvariants::inverse_alpha_sum() const {
  Rational sum = 0;
  for (const auto& p : pairs) sum += Rational(1, p.alpha);
  return sum;
}

Rational OrbitInvariants::vdeg() const {
  Rational v = -b;
  for (const auto& p : pairs) v += Rational(p.beta, p.alpha);
  return v;
}

std::string OrbitInvariants::to_string() const {
  std::ostringstream os;
  os << '{' << g << "; " << b << ';';
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    os << (i ? ", " : " ") << '(' << pairs[i].alpha << ',' << pairs[i].beta << ')';
  }
  os << '}';
  return os.str();
}

SingularityKind validate(const OrbitInvariants& inv) {
  if (inv.g != 0) {
    throw Error(ErrorCode::InvalidInput, "only genus 0 is supported, got g = " + std::to_string(inv.g));
  }
  for (std::size_t i = 0; i < inv.pairs.size(); ++i) {
    const auto [alpha, beta] = inv.pairs[i];
    if (alpha < 2 || beta <= 0 || beta >= alpha || std::gcd(alpha, beta) != 1) {
      throw Error(ErrorCode::InvalidInput, "pair " + std::to_string(i + 1) + " = (" + std::to_string(alpha) +
                                               "," + std::to_string(beta) +
                                               ") needs alpha >= 2, 0 < beta < alpha, gcd 1");
    }
    if (i > 0 && inv.pairs[i - 1].alpha > alpha) {
      throw Error(ErrorCode::InvalidInput, "pairs must be sorted by alpha");
    }
  }
  const auto r = static_cast<std::int64_t>(inv.r());
  const Rational sigma = inv.inverse_alpha_sum();
  const bool kleinian_pattern =
      inv.b == 2 && std::all_of(inv.pairs.begin(), inv.pairs.end(),
                                [](const OrbitPair& p) { return p.beta == p.alpha - 1; });
  const bool fuchsian_pattern =
      inv.b == r - 2 &&
      std::all_of(inv.pairs.begin(), inv.pairs.end(), [](const OrbitPair& p) { return p.beta == 1; });

  if (kleinian_pattern && sigma > r - 2) {
    check_gorenstein(inv, -1);
    return SingularityKind::Kleinian;
  }
  if (fuchsian_pattern && sigma < r - 2) {
    check_gorenstein(inv, 1);
    return SingularityKind::Fuchsian;
  }
  if (kleinian_pattern || fuchsian_pattern) {
    throw Error(ErrorCode::NeitherKind, "sum 1/alpha_i = " + rational_string(sigma) +
                                            " with r - 2 = " + std::to_string(r - 2) +
                                            " fits neither the Kleinian nor the Fuchsian inequality");
  }
  // Outside both patterns at least one relation fails for each R; report
  // the one for the R whose congruences hold, if any.
  const bool fuchsian_congruence =
      std::all_of(inv.pairs.begin(), inv.pairs.end(), [](const OrbitPair& p) { return p.beta == 1; });
  check_gorenstein(inv, fuchsian_congruence && !inv.pairs.empty() ? 1 : -1);
  throw Error(ErrorCode::NeitherKind, "invariants " + inv.to_string() + " fit neither pattern");
}

IntVector LatticeTower::u_in_plus() const {
  IntVector u(plus.lattice.rank());
  u[center] = 1;
  u[shifted_center()] = -1;
  return u;
}

IntVector LatticeTower::w_in_plus() const {
  IntVector w = u_in_plus();
  w[hyperbolic_root()] = -1;
  return w;
}

LatticeTower extend_tower(const Lattice& minus) {
  const std::size_t n = minus.rank();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "cannot extend an empty lattice");
  const std::size_t c = n - 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (minus.pairing(i, i) != -2) {
      throw Error(ErrorCode::NotARoot, "basis element " + minus.labels()[i] + " is not a root");
    }
  }
  const std::string& top = minus.labels()[c];

  IntMatrix g0(n + 1, n + 1);
  IntMatrix gp(n + 2, n + 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g0(i, j) = minus.pairing(i, j);
    // <e_n - u, x> = <e_n, x> since u is radical.
    g0(n, i) = g0(i, n) = minus.pairing(c, i);
  }
  g0(n, n) = -2;
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= n; ++j) gp(i, j) = g0(i, j);
  // u - w is orthogonal to V_-, meets e_n - u in 1 and squares to -2.
  gp(n + 1, n) = gp(n, n + 1) = 1;
  gp(n + 1, n + 1) = -2;

  std::vector<std::string> labels0 = minus.labels();
  labels0.push_back(top + "-u");
  std::vector<std::string> labelsp = labels0;
  labelsp.push_back("u-w");

  Lattice l0(labels0, std::move(g0));
  Lattice lp(labelsp, std::move(gp));
  return LatticeTower{
      {minus, RootBasis::natural(n)},
      {l0, RootBasis::natural(n + 1)},
      {lp, RootBasis::natural(n + 2)},
      c,
  };
}

StarLattices build_star(const std::vector<std::int64_t>& alpha) {
  std::size_t n = 1;
  for (auto a : alpha) {
    if (a < 2) throw Error(ErrorCode::InvalidInput, "arm parameters must be >= 2");
    n += static_cast<std::size_t>(a - 1);
  }
  const std::size_t center = n - 1;
  IntMatrix gram(n, n);
  std::vector<std::string> labels;
  std::vector<ArmRange> arms;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    ArmRange arm{idx, idx + static_cast<std::size_t>(alpha[i] - 1), alpha[i]};
    for (std::size_t k = arm.begin; k < arm.end; ++k) {
      gram(k, k) = -2;
      if (k + 1 < arm.end) gram(k, k + 1) = gram(k + 1, k) = 1;
      labels.push_back(arm_label(i, k - arm.begin));
    }
    // The last arm vertex E_i^{alpha_i - 1} meets the centre.
    gram(arm.end - 1, center) = gram(center, arm.end - 1) = 1;
    arms.push_back(arm);
    idx = arm.end;
  }
  gram(center, center) = -2;
  labels.push_back("E");
  return StarLattices{extend_tower(Lattice(std::move(labels), std::move(gram))), std::move(arms)};
}

StarLattices build(const OrbitInvariants& inv) {
  validate(inv);
  return build_star(inv.alphas());
}

std::optional<std::vector<ArmRange>> detect_star(const Lattice& minus) {
  const std::size_t n = minus.rank();
  if (n == 0) return std::nullopt;
  const std::size_t center = n - 1;
  std::vector<std::int64_t> alpha;
  std::size_t idx = 0;
  while (idx < center) {
    std::size_t end = idx + 1;
    while (end < center && minus.pairing(end - 1, end) == 1) ++end;
    alpha.push_back(static_cast<std::int64_t>(end - idx) + 1);
    idx = end;
  }
  StarLattices star = build_star(alpha);
  if (star.tower.minus.lattice.gram() != minus.gram()) return std::nullopt;
  return star.arms;
}

namespace {

std::optional<std::int64_t> parse_index(const std::string& digits) {
  if (digits.empty() || digits.size() > 6) return std::nullopt;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return std::nullopt;
  }
  return std::stoll(digits);
}

std::optional<std::vector<std::int64_t>> parse_tuple(const std::string& body) {
  std::vector<std::int64_t> out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto v = parse_index(item);
    if (!v) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

}  // namespace

OrbitInvariants catalog(const std::string& name) {
  auto unknown = [&](const std::string& why) {
    return Error(ErrorCode::UnknownName, "'" + name + "' " + why);
  };
  if (name.empty()) throw unknown("is empty");
  // Generic entries: F(2,3,8) and K(2,2,5).
  if (name.size() > 3 && (name[0] == 'F' || name[0] == 'K') && name[1] == '(' && name.back() == ')') {
    auto tuple = parse_tuple(name.substr(2, name.size() - 3));
    if (!tuple) throw unknown("has a malformed tuple");
    return name[0] == 'F' ? OrbitInvariants::fuchsian(*tuple) : OrbitInvariants::kleinian(*tuple);
  }
  const auto index = parse_index(name.substr(1));
  if (name == "E6") return OrbitInvariants::kleinian({2, 3, 3});
  if (name == "E7") return OrbitInvariants::kleinian({2, 3, 4});
  if (name == "E8") return OrbitInvariants::kleinian({2, 3, 5});
  if (name == "E12") return OrbitInvariants::fuchsian({2, 3, 7});
  if (name[0] == 'A' && index) {
    if (*index == 1) return OrbitInvariants::kleinian({});
    if (*index >= 3 && *index % 2 == 1) {
      const std::int64_t a = (*index + 1) / 2;
      return OrbitInvariants::kleinian({a, a});
    }
    throw unknown("is not in the catalog (even A types have no stored orbit invariants)");
  }
  if (name[0] == 'D' && index && *index >= 4) return OrbitInvariants::kleinian({2, 2, *index - 2});
  throw unknown("is not in the catalog");
}

std::vector<CatalogEntry> catalog_entries() {
  std::vector<std::string> names{"A1"};
  for (int a = 2; a <= 6; ++a) names.push_back("A" + std::to_string(2 * a - 1));
  for (int n = 2; n <= 10; ++n) names.push_back("D" + std::to_string(n + 2));
  for (const char* e : {"E6", "E7", "E8", "E12"}) names.emplace_back(e);
  std::vector<CatalogEntry> out;
  for (auto& nm : names) out.push_back({nm, catalog(nm)});
  return out;
}

std::vector<OrbitInvariants> random_fuchsian(std::size_t count, std::uint64_t seed,
                                             std::vector<std::size_t> arm_counts, std::int64_t max_alpha) {
  if (arm_counts.empty() || max_alpha < 2) {
    throw Error(ErrorCode::InvalidInput, "random_fuchsian needs arm counts and max_alpha >= 2");
  }
  // Raw engine output only, so the sequence is identical on every platform.
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(max_alpha - 1);
  std::vector<OrbitInvariants> out;
  std::size_t attempts = 0;
  while (out.size() < count) {
    if (++attempts > 1000 * (count + 1)) {
      throw Error(ErrorCode::InvalidInput, "random_fuchsian cannot satisfy the hyperbolicity constraint");
    }
    const std::size_t r = arm_counts[rng() % arm_counts.size()];
    std::vector<std::int64_t> alpha(r);
    for (auto& a : alpha) a = 2 + static_cast<std::int64_t>(rng() % span);
    OrbitInvariants inv = OrbitInvariants::fuchsian(alpha);
    if (inv.inverse_alpha_sum() < static_cast<std::int64_t>(r) - 2) out.push_back(std::move(inv));
  }
  return out;
}

}  // namespace coxlat
