#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

#include "coxlat/error.hpp"
#include "coxlat/lattice.hpp"

using namespace coxlat;

namespace {

// Gram matrix of a (-2)-curve graph given by its edges.
IntMatrix mat(const std::vector<std::vector<long long>>& rows) { return IntMatrix(rows); }

Lattice graph_lattice(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = -2;
  for (auto [a, b] : edges) g[a][b] = g[b][a] = 1;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("e" + std::to_string(i + 1));
  return Lattice(labels, IntMatrix(g));
}

Lattice path(std::size_t n) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  return graph_lattice(n, edges);
}

// E_n as a path 0..n-2 with an extra vertex attached to vertex 2.
Lattice e_type(std::size_t n) {
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i + 2 < n; ++i) edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
  edges.emplace_back(2, static_cast<int>(n - 1));
  return graph_lattice(n, edges);
}

Lattice d4() { return graph_lattice(4, {{0, 1}, {0, 2}, {0, 3}}); }

IntMatrix coxeter(const Lattice& l) { return coxeter_matrix(l, RootBasis::natural(l.rank())); }

Lattice random_root_lattice(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> off(-2, 2);
  std::vector<std::vector<long long>> g(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    g[i][i] = -2;
    for (std::size_t j = 0; j < i; ++j) g[i][j] = g[j][i] = off(rng);
  }
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = "x" + std::to_string(i);
  return Lattice(labels, IntMatrix(g));
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long long> v(-4, 4);
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n));
  for (auto& row : m)
    for (auto& x : row) x = v(rng);
  return IntMatrix(m);
}

Integer form_pairing(const IntMatrix& a, const IntVector& x, const IntVector& y) {
  Integer s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * a(i, j) * y[j];
  return s;
}

}  // namespace

TEST_CASE("Lattice validation") {
  CHECK_THROWS_AS(Lattice({"a", "b"}, mat({{-2, 1}, {0, -2}})), Error);
  try {
    Lattice({"a", "b"}, mat({{-2, 1}, {0, -2}}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSymmetric);
  }
  try {
    Lattice({"a"}, mat({{-2, 1}, {1, -2}}));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DimensionMismatch);
  }
  CHECK(path(3).index_of("e2") == 1);
  CHECK_FALSE(path(3).index_of("zz"));
}

TEST_CASE("reflection_matrix examples") {
  CHECK(reflection_matrix(path(1), 0) == mat({{-1}}));
  CHECK(reflection_matrix(path(2), 0) == mat({{-1, 1}, {0, 1}}));
  const Lattice split = graph_lattice(2, {});
  const IntVector x{0, 5};
  CHECK(reflection_matrix(split, 0) * x == x);
}

TEST_CASE("reflection_matrix rejects non-roots") {
  const Lattice l({"a", "b"}, mat({{-4, 1}, {1, -2}}));
  try {
    reflection_matrix(l, 0);
    FAIL("expected NotARoot");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotARoot);
  }
  CHECK_NOTHROW(reflection_matrix(l, 1));
}

TEST_CASE("reflections are involutions preserving the form") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Lattice l = random_root_lattice(rng, 1 + trial % 6);
    for (std::size_t i = 0; i < l.rank(); ++i) {
      const IntMatrix s = reflection_matrix(l, i);
      CHECK(s * s == IntMatrix::identity(l.rank()));
      CHECK(s.transpose() * l.gram() * s == l.gram());
    }
  }
}

TEST_CASE("coxeter_matrix examples") {
  CHECK(coxeter(path(1)) == mat({{-1}}));
  CHECK(coxeter(path(2)) == mat({{0, -1}, {1, -1}}));
  const Lattice v0({"E", "E-u"}, mat({{-2, -2}, {-2, -2}}));
  CHECK(coxeter(v0) == mat({{3, 2}, {-2, -1}}));
  CHECK(char_poly(coxeter(v0)) == IntPoly{1, -2, 1});
}

TEST_CASE("coxeter_matrix is the ordered product of reflections") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Lattice l = random_root_lattice(rng, 2 + trial % 5);
    std::vector<std::size_t> order(l.rank());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    IntMatrix expected = IntMatrix::identity(l.rank());
    for (std::size_t k : order) expected = expected * reflection_matrix(l, k);
    const RootBasis basis(l, order);
    const IntMatrix tau = coxeter_matrix(l, basis);
    CHECK(tau == expected);
    CHECK(tau * coxeter_inverse_matrix(l, basis) == IntMatrix::identity(l.rank()));
  }
}

TEST_CASE("RootBasis validation") {
  const Lattice l = path(3);
  CHECK_THROWS_AS(RootBasis(l, {0, 0, 1}), Error);
  CHECK_THROWS_AS(RootBasis(l, {0, 1}), Error);
  CHECK(RootBasis(l, {2, 0, 1}).to_ordered({5, 6, 7}) == IntVector{7, 5, 6});
  CHECK(RootBasis::natural(3).is_natural());
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(IntMatrix::identity(2)) == IntPoly{1, -2, 1});
  CHECK(char_poly(coxeter(path(2))) == IntPoly{1, 1, 1});
  CHECK(char_poly(coxeter(e_type(8))) == IntPoly{1, 1, 0, -1, -1, -1, 0, 1, 1});
  CHECK(char_poly(IntMatrix()) == IntPoly{1});
}

TEST_CASE("char_poly agrees with det(xI - M) at integer points") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const IntMatrix m = random_matrix(rng, n);
    const IntPoly p = char_poly(m);
    CHECK(p.degree() == static_cast<long>(n));
    CHECK(p.coeff(n) == 1);
    for (long long x : {-2, 0, 1, 3}) {
      IntMatrix shifted = -m;
      for (std::size_t i = 0; i < n; ++i) shifted(i, i) += x;
      CHECK(p(Integer(x)) == determinant(shifted));
    }
  }
}

TEST_CASE("E8 Coxeter element has order exactly 30") {
  const IntMatrix tau = coxeter(e_type(8));
  IntMatrix power = IntMatrix::identity(8);
  std::size_t first_identity = 0;
  for (std::size_t k = 1; k <= 30; ++k) {
    power = power * tau;
    if (power == IntMatrix::identity(8)) {
      first_identity = k;
      break;
    }
  }
  CHECK(first_identity == 30);
  CHECK(matrix_power(tau, 30) == IntMatrix::identity(8));
  IntPoly t30_minus_1 = IntPoly::monomial(1, 30) - IntPoly{1};
  CHECK(poly_divide_exact(t30_minus_1, char_poly(tau)));
}

TEST_CASE("matrix_order on Coxeter elements of finite type") {
  CHECK(matrix_order(mat({{-1}})) == 2);
  CHECK(matrix_order(coxeter(path(2))) == 3);
  CHECK(matrix_order(coxeter(path(3))) == 4);
  CHECK(matrix_order(coxeter(d4())) == 6);
  CHECK(matrix_order(coxeter(e_type(6))) == 12);
  CHECK(matrix_order(coxeter(e_type(7))) == 18);
  CHECK(matrix_order(coxeter(e_type(8))) == 30);
  CHECK(matrix_order(IntMatrix::identity(3)) == 1);
  // Unipotent: infinite order.
  CHECK_FALSE(matrix_order(mat({{1, 1}, {0, 1}})));
  // Order 30 exceeds a cap of 20.
  CHECK_FALSE(matrix_order(coxeter(e_type(8)), 20));
}

TEST_CASE("matrix_order agrees with iteration on finite-order matrices") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const Lattice l = random_root_lattice(rng, 1 + trial % 5);
    const IntMatrix tau = coxeter(l);
    std::optional<std::size_t> iterated;
    IntMatrix power = IntMatrix::identity(l.rank());
    for (std::size_t k = 1; k <= 200; ++k) {
      power = power * tau;
      if (power == IntMatrix::identity(l.rank())) {
        iterated = k;
        break;
      }
    }
    CHECK(matrix_order(tau, 200) == iterated);
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic(30) == IntPoly{1, 1, 0, -1, -1, -1, 0, 1, 1});
  // t^n - 1 is the product of Phi_d over d | n.
  for (std::size_t n : {12u, 30u, 36u}) {
    IntPoly product{1};
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) product = product * cyclotomic(d);
    CHECK(product == IntPoly::monomial(1, n) - IntPoly{1});
  }
}

TEST_CASE("asym_form_matrix and coxeter_via_form") {
  const IntMatrix a2 = asym_form_matrix(path(2), RootBasis::natural(2));
  CHECK(a2 == mat({{1, -1}, {0, 1}}));
  CHECK(coxeter_via_form(a2) == mat({{0, -1}, {1, -1}}));
  CHECK(asym_form_matrix(path(1), RootBasis::natural(1)) == mat({{1}}));
  CHECK(asym_form_matrix(graph_lattice(3, {}), RootBasis::natural(3)) == IntMatrix::identity(3));
  CHECK(coxeter_via_form(IntMatrix::identity(3)) == -IntMatrix::identity(3));
  CHECK(coxeter_via_form(mat({{1}})) == mat({{-1}}));
}

TEST_CASE("unitriangular_inverse") {
  try {
    unitriangular_inverse(mat({{1, 0}, {1, 1}}));
    FAIL("expected NotUnitriangular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotUnitriangular);
  }
  CHECK_THROWS_AS(unitriangular_inverse(mat({{2, 0}, {0, 1}})), Error);
}

TEST_CASE("form identities on random root lattices and orderings") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Lattice l = random_root_lattice(rng, 1 + trial % 7);
    const std::size_t n = l.rank();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const RootBasis basis(l, order);
    const IntMatrix a = asym_form_matrix(l, basis);
    CHECK(a * unitriangular_inverse(a) == IntMatrix::identity(n));
    // Symmetrization recovers the negated Gram in ordered coordinates.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) CHECK(a(i, j) + a(j, i) == -l.pairing(order[i], order[j]));

    const IntMatrix tau = coxeter_matrix(l, basis);
    CHECK(tau == basis.from_ordered(coxeter_via_form(a)));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const IntVector x = basis_vector(n, i), y = basis_vector(n, j);
        const Integer lhs = form_pairing(a, basis.to_ordered(y), basis.to_ordered(x));
        const Integer rhs = -form_pairing(a, basis.to_ordered(x), basis.to_ordered(tau * y));
        CHECK(lhs == rhs);
      }
    }
    const IntPoly p = char_poly(tau);
    CHECK(p.coeff(0) * p.coeff(0) == 1);
    CHECK(determinant(tau) == (n % 2 == 0 ? 1 : -1));
    const Integer sign = p.coeff(0);
    for (std::size_t k = 0; k <= n; ++k) CHECK(p.coeff(k) == sign * p.coeff(n - k));
  }
}

TEST_CASE("integer_kernel and radical_basis") {
  CHECK(radical_basis(path(2)).empty());
  const Lattice zero({"a", "b"}, mat({{0, 0}, {0, 0}}));
  CHECK(radical_basis(zero).size() == 2);
  const Lattice v0({"E", "E-u"}, mat({{-2, -2}, {-2, -2}}));
  const auto rad = radical_basis(v0);
  REQUIRE(rad.size() == 1);
  CHECK((rad[0] == IntVector{1, -1} || rad[0] == IntVector{-1, 1}));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    // Rank-deficient by construction: last column repeats a combination of the first two.
    IntMatrix m = random_matrix(rng, 4);
    for (std::size_t i = 0; i < 4; ++i) m(i, 3) = 2 * m(i, 0) - m(i, 1);
    const auto kernel = integer_kernel(m);
    CHECK(kernel.size() >= 1);
    for (const auto& v : kernel) {
      CHECK(std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; }));
      for (const auto& x : m * v) CHECK(x == 0);
    }
  }
}

TEST_CASE("quotient_by_radical") {
  const Lattice v0({"E", "E-u"}, mat({{-2, -2}, {-2, -2}}));
  const RadicalQuotient q = quotient_by_radical(v0);
  CHECK(q.lattice.gram() == mat({{-2}}));
  CHECK(q.projection * q.section == IntMatrix::identity(1));

  const RadicalQuotient nd = quotient_by_radical(path(3));
  CHECK(nd.projection == IntMatrix::identity(3));
  CHECK(nd.lattice.gram() == path(3).gram());
}

TEST_CASE("determinant") {
  CHECK(determinant(mat({{2, 1}, {1, 2}})) == 3);
  CHECK(determinant(path(8).gram()) == 9);
  CHECK(determinant(e_type(8).gram()) == 1);
  CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
}
