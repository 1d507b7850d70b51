#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxlat/exact_arith.hpp"

namespace coxlat {

/// Dense integer matrix, row-major. Matrices act on column coordinate
/// vectors, so column j of a transformation holds the image of basis vector j.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  explicit IntMatrix(const std::vector<std::vector<long long>>& rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  IntVector col(std::size_t j) const;

  IntMatrix transpose() const;
  IntMatrix operator-() const;
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& x);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  // Leading principal submatrix of size m.
  IntMatrix leading(std::size_t m) const;

  // Index (row-major) of the first differing entry; nullopt when equal.
  std::optional<std::size_t> first_difference(const IntMatrix& other) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector data_;
};

IntMatrix matrix_power(const IntMatrix& m, std::size_t exponent);

/// Fraction-free (Bareiss) determinant.
Integer determinant(const IntMatrix& m);

/// Integer lattice: labelled basis with a symmetric integral Gram matrix of
/// pairings <e_i, e_j>.
class Lattice {
 public:
  Lattice() = default;
  Lattice(std::vector<std::string> labels, IntMatrix gram);

  std::size_t rank() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const IntMatrix& gram() const noexcept { return gram_; }

  const Integer& pairing(std::size_t i, std::size_t j) const { return gram_(i, j); }
  Integer pairing(const IntVector& x, const IntVector& y) const;

  // Sublattice spanned by the first m basis vectors.
  Lattice leading(std::size_t m) const;

  std::optional<std::size_t> index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  IntMatrix gram_;
};

IntVector basis_vector(std::size_t n, std::size_t i);

/// Ordered sequence of basis indices, each used exactly once.
class RootBasis {
 public:
  static RootBasis natural(std::size_t n);
  // Validates that order is a permutation and that every element is a root of L.
  RootBasis(const Lattice& lattice, std::vector<std::size_t> order);

  std::size_t size() const noexcept { return order_.size(); }
  std::size_t operator[](std::size_t k) const { return order_[k]; }
  const std::vector<std::size_t>& order() const noexcept { return order_; }
  bool is_natural() const;

  // Coordinates of a lattice-coordinate vector with respect to this ordering.
  IntVector to_ordered(const IntVector& x) const;
  // Rewrites a matrix given in ordered coordinates in lattice coordinates.
  IntMatrix from_ordered(const IntMatrix& m) const;

 private:
  explicit RootBasis(std::vector<std::size_t> order) : order_(std::move(order)) {}
  std::vector<std::size_t> order_;
};

/// s_{e_i}(x) = x + <x, e_i> e_i.
IntMatrix reflection_matrix(const Lattice& lattice, std::size_t i);

/// Coxeter element s_{b_1} ... s_{b_n}; the rightmost reflection acts first.
IntMatrix coxeter_matrix(const Lattice& lattice, const RootBasis& basis);

/// Inverse Coxeter element s_{b_n} ... s_{b_1}.
IntMatrix coxeter_inverse_matrix(const Lattice& lattice, const RootBasis& basis);

/// Monic det(t*I - M), by Berkowitz's division-free algorithm.
IntPoly char_poly(const IntMatrix& m);

/// Upper unitriangular matrix of the form (e_i, e_j) in basis order:
/// -<e_i, e_j> above the diagonal, 1 on it.
IntMatrix asym_form_matrix(const Lattice& lattice, const RootBasis& basis);

/// -A^{-1} A^t for upper unitriangular A.
IntMatrix coxeter_via_form(const IntMatrix& form);

IntMatrix unitriangular_inverse(const IntMatrix& upper);

/// Basis of the integer kernel {x : M x = 0} in row Hermite normal form;
/// every generator is primitive.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

std::vector<IntVector> radical_basis(const Lattice& lattice);

/// V / rad V with its induced form.
struct RadicalQuotient {
  Lattice lattice;
  // (rank - radical rank) x rank, kernel = radical.
  IntMatrix projection;
  // rank x (rank - radical rank), projection * section = I.
  IntMatrix section;

  IntVector project(const IntVector& x) const { return projection * x; }
  // Induced map of a form-preserving endomorphism that fixes the radical.
  IntMatrix induced(const IntMatrix& m) const { return projection * m * section; }
};

RadicalQuotient quotient_by_radical(const Lattice& lattice);

inline constexpr std::size_t kDefaultOrderCap = 1000;

/// Least k in [1, cap] with M^k = I, or nullopt when no such k exists.
std::optional<std::size_t> matrix_order(const IntMatrix& m, std::size_t cap = kDefaultOrderCap);

/// Cyclotomic polynomial Phi_d.
IntPoly cyclotomic(std::size_t d);

}  // namespace coxlat
