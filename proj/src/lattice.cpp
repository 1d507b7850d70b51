#include "coxlat/lattice.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "coxlat/error.hpp"

namespace coxlat {

namespace {

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " needs a square matrix");
}

struct ExtendedGcd {
  Integer g, s, t;  // s*a + t*b = g >= 0
};

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

// Column reduction of m to echelon form by unimodular column operations.
// Returns the transform V (m * V is echelon), its inverse, and the number of
// pivot columns; columns [pivots, n) of m * V are zero.
struct ColumnEchelon {
  IntMatrix transform;
  IntMatrix inverse;
  std::size_t pivots = 0;
};

ColumnEchelon column_echelon(IntMatrix w) {
  const std::size_t n = w.cols();
  ColumnEchelon out{IntMatrix::identity(n), IntMatrix::identity(n), 0};
  IntMatrix& v = out.transform;
  IntMatrix& vinv = out.inverse;
  std::size_t pc = 0;
  for (std::size_t i = 0; i < w.rows() && pc < n; ++i) {
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (w(i, j) == 0) continue;
      const Integer a = w(i, pc);
      const Integer b = w(i, j);
      const ExtendedGcd eg = extended_gcd(a, b);
      const Integer ag = a / eg.g;
      const Integer bg = b / eg.g;
      // new_pc = s*col_pc + t*col_j ; new_j = -bg*col_pc + ag*col_j
      auto mix_cols = [&](IntMatrix& m) {
        for (std::size_t r = 0; r < m.rows(); ++r) {
          Integer x = m(r, pc);
          Integer y = m(r, j);
          m(r, pc) = eg.s * x + eg.t * y;
          m(r, j) = ag * y - bg * x;
        }
      };
      mix_cols(w);
      mix_cols(v);
      // Inverse transform acts on rows pc and j.
      for (std::size_t c = 0; c < n; ++c) {
        Integer x = vinv(pc, c);
        Integer y = vinv(j, c);
        vinv(pc, c) = ag * x + bg * y;
        vinv(j, c) = eg.s * y - eg.t * x;
      }
    }
    if (w(i, pc) != 0) ++pc;
  }
  out.pivots = pc;
  return out;
}

// Row Hermite normal form of the rows, with positive pivots and reduced
// entries above them. Zero rows are dropped.
std::vector<IntVector> row_hermite(std::vector<IntVector> rows, std::size_t n) {
  std::size_t top = 0;
  for (std::size_t c = 0; c < n && top < rows.size(); ++c) {
    for (std::size_t r = top + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const ExtendedGcd eg = extended_gcd(rows[top][c], rows[r][c]);
      const Integer ag = rows[top][c] / eg.g;
      const Integer bg = rows[r][c] / eg.g;
      for (std::size_t k = 0; k < n; ++k) {
        Integer x = rows[top][k];
        Integer y = rows[r][k];
        rows[top][k] = eg.s * x + eg.t * y;
        rows[r][k] = ag * y - bg * x;
      }
    }
    if (rows[top][c] == 0) continue;
    if (rows[top][c] < 0) {
      for (auto& x : rows[top]) x = -x;
    }
    for (std::size_t r = 0; r < top; ++r) {
      Integer q = rows[r][c] / rows[top][c];
      if (rows[r][c] - q * rows[top][c] < 0) --q;
      if (q == 0) continue;
      for (std::size_t k = 0; k < n; ++k) rows[r][k] -= q * rows[top][k];
    }
    ++top;
  }
  rows.resize(top);
  return rows;
}

std::size_t euler_phi(std::size_t d) {
  std::size_t result = d;
  for (std::size_t p = 2; p * p <= d; ++p) {
    if (d % p) continue;
    while (d % p == 0) d /= p;
    result -= result / p;
  }
  if (d > 1) result -= result / d;
  return result;
}

}  // namespace

IntMatrix::IntMatrix(const std::vector<std::vector<long long>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (long long x : r) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const {
  return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::col(std::size_t j) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Integer& y = b(k, j);
        if (y != 0) c(i, j) += x * y;
      }
    }
  }
  return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
  if (a.cols_ != x.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector shapes");
  IntVector y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    Integer acc = 0;
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (x[k] != 0 && a(i, k) != 0) acc += a(i, k) * x[k];
    }
    y[i] = std::move(acc);
  }
  return y;
}

IntMatrix IntMatrix::leading(std::size_t m) const {
  if (m > rows_ || m > cols_) throw Error(ErrorCode::DimensionMismatch, "leading block too large");
  IntMatrix out(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) out(i, j) = (*this)(i, j);
  return out;
}

std::optional<std::size_t> IntMatrix::first_difference(const IntMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) return 0;
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (data_[k] != other.data_[k]) return k;
  }
  return std::nullopt;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << (*this)(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntMatrix matrix_power(const IntMatrix& m, std::size_t exponent) {
  require_square(m, "matrix_power");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent) base = base * base;
  }
  return result;
}

Integer determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Lattice::Lattice(std::vector<std::string> labels, IntMatrix gram)
    : labels_(std::move(labels)), gram_(std::move(gram)) {
  require_square(gram_, "Lattice");
  if (gram_.rows() != labels_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "label count differs from Gram size");
  }
  if (gram_ != gram_.transpose()) throw Error(ErrorCode::NotSymmetric, "Gram matrix is not symmetric");
}

Integer Lattice::pairing(const IntVector& x, const IntVector& y) const {
  IntVector gy = gram_ * y;
  Integer acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) acc += x[i] * gy[i];
  }
  return acc;
}

Lattice Lattice::leading(std::size_t m) const {
  return Lattice(std::vector<std::string>(labels_.begin(), labels_.begin() + m), gram_.leading(m));
}

std::optional<std::size_t> Lattice::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

IntVector basis_vector(std::size_t n, std::size_t i) {
  IntVector v(n);
  v.at(i) = 1;
  return v;
}

RootBasis RootBasis::natural(std::size_t n) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  return RootBasis(std::move(order));
}

RootBasis::RootBasis(const Lattice& lattice, std::vector<std::size_t> order) : order_(std::move(order)) {
  if (order_.size() != lattice.rank()) {
    throw Error(ErrorCode::DimensionMismatch, "root basis must cover every basis element");
  }
  std::vector<bool> seen(order_.size(), false);
  for (std::size_t i : order_) {
    if (i >= seen.size() || seen[i]) throw Error(ErrorCode::InvalidInput, "root basis is not a permutation");
    seen[i] = true;
    if (lattice.pairing(i, i) != -2) {
      throw Error(ErrorCode::NotARoot, "basis element " + lattice.labels()[i] + " has square " +
                                           lattice.pairing(i, i).str());
    }
  }
}

bool RootBasis::is_natural() const {
  for (std::size_t k = 0; k < order_.size(); ++k) {
    if (order_[k] != k) return false;
  }
  return true;
}

IntVector RootBasis::to_ordered(const IntVector& x) const {
  IntVector y(order_.size());
  for (std::size_t k = 0; k < order_.size(); ++k) y[k] = x.at(order_[k]);
  return y;
}

IntMatrix RootBasis::from_ordered(const IntMatrix& m) const {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(order_[i], order_[j]) = m(i, j);
  return out;
}

IntMatrix reflection_matrix(const Lattice& lattice, std::size_t i) {
  if (i >= lattice.rank()) throw Error(ErrorCode::InvalidInput, "basis index out of range");
  if (lattice.pairing(i, i) != -2) {
    throw Error(ErrorCode::NotARoot, "basis element " + lattice.labels()[i] + " has square " +
                                         lattice.pairing(i, i).str());
  }
  const std::size_t n = lattice.rank();
  IntMatrix s = IntMatrix::identity(n);
  // Column j is s(e_j) = e_j + <e_j, e_i> e_i.
  for (std::size_t j = 0; j < n; ++j) s(i, j) += lattice.pairing(j, i);
  return s;
}

namespace {

// Left-multiplies m by the reflection in basis element i, touching only row i.
void apply_reflection(const Lattice& lattice, std::size_t i, IntMatrix& m) {
  const std::size_t n = lattice.rank();
  for (std::size_t j = 0; j < n; ++j) {
    Integer acc = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (m(k, j) != 0 && lattice.pairing(k, i) != 0) acc += lattice.pairing(k, i) * m(k, j);
    }
    m(i, j) += acc;
  }
}

}  // namespace

IntMatrix coxeter_matrix(const Lattice& lattice, const RootBasis& basis) {
  const std::size_t n = lattice.rank();
  if (basis.size() != n) throw Error(ErrorCode::DimensionMismatch, "basis size differs from rank");
  IntMatrix tau = IntMatrix::identity(n);
  // Build s_{b_1}(s_{b_2}(... s_{b_n})) from the inside out.
  for (std::size_t k = n; k-- > 0;) {
    const std::size_t i = basis[k];
    if (lattice.pairing(i, i) != -2) {
      throw Error(ErrorCode::NotARoot, "basis element " + lattice.labels()[i] + " is not a root");
    }
    apply_reflection(lattice, i, tau);
  }
  return tau;
}

IntMatrix coxeter_inverse_matrix(const Lattice& lattice, const RootBasis& basis) {
  const std::size_t n = lattice.rank();
  if (basis.size() != n) throw Error(ErrorCode::DimensionMismatch, "basis size differs from rank");
  IntMatrix inv = IntMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = basis[k];
    if (lattice.pairing(i, i) != -2) {
      throw Error(ErrorCode::NotARoot, "basis element " + lattice.labels()[i] + " is not a root");
    }
    apply_reflection(lattice, i, inv);
  }
  return inv;
}

IntPoly char_poly(const IntMatrix& m) {
  require_square(m, "char_poly");
  const std::size_t n = m.rows();
  if (n == 0) return IntPoly{1};
  // Coefficients highest degree first, for the leading r x r block.
  IntVector vect{Integer(1), Integer(-m(0, 0))};
  for (std::size_t r = 1; r < n; ++r) {
    // Block [[S, C], [R, a]] with S the leading r x r block.
    IntVector q(r + 2);
    q[0] = 1;
    q[1] = -m(r, r);
    IntVector v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Integer acc = 0;
      for (std::size_t i = 0; i < r; ++i) {
        if (v[i] != 0 && m(r, i) != 0) acc += m(r, i) * v[i];
      }
      q[k + 2] = -acc;
      if (k + 1 == r) break;
      IntVector next(r);
      for (std::size_t i = 0; i < r; ++i) {
        Integer s = 0;
        for (std::size_t j = 0; j < r; ++j) {
          if (v[j] != 0 && m(i, j) != 0) s += m(i, j) * v[j];
        }
        next[i] = std::move(s);
      }
      v = std::move(next);
    }
    IntVector next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j <= std::min(i, r); ++j) acc += q[i - j] * vect[j];
      next[i] = std::move(acc);
    }
    vect = std::move(next);
  }
  return IntPoly(IntVector(vect.rbegin(), vect.rend()));
}

IntMatrix asym_form_matrix(const Lattice& lattice, const RootBasis& basis) {
  const std::size_t n = basis.size();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = 1;
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = -lattice.pairing(basis[i], basis[j]);
  }
  return a;
}

IntMatrix unitriangular_inverse(const IntMatrix& upper) {
  require_square(upper, "unitriangular_inverse");
  const std::size_t n = upper.rows();
  for (std::size_t i = 0; i < n; ++i) {
    if (upper(i, i) != 1) throw Error(ErrorCode::NotUnitriangular, "diagonal entry is not 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (upper(i, j) != 0) throw Error(ErrorCode::NotUnitriangular, "nonzero entry below the diagonal");
    }
  }
  IntMatrix x(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    x(j, j) = 1;
    for (std::size_t i = j; i-- > 0;) {
      Integer acc = 0;
      for (std::size_t k = i + 1; k <= j; ++k) {
        if (upper(i, k) != 0 && x(k, j) != 0) acc += upper(i, k) * x(k, j);
      }
      x(i, j) = -acc;
    }
  }
  return x;
}

IntMatrix coxeter_via_form(const IntMatrix& form) {
  return -(unitriangular_inverse(form) * form.transpose());
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  ColumnEchelon ce = column_echelon(m);
  std::vector<IntVector> rows;
  for (std::size_t j = ce.pivots; j < n; ++j) rows.push_back(ce.transform.col(j));
  return row_hermite(std::move(rows), n);
}

std::vector<IntVector> radical_basis(const Lattice& lattice) { return integer_kernel(lattice.gram()); }

RadicalQuotient quotient_by_radical(const Lattice& lattice) {
  const std::size_t n = lattice.rank();
  std::vector<IntVector> kernel = radical_basis(lattice);
  const std::size_t m = kernel.size();
  IntMatrix projection;
  IntMatrix section;
  std::vector<std::string> labels;

  // Preferred route: eliminate radical generators on coordinates with a unit
  // entry, latest coordinate first, so the quotient keeps original basis
  // vectors and their labels.
  std::vector<IntVector> rows = kernel;
  std::vector<std::size_t> pivot_of(m, n);
  std::vector<bool> is_pivot(n, false);
  bool unit_pivots = true;
  for (std::size_t step = 0; step < m && unit_pivots; ++step) {
    bool found = false;
    for (std::size_t c = n; c-- > 0 && !found;) {
      if (is_pivot[c]) continue;
      for (std::size_t r = 0; r < m; ++r) {
        if (pivot_of[r] != n || (rows[r][c] != 1 && rows[r][c] != -1)) continue;
        if (rows[r][c] == -1) {
          for (auto& x : rows[r]) x = -x;
        }
        for (std::size_t o = 0; o < m; ++o) {
          if (o == r || rows[o][c] == 0) continue;
          const Integer f = rows[o][c];
          for (std::size_t k = 0; k < n; ++k) rows[o][k] -= f * rows[r][k];
        }
        pivot_of[r] = c;
        is_pivot[c] = true;
        found = true;
        break;
      }
    }
    unit_pivots = found;
  }

  if (unit_pivots) {
    std::vector<std::size_t> kept;
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_pivot[c]) kept.push_back(c);
    }
    // x is congruent to x - sum_r x[pivot_r] * row_r, which vanishes on pivots.
    IntMatrix reduce = IntMatrix::identity(n);
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t k = 0; k < n; ++k) reduce(k, pivot_of[r]) -= rows[r][k];
    }
    projection = IntMatrix(kept.size(), n);
    section = IntMatrix(n, kept.size());
    for (std::size_t q = 0; q < kept.size(); ++q) {
      for (std::size_t c = 0; c < n; ++c) projection(q, c) = reduce(kept[q], c);
      section(kept[q], q) = 1;
      labels.push_back(lattice.labels()[kept[q]]);
    }
  } else {
    IntMatrix k(m, n);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < n; ++c) k(r, c) = kernel[r][c];
    ColumnEchelon ce = column_echelon(k);
    const std::size_t d = n - m;
    projection = IntMatrix(d, n);
    section = IntMatrix(n, d);
    for (std::size_t q = 0; q < d; ++q) {
      for (std::size_t c = 0; c < n; ++c) {
        projection(q, c) = ce.transform(c, m + q);
        section(c, q) = ce.inverse(m + q, c);
      }
      labels.push_back("q" + std::to_string(q + 1));
    }
  }
  IntMatrix gram = section.transpose() * lattice.gram() * section;
  return {Lattice(std::move(labels), std::move(gram)), std::move(projection), std::move(section)};
}

IntPoly cyclotomic(std::size_t d) {
  if (d == 0) throw Error(ErrorCode::InvalidInput, "cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<std::size_t, IntPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return it->second;
  }
  IntPoly p = IntPoly::monomial(1, d) - IntPoly{1};
  for (std::size_t e = 1; e < d; ++e) {
    if (d % e) continue;
    auto q = poly_divide_exact(p, cyclotomic(e));
    p = std::move(*q);
  }
  std::lock_guard lock(mutex);
  cache.emplace(d, p);
  return p;
}

std::optional<std::size_t> matrix_order(const IntMatrix& m, std::size_t cap) {
  require_square(m, "matrix_order");
  if (cap == 0) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // A finite-order integer matrix is diagonalizable with a characteristic
  // polynomial that is a product of cyclotomic factors; its order is then
  // the lcm of the factor indices.
  IntPoly rest = char_poly(m);
  std::size_t order = 1;
  for (std::size_t d = 1; d <= cap && rest.degree() > 0; ++d) {
    if (euler_phi(d) > static_cast<std::size_t>(rest.degree())) continue;
    const IntPoly phi = cyclotomic(d);
    bool divides = false;
    while (auto q = poly_divide_exact(rest, phi)) {
      rest = std::move(*q);
      divides = true;
    }
    if (divides) {
      order = std::lcm(order, d);
      if (order > cap) return std::nullopt;
    }
  }
  if (rest != IntPoly{1}) return std::nullopt;
  if (matrix_power(m, order) != IntMatrix::identity(n)) return std::nullopt;
  return order;
}

}  // namespace coxlat
