#include "coxlat/exact_arith.hpp"

#include <algorithm>
#include <sstream>

#include "coxlat/error.hpp"

namespace coxlat {

IntPoly::IntPoly(IntVector coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::monomial(Integer c, std::size_t degree) {
  IntVector v(degree + 1);
  v[degree] = std::move(c);
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Integer(0);
}

Integer IntPoly::operator()(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] -= other.coeffs_[k];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  IntVector out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) { return p * q; }

std::optional<IntPoly> poly_divide_exact(const IntPoly& p, const IntPoly& d) {
  if (d.is_zero()) throw Error(ErrorCode::InvalidInput, "division by the zero polynomial");
  if (p.is_zero()) return IntPoly{};
  if (p.degree() < d.degree()) return std::nullopt;
  IntVector rem = p.coeffs();
  const IntVector& dc = d.coeffs();
  const std::size_t dd = dc.size() - 1;
  IntVector quot(rem.size() - dd);
  for (std::size_t k = quot.size(); k-- > 0;) {
    Integer q, r;
    boost::multiprecision::divide_qr(rem[k + dd], dc[dd], q, r);
    if (r != 0) return std::nullopt;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * dc[j];
    quot[k] = std::move(q);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const Integer& c) { return c != 0; })) {
    return std::nullopt;
  }
  return IntPoly(std::move(quot));
}

std::string IntPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0) continue;
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << var;
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(IntVector coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidInput, "a power series needs order >= 0");
}

PowerSeries PowerSeries::from_poly(const IntPoly& p, std::size_t order) {
  PowerSeries s(order);
  for (std::size_t k = 0; k <= order && k < p.coeffs().size(); ++k) s.coeffs_[k] = p.coeffs()[k];
  return s;
}

PowerSeries PowerSeries::times(const IntPoly& p) const {
  PowerSeries out(order());
  const IntVector& pc = p.coeffs();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < pc.size() && i + j < coeffs_.size(); ++j) {
      out.coeffs_[i + j] += coeffs_[i] * pc[j];
    }
  }
  return out;
}

std::string PowerSeries::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << coeffs_[k];
  }
  os << ']';
  return os.str();
}

PowerSeries series_from_rational(const IntPoly& num, const IntPoly& den, std::size_t order) {
  const Integer lead = den.coeff(0);
  if (lead == 0) throw Error(ErrorCode::ZeroConstantTerm, "denominator vanishes at t = 0");
  const IntVector& dc = den.coeffs();
  PowerSeries out(order);
  // den * out = num, solved one coefficient at a time.
  for (std::size_t k = 0; k <= order; ++k) {
    Integer acc = num.coeff(k);
    const std::size_t top = std::min(k, dc.size() - 1);
    for (std::size_t j = 1; j <= top; ++j) acc -= dc[j] * out[k - j];
    Integer q, r;
    boost::multiprecision::divide_qr(acc, lead, q, r);
    if (r != 0) {
      std::ostringstream msg;
      msg << "coefficient of t^" << k << " is " << acc << "/" << lead;
      throw Error(ErrorCode::NonIntegralCoefficient, msg.str());
    }
    out[k] = std::move(q);
  }
  return out;
}

SeriesComparison series_equal(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorCode::OrderMismatch, "orders " + std::to_string(a.order()) + " and " +
                                              std::to_string(b.order()));
  }
  for (std::size_t k = 0; k <= a.order(); ++k) {
    if (a[k] != b[k]) return {false, k};
  }
  return {};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace coxlat
