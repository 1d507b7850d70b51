#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace coxlat {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using IntVector = std::vector<Integer>;

// Dense univariate polynomial over Z. coeffs()[k] is the coefficient of t^k;
// the zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(IntVector coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly monomial(Integer c, std::size_t degree);

  const IntVector& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t k) const;
  Integer operator()(const Integer& x) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  // Human form, highest degree first: "t^2 - 2*t + 1".
  std::string to_string(char var = 't') const;

 private:
  void normalize();
  IntVector coeffs_;
};

IntPoly poly_mul(const IntPoly& p, const IntPoly& q);

// Exact division p = q * d; nullopt when d does not divide p over Z.
std::optional<IntPoly> poly_divide_exact(const IntPoly& p, const IntPoly& d);

// Truncated power series sum_{k<=order} c_k t^k. The coefficient vector
// always has exactly order+1 entries.
class PowerSeries {
 public:
  explicit PowerSeries(std::size_t order);
  explicit PowerSeries(IntVector coeffs);

  static PowerSeries from_poly(const IntPoly& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const IntVector& coeffs() const noexcept { return coeffs_; }
  const Integer& operator[](std::size_t k) const { return coeffs_.at(k); }
  Integer& operator[](std::size_t k) { return coeffs_.at(k); }

  // Product truncated at this series' order.
  PowerSeries times(const IntPoly& p) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  std::string to_string() const;

 private:
  IntVector coeffs_;
};

PowerSeries series_from_rational(const IntPoly& num, const IntPoly& den, std::size_t order);

struct SeriesComparison {
  bool equal = true;
  std::optional<std::size_t> first_mismatch;
};

SeriesComparison series_equal(const PowerSeries& a, const PowerSeries& b);

// Floor division for signed integers, rounding toward -infinity.
std::int64_t floor_div(std::int64_t a, std::int64_t b);

}  // namespace coxlat
