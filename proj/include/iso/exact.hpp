#pragma once

// Exact arithmetic substrate: arbitrary-precision rationals, dense univariate
// integer polynomials, sparse bivariate polynomials, rational functions, and
// resultants (subresultant PRS; bivariate via evaluation/interpolation).
// Everything here is immutable after construction and safe to share.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace iso {

using BigInt = mpz_class;
using BigRat = mpq_class;

struct ZeroPolynomial : std::runtime_error {
  ZeroPolynomial() : std::runtime_error("zero polynomial") {}
};

struct PoleError : std::runtime_error {
  explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

// Dense univariate polynomial over Z; coefficients lowest degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(BigInt v);
  static IntPoly monomial(int deg, BigInt coeff = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const BigInt& operator[](int i) const;  // zero beyond the degree
  const BigInt& lc() const;               // leading coefficient; requires nonzero
  const std::vector<BigInt>& coeffs() const { return c_; }

  bool operator==(const IntPoly&) const = default;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(const BigInt& s) const;

  IntPoly derivative() const;
  IntPoly pow(unsigned e) const;

  BigInt eval(const BigInt& x) const;
  BigRat eval(const BigRat& x) const;
  // sum_i c_i num^i den^(degree - i): the numerator of eval at num/den after
  // clearing den^degree. Exact, no rational intermediates.
  BigInt eval_scaled(const BigInt& num, const BigInt& den) const;

  std::string str(const char* var = "x") const;

 private:
  std::vector<BigInt> c_;
  void trim();
};

// Splits f = content * primitive with primitive integer coefficients, coprime,
// positive leading coefficient. Throws ZeroPolynomial on zero input.
std::pair<BigInt, IntPoly> content_and_primitive(const IntPoly& f);
std::pair<BigRat, IntPoly> content_and_primitive(const std::vector<BigRat>& coeffs);

// Quotient a/b when b divides a exactly in Z[x]; nullopt otherwise.
std::optional<IntPoly> try_divide_exact(const IntPoly& a, const IntPoly& b);

// Primitive gcd over Q, returned as a primitive integer polynomial with
// positive leading coefficient (primitive-PRS).
IntPoly poly_gcd(IntPoly a, IntPoly b);

// Resultant via the subresultant PRS; both inputs must be nonzero.
BigInt resultant(const IntPoly& f, const IntPoly& g);

// Sparse bivariate polynomial over Z: (deg_x, deg_y) -> coefficient, no zeros.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;

  void set(int dx, int dy, BigInt coeff);  // erases on zero
  const BigInt& coeff(int dx, int dy) const;
  const std::map<Key, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_x() const;
  int degree_y() const;
  bool is_symmetric() const;  // invariant under (x,y) swap

  // Specialize y := num/den and clear denominators:
  //   sum_{a,b} c_{a,b} x^a num^b den^(degree_y - b).
  IntPoly eval_y_cleared(const BigInt& num, const BigInt& den) const;
  // Collapse x := x0; the result is a univariate polynomial in y.
  IntPoly eval_x(const BigInt& x0) const;
  // Coefficient of x^k as a polynomial in y.
  IntPoly coeff_of_x(int k) const;

 private:
  std::map<Key, BigInt> terms_;
};

// Resultant eliminating x; the result is univariate in y. Computed by
// evaluating y at integers (skipping points where either leading x-coefficient
// vanishes) and interpolating; exact.
IntPoly resultant_x(const BiPoly& F, const BiPoly& G);
// Common case: G has no y-dependence.
IntPoly resultant_x(const BiPoly& F, const IntPoly& g);

// Quotient of coprime integer polynomials; poles raise PoleError on eval.
class RatFunc {
 public:
  RatFunc(IntPoly num, IntPoly den);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }

  BigRat eval(const BigRat& t) const;

 private:
  IntPoly num_, den_;
};

BigRat eval_ratfunc(const RatFunc& f, const BigRat& t);

// Parsing/printing helpers shared by data loaders and the CLI.
BigRat parse_rational(const std::string& s);  // "p/q" or "p"; throws std::invalid_argument
std::string rational_str(const BigRat& q);    // always "p/q"

}  // namespace iso
