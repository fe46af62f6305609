#pragma once

#include <string>
#include <vector>

#include "ghostkit/ring.hpp"

namespace ghostkit {

struct Term {
  Scalar coeff;
  Monomial mono;

  bool operator==(const Term&) const = default;
};

/// Polynomial in normal form: nonzero coefficients, distinct monomials,
/// sorted strictly descending in the ring's monomial order. Zero is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const RingSpec& ring) : ring_(ring) {}

  static Poly constant(const RingSpec& ring, const Scalar& c);
  static Poly from_int(const RingSpec& ring, std::int64_t c);
  static Poly variable(const RingSpec& ring, std::size_t index, unsigned power = 1);
  static Poly monomial(const RingSpec& ring, const Scalar& c, const Monomial& m);
  /// Sorts, merges equal monomials and drops zero coefficients.
  static Poly from_terms(const RingSpec& ring, std::vector<Term> terms);

  const RingSpec& ring() const { return ring_; }
  Field field() const { return Field(ring_); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Nonzero constant, hence a unit of the polynomial ring.
  bool is_unit() const { return terms_.size() == 1 && terms_[0].mono.is_one(); }
  bool is_one() const;
  const Term& lead() const { return terms_.front(); }
  /// Highest total degree, -1 for zero.
  int degree() const;
  bool is_homogeneous() const;

  Poly operator-() const;
  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly& operator+=(const Poly& other) { return *this = *this + other; }
  Poly& operator-=(const Poly& other) { return *this = *this - other; }

  Poly scaled(const Scalar& c) const;
  Poly times_term(const Scalar& c, const Monomial& m) const;
  Poly pow(unsigned e) const;
  /// Makes the leading coefficient 1; zero stays zero.
  Poly monic() const;

  bool operator==(const Poly& other) const { return ring_ == other.ring_ && terms_ == other.terms_; }

  /// Text in the CLI syntax, e.g. `x0^2*x1 + 3*x1 - 1`.
  std::string to_string() const;

 private:
  void require_same_ring(const Poly& other) const;

  RingSpec ring_;
  std::vector<Term> terms_;
};

Poly poly_mul(const Poly& p, const Poly& q);

/// Parses `+ - * ^`, parentheses, integer literals and `a/b` rational
/// constants over variables x0..x{n-1}. Throws InvalidInput with the offset.
Poly parse_poly(const std::string& text, const RingSpec& ring);
std::vector<Poly> parse_poly_list(const std::string& comma_separated, const RingSpec& ring);

/// Ring element with its internal degree |x|; every algorithm here runs with
/// degree 0 (the polynomial ring concentrated in degree 0).
struct AlgebraElement {
  Poly value;
  int degree = 0;

  AlgebraElement() = default;
  AlgebraElement(Poly p, int d = 0) : value(std::move(p)), degree(d) {}
  bool operator==(const AlgebraElement&) const = default;
};

std::vector<AlgebraElement> as_elements(const std::vector<Poly>& polys);

}  // namespace ghostkit
