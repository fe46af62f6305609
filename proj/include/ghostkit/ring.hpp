#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace ghostkit {

enum class MonomialOrder : std::uint8_t { GRevLex, Lex };

const char* to_string(MonomialOrder order);
MonomialOrder parse_order(const std::string& tag);

inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::size_t kMaxVars = 8;

/// Coefficient field and polynomial ring shape: k[x0..x{n-1}] with k = F_p
/// (characteristic p) or Q (characteristic 0).
struct RingSpec {
  std::uint32_t characteristic = kDefaultPrime;
  std::uint32_t num_vars = 0;
  MonomialOrder order = MonomialOrder::GRevLex;

  bool operator==(const RingSpec&) const = default;

  bool is_prime_field() const { return characteristic != 0; }

  /// Throws InvalidInput unless the characteristic is 0 or a prime below 2^31
  /// and num_vars fits in a Monomial.
  void validate() const;

  /// `Fp[n],p=<prime>` or `Q[n]`; the order is not part of this string.
  std::string describe() const;
  static RingSpec parse(const std::string& text, MonomialOrder order = MonomialOrder::GRevLex);
};

bool is_prime(std::uint64_t n);

/// Field element. Residues in [0, p) for F_p, reduced GMP rationals for Q.
/// The active alternative is fixed by the ring the value belongs to.
class Scalar {
 public:
  Scalar() : value_(std::int64_t{0}) {}
  explicit Scalar(std::int64_t residue) : value_(residue) {}
  explicit Scalar(mpq_class q) : value_(std::move(q)) {}

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  bool operator==(const Scalar& other) const;

 private:
  std::variant<std::int64_t, mpq_class> value_;
};

/// Arithmetic in the coefficient field of a RingSpec.
class Field {
 public:
  explicit Field(std::uint32_t characteristic) : p_(characteristic) {}
  explicit Field(const RingSpec& ring) : p_(ring.characteristic) {}

  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_mpz(const mpz_class& v) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws InvalidInput on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// Symmetric residue for F_p (in (-p/2, p/2]), `a/b` or `a` for Q.
  std::string to_string(const Scalar& a) const;
  /// True when the printed form starts with '-'.
  bool is_negative_repr(const Scalar& a) const;

 private:
  std::uint32_t p_;
};

/// Exponent vector with its cached total degree. Unused trailing slots are 0,
/// so comparisons never need the ring's variable count.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;
  static Monomial variable(std::size_t index, Exponent power = 1);

  Exponent operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, Exponent value);
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  /// Throws InvalidInput on exponent overflow.
  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// Precondition: divides(other). Returns other / *this.
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
};

/// Total-order comparison of exponent vectors, variables x0 > x1 > ...
std::strong_ordering mono_compare(const Monomial& a, const Monomial& b, MonomialOrder order);

/// Same order on raw exponent vectors. Throws InvalidInput on length mismatch.
std::strong_ordering mono_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                  MonomialOrder order);

}  // namespace ghostkit
