#include "ghostkit/ring.hpp"

#include <algorithm>
#include <utility>
#include <limits>
#include <regex>

#include "ghostkit/error.hpp"

namespace ghostkit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InternalError: return "InternalError";
    case ErrorKind::UnsupportedGenerator: return "UnsupportedGenerator";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
  }
  return "Error";
}

const char* to_string(MonomialOrder order) {
  return order == MonomialOrder::GRevLex ? "grevlex" : "lex";
}

MonomialOrder parse_order(const std::string& tag) {
  if (tag == "grevlex") return MonomialOrder::GRevLex;
  if (tag == "lex") return MonomialOrder::Lex;
  invalid_input("unknown monomial order '" + tag + "'");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void RingSpec::validate() const {
  if (characteristic != 0 && (!is_prime(characteristic) || characteristic >= (1u << 31)))
    invalid_input("characteristic must be 0 or a prime below 2^31, got " + std::to_string(characteristic));
  if (num_vars > kMaxVars)
    invalid_input("at most " + std::to_string(kMaxVars) + " variables supported, got " +
                  std::to_string(num_vars));
}

std::string RingSpec::describe() const {
  if (characteristic == 0) return "Q[" + std::to_string(num_vars) + "]";
  return "Fp[" + std::to_string(num_vars) + "],p=" + std::to_string(characteristic);
}

RingSpec RingSpec::parse(const std::string& text, MonomialOrder order) {
  static const std::regex fp(R"(\s*Fp\[(\d+)\]\s*(?:,\s*p\s*=\s*(\d+))?\s*)");
  static const std::regex q(R"(\s*Q\[(\d+)\]\s*)");
  std::smatch m;
  RingSpec ring;
  ring.order = order;
  if (std::regex_match(text, m, fp)) {
    ring.num_vars = static_cast<std::uint32_t>(std::stoul(m[1]));
    ring.characteristic = m[2].matched ? static_cast<std::uint32_t>(std::stoul(m[2])) : kDefaultPrime;
  } else if (std::regex_match(text, m, q)) {
    ring.num_vars = static_cast<std::uint32_t>(std::stoul(m[1]));
    ring.characteristic = 0;
  } else {
    invalid_input("ring must look like 'Fp[n],p=<prime>' or 'Q[n]', got '" + text + "'");
  }
  ring.validate();
  return ring;
}

bool Scalar::operator==(const Scalar& other) const { return value_ == other.value_; }

Scalar Field::zero() const { return p_ ? Scalar(std::int64_t{0}) : Scalar(mpq_class(0)); }
Scalar Field::one() const { return p_ ? Scalar(std::int64_t{1}) : Scalar(mpq_class(1)); }

Scalar Field::from_int(std::int64_t v) const {
  if (p_) {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Scalar(r);
  }
  return Scalar(mpq_class(mpz_class(std::to_string(v))));
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (p_) {
    mpz_class r = v % p_;
    if (r < 0) r += p_;
    return Scalar(static_cast<std::int64_t>(r.get_si()));
  }
  return Scalar(mpq_class(v));
}

bool Field::is_zero(const Scalar& a) const {
  return p_ ? a.residue() == 0 : sgn(a.rational()) == 0;
}

bool Field::is_one(const Scalar& a) const {
  return p_ ? a.residue() == 1 : a.rational() == 1;
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_) {
    std::int64_t r = a.residue() + b.residue();
    if (r >= p_) r -= p_;
    return Scalar(r);
  }
  return Scalar(mpq_class(a.rational() + b.rational()));
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_) {
    std::int64_t r = a.residue() - b.residue();
    if (r < 0) r += p_;
    return Scalar(r);
  }
  return Scalar(mpq_class(a.rational() - b.rational()));
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_) return Scalar((a.residue() * b.residue()) % p_);
  return Scalar(mpq_class(a.rational() * b.rational()));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_) return Scalar(a.residue() == 0 ? 0 : p_ - a.residue());
  return Scalar(mpq_class(-a.rational()));
}

Scalar Field::inv(const Scalar& a) const {
  if (is_zero(a)) invalid_input("division by zero in coefficient field");
  if (p_) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a.residue();
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      t = std::exchange(new_t, t - q * new_t);
      r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += p_;
    return Scalar(t);
  }
  return Scalar(mpq_class(1 / a.rational()));
}

std::string Field::to_string(const Scalar& a) const {
  if (p_) {
    std::int64_t r = a.residue();
    if (r > static_cast<std::int64_t>(p_) / 2) r -= p_;
    return std::to_string(r);
  }
  return a.rational().get_str();
}

bool Field::is_negative_repr(const Scalar& a) const {
  if (p_) return a.residue() > static_cast<std::int64_t>(p_) / 2;
  return sgn(a.rational()) < 0;
}

Monomial Monomial::variable(std::size_t index, Exponent power) {
  if (index >= kMaxVars) invalid_input("variable index out of range");
  Monomial m;
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, Exponent value) {
  degree_ = degree_ - exps_[i] + value;
  exps_[i] = value;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint32_t e = std::uint32_t{exps_[i]} + other.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) invalid_input("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = other.exps_[i] - exps_[i];
  r.degree_ = other.degree_ - degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) h = (h ^ e) * 1099511628211ull;
  return h;
}

std::strong_ordering mono_compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  if (order == MonomialOrder::GRevLex) {
    if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    for (std::size_t i = kMaxVars; i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering mono_compare(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                                  MonomialOrder order) {
  if (a.size() != b.size()) invalid_input("exponent vectors of different lengths");
  if (order == MonomialOrder::GRevLex) {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (auto c = da <=> db; c != 0) return c;
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace ghostkit
