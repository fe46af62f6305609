#include "ghostkit/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "ghostkit/error.hpp"

namespace ghostkit {

namespace {

bool greater(const Monomial& a, const Monomial& b, MonomialOrder order) {
  return mono_compare(a, b, order) > 0;
}

}  // namespace

Poly Poly::constant(const RingSpec& ring, const Scalar& c) {
  Poly p(ring);
  if (!p.field().is_zero(c)) p.terms_.push_back({c, Monomial{}});
  return p;
}

Poly Poly::from_int(const RingSpec& ring, std::int64_t c) {
  return constant(ring, Field(ring).from_int(c));
}

Poly Poly::variable(const RingSpec& ring, std::size_t index, unsigned power) {
  if (index >= ring.num_vars) invalid_input("variable x" + std::to_string(index) + " not in " + ring.describe());
  if (power > 0xffff) invalid_input("exponent overflow");
  Poly p(ring);
  p.terms_.push_back({Field(ring).one(), Monomial::variable(index, static_cast<Monomial::Exponent>(power))});
  return p;
}

Poly Poly::monomial(const RingSpec& ring, const Scalar& c, const Monomial& m) {
  Poly p(ring);
  if (!p.field().is_zero(c)) p.terms_.push_back({c, m});
  return p;
}

Poly Poly::from_terms(const RingSpec& ring, std::vector<Term> terms) {
  const Field f(ring);
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return greater(a.mono, b.mono, ring.order); });
  Poly p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff = f.add(p.terms_.back().coeff, t.coeff);
    } else {
      if (!p.terms_.empty() && f.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && f.is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

bool Poly::is_one() const { return is_unit() && field().is_one(terms_[0].coeff); }

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Poly::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

void Poly::require_same_ring(const Poly& other) const {
  if (!(ring_ == other.ring_))
    invalid_input("polynomials over different rings: " + ring_.describe() + " vs " + other.ring_.describe());
}

Poly Poly::operator-() const {
  Poly r(ring_);
  const Field f(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({f.neg(t.coeff), t.mono});
  return r;
}

Poly Poly::operator+(const Poly& other) const {
  require_same_ring(other);
  const Field f(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin(), b = other.terms_.begin();
  while (a != terms_.end() && b != other.terms_.end()) {
    auto c = mono_compare(a->mono, b->mono, ring_.order);
    if (c > 0) {
      r.terms_.push_back(*a++);
    } else if (c < 0) {
      r.terms_.push_back(*b++);
    } else {
      Scalar s = f.add(a->coeff, b->coeff);
      if (!f.is_zero(s)) r.terms_.push_back({std::move(s), a->mono});
      ++a;
      ++b;
    }
  }
  r.terms_.insert(r.terms_.end(), a, terms_.end());
  r.terms_.insert(r.terms_.end(), b, other.terms_.end());
  return r;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  require_same_ring(other);
  if (is_zero() || other.is_zero()) return Poly(ring_);
  const Field f(ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : other.terms_) prod.push_back({f.mul(a.coeff, b.coeff), a.mono * b.mono});
  return from_terms(ring_, std::move(prod));
}

Poly Poly::scaled(const Scalar& c) const {
  const Field f(ring_);
  if (f.is_zero(c)) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({f.mul(t.coeff, c), t.mono});
  return r;
}

Poly Poly::times_term(const Scalar& c, const Monomial& m) const {
  const Field f(ring_);
  if (f.is_zero(c)) return Poly(ring_);
  Poly r(ring_);
  r.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves the order
  for (const auto& t : terms_) r.terms_.push_back({f.mul(t.coeff, c), t.mono * m});
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = from_int(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(field().inv(lead().coeff));
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const Field f(ring_);
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    bool neg = f.is_negative_repr(t.coeff);
    Scalar mag = neg ? f.neg(t.coeff) : t.coeff;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    if (!f.is_one(mag) || t.mono.is_one()) factors.push_back(f.to_string(mag));
    for (std::size_t i = 0; i < ring_.num_vars; ++i) {
      if (t.mono[i] == 0) continue;
      std::string v = "x" + std::to_string(i);
      if (t.mono[i] > 1) v += "^" + std::to_string(t.mono[i]);
      factors.push_back(v);
    }
    for (std::size_t k = 0; k < factors.size(); ++k) out << (k ? "*" : "") << factors[k];
  }
  return out.str();
}

Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingSpec& ring) : s_(text), ring_(ring), field_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    invalid_input("cannot parse polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  mpz_class integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Poly expr() {
    skip();
    Poly acc(ring_);
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (eat('+')) acc += term();
      else if (eat('-')) acc -= term();
      else return acc;
    }
  }

  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        mpz_class d = integer();
        Scalar ds = field_.from_mpz(d);
        if (field_.is_zero(ds)) fail("division by zero");
        acc = acc.scaled(field_.inv(ds));
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      mpz_class e = integer();
      if (e > 0xffff) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(ring_, field_.from_mpz(integer()));
    if (c == 'x') {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected variable index after 'x'");
      unsigned long idx = std::stoul(s_.substr(start, pos_ - start));
      if (idx >= ring_.num_vars) fail("variable x" + std::to_string(idx) + " not in " + ring_.describe());
      return Poly::variable(ring_, idx);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  const std::string& s_;
  const RingSpec& ring_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, const RingSpec& ring) { return Parser(text, ring).parse(); }

std::vector<Poly> parse_poly_list(const std::string& comma_separated, const RingSpec& ring) {
  std::vector<Poly> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= comma_separated.size(); ++i) {
    char c = i < comma_separated.size() ? comma_separated[i] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(parse_poly(comma_separated.substr(start, i - start), ring));
      start = i + 1;
    }
  }
  return out;
}

std::vector<AlgebraElement> as_elements(const std::vector<Poly>& polys) {
  return {polys.begin(), polys.end()};
}

}  // namespace ghostkit
