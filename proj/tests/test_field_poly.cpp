#include <gtest/gtest.h>

#include "ghostkit/error.hpp"
#include "ghostkit/sampling.hpp"
#include "support/fixtures.hpp"

using namespace fixtures;

TEST(RingSpec, ParsesPrimeAndRationalRings) {
  RingSpec r = RingSpec::parse("Fp[3],p=7");
  EXPECT_EQ(r.characteristic, 7u);
  EXPECT_EQ(r.num_vars, 3u);
  EXPECT_EQ(RingSpec::parse("Fp[2]").characteristic, kDefaultPrime);
  EXPECT_EQ(RingSpec::parse("Q[1]").characteristic, 0u);
  EXPECT_EQ(RingSpec::parse("Fp[2],p=32003").describe(), "Fp[2],p=32003");
}

TEST(RingSpec, RejectsBadInput) {
  EXPECT_THROW(RingSpec::parse("Fp[2],p=32004"), Error);
  EXPECT_THROW(RingSpec::parse("Z[2]"), Error);
  EXPECT_THROW(RingSpec::parse("Fp[9]"), Error);
  EXPECT_THROW(parse_order("deglex"), Error);
}

TEST(Field, InversesModP) {
  Field f(32003);
  for (std::int64_t v : {1, 2, 3, 31999, 32002, 12345}) {
    Scalar a = f.from_int(v);
    EXPECT_TRUE(f.is_one(f.mul(a, f.inv(a)))) << v;
  }
  EXPECT_THROW(f.inv(f.zero()), Error);
}

TEST(Field, RationalArithmeticIsExact) {
  Field q(0);
  Scalar third = q.div(q.one(), q.from_int(3));
  EXPECT_TRUE(q.is_one(q.add(q.add(third, third), third)));
  EXPECT_EQ(q.to_string(q.neg(third)), "-1/3");
}

TEST(PolyMul, DifferenceOfSquaresOverQ) {
  RingSpec r = qq(2);
  EXPECT_EQ(poly_mul(P(r, "x0+x1"), P(r, "x0-x1")), P(r, "x0^2-x1^2"));
}

TEST(PolyMul, OneIsIdentity) {
  RingSpec r = fp(2);
  Poly p = P(r, "3*x0^2*x1 - x1 + 5");
  EXPECT_EQ(poly_mul(Poly::from_int(r, 1), p), p);
}

TEST(PolyMul, FrobeniusInCharacteristicTwo) {
  RingSpec r = RingSpec::parse("Fp[2],p=2");
  EXPECT_EQ(poly_mul(P(r, "x0+x1"), P(r, "x0+x1")), P(r, "x0^2+x1^2"));
}

TEST(PolyMul, MismatchedRingsRejected) {
  EXPECT_THROW(poly_mul(P(fp(2), "x0"), P(qq(2), "x0")), Error);
  EXPECT_THROW(poly_mul(P(fp(2), "x0"), P(fp(3), "x0")), Error);
}

TEST(MonoCompare, GrevlexEqualDegree) {
  RingSpec r = fp(2);
  const Monomial a = P(r, "x0^2*x1").lead().mono;
  const Monomial b = P(r, "x0*x1^2").lead().mono;
  EXPECT_EQ(mono_compare(a, b, MonomialOrder::GRevLex), std::strong_ordering::greater);
  EXPECT_EQ(mono_compare(a, a, MonomialOrder::GRevLex), std::strong_ordering::equal);
}

TEST(MonoCompare, LexPrefersFirstVariable) {
  RingSpec r = fp(2, MonomialOrder::Lex);
  EXPECT_EQ(mono_compare(P(r, "x0").lead().mono, P(r, "x1^3").lead().mono, MonomialOrder::Lex),
            std::strong_ordering::greater);
  EXPECT_EQ(mono_compare(P(r, "x0").lead().mono, P(r, "x1^3").lead().mono, MonomialOrder::GRevLex),
            std::strong_ordering::less);
}

TEST(MonoCompare, GrevlexBreaksTiesOnLastVariable) {
  RingSpec r = fp(3);
  // x0*x2 < x1^2 in grevlex (smaller power of the last variable wins)
  EXPECT_EQ(mono_compare(P(r, "x0*x2").lead().mono, P(r, "x1^2").lead().mono, MonomialOrder::GRevLex),
            std::strong_ordering::less);
}

TEST(MonoCompare, LengthMismatchIsInvalidInput) {
  std::vector<std::uint32_t> a{1, 2}, b{1, 2, 3};
  try {
    (void)mono_compare(std::span<const std::uint32_t>(a), std::span<const std::uint32_t>(b), MonomialOrder::Lex);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidInput);
  }
}

TEST(Monomial, ExponentOverflowIsChecked) {
  Monomial big = Monomial::variable(0, 60000);
  EXPECT_THROW(big * big, Error);
}

TEST(Parse, RoundTripsThroughToString) {
  for (const RingSpec& r : {fp(3), qq(3)}) {
    for (const char* text : {"x0^2*x1 + 3*x1 - 1", "0", "-x2", "(x0+1)^3 - x1*(x2-2)", "7"}) {
      Poly p = P(r, text);
      EXPECT_EQ(P(r, p.to_string()), p) << text;
    }
  }
  RingSpec q = qq(1);
  Poly half = P(q, "x0/2 - 1/3");
  EXPECT_EQ(P(q, half.to_string()), half);
}

TEST(Parse, ReportsErrors) {
  RingSpec r = fp(2);
  EXPECT_THROW(P(r, "x2"), Error);
  EXPECT_THROW(P(r, "x0 +"), Error);
  EXPECT_THROW(P(r, "x0^"), Error);
  EXPECT_THROW(P(r, "(x0"), Error);
  EXPECT_EQ(parse_poly_list("x0, x1*(x0+1), 2", r).size(), 3u);
}

TEST(Parse, ExampleSyntax) {
  RingSpec r = fp(2);
  Poly p = P(r, "x0^2*x1 + 3*x1 - 1");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.to_string(), "x0^2*x1 + 3*x1 - 1");
  EXPECT_EQ(p.degree(), 3);
}

class PolyRingAxioms : public ::testing::TestWithParam<int> {};

TEST_P(PolyRingAxioms, HoldOnRandomTriples) {
  RingSpec r = GetParam() == 0 ? fp(3) : (GetParam() == 1 ? qq(2) : fp(2, MonomialOrder::Lex));
  SeededRng rng(1000 + GetParam());
  for (int i = 0; i < 40; ++i) {
    Poly p = random_poly(r, rng, 3), q = random_poly(r, rng, 2), s = random_poly(r, rng, 3);
    EXPECT_EQ(p * (q + s), p * q + p * s);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * s, p * (q * s));
    EXPECT_EQ(p - p, Poly(r));
    EXPECT_EQ(Poly::from_terms(r, p.terms()), p);
  }
}

INSTANTIATE_TEST_SUITE_P(Rings, PolyRingAxioms, ::testing::Values(0, 1, 2));

TEST(MonoCompareProperty, TotalAndMultiplicative) {
  for (MonomialOrder order : {MonomialOrder::GRevLex, MonomialOrder::Lex}) {
    SeededRng rng(77);
    auto random_mono = [&] {
      Monomial m;
      for (std::size_t i = 0; i < 3; ++i) m.set(i, static_cast<Monomial::Exponent>(rng.below(4)));
      return m;
    };
    for (int i = 0; i < 300; ++i) {
      Monomial a = random_mono(), b = random_mono(), c = random_mono();
      auto ab = mono_compare(a, b, order), ba = mono_compare(b, a, order);
      EXPECT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
      EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
      if (ab == std::strong_ordering::less && mono_compare(b, c, order) == std::strong_ordering::less)
        EXPECT_EQ(mono_compare(a, c, order), std::strong_ordering::less);
      EXPECT_EQ(mono_compare(a * c, b * c, order), ab);
      EXPECT_NE(mono_compare(Monomial(), a * Monomial::variable(0), order), std::strong_ordering::greater);
    }
  }
}
