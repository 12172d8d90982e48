#include <catch2/catch_amalgamated.hpp>

#include "qed/exact_complex.hpp"

using qed::ExactComplex;
using qed::Rational;

namespace {

ExactComplex ec(long a, long b, long c, long e) {
  return {Rational(a), Rational(b), Rational(c), Rational(e)};
}

}  // namespace

TEST_CASE("basis products reduce correctly") {
  ExactComplex i = ExactComplex::i(), w = ExactComplex::w(), iw = ExactComplex::iw();
  CHECK(i * i == ec(-1, 0, 0, 0));
  CHECK(w * w == ec(-1, 0, -1, 0));
  CHECK(i * w == iw);
  CHECK(iw * iw == ec(1, 0, 1, 0));
  CHECK(w * w * w == ExactComplex::one());
}

TEST_CASE("conjugation is an involutive ring map") {
  ExactComplex x = ec(3, -2, 5, 7), y = ec(-1, 4, 2, -3);
  CHECK(x.conj().conj() == x);
  CHECK((x * y).conj() == x.conj() * y.conj());
  CHECK((x + y).conj() == x.conj() + y.conj());
  CHECK(ExactComplex::w().conj() == ec(-1, 0, -1, 0));
  CHECK(ExactComplex::iw().conj() == ec(0, 1, 0, 1));
}

TEST_CASE("x times conj(x) lies in the real quadratic subfield") {
  // The conjugation-fixed subfield is spanned by 1 and I + 2*IW, so fixed
  // elements are exactly those with c = 0 and e = 2b.
  ExactComplex x = ec(2, 1, -1, 3);
  ExactComplex n = x * x.conj();
  CHECK(n.conj() == n);
  CHECK(n.c == 0);
  CHECK(n.e == 2 * n.b);
  CHECK_FALSE(n.is_zero());
}

TEST_CASE("twelfth roots of unity are pairwise distinct and have order 12 generator") {
  const auto& mu = qed::twelfth_roots_of_unity();
  for (std::size_t a = 0; a < mu.size(); ++a)
    for (std::size_t b = a + 1; b < mu.size(); ++b) CHECK_FALSE(mu[a] == mu[b]);
  for (const auto& z : mu) CHECK(z.is_root_of_unity_order_dividing_12());
  CHECK(mu[1].order_dividing_12() == 12);
  CHECK(mu[6] == ec(-1, 0, 0, 0));
  CHECK_FALSE(ec(2, 0, 0, 0).is_root_of_unity_order_dividing_12());
}

TEST_CASE("literal round trip") {
  ExactComplex x = {Rational(1, 2), Rational(-3), Rational(0), Rational(5, 7)};
  CHECK(x.to_string() == "1/2-3*I+5/7*IW");
  CHECK(ExactComplex::parse(x.to_string()) == x);
  CHECK(ExactComplex::parse("0") == ExactComplex::zero());
  CHECK(ExactComplex::parse("I") == ExactComplex::i());
  CHECK(ExactComplex::parse("-I") == -ExactComplex::i());
  CHECK(ExactComplex::parse("2*I") == ec(0, 2, 0, 0));
  CHECK(ExactComplex::parse("1 + 2*W") == ec(1, 0, 2, 0));
  CHECK(ExactComplex::parse("3/2*IW-W") == ExactComplex{Rational(0), Rational(0), Rational(-1), Rational(3, 2)});
  CHECK_THROWS_AS(ExactComplex::parse("1++2"), qed::error);
  CHECK_THROWS_AS(ExactComplex::parse("1/0"), qed::error);
  CHECK_THROWS_AS(ExactComplex::parse("2*J"), qed::error);
}

TEST_CASE("to_string of zero") { CHECK(ExactComplex::zero().to_string() == "0"); }
