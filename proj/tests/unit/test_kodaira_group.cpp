#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <utility>

#include "qed/kodaira_group.hpp"
#include "support/checks.hpp"

using namespace qed;
using namespace qed::kod;
using qed::testing::expect_error;

namespace {

Rational rand_rat(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 3);
  return Rational(num(rng), den(rng));
}

ExactComplex rand_ec(std::mt19937& rng) {
  Rational a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng), e = rand_rat(rng);
  return {a, b, c, e};
}

GroupElement rand_el(std::mt19937& rng) { return {rand_ec(rng), rand_ec(rng)}; }

// The element (a, b) sends (z1, z2) to (z1 + a, z2 + conj(a) z1 + b).
std::pair<ExactComplex, ExactComplex> act(const GroupElement& g, const ExactComplex& z1,
                                          const ExactComplex& z2) {
  return {z1 + g.a, z2 + g.a.conj() * z1 + g.b};
}

}  // namespace

TEST_CASE("group elements satisfy the affine group laws") {
  std::mt19937 rng(20260816);
  const GroupElement id = identity_element();
  for (int trial = 0; trial < 2500; ++trial) {
    GroupElement g = rand_el(rng), h = rand_el(rng), k = rand_el(rng);
    CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
    CHECK(compose(g, inverse(g)) == id);
    CHECK(compose(inverse(g), g) == id);
    CHECK(inverse(compose(g, h)) == compose(inverse(h), inverse(g)));
  }
  GroupElement g = rand_el(rng);
  CHECK(compose(id, g) == g);
  CHECK(compose(g, id) == g);
}

TEST_CASE("composition matches the affine action on C^2") {
  std::mt19937 rng(416);
  for (int trial = 0; trial < 400; ++trial) {
    GroupElement g = rand_el(rng), h = rand_el(rng);
    ExactComplex z1 = rand_ec(rng), z2 = rand_ec(rng);
    auto[w1, w2] = act(g, z1, z2);
    auto[u1, u2] = act(h, w1, w2);
    auto[v1, v2] = act(compose(g, h), z1, z2);
    CHECK(u1 == v1);
    CHECK(u2 == v2);
  }
  auto g = generators(s0_data());
  CHECK_FALSE(compose(g[2], g[3]) == compose(g[3], g[2]));
}

TEST_CASE("reference data is valid with a frozen central commutator") {
  auto d = s0_data();
  CHECK(group_data_violations(d).empty());
  CHECK(d.m == 1);

  CHECK(pairing(d.alpha[2], d.alpha[3]) == ExactComplex::i().scaled(2));
  CHECK(pairing(d.alpha[2], d.alpha[3]) == d.beta[1]);
  CHECK(pairing(d.beta[0], d.beta[1]) == ExactComplex(0, 4, 0, 0));

  auto g = generators(d);
  GroupElement c = commutator(g[2], g[3]);
  CHECK(c.a.is_zero());
  CHECK(c.b == ExactComplex::i().scaled(-2));
  CHECK(c == inverse(g[1]));

  auto report = verify_presentation(d);
  CHECK(report.ok);
  CHECK(report.violations.empty());
}

TEST_CASE("generator data validation reports each defect") {
  auto base = s0_data();

  SECTION("translation slots must be pure") {
    auto d = base;
    d.alpha[0] = ExactComplex::one();
    auto v = group_data_violations(d);
    CHECK(std::find(v.begin(), v.end(), "alpha1-nonzero") != v.end());
    expect_error(errc::invariant_violation, [&] { validate_group_data(d); });
  }
  SECTION("lattice translations must span") {
    auto d = base;
    d.beta[1] = d.beta[0].scaled(2);  // real multiple: pairing degenerates
    auto v = group_data_violations(d);
    CHECK(std::find(v.begin(), v.end(), "beta-pairing-degenerate") != v.end());
  }
  SECTION("the multiplier is positive") {
    auto d = base;
    d.m = 0;
    auto v = group_data_violations(d);
    CHECK(std::find(v.begin(), v.end(), "m-not-positive") != v.end());
  }
  SECTION("the alpha pairing cannot vanish") {
    auto d = base;
    d.alpha[3] = d.alpha[2];
    auto v = group_data_violations(d);
    CHECK(std::find(v.begin(), v.end(), "alpha-pairing-zero") != v.end());
  }
  SECTION("the alpha pairing must equal m beta_2") {
    auto d = base;
    d.m = 2;
    auto v = group_data_violations(d);
    CHECK(v == std::vector<std::string>{"alpha-pairing-mismatch"});
  }
}

TEST_CASE("rescaling divides the multiplier into alpha_3") {
  auto d = s0_data();
  d.alpha[2] = d.alpha[2].scaled(2);  // pairing doubles, so m = 2 balances it
  d.m = 2;
  REQUIRE(group_data_violations(d).empty());

  auto r = rescale(d);
  CHECK(r.m == 1);
  CHECK(r == s0_data());
  CHECK(verify_presentation(r).ok);

  auto bad = s0_data();
  bad.m = 3;
  expect_error(errc::invariant_violation, [&] { return rescale(bad); });
}

TEST_CASE("sign normalization identifies data describing one group") {
  auto d = s0_data();
  auto flipped = d;
  flipped.alpha[3] = -flipped.alpha[3];
  flipped.beta[1] = -flipped.beta[1];

  CHECK(group_data_violations(flipped).empty());
  CHECK_FALSE(flipped == d);
  CHECK(same_group_data(flipped, d));
  CHECK(canonical_group_data(flipped) == d);

  auto other = d;
  other.beta[0] = ExactComplex::one().scaled(3);
  CHECK_FALSE(same_group_data(other, d));
}

TEST_CASE("conjugate data describes the same group as the reference") {
  auto d = s0_data();
  auto c = conjugate_data(d);
  CHECK(group_data_violations(c).empty());
  CHECK(c.alpha[3] == -ExactComplex::i());
  CHECK(c.beta[1] == ExactComplex::i().scaled(-2));
  CHECK(same_group_data(c, d));
  CHECK(verify_presentation(c).ok);
}

TEST_CASE("presentation verification flags noncentral translations") {
  auto d = s0_data();
  d.alpha[0] = ExactComplex::one();  // g_1 stops commuting with g_4 = (i, 0)
  auto report = verify_presentation(d);
  CHECK_FALSE(report.ok);
  CHECK(report.violations == std::vector<std::string>{"commutator-pair-14"});

  auto scaled = s0_data();
  scaled.m = 2;
  expect_error(errc::invalid_argument, [&] { return verify_presentation(scaled); });
}

TEST_CASE("fixed point sets are never isolated") {
  std::mt19937 rng(1201);
  int empties = 0, lines = 0;
  for (const auto& sigma : twelfth_roots_of_unity()) {
    for (int trial = 0; trial < 120; ++trial) {
      ExactComplex h0 = rand_ec(rng), h1 = rand_ec(rng);
      ExactComplex h2 = trial % 2 ? rand_ec(rng) : ExactComplex::zero();
      AffineAuto phi(sigma, h0, h1, h2);
      FixedPointSet s = fixed_point_set(phi);
      CHECK(s != FixedPointSet::IsolatedPoints);
      if (s == FixedPointSet::Empty) ++empties;
      if (s == FixedPointSet::Codim1Line) ++lines;
    }
  }
  CHECK(empties > 0);
  CHECK(lines > 0);

  const ExactComplex zero = ExactComplex::zero(), one = ExactComplex::one();
  CHECK(fixed_point_set({one, zero, zero, one}) == FixedPointSet::Empty);
  CHECK(fixed_point_set({one, one, zero, zero}) == FixedPointSet::Empty);
  CHECK(fixed_point_set({one, zero, zero, zero}) == FixedPointSet::AllOfC2);
  CHECK(fixed_point_set({ExactComplex::i(), zero, zero, zero}) == FixedPointSet::Codim1Line);
  CHECK(fixed_point_set({one, one, one, zero}) == FixedPointSet::Codim1Line);

  CHECK(std::string(fixed_point_set_name(FixedPointSet::Empty)) == "empty");
  CHECK(std::string(fixed_point_set_name(FixedPointSet::Codim1Line)) == "codimension-one line");
  CHECK(std::string(fixed_point_set_name(FixedPointSet::AllOfC2)) == "all of C^2");
  CHECK(std::string(fixed_point_set_name(FixedPointSet::IsolatedPoints)) == "isolated points");
}

TEST_CASE("automorphisms require a torsion scaling factor") {
  const ExactComplex zero = ExactComplex::zero();
  expect_error(errc::invariant_violation,
               [&] { return AffineAuto(ExactComplex::one().scaled(2), zero, zero, zero); });
  expect_error(errc::invariant_violation,
               [&] { return AffineAuto(ExactComplex::one() + ExactComplex::i(), zero, zero, zero); });
  expect_error(errc::invariant_violation, [&] { return AffineAuto(zero, zero, zero, zero); });
  for (const auto& sigma : twelfth_roots_of_unity()) {
    AffineAuto phi(sigma, zero, zero, zero);
    CHECK(phi.sigma.order_dividing_12() >= 1);
  }
}
