#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <string>
#include <vector>

#include "qed/orbifold.hpp"
#include "qed/quotient_search.hpp"
#include "support/checks.hpp"
#include "support/smith.hpp"

using namespace qed;
using namespace qed::orb;
using qed::testing::expect_error;

namespace {

OrbifoldSignature sig(long long g, std::vector<long long> m) {
  return make_signature(g, std::move(m));
}

}  // namespace

TEST_CASE("signatures validate and normalize") {
  auto s = sig(1, {3, 2});
  CHECK(s.cone_orders == std::vector<long long>{2, 3});
  CHECK(signature_name(s) == "(1; [2,3])");
  CHECK(signature_name(sig(2, {})) == "(2; [])");
  CHECK(signature_lcm(sig(0, {2, 3, 4})) == 12);
  CHECK(signature_gcd(sig(0, {4, 6})) == 2);
  CHECK(signature_gcd(sig(3, {})) == 0);
  expect_error(errc::invalid_argument, [] { return make_signature(-1, {2}); });
  expect_error(errc::invalid_argument, [] { return make_signature(0, {2, 1}); });
  expect_error(errc::invalid_argument, [] { return make_signature(0, {0}); });
}

TEST_CASE("spheres with at most two cone points are exceptional") {
  CHECK(exceptional_case(sig(0, {})));
  CHECK(exceptional_case(sig(0, {5})));
  CHECK(exceptional_case(sig(0, {4, 6})));
  CHECK_FALSE(exceptional_case(sig(0, {2, 2, 2})));
  CHECK_FALSE(exceptional_case(sig(1, {2})));
  CHECK_FALSE(exceptional_case(sig(1, {})));

  CHECK(exceptional_order(sig(0, {})) == 1);
  CHECK(exceptional_order(sig(0, {5})) == 1);
  CHECK(exceptional_order(sig(0, {4, 6})) == 2);
  CHECK(exceptional_order(sig(0, {2, 3})) == 1);
  CHECK(exceptional_order(sig(0, {6, 6})) == 6);
  expect_error(errc::invalid_argument, [] { return exceptional_order(sig(1, {2})); });
}

TEST_CASE("coprime reduction divides out the common gcd") {
  CHECK(coprime_reduction(sig(0, {4, 6})).cone_orders == std::vector<long long>{2, 3});
  CHECK(coprime_reduction(sig(0, {6, 6})).cone_orders.empty());
  CHECK(coprime_reduction(sig(0, {2, 3})) == sig(0, {2, 3}));
  CHECK(coprime_reduction(sig(2, {4, 6})).genus == 2);
  CHECK(coprime_reduction(sig(1, {})) == sig(1, {}));
}

TEST_CASE("presentations list cone powers then the long relator") {
  auto p = presentation(sig(1, {2, 3}));
  CHECK(p.genus == 1);
  CHECK(p.num_generators == 4);
  REQUIRE(p.relators.size() == 3);
  CHECK(p.relators[0] == std::vector<long long>{3, 3});
  CHECK(p.relators[1] == std::vector<long long>{4, 4, 4});
  CHECK(p.relators[2] == std::vector<long long>{1, 2, -1, -2, 3, 4});

  auto q = presentation(sig(2, {}));
  CHECK(q.num_generators == 4);
  REQUIRE(q.relators.size() == 1);
  CHECK(q.relators[0] == std::vector<long long>{1, 2, -1, -2, 3, 4, -3, -4});

  auto r = presentation(sig(0, {2, 2}));
  CHECK(r.num_generators == 2);
  REQUIRE(r.relators.size() == 3);
  CHECK(r.relators[2] == std::vector<long long>{1, 2});
}

TEST_CASE("good quotients are found with frozen groups and orders") {
  struct Expected {
    OrbifoldSignature input;
    std::string group;
    long long order;
  };
  const Expected table[] = {
      {sig(1, {2}), "Q8", 8},
      {sig(2, {2}), "Q8", 8},
      {sig(0, {2, 3, 4}), "S4", 24},
      {sig(0, {2, 2, 3, 3}), "C6", 6},
      {sig(0, {2, 2, 2, 3}), "D6", 12},
      {sig(1, {6}), "Dic6", 24},
      {sig(0, {2, 2, 3}), "S3", 6},
      {sig(1, {3}), "S3", 6},
      {sig(0, {3, 3, 3}), "C3", 3},
      {sig(0, {2, 2, 2, 2}), "C2", 2},
      {sig(0, {2, 3, 6}), "C6", 6},
      {sig(0, {2, 4, 4}), "C4", 4},
      {sig(0, {5, 5, 5}), "C5", 5},
      {sig(1, {}), "C1", 1},
  };
  for (const auto& row : table) {
    INFO(signature_name(row.input));
    auto w = find_good_quotient(row.input);
    CHECK(w.group_name == row.group);
    CHECK(w.target_order == row.order);
    CHECK(w.handle_images.size() == static_cast<size_t>(2 * row.input.genus));
    CHECK(w.cone_images.size() == row.input.cone_orders.size());
    auto report = verify_quotient_witness(row.input, w);
    INFO((report.violations.empty() ? std::string("ok") : report.violations.front()));
    CHECK(report.ok);
  }
}

TEST_CASE("searches respect the exceptional cases and the bound") {
  expect_error(errc::exceptional_input, [] { return find_good_quotient(sig(0, {2, 3})); });
  expect_error(errc::exceptional_input, [] { return find_good_quotient(sig(0, {})); });
  expect_error(errc::exceptional_input, [] { return find_good_quotient(sig(0, {6, 6})); });
  expect_error(errc::not_found_within_bound,
               [] { return find_good_quotient(sig(0, {5, 5, 5}), 3); });
  expect_error(errc::invalid_argument, [] { return find_good_quotient(sig(1, {2}), 0); });
}

TEST_CASE("witness verification rejects tampering") {
  auto s = sig(0, {2, 3, 4});
  auto w = find_good_quotient(s);
  REQUIRE(verify_quotient_witness(s, w).ok);

  SECTION("wrong shape") {
    auto bad = w;
    bad.cone_images.pop_back();
    auto report = verify_quotient_witness(s, bad);
    CHECK_FALSE(report.ok);
    CHECK(report.violations == std::vector<std::string>{"shape"});
  }
  SECTION("not a permutation") {
    auto bad = w;
    bad.cone_images[0][0] = bad.cone_images[0][1];
    auto report = verify_quotient_witness(s, bad);
    CHECK_FALSE(report.ok);
    CHECK(report.violations == std::vector<std::string>{"cone-image"});
  }
  SECTION("cone order broken by swapping images") {
    auto bad = w;
    std::swap(bad.cone_images[0], bad.cone_images[2]);
    auto report = verify_quotient_witness(s, bad);
    CHECK_FALSE(report.ok);
    CHECK(std::find(report.violations.begin(), report.violations.end(), "cone-order-1") !=
          report.violations.end());
  }
  SECTION("identity image breaks the exact order") {
    auto bad = w;
    bad.cone_images[1] = orb::detail::perm_identity(bad.degree);
    auto report = verify_quotient_witness(s, bad);
    CHECK_FALSE(report.ok);
    CHECK(std::find(report.violations.begin(), report.violations.end(), "cone-order-2") !=
          report.violations.end());
  }
  SECTION("claimed subgroup order is checked") {
    auto bad = w;
    bad.target_order += 1;
    auto report = verify_quotient_witness(s, bad);
    CHECK_FALSE(report.ok);
    CHECK(report.violations == std::vector<std::string>{"target-order"});
  }
  SECTION("a tiny bound flags the witness") {
    auto report = verify_quotient_witness(s, w, 10);
    CHECK_FALSE(report.ok);
    CHECK(std::find(report.violations.begin(), report.violations.end(), "bound") !=
          report.violations.end());
  }
}

TEST_CASE("handle relators need genuine commutators") {
  // For a torus with one order-2 cone point the cone image must be a
  // commutator, which rules out every abelian group; the witness relator
  // walk must actually close up.
  auto s = sig(1, {2});
  auto w = find_good_quotient(s);
  REQUIRE(w.handle_images.size() == 2);
  auto a = w.handle_images[0];
  auto b = w.handle_images[1];
  using orb::detail::perm_inverse;
  using orb::detail::perm_mul;
  auto comm = perm_mul(perm_mul(a, b), perm_mul(perm_inverse(a), perm_inverse(b)));
  auto prod = perm_mul(comm, w.cone_images[0]);
  CHECK(orb::detail::perm_is_identity(prod));
  CHECK_FALSE(orb::detail::perm_is_identity(comm));
}

TEST_CASE("smith normal form matches hand-computed examples") {
  using qed_test::smith_diagonal;
  CHECK(smith_diagonal({{2, 4}, {6, 8}}) == std::vector<long long>{2, 4});
  CHECK(smith_diagonal({{1, 0}, {0, 1}}) == std::vector<long long>{1, 1});
  CHECK(smith_diagonal({{0, 0}, {0, 0}}) == std::vector<long long>{0, 0});
  CHECK(smith_diagonal({{2, 0}, {0, 3}}) == std::vector<long long>{1, 6});
  CHECK(smith_diagonal({{6, 0, 0}, {0, 10, 0}, {0, 0, 15}}) ==
        std::vector<long long>{1, 30, 30});
}

TEST_CASE("abelianizations agree with the smith normal form oracle") {
  const std::vector<OrbifoldSignature> cases = {
      sig(0, {2, 2, 3, 3}), sig(0, {2, 3, 6}),    sig(0, {2, 4, 4}),
      sig(0, {3, 3, 3}),    sig(0, {2, 2, 2, 2}), sig(0, {5, 5, 5}),
      sig(1, {2}),          sig(1, {6}),          sig(2, {2}),
      sig(2, {}),           sig(1, {2, 3}),       sig(0, {2, 3, 4}),
  };
  for (const auto& s : cases) {
    INFO(signature_name(s));
    auto pres = presentation(s);
    auto diag = qed_test::smith_diagonal(qed_test::abelianized_relations(pres));
    CHECK(qed_test::free_rank(pres.num_generators, diag) == 2 * s.genus);
    if (s.genus == 0) {
      long long prod = 1;
      for (long long m : s.cone_orders) prod *= m;
      CHECK(qed_test::torsion_order(diag) == prod / signature_lcm(s));
    }
  }
}

TEST_CASE("abelian witnesses factor through the abelianization") {
  for (const auto& s : {sig(0, {2, 2, 3, 3}), sig(0, {2, 3, 6}), sig(0, {2, 4, 4}),
                        sig(0, {3, 3, 3}), sig(0, {5, 5, 5})}) {
    INFO(signature_name(s));
    auto w = find_good_quotient(s);
    CHECK(w.group_name.find('C') == 0);  // abelian winners are cyclic here
    auto diag = qed_test::smith_diagonal(qed_test::abelianized_relations(presentation(s)));
    CHECK(qed_test::torsion_order(diag) % w.target_order == 0);
  }
}

TEST_CASE("every small nonexceptional signature has a good quotient") {
  // Genus up to 2, at most four cone points of order up to 6.
  std::vector<std::vector<long long>> cone_lists{{}};
  for (long long r = 1; r <= 4; ++r) {
    std::vector<std::vector<long long>> next;
    for (const auto& base : cone_lists) {
      if (base.size() != static_cast<size_t>(r - 1)) {
        next.push_back(base);
        continue;
      }
      next.push_back(base);
      long long start = base.empty() ? 2 : base.back();
      for (long long m = start; m <= 6; ++m) {
        auto ext = base;
        ext.push_back(m);
        next.push_back(ext);
      }
    }
    cone_lists = std::move(next);
  }
  int searched = 0;
  for (long long g = 0; g <= 2; ++g) {
    for (const auto& cones : cone_lists) {
      auto s = sig(g, cones);
      if (exceptional_case(s)) continue;
      INFO(signature_name(s));
      auto w = find_good_quotient(s);
      CHECK(w.target_order >= 1);
      CHECK(verify_quotient_witness(s, w).ok);
      ++searched;
    }
  }
  CHECK(searched > 300);
}
