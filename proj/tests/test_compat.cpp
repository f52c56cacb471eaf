#include "doctest.h"

#include "catalog/catalog.hpp"
#include "compat/compat.hpp"
#include "core/error.hpp"
#include "deciders/deciders.hpp"
#include "gen.hpp"

using namespace symcan;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

}  // namespace

TEST_CASE("gradient annihilator is |xi|^2 Id - xi xi^T") {
  AnnihilatorResult r = build_annihilator(gradient(2));
  PolyMatrix expected(2, 2, 2);
  expected(0, 0) = x(2, 1).pow(2);
  expected(0, 1) = -(x(2, 0) * x(2, 1));
  expected(1, 0) = -(x(2, 0) * x(2, 1));
  expected(1, 1) = x(2, 0).pow(2);
  CHECK(r.l.to_polymatrix() == expected);
  CHECK(r.identity_checked);
  for (const auto& k : r.sampled_kernel_checks) CHECK(k.kernel_equals_image);
  CHECK(check_cocanceling(r.l).cocanceling);
}

TEST_CASE("hyperbolic annihilator fails the kernel check at (1,1)") {
  SymbolOperator a = hyperbolic_example();
  AnnihilatorResult r = build_annihilator(a);
  CHECK(r.identity_checked);
  // square A: A adj(A^T A) A^T = det(A)^2 Id, so the construction collapses
  CHECK(r.l.is_zero());
  AnnihilatorReport rep = verify_annihilator(a, r.l, std::vector<QVector>{{1, 1}});
  CHECK(rep.identity_holds);
  CHECK_FALSE(rep.kernels_match());
  CHECK(rep.samples[0].image_dim == 1);
  CHECK(image(a.evaluate({1, 1})) == Subspace::span(2, {QVector{1, 1}}));
}

TEST_CASE("zero operator passes the identity but not the kernel check") {
  SymbolOperator a = gradient(2);
  SymbolOperator zero(2, 2, 2, 2, {}, SymbolOperator::ZeroPolicy::Allow);
  AnnihilatorReport rep = verify_annihilator(a, zero);
  CHECK(rep.identity_holds);
  CHECK_FALSE(rep.kernels_match());
  CHECK(rep.ranks_full());
  CHECK_THROWS_AS(verify_annihilator(a, gradient(2)), Error);
}

TEST_CASE("hodge remark operator annihilates the hodge pair") {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t l = 1; l < n; ++l)
      for (unsigned m = 1; m <= 2; ++m) {
        CAPTURE(n);
        CAPTURE(l);
        CAPTURE(m);
        SymbolOperator a = hodge_pair(n, l);
        SymbolOperator rem = hodge_remark_annihilator(n, l, m);
        AnnihilatorReport rep = verify_annihilator(a, rem);
        CHECK(rep.identity_holds);
        CHECK(rep.kernels_match());
        CHECK(rem.order() == 2 * m);
      }
  CHECK_THROWS_AS(hodge_remark_annihilator(3, 3), Error);
}

TEST_CASE("annihilators of elliptic catalog operators") {
  for (const auto& gt : ground_truth()) {
    if (!gt.elliptic || !*gt.elliptic || !gt.canceling) continue;
    CAPTURE(catalog_query(gt.name, gt.params));
    SymbolOperator a = catalog_get(gt.name, gt.params).op;
    AnnihilatorResult r = build_annihilator(a);
    CHECK(r.identity_checked);
    CHECK(r.l.order() == 2 * a.order() * a.dim_v());
    CHECK(r.l.to_polymatrix().is_homogeneous(2 * a.order() * static_cast<unsigned>(a.dim_v())));
    for (const auto& k : r.sampled_kernel_checks) {
      CHECK(k.kernel_equals_image);
      CHECK(k.injective);
    }
    CocancelingVerdict c = check_cocanceling(r.l);
    CHECK(c.cocanceling == *gt.canceling);
    CancelingVerdict w = check_canceling(a, true);
    REQUIRE(w.status != CancelStatus::NotCancelingSampled);
    CHECK(c.joint_kernel == w.intersection);
  }
}

TEST_CASE("annihilator budget") {
  gen::Source g(41);
  SymbolOperator big = gen::random_operator(g, 8, 4, 8, 2);
  CHECK(predicted_term_count(big) > 2e6);
  CHECK_THROWS_AS(build_annihilator(big), Error);
  try {
    build_annihilator(big);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Budget);
  }
  CompatOptions tight;
  tight.term_budget = 3;
  CHECK_THROWS_AS(build_annihilator(gradient(2), tight), Error);
}

TEST_CASE("annihilator identity on random operators") {
  gen::Source g(42);
  for (int t = 0; t < gen::kTrials; ++t) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 3));
    const std::size_t dv = static_cast<std::size_t>(g.integer(1, 2));
    const std::size_t de = static_cast<std::size_t>(g.integer(1, 3));
    SymbolOperator a = gen::random_operator(g, n, dv, de, static_cast<unsigned>(g.integer(1, 2)));
    AnnihilatorResult r = build_annihilator(a, {2e6, 3, static_cast<std::uint64_t>(t + 1)});
    CHECK(r.identity_checked);
    for (int k = 0; k < 3; ++k) {
      QVector xi = g.vector(n);
      CHECK(is_zero_vector(r.l.evaluate(xi) * (a.evaluate(xi) * g.vector(dv))));
    }
    // at an injective direction, ker L(xi) is exactly the image
    for (const auto& k : r.sampled_kernel_checks)
      if (k.injective) CHECK(k.kernel_equals_image);
  }
}
