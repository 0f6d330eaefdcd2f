#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "xhermite/orthogonality.hpp"
#include "xhermite/quadrature.hpp"

using namespace xhermite;

namespace {

double dbl(const BigFloat& x) { return x.convert_to<double>(); }

const double kTwoRootPi = 2.0 * std::sqrt(M_PI);

}  // namespace

TEST_CASE("quadrature rules") {
  set_working_digits(64);
  SUBCASE("hermite one point") {
    auto rule = quadrature_rule(QuadFamily::Hermite, 1, 64);
    REQUIRE(rule->size() == 1);
    CHECK(dbl(abs(rule->nodes[0])) < 1e-60);
    CHECK(dbl(abs(rule->weights[0] - boost::math::constants::root_pi<BigFloat>())) < 1e-60);
  }
  SUBCASE("hermite moments") {
    auto rule = quadrature_rule(QuadFamily::Hermite, 8, 64);
    // integrates x^{2j} exp(-x^2) = (2j-1)!!/2^j sqrt(pi) exactly for 2j <= 15
    BigFloat expected = boost::math::constants::root_pi<BigFloat>();
    for (int j = 0; j <= 7; ++j) {
      if (j > 0) expected *= BigFloat(2 * j - 1) / 2;
      BigFloat acc(0);
      for (int i = 0; i < rule->size(); ++i)
        acc += rule->weights[i] * pow(rule->nodes[i], 2 * j);
      CHECK(dbl(abs(acc - expected) / expected) < 1e-55);
    }
  }
  SUBCASE("laguerre moments") {
    // integrates y^j y^alpha exp(-y) = Gamma(j + alpha + 1) exactly
    for (auto family : {QuadFamily::LaguerreHalf, QuadFamily::LaguerreThreeHalves}) {
      const double alpha = family == QuadFamily::LaguerreHalf ? 0.5 : 1.5;
      auto rule = quadrature_rule(family, 6, 64);
      BigFloat expected = boost::math::tgamma(BigFloat(alpha) + 1);
      for (int j = 0; j <= 5; ++j) {
        if (j > 0) expected *= BigFloat(alpha) + j;
        BigFloat acc(0);
        for (int i = 0; i < rule->size(); ++i)
          acc += rule->weights[i] * pow(rule->nodes[i], j);
        CHECK(dbl(abs(acc - expected) / expected) < 1e-55);
      }
    }
  }
  SUBCASE("nodes ascend and weights are positive") {
    auto rule = quadrature_rule(QuadFamily::Hermite, 64, 64);
    for (int i = 0; i < rule->size(); ++i) {
      CHECK(rule->weights[i] > 0);
      if (i > 0) CHECK(rule->nodes[i] > rule->nodes[i - 1]);
    }
  }
}

TEST_CASE("weight evaluation") {
  set_working_digits(64);
  SUBCASE("(1,1) at the origin") {
    WeightSpec spec{Partition({1, 1})};
    CHECK(dbl(abs(spec.eval(BigFloat(0)) - BigFloat(1) / 16)) < 1e-60);
  }
  SUBCASE("classical weight") {
    WeightSpec spec{Partition{}};
    CHECK(dbl(abs(spec.eval(BigFloat(0)) - 1)) < 1e-60);
  }
  SUBCASE("tail behaves like exp(-x^2)/(leading coeff x^{2 deg})") {
    WeightSpec spec{Partition({1, 1})};
    const BigFloat x(50);
    const BigFloat ratio = spec.eval(x) * exp(x * x) * 64 * pow(x, 4);
    CHECK(dbl(abs(ratio - 1)) < 1e-3);
  }
  SUBCASE("non-even partitions rejected") {
    CHECK_THROWS_AS(WeightSpec(Partition({2, 1})), std::invalid_argument);
    CHECK_THROWS_AS(WeightSpec(Partition({2, 2, 2})), std::invalid_argument);
  }
}

TEST_CASE("inner products") {
  set_working_digits(64);
  const WeightSpec classical{Partition{}};
  SUBCASE("classical norm of H_1") {
    auto r = inner_product(classical, poly_fn(hermite(1)), poly_fn(hermite(1)));
    CHECK(r.converged);
    CHECK(dbl(abs(r.value - 2 * boost::math::constants::root_pi<BigFloat>())) < 1e-50);
    CHECK(std::abs(dbl(r.value) - kTwoRootPi) < 1e-12);
  }
  SUBCASE("odd integrand vanishes") {
    auto r = inner_product(classical, poly_fn(hermite(1)), poly_fn(hermite(2)));
    CHECK(r.converged);
    CHECK(dbl(abs(r.value)) < 1e-50);
  }
  SUBCASE("exceptional orthogonality for (1,1)") {
    const Partition lam({1, 1});
    WeightSpec spec{lam};
    auto r03 = inner_product(spec, poly_fn(cached_h_lambda_i(lam, 0)),
                             poly_fn(cached_h_lambda_i(lam, 3)));
    auto r00 = inner_product(spec, poly_fn(cached_h_lambda_i(lam, 0)),
                             poly_fn(cached_h_lambda_i(lam, 0)));
    auto r33 = inner_product(spec, poly_fn(cached_h_lambda_i(lam, 3)),
                             poly_fn(cached_h_lambda_i(lam, 3)));
    CHECK(r03.converged);
    CHECK(dbl(abs(r03.value) / sqrt(r00.value * r33.value)) < 1e-10);
  }
  SUBCASE("symmetry and positivity") {
    WeightSpec spec{Partition({1, 1})};
    const RealFn f = poly_fn(Poly::parse("1 + x"));
    const RealFn g = poly_fn(Poly::parse("x^2 - 2"));
    auto fg = inner_product(spec, f, g);
    auto gf = inner_product(spec, g, f);
    CHECK(dbl(abs(fg.value - gf.value)) < 1e-55);
    CHECK(inner_product(spec, f, f).value > 0);
    CHECK(inner_product(spec, g, g).value > 0);
  }
}

TEST_CASE("gram matrices") {
  set_working_digits(64);
  SUBCASE("classical diagonal is 2^n n! sqrt(pi)") {
    auto report = gram_matrix(Partition{}, 5);
    CHECK(report.all_converged);
    BigFloat expected = boost::math::constants::root_pi<BigFloat>();
    for (int n = 0; n < 5; ++n) {
      if (n > 0) expected *= 2 * n;
      CHECK(dbl(abs(report.matrix[n][n] - expected) / expected) < 1e-40);
    }
    CHECK(report.max_offdiag_rel < 1e-12);
  }
  SUBCASE("(1,1) with five elements") {
    auto report = gram_matrix(Partition({1, 1}), 5);
    CHECK(report.all_converged);
    CHECK(report.max_offdiag_rel < 1e-10);
    CHECK(report.indices == std::vector<int>{0, 3, 4, 5, 6});
    for (int a = 0; a < 5; ++a) CHECK(report.matrix[a][a] > 0);
  }
  SUBCASE("(2,2) with four elements") {
    auto report = gram_matrix(Partition({2, 2}), 4);
    CHECK(report.all_converged);
    CHECK(report.max_offdiag_rel < 1e-10);
  }
  SUBCASE("csv shape") {
    auto report = gram_matrix(Partition({1, 1}), 2);
    const std::string csv = gram_csv(report);
    CHECK(csv.substr(0, 6) == "i,0,3\n");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  }
}

TEST_CASE("density demo") {
  set_working_digits(64);
  const Partition lam({1, 1});
  SUBCASE("function already in the span projects to zero error") {
    const RealFn f = poly_fn(cached_h_lambda_i(lam, 3));
    const int caps[] = {3, 5, 7};
    auto report = density_demo(lam, f, caps);
    REQUIRE(report.points.size() == 3);
    for (const auto& p : report.points) CHECK(dbl(p.error) < 1e-10);
  }
  SUBCASE("H^2 x lies in the span at degree 5") {
    const Poly h = cached_h_lambda(lam);
    const RealFn f = poly_fn(h * h * Poly::variable());
    const int caps[] = {5, 7};
    auto report = density_demo(lam, f, caps);
    CHECK(dbl(report.points[0].error) < 1e-10);
    CHECK(dbl(report.points[1].error) < 1e-10);
  }
  SUBCASE("constant function: errors non-increasing and zero from the start") {
    // the degree-0 basis element is itself a constant, so f = 1 is in the span
    const RealFn one = [](const BigFloat&) { return BigFloat(1); };
    const int caps[] = {0, 4, 8, 12};
    auto report = density_demo(lam, one, caps);
    REQUIRE(report.points.size() == 4);
    for (size_t i = 1; i < report.points.size(); ++i)
      CHECK(dbl(report.points[i].error) <= dbl(report.points[i - 1].error) + 1e-20);
    CHECK(dbl(report.points[0].error) < 1e-12);
  }
  SUBCASE("genuine decay on (2,2) where constants are outside the span") {
    const RealFn one = [](const BigFloat&) { return BigFloat(1); };
    const int caps[] = {2, 6, 10, 14};
    auto report = density_demo(Partition({2, 2}), one, caps);
    REQUIRE(report.points.size() == 4);
    for (size_t i = 1; i < report.points.size(); ++i)
      CHECK(report.points[i].error < report.points[i - 1].error);
    CHECK(report.points.back().error < report.points.front().error / 2);
    CHECK(report.points.front().error > BigFloat("1e-6"));  // genuinely nonzero start
  }
  SUBCASE("smooth non-polynomial target decays") {
    const RealFn runge = [](const BigFloat& x) { return BigFloat(1) / (1 + x * x); };
    const int caps[] = {0, 4, 8};
    auto report = density_demo(lam, runge, caps);
    CHECK(report.points[2].error < report.points[0].error);
  }
  SUBCASE("caps must increase") {
    const RealFn one = [](const BigFloat&) { return BigFloat(1); };
    const int caps[] = {4, 4};
    CHECK_THROWS_AS(density_demo(lam, one, caps), std::invalid_argument);
  }
}

TEST_CASE("lemma construction") {
  set_working_digits(64);
  SUBCASE("q = 1 + x^{2m} is exact with p = 1") {
    for (int m : {1, 2, 3}) {
      Poly q = Poly(1) + Poly::monomial(2 * m);
      auto r = lemma_d2_construct(q, m, 1e-10);
      CHECK(r.met_target);
      REQUIRE(r.p.c.size() == 1);
      CHECK(dbl(abs(r.p.c[0] - 1)) < 1e-60);
      CHECK(dbl(r.achieved_error) < 1e-12);
    }
  }
  SUBCASE("q = x^2, m = 1 meets 1e-3") {
    auto r = lemma_d2_construct(Poly::monomial(2), 1, 1e-3);
    CHECK(r.met_target);
    CHECK(dbl(r.achieved_error) <= 1e-3);
    CHECK(r.degree_used > 0);
  }
  SUBCASE("q = x, m = 2 meets 1e-3 through the odd branch") {
    auto r = lemma_d2_construct(Poly::variable(), 2, 1e-3);
    CHECK(r.met_target);
    CHECK(dbl(r.achieved_error) <= 1e-3);
  }
  SUBCASE("achieved error decreases with a looser, then tighter target") {
    auto loose = lemma_d2_construct(Poly::monomial(2), 1, 1e-2);
    auto tight = lemma_d2_construct(Poly::monomial(2), 1, 1e-4);
    CHECK(tight.achieved_error < loose.achieved_error);
    CHECK(tight.degree_used >= loose.degree_used);
  }
  SUBCASE("bad arguments") {
    CHECK_THROWS_AS(lemma_d2_construct(Poly(1), 0, 1e-3), std::invalid_argument);
    CHECK_THROWS_AS(lemma_d2_construct(Poly(1), 1, 0.0), std::invalid_argument);
  }
}
