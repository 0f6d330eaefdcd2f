#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include <random>

#include "xhermite/monodromy.hpp"

using namespace xhermite;

namespace {

Poly poly(std::initializer_list<long> coeffs_low_to_high) {
  std::vector<Rational> cs;
  for (long c : coeffs_low_to_high) cs.emplace_back(c);
  return Poly(std::move(cs));
}

bool coeff_close(const BigComplex& c, double re, double im = 0.0, double tol = 1e-40) {
  return abs(c - BigComplex(BigFloat(re), BigFloat(im))).convert_to<double>() <= tol;
}

Poly random_poly(std::mt19937& rng, int max_degree, int coeff_range = 9) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> coef(-coeff_range, coeff_range);
  std::vector<Rational> cs(deg(rng) + 1);
  for (auto& c : cs) c = Rational(coef(rng));
  return Poly(std::move(cs));
}

}  // namespace

TEST_CASE("potential rational part") {
  // (2,1): 6/x^2
  auto u21 = potential_rational(Partition({2, 1}));
  CHECK(u21.num() == poly({6}));
  CHECK(u21.den() == Poly::monomial(2));
  // (): harmonic oscillator
  CHECK(potential_rational(Partition{}).is_zero());
  // (1): 2/x^2
  auto u1 = potential_rational(Partition({1}));
  CHECK(u1.num() == poly({2}));
  CHECK(u1.den() == Poly::monomial(2));
}

TEST_CASE("potential pole order at the origin") {
  // order of xi = 0 in U - x^2 - 2l for (2,1): a double pole
  CHECK(order_at(potential_rational(Partition({2, 1})), Rational(0)) == -2);
  CHECK(order_at(potential_rational(Partition({1})), Rational(0)) == -2);
  CHECK(order_at(potential_rational(Partition({2, 1})), Rational(1)) == 0);
}

TEST_CASE("nu from multiplicity") {
  CHECK(nu_from_multiplicity(1) == 1);
  CHECK(nu_from_multiplicity(3) == 2);
  CHECK(nu_from_multiplicity(6) == 3);
  CHECK(nu_from_multiplicity(10) == 4);
  CHECK(!nu_from_multiplicity(2));
  CHECK(!nu_from_multiplicity(4));
  CHECK(!nu_from_multiplicity(0));
}

TEST_CASE("constraint orders") {
  CHECK(constraint_orders(2) == std::vector<int>{0, 2, 4});
  CHECK(constraint_orders(1) == std::vector<int>{1});
  CHECK(constraint_orders(3) == std::vector<int>{0, 1, 2, 4, 6, 8});
  for (int nu = 1; nu <= 6; ++nu) {
    auto orders = constraint_orders(nu);
    CHECK(static_cast<int>(orders.size()) == nu * (nu + 1) / 2);
    CHECK(orders.back() == nu * (nu + 3) / 2 - 1);
  }
  CHECK_THROWS_AS(constraint_orders(0), std::invalid_argument);
}

TEST_CASE("root profiles") {
  NumericContext ctx;
  SUBCASE("(2,1): one triple root at the origin") {
    auto profiles = root_profiles(Partition({2, 1}), ctx);
    REQUIRE(profiles.size() == 1);
    CHECK(profiles[0].xi_exact == Rational(0));
    CHECK(profiles[0].m == 3);
    CHECK(profiles[0].nu == 2);
    CHECK(profiles[0].orders == std::vector<int>{0, 2, 4});
  }
  SUBCASE("(1): simple root at the origin") {
    auto profiles = root_profiles(Partition({1}), ctx);
    REQUIRE(profiles.size() == 1);
    CHECK(profiles[0].xi_exact == Rational(0));
    CHECK(profiles[0].m == 1);
    CHECK(profiles[0].nu == 1);
    CHECK(profiles[0].orders == std::vector<int>{1});
  }
  SUBCASE("(1,1): conjugate pair at +-i/sqrt(2)") {
    auto profiles = root_profiles(Partition({1, 1}), ctx);
    REQUIRE(profiles.size() == 2);
    set_working_digits(ctx.digits);
    const double inv_sqrt2 = 0.7071067811865475244;
    CHECK(coeff_close(profiles[0].xi, 0.0, -inv_sqrt2, 1e-15));
    CHECK(coeff_close(profiles[1].xi, 0.0, inv_sqrt2, 1e-15));
    // high-precision refinement: residual far below double accuracy
    const Poly& h = cached_h_lambda(Partition({1, 1}));
    for (const auto& p : profiles) {
      CHECK(abs(h.eval(p.xi)).convert_to<double>() < 1e-50);
      CHECK(p.m == 1);
      CHECK(p.nu == 1);
    }
  }
  SUBCASE("empty partition rejected") {
    CHECK_THROWS_AS(root_profiles(Partition{}, ctx), std::invalid_argument);
  }
}

TEST_CASE("multiplicity sums and triangularity up to size 8") {
  NumericContext ctx;
  for (const Partition& lam : enumerate_partitions(8)) {
    auto profiles = root_profiles(lam, ctx);
    int total = 0;
    int constraints = 0;
    for (const auto& p : profiles) {
      CHECK(p.m == p.nu * (p.nu + 1) / 2);
      total += p.m;
      constraints += static_cast<int>(p.orders.size());
    }
    CHECK(total == lam.sum());
    CHECK(constraints == lam.sum());
  }
}

TEST_CASE("laurent expansion of the potential") {
  NumericContext ctx;
  SUBCASE("(2,1) about the origin: x^2 + 6/x^2 + 4") {
    auto profiles = root_profiles(Partition({2, 1}), ctx);
    auto series = laurent_potential(Partition({2, 1}), profiles[0], 6, ctx);
    CHECK(series.start_order == -2);
    CHECK(coeff_close(series.coeff(-2), 6.0));
    CHECK(coeff_close(series.coeff(-1), 0.0));
    CHECK(coeff_close(series.coeff(0), 4.0));
    CHECK(coeff_close(series.coeff(1), 0.0));
    CHECK(coeff_close(series.coeff(2), 1.0));
    CHECK(coeff_close(series.coeff(3), 0.0));
  }
  SUBCASE("(1) about the origin: x^2 + 2/x^2 + 2") {
    auto profiles = root_profiles(Partition({1}), ctx);
    auto series = laurent_potential(Partition({1}), profiles[0], 4, ctx);
    CHECK(coeff_close(series.coeff(-2), 2.0));
    CHECK(coeff_close(series.coeff(-1), 0.0));
    CHECK(coeff_close(series.coeff(0), 2.0));
    CHECK(coeff_close(series.coeff(1), 0.0));
  }
  SUBCASE("c[-2] equals twice the multiplicity at every root, sizes <= 6") {
    for (const Partition& lam : enumerate_partitions(6)) {
      for (const auto& profile : root_profiles(lam, ctx)) {
        auto series = laurent_potential(lam, profile, 2 * profile.nu + 1, ctx);
        CHECK(coeff_close(series.coeff(-2), 2.0 * profile.m, 0.0, 1e-30));
      }
    }
  }
  SUBCASE("empty partition rejected") {
    RootProfile dummy;
    dummy.nu = 1;
    CHECK_THROWS_AS(laurent_potential(Partition{}, dummy, 5, ctx), std::invalid_argument);
  }
  SUBCASE("insufficient order rejected") {
    auto profiles = root_profiles(Partition({2, 1}), ctx);
    CHECK_THROWS_AS(laurent_potential(Partition({2, 1}), profiles[0], 2, ctx),
                    std::invalid_argument);
  }
}

TEST_CASE("duistermaat-gruenbaum conditions") {
  NumericContext ctx;
  SUBCASE("(2,1) passes with nu = 2") {
    auto profiles = root_profiles(Partition({2, 1}), ctx);
    auto series = laurent_potential(Partition({2, 1}), profiles[0], 7, ctx);
    auto report = check_dg(series, 2, ctx.tol);
    CHECK(report.all_pass);
    CHECK(report.conditions.size() == 4);  // c[-2] plus j = 0,1,2
  }
  SUBCASE("(1) passes with nu = 1") {
    auto profiles = root_profiles(Partition({1}), ctx);
    auto series = laurent_potential(Partition({1}), profiles[0], 4, ctx);
    CHECK(check_dg(series, 1, ctx.tol).all_pass);
  }
  SUBCASE("forced failure: c[-2] = 1 is not nu(nu+1)") {
    LaurentSeries bad;
    bad.start_order = -2;
    bad.coeffs = {BigComplex(BigFloat(1)), BigComplex(), BigComplex(BigFloat(2)), BigComplex()};
    auto report = check_dg(bad, 1, 1e-8);
    CHECK(!report.all_pass);
    CHECK(!report.conditions[0].pass);  // the c[-2] condition
  }
  SUBCASE("window not covered is rejected") {
    LaurentSeries tiny;
    tiny.start_order = -2;
    tiny.coeffs = {BigComplex(BigFloat(2)), BigComplex()};
    CHECK_THROWS_AS(check_dg(tiny, 1, 1e-8), std::invalid_argument);
  }
}

TEST_CASE("dg conditions hold for every root, sizes <= 5") {
  NumericContext ctx;
  for (const Partition& lam : enumerate_partitions(5)) {
    for (const auto& profile : root_profiles(lam, ctx)) {
      auto series = laurent_potential(lam, profile, 2 * profile.nu + 4, ctx);
      auto report = check_dg(series, profile.nu, ctx.tol);
      INFO("partition ", lam.str());
      CHECK(report.all_pass);
      CHECK(report.worst_residual() < 1e-30);  // true zeros sit far below tol
    }
  }
}

TEST_CASE("eigenfunction residual is exactly zero") {
  // (2,1), k = 0: psi = (3/x^2) e^{-x^2/2}
  CHECK(eigenfunction_residual(Partition({2, 1}), 0).is_zero());
  // classical case
  for (int k = 0; k <= 8; ++k) CHECK(eigenfunction_residual(Partition{}, k).is_zero());
  // (1,1), k = 0
  CHECK(eigenfunction_residual(Partition({1, 1}), 0).is_zero());
  // k inside K rejected
  CHECK_THROWS_AS(eigenfunction_residual(Partition({2, 1}), 1), std::invalid_argument);
  CHECK_THROWS_AS(eigenfunction_residual(Partition({2, 1}), 3), std::invalid_argument);
}

TEST_CASE("eigenfunction residual across partitions, sizes <= 4") {
  for (const Partition& lam : enumerate_partitions(4)) {
    const KSet K = k_sequence(lam);
    for (int k = 0; k <= lam.sum() + 5; ++k) {
      if (K.contains(k)) continue;
      INFO("partition ", lam.str(), " k ", k);
      CHECK(eigenfunction_residual(lam, k).is_zero());
    }
  }
}

TEST_CASE("laurent-side eigenfunction conditions") {
  NumericContext ctx;
  SUBCASE("(2,1), k = 0 at the origin") {
    auto profiles = root_profiles(Partition({2, 1}), ctx);
    auto report = check_eigen_laurent(Partition({2, 1}), 0, profiles[0], ctx.tol, ctx);
    CHECK(report.all_pass);
  }
  SUBCASE("(2,1), k = 2 at the origin") {
    auto profiles = root_profiles(Partition({2, 1}), ctx);
    CHECK(check_eigen_laurent(Partition({2, 1}), 2, profiles[0], ctx.tol, ctx).all_pass);
  }
  SUBCASE("all roots and admissible k <= 7, sizes <= 4") {
    for (const Partition& lam : enumerate_partitions(4)) {
      const KSet K = k_sequence(lam);
      for (const auto& profile : root_profiles(lam, ctx)) {
        for (int k = 0; k <= 7; ++k) {
          if (K.contains(k)) continue;
          INFO("partition ", lam.str(), " k ", k);
          CHECK(check_eigen_laurent(lam, k, profile, ctx.tol, ctx).all_pass);
        }
      }
    }
  }
  SUBCASE("k inside K rejected") {
    auto profiles = root_profiles(Partition({2, 1}), ctx);
    CHECK_THROWS_AS(check_eigen_laurent(Partition({2, 1}), 3, profiles[0], 1e-8, ctx),
                    std::invalid_argument);
  }
}

TEST_CASE("constraint membership oracle") {
  NumericContext ctx;
  const Partition lam({2, 1});
  auto profiles = root_profiles(lam, ctx);
  SUBCASE("x^5 is a member") {
    CHECK(constraint_membership(lam, Poly::monomial(5), profiles, ctx.tol, ctx).member);
  }
  SUBCASE("x^2 fails the j = 2 constraint at the origin") {
    auto d = constraint_membership(lam, Poly::monomial(2), profiles, ctx.tol, ctx);
    CHECK(!d.member);
    bool j2_failed = false;
    for (const auto& [j, r] : d.per_root[0].residuals) {
      if (j == 2 && r > ctx.tol) j2_failed = true;
    }
    CHECK(j2_failed);
  }
  SUBCASE("H^2 q is always a member") {
    std::mt19937 rng(8);
    const Poly& h = cached_h_lambda(lam);
    for (int t = 0; t < 10; ++t) {
      Poly q = random_poly(rng, 4);
      CHECK(constraint_membership(lam, h * h * q, profiles, ctx.tol, ctx).member);
    }
  }
  SUBCASE("both scale normalizations agree") {
    std::mt19937 rng(9);
    for (int t = 0; t < 20; ++t) {
      Poly p = random_poly(rng, 8);
      auto a = constraint_membership(lam, p, profiles, ctx.tol, ctx, ConstraintScale::ReferencePoly);
      auto b = constraint_membership(lam, p, profiles, ctx.tol, ctx, ConstraintScale::CofactorValue);
      CHECK(a.member == b.member);
    }
  }
}

TEST_CASE("numeric and exact membership oracles agree, sizes <= 4") {
  NumericContext ctx;
  std::mt19937 rng(20260810);
  for (const Partition& lam : enumerate_partitions(4)) {
    auto profiles = root_profiles(lam, ctx);
    const Poly& h = cached_h_lambda(lam);
    for (int t = 0; t < 12; ++t) {
      Poly p;
      if (t % 3 == 0) {
        p = random_poly(rng, lam.sum() + 5);
      } else if (t % 3 == 1) {
        // random member assembled from the basis
        for (int i : admissible_indices(lam, 4)) {
          std::uniform_int_distribution<int> coef(-5, 5);
          p += cached_h_lambda_i(lam, i) * Rational(coef(rng));
        }
      } else {
        p = h * h * random_poly(rng, 3);
      }
      const bool exact = membership(lam, p).member;
      const bool numeric = constraint_membership(lam, p, profiles, ctx.tol, ctx).member;
      INFO("partition ", lam.str(), " poly ", p.str());
      CHECK(exact == numeric);
    }
  }
}

TEST_CASE("constraint system aggregate") {
  NumericContext ctx;
  for (const Partition& lam : enumerate_partitions(6)) {
    auto system = constraint_system(lam, ctx);
    CHECK(system.total_constraints() == lam.sum());
    REQUIRE(system.cofactors.size() == system.profiles.size());
    for (size_t i = 0; i < system.profiles.size(); ++i) {
      const auto& p = system.profiles[i];
      const auto& c = system.cofactors[i];
      CHECK(c.gaussian_factor);
      if (p.xi_exact) {
        // exact roots divide their factor out up front
        CHECK(c.strip_order == 0);
        CHECK(c.polynomial_part.degree() == lam.sum() - p.m);
      } else {
        CHECK(c.strip_order == p.m);
        CHECK(c.polynomial_part == cached_h_lambda(lam));
      }
    }
  }
  // empty partition: no roots, zero constraints
  auto empty = constraint_system(Partition{}, ctx);
  CHECK(empty.profiles.empty());
  CHECK(empty.total_constraints() == 0);
}

TEST_CASE("exact-division and series-stripping cofactor routes agree") {
  NumericContext ctx;
  std::mt19937 rng(31);
  for (const Partition& lam : {Partition({2, 1}), Partition({3, 2, 1}), Partition({1})}) {
    auto profiles = root_profiles(lam, ctx);
    // forget the exactness of every root, forcing the stripping route
    auto numeric = profiles;
    for (auto& p : numeric) p.xi_exact.reset();
    for (int t = 0; t < 8; ++t) {
      const Poly p = random_poly(rng, lam.sum() + 4);
      auto a = constraint_membership(lam, p, profiles, ctx.tol, ctx);
      auto b = constraint_membership(lam, p, numeric, ctx.tol, ctx);
      CHECK(a.member == b.member);
      CHECK(std::abs(a.worst_residual - b.worst_residual) <=
            1e-30 + 1e-6 * std::max(a.worst_residual, b.worst_residual));
    }
  }
}

TEST_CASE("veselov scan") {
  auto rows = veselov_scan(3);
  REQUIRE(rows.size() == 6);
  // (1): simple origin root
  CHECK(rows[0].lam == Partition({1}));
  CHECK(rows[0].origin_multiplicity == 1);
  CHECK(!rows[0].has_multiple_root);
  // (1,1): no real roots, complex pair is simple
  CHECK(rows[2].lam == Partition({1, 1}));
  CHECK(rows[2].origin_multiplicity == 0);
  CHECK(!rows[2].has_multiple_root);
  CHECK(rows[2].worst_nu == 1);
  // (2,1): triple root at the origin
  CHECK(rows[4].lam == Partition({2, 1}));
  CHECK(rows[4].origin_multiplicity == 3);
  CHECK(rows[4].has_multiple_root);
  CHECK(!rows[4].multiple_root_off_origin);
  CHECK(rows[4].worst_nu == 2);
  CHECK(rows[4].all_triangular);
}

TEST_CASE("aggregated checks and certificate") {
  NumericContext ctx;
  auto checks = run_monodromy_checks(Partition({2, 1}), ctx);
  CHECK(checks.pass);
  CHECK(checks.constraint_count == 3);
  auto cert = monodromy_certificate(checks);
  CHECK(cert["partition"] == "2,1");
  CHECK(cert["constraint_count"] == 3);
  REQUIRE(cert["roots"].size() == 1);
  CHECK(cert["roots"][0]["m"] == 3);
  CHECK(cert["roots"][0]["nu"] == 2);
  CHECK(cert["roots"][0]["M"] == nlohmann::json({0, 2, 4}));
  CHECK(cert["eigen_checks"].size() > 0);
  for (const auto& e : cert["eigen_checks"]) CHECK(e["exact_zero"] == true);

  auto empty_checks = run_monodromy_checks(Partition{}, ctx);
  CHECK(empty_checks.pass);
  CHECK(empty_checks.constraint_count == 0);
}
