#include <doctest.h>

#include "abel/error.hpp"
#include "abel/lattice.hpp"
#include "abel/modular.hpp"
#include "abel/series_ops.hpp"
#include "abel/threefold.hpp"

using namespace abel;

TEST_SUITE("threefold") {

TEST_CASE("degree-one Euler theory is the kernel square") {
    DTSeries dt = dt_hat_1(4, 24);
    CHECK(dt.sign == PSign::PlainP);
    CHECK(dt.series[0] == PLaurent::from_p_coeffs({{1, Rational(1)},
                                                   {0, Rational(-2)},
                                                   {-1, Rational(1)}}));
    CHECK(dt.series[1] == PLaurent::from_p_coeffs({{2, Rational(-2)},
                                                   {1, Rational(8)},
                                                   {0, Rational(-12)},
                                                   {-1, Rational(8)},
                                                   {-2, Rational(-2)}}));
    for (int d = 0; d <= 4; ++d)
        CHECK(dt.series[d].symmetry() == WSymmetry::Symmetric);
}

TEST_CASE("nodal bracket") {
    QSeries<PLaurent> n = nodal_factor(4, 6);
    CHECK(n[0].is_window());
    CHECK(n[0].coeff_checked(0) == Rational(1));
    CHECK(n[0].coeff_checked(2) == Rational(1));
    CHECK(n[0].coeff_checked(4) == Rational(2));
    CHECK(n[0].coeff_checked(6) == Rational(3));
    CHECK(n[1] == PLaurent::from_p_coeffs({{1, Rational(1)}, {-1, Rational(1)}}));
    CHECK(n[2] == PLaurent::from_p_coeffs({{2, Rational(2)},
                                           {1, Rational(1)},
                                           {-1, Rational(1)},
                                           {-2, Rational(2)}}));
}

TEST_CASE("horizontal-multiplicity series F") {
    QSeries<PLaurent> f = f_a_series(4, 24);
    CHECK(f[0] == PLaurent::monomial(0, Rational(1)));
    CHECK(f[1] == PLaurent::from_p_coeffs({{1, Rational(1)},
                                           {0, Rational(-1)},
                                           {-1, Rational(1)}}));
    for (int a = 0; a <= 4; ++a)
        CHECK(f[a].symmetry() == WSymmetry::Symmetric);
}

TEST_CASE("symmetric-product Euler powers") {
    QSeries<PLaurent> one_plus_q = qseries_one(3, PLaurent());
    one_plus_q.set(1, PLaurent::monomial(0, Rational(1)));
    QSeries<PLaurent> cubed = sym_prod_euler(one_plus_q, 3);
    CHECK(cubed[1] == PLaurent::monomial(0, Rational(3)));
    CHECK(cubed[2] == PLaurent::monomial(0, Rational(3)));
    CHECK(cubed[3] == PLaurent::monomial(0, Rational(1)));
    CHECK(sym_prod_euler(one_plus_q, 0) == qseries_one(3, PLaurent()));

    // Euler power -2 of F equals the direct Pochhammer product.
    QSeries<PLaurent> lhs = sym_prod_euler(f_a_series(5, 24), -2);
    QSeries<PLaurent> rhs = product_form({{Rational(1), 2, 1, 2},
                                          {Rational(1), -2, 1, 2},
                                          {Rational(1), 0, 1, -2}},
                                         unit_coefficient(PLaurent()), 5, 24);
    CHECK(lhs == rhs);

    QSeries<PLaurent> not_unit = qseries_plaurent(2);
    CHECK_THROWS_AS(sym_prod_euler(not_unit, 2), precondition_error);
}

TEST_CASE("degree-one assembly equals the closed kernel form") {
    DTSeries assembled = dt_hat_1_assembled(6, 24);
    DTSeries closed = dt_hat_1(6, 24);
    CHECK(assembled.series == closed.series);
    CHECK(assembled.series[0] == PLaurent::from_p_coeffs(
                                     {{1, Rational(1)},
                                      {0, Rational(-2)},
                                      {-1, Rational(1)}}));
}

TEST_CASE("degree-two closed form and assembly") {
    DTSeries closed = dt_hat_2_closed(6, 24);
    DTSeries assembled = dt_hat_2_assembled(6, 24);
    CHECK(compare_series(assembled.series, closed.series).equal);
}

TEST_CASE("the doubled-degree subterm enters first at q^2 as 12 K^4|q0") {
    int w = 24;
    DTSeries closed = dt_hat_2_closed(2, w);
    QSeries<PLaurent> k2 = theta_K_pq(2, w);
    QSeries<PLaurent> k4 = k2 * k2;
    k4 = k4 * k4;
    // Bracket without the 12 q^{2d} subterm.
    QSeries<PLaurent> bracket = qseries_plaurent(2);
    PLaurent q0 = PLaurent::window(w, w);
    q0.set(0, Rational(1, 2));
    for (int k = 1; 2 * k <= w; ++k) q0.set(2 * k, Rational(3 * k));
    bracket.set(0, q0);
    bracket.set(1, PLaurent::from_p_coeffs({{1, Rational(3)},
                                            {-1, Rational(3)}}));
    bracket.set(2, PLaurent::from_p_coeffs({{2, Rational(6)},
                                            {1, Rational(3)},
                                            {-1, Rational(3)},
                                            {-2, Rational(6)}}));
    QSeries<PLaurent> diff = closed.series - (k4 * bracket);
    QSeries<PLaurent> expected = qseries_plaurent(2);
    expected.set(2, k4[0].scaled(Rational(12)));
    CHECK(compare_series(diff, expected).equal);
}

TEST_CASE("Behrend-weighted series") {
    DTSeries one = dt_1(4, 24);
    CHECK(one.sign == PSign::MinusP);
    CHECK(one.series[0] == PLaurent::from_p_coeffs({{1, Rational(-1)},
                                                    {0, Rational(2)},
                                                    {-1, Rational(-1)}}));
    CHECK(one.series == (-dt_hat_1(4, 24).series));

    DTSeries two = dt_2(6, 24);
    DTSeries two_theta = dt_2_via_theta(6, 24);
    CHECK(compare_series(two.series, two_theta.series).equal);
}

TEST_CASE("kernel identity holds and reports its region") {
    VerifyReport r = modular_identity_check(8, 24);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.region.find("q<=8") != std::string::npos);
}

TEST_CASE("rearranged kernel identity has finite support in the window") {
    // (3/2) K^4 wp agrees on its trusted region with the finite value
    // (3/8) K(p^2,q^2)^2 - (1/4) theta_D4 K^4, whose support stays inside
    // the shrunken window at every q-order.
    int qmax = 6, w = 24;
    QSeries<PLaurent> kernel = theta_K_pq(qmax, w);
    QSeries<PLaurent> ksq = kernel * kernel;
    QSeries<PLaurent> k4 = ksq * ksq;
    QSeries<PLaurent> windowed =
        (k4 * weierstrass_p(qmax, w)).scaled(Rational(3, 2));
    QSeries<PLaurent> finite =
        dilate(ksq, 2, 2).scaled(Rational(3, 8)) -
        mul_scalar_series(k4, theta_d4(qmax)).scaled(Rational(1, 4));
    CHECK(compare_series(windowed, finite).equal);
    for (int d = 0; d <= qmax; ++d) CHECK_FALSE(finite[d].is_window());
    // Where the trusted region still covers the full finite support, the
    // windowed value is genuinely a Laurent polynomial.
    for (int d = 0; d <= 4; ++d)
        CHECK(finite[d].max_abs_exponent() <= windowed[d].validity());
}

TEST_CASE("partition-function coefficients are symmetric in p") {
    for (const DTSeries& dt : {dt_hat_2_closed(5, 24), dt_2(5, 24)}) {
        for (int d = 0; d <= 5; ++d)
            CHECK(dt.series[d].symmetry() == WSymmetry::Symmetric);
    }
}

TEST_CASE("GW side has even non-negative u-powers starting at u^2") {
    QSeries<USeries> gw = gw_from_dt(dt_1(4, 24), 10);
    for (int d = 0; d <= 4; ++d) {
        CHECK(gw[d][0] == Rational(0));
        if (!gw[d].is_zero()) CHECK(gw[d].parity() == UParity::Even);
    }
}

TEST_CASE("kernel identity q^0 spot check") {
    // 3 (K^4 wp)|q0 + (1/4) K^4|q0 vs (3/2)(K^4 wp)|q0 + (3/8)(p^2-2+p^-2),
    // compared on the shrunken trusted window.
    PLaurent kq0 = theta_K_pq(0, 8)[0];
    PLaurent k4q0 = kq0 * kq0;
    k4q0 = k4q0 * k4q0;
    PLaurent wp0 = weierstrass_p(0, 24)[0];
    PLaurent lhs = (k4q0 * wp0).scaled(Rational(3)) + k4q0.scaled(Rational(1, 4));
    PLaurent rhs = (k4q0 * wp0).scaled(Rational(3, 2)) +
                   PLaurent::from_p_coeffs({{2, Rational(3, 8)},
                                            {0, Rational(-3, 4)},
                                            {-2, Rational(3, 8)}});
    CHECK(lhs.is_window());
    CHECK(lhs.validity() == 20);
    CHECK(lhs == rhs);
}

TEST_CASE("GW side of the degree-one theory") {
    QSeries<USeries> gw = gw_from_dt(dt_1(3, 24), 8);
    CHECK(coeff(gw, 0, 2) == Rational(1));
    CHECK(coeff(gw, 0, 4) == Rational(-1, 12));
    for (int d = 0; d <= 3; ++d) CHECK(coeff(gw, d, 0) == Rational(0));
    // Genus 3 coefficients are twice the divisor sums.
    for (int d = 1; d <= 3; ++d)
        CHECK(coeff(gw, d, 4) == Rational(2 * divisor_sigma(d)));
}

TEST_CASE("type (1,1,d) series in the y variable") {
    DTSeries gw11 = gw_11d_series(5, 24);
    CHECK(gw11.series[0] == PLaurent::from_p_coeffs({{1, Rational(1)},
                                                     {0, Rational(2)},
                                                     {-1, Rational(1)}}));
    CHECK(gw11.series[1] == PLaurent::from_p_coeffs({{2, Rational(2)},
                                                     {1, Rational(8)},
                                                     {0, Rational(12)},
                                                     {-1, Rational(8)},
                                                     {-2, Rational(2)}}));
    CHECK(gw11.series == sign_flip_p(-dt_hat_1(5, 24).series));
}

TEST_CASE("threefold multiple cover rule") {
    CHECK(mc_threefold_f(3, 2, 2) == Rational(30));
    for (long d = 1; d <= 4; ++d) {
        CHECK(mc_threefold_f(3, 1, d) == Rational(2 * divisor_sigma(d)));
        QSeries<USeries> gw = gw_from_dt(dt_1((int)d, 2 * (int)d + 4), 4);
        CHECK(mc_threefold_f(3, 1, d) == coeff(gw, (int)d, 4));
    }
    // The two multiple-cover routes agree on (1, d', d) classes.
    for (int g = 2; g <= 4; ++g)
        for (long dp = 1; dp <= 3; ++dp)
            for (long d = 1; d <= 3; ++d)
                CHECK(mc_threefold_f(g, dp, d) ==
                      n_g_imprimitive(g, ThreefoldClassType(1, dp, d)));
}

TEST_CASE("multiple-cover weight function") {
    CHECK(n_mc_factor(1, 1, 7, 1) == 1);
    CHECK(n_mc_factor(2, 2, 4, 2) == 5);
    CHECK(n_mc_factor(2, 2, 1, 2) == 1);
    CHECK_THROWS_AS(n_mc_factor(1, 1, 3, 2), precondition_error);
}

TEST_CASE("imprimitive genus counts") {
    CHECK(n_g_imprimitive(3, ThreefoldClassType(2, 2, 1)) == Rational(30));
    CHECK(n_g_imprimitive(3, ThreefoldClassType(1, 2, 2)) == Rational(30));
    for (long d = 1; d <= 4; ++d)
        CHECK(n_g_imprimitive(3, ThreefoldClassType(1, 1, d)) ==
              Rational(2 * divisor_sigma(d)));
    CHECK(n_g_imprimitive(3, ThreefoldClassType(1, 2, 2)) ==
          Rational(2 * nu_subgroup_formula({1, 2, 2})));
    CHECK_THROWS_AS(ThreefoldClassType(0, 1, 1), precondition_error);
}

TEST_CASE("DT multiple cover and degenerate values") {
    // k = 1 only: the value reads off dt_1 directly.
    DTSeries base = dt_1(3, 24);
    for (long n = -2; n <= 2; ++n) {
        Rational direct = Rational((n % 2 == 0) ? 1 : -1) *
                          coeff(base.series, 3, (int)n);
        CHECK(dt_mc(n, ThreefoldClassType(1, 1, 3)) == direct);
    }
    CHECK(dt_degenerate(2, 2) == Rational(-5, 2));
    for (long d = 0; d <= 5; ++d) CHECK(dt_degenerate(1, d) == Rational(1));
    CHECK(dt_degenerate(3, 3) == Rational(10, 3));
    CHECK_THROWS_AS(dt_degenerate(0, 1), precondition_error);

    // Imprimitive class (2,2,1) at n = 2: the k = 1 term reads the
    // degree-4 primitive, the k = 2 term contributes -(1/2) DT_{1,(1,1,1)}.
    DTSeries deep = dt_1(4, 24);
    Rational k1 = coeff(deep.series, 4, 2);       // DT_{2,(1,1,4)}
    Rational dt_1_1 = -coeff(deep.series, 1, 1);  // DT_{1,(1,1,1)}
    CHECK(dt_mc(2, ThreefoldClassType(2, 2, 1)) ==
          k1 + Rational(-1, 2) * dt_1_1);
}

TEST_CASE("diagonal translation classes") {
    CHECK(diagonal_count(4) == 36);
    CHECK(diagonal_count(3) == 0);
    CHECK(diagonal_count(2) == 12);
    CHECK(diagonal_count(0) == 0);
}

TEST_CASE("f/g consistency across degrees") {
    VerifyReport r = consistency_fg(4, 24);
    CHECK(r.verdict == Verdict::Pass);
    // d = 0 even case by direct arithmetic: g_0 = f_0 + f_0(p^2)/2 with
    // g_0 = (3/2)(K^4 wp)|q0 + (3/8) f_0(p^2).
    PLaurent kq0 = theta_K_pq(0, 8)[0];
    PLaurent f0 = kq0 * kq0;
    PLaurent k4q0 = f0 * f0;
    PLaurent g0 = (k4q0 * weierstrass_p(0, 24)[0]).scaled(Rational(3, 2)) +
                  p_dilate(f0, 2).scaled(Rational(3, 8));
    PLaurent expect = f0 + p_dilate(f0, 2).scaled(Rational(1, 2));
    CHECK(g0 == expect);
}

TEST_CASE("sign conversions go through sign_flip_p exactly once") {
    DTSeries plain = dt_hat_1(3, 24);
    DTSeries minus = to_minus_p(plain);
    CHECK(minus.sign == PSign::MinusP);
    CHECK(to_plain_p(minus).series == plain.series);
    CHECK(to_minus_p(minus).series == minus.series);
}

}
