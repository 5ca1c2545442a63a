#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deszeta/numeval.hpp"

using namespace deszeta;
namespace mp = boost::multiprecision;

namespace {

PrecisionCtx ctx_bits(unsigned bits) {
    PrecisionCtx c;
    c.bits = bits;
    set_working_precision(bits + 32);
    return c;
}

double err(const BigFloat& a, const BigFloat& b) {
    return static_cast<double>(mp::abs(a - b));
}

}  // namespace

TEST_CASE("li_eval: pinned rational points at t = 1/2") {
    PrecisionCtx ctx = ctx_bits(192);
    BigFloat t(0.5);
    CHECK(err(li_eval({0}, t, ctx).value, BigFloat(1)) < 1e-28);    // t/(1-t)
    CHECK(err(li_eval({-1}, t, ctx).value, BigFloat(2)) < 1e-28);   // t/(1-t)^2
    CHECK(err(li_eval({-2}, t, ctx).value, BigFloat(6)) < 1e-28);   // t(1+t)/(1-t)^3
    BigFloat l2 = mp::log(BigFloat(2));
    CHECK(err(li_eval({1}, t, ctx).value, l2) < 1e-28);             // -log(1-t)
    CHECK(err(li_eval({1, 1}, t, ctx).value, l2 * l2 / 2) < 1e-28); // log(2)^2/2
}

TEST_CASE("li_eval: non-positive indices match rational closed forms") {
    // Li_{-k}(t) = (t d/dt)^k [t/(1-t)] is rational; compare at t = 1/3
    PrecisionCtx ctx = ctx_bits(192);
    ctx.tail_tol = 1e-50;  // push the stop rule below the comparison tolerance
    BigFloat t = BigFloat(1) / 3;
    // closed forms: Li_0 = t/(1-t), Li_{-1} = t/(1-t)^2,
    // Li_{-2} = t(1+t)/(1-t)^3, Li_{-3} = t(1+4t+t^2)/(1-t)^4
    BigFloat u = 1 - t;
    CHECK(err(li_eval({0}, t, ctx).value, t / u) < 1e-45);
    CHECK(err(li_eval({-1}, t, ctx).value, t / (u * u)) < 1e-45);
    CHECK(err(li_eval({-2}, t, ctx).value, t * (1 + t) / (u * u * u)) < 1e-45);
    CHECK(err(li_eval({-3}, t, ctx).value, t * (1 + 4 * t + t * t) / (u * u * u * u)) < 1e-45);
}

TEST_CASE("li_eval: domain and convergence guards") {
    PrecisionCtx ctx = ctx_bits(128);
    ctx.max_terms = 50;
    CHECK_THROWS_AS(li_eval({-3}, BigFloat("0.999"), ctx), NonConvergenceError);
}

TEST_CASE("licomb_eval: pinned Z(k; 1/2) values") {
    PrecisionCtx ctx = ctx_bits(192);
    BigFloat t(0.5), l2 = mp::log(BigFloat(2));
    CHECK(err(licomb_eval(Zfull({1}), t, ctx).value, -l2) < 1e-28);
    CHECK(err(licomb_eval(Zfull({0}), t, ctx).value, 1 - 2 * l2) < 1e-28);
}

TEST_CASE("mzv_eval: pinned convergent values") {
    PrecisionCtx ctx = ctx_bits(192);
    BigFloat pi;
    mpfr_const_pi(pi.backend().data(), MPFR_RNDN);
    CHECK(err(mzv_eval(IndexVector{2}, ctx).value, pi * pi / 6) < 1e-45);

    // zeta_2(1,2) = zeta(3)
    BigFloat z3 = mzv_eval(IndexVector{3}, ctx).value;
    CHECK(err(mzv_eval(IndexVector{1, 2}, ctx).value, z3) < 1e-28);

    // zeta_2(2,2) = (zeta(2)^2 - zeta(4))/2
    BigFloat z2 = mzv_eval(IndexVector{2}, ctx).value;
    BigFloat z4 = mzv_eval(IndexVector{4}, ctx).value;
    CHECK(err(mzv_eval(IndexVector{2, 2}, ctx).value, (z2 * z2 - z4) / 2) < 1e-28);

    // depth 3: zeta_3(1,1,2) = zeta(4)/4? -- pin instead the classical
    // zeta_3(2,2,2) = zeta(2)^3/6 - zeta(2)zeta(4)/2 + zeta(6)/3
    BigFloat z6 = mzv_eval(IndexVector{6}, ctx).value;
    BigFloat want = z2 * z2 * z2 / 6 - z2 * z4 / 2 + z6 / 3;
    CHECK(err(mzv_eval(IndexVector{2, 2, 2}, ctx).value, want) < 1e-28);
}

TEST_CASE("mzv_eval: domain guards") {
    PrecisionCtx ctx = ctx_bits(128);
    CHECK_THROWS_AS(mzv_eval(IndexVector{1}, ctx), DomainError);       // s = 1 pole
    CHECK_THROWS_AS(mzv_eval(IndexVector{2, 1}, ctx), DomainError);    // s2 = 1
    CHECK_THROWS_AS(mzv_eval(IndexVector{0, 2}, ctx), DomainError);    // s1+s2 = 2
}

TEST_CASE("deszeta_eval: exact route for non-positive points") {
    PrecisionCtx ctx = ctx_bits(128);
    EvalResult r = deszeta_eval({0}, ctx);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == Rational(-1, 2));
    CHECK(r.route == Route::exact);

    EvalResult r2 = deszeta_eval({-1, -2}, ctx);
    REQUIRE(r2.exact.has_value());
    CHECK(*r2.exact == Rational(-1, 60));
}

TEST_CASE("deszeta_eval: route B pinned values") {
    PrecisionCtx ctx = ctx_bits(192);
    // deszeta_1(k) = (1-k) zeta(k) for k >= 2
    for (long k = 2; k <= 6; ++k) {
        EvalResult r = deszeta_eval({k}, ctx, RouteChoice::B);
        BigFloat want = BigFloat(1 - k) * mzv_eval(IndexVector{k}, ctx).value;
        CHECK(err(r.value, want) < 1e-28);
        CHECK(r.route == Route::combination_B);
    }
}

TEST_CASE("deszeta_eval: route A extrapolation on divergent-point seeds") {
    PrecisionCtx ctx = ctx_bits(192);
    EvalResult r1 = deszeta_eval({1}, ctx, RouteChoice::A);
    CHECK(err(r1.value, BigFloat(-1)) < 1e-10);
    CHECK(r1.route == Route::extrapolation_A);

    EvalResult r11 = deszeta_eval({1, 1}, ctx, RouteChoice::A);
    CHECK(err(r11.value, BigFloat(0.5)) < 1e-10);
}

TEST_CASE("deszeta_eval: routes A and B agree where both apply") {
    PrecisionCtx ctx = ctx_bits(192);
    EvalResult a = deszeta_eval({3, 2}, ctx, RouteChoice::A);
    EvalResult b = deszeta_eval({3, 2}, ctx, RouteChoice::B);
    CHECK(err(a.value, b.value) < 1e-10);
}

TEST_CASE("deszeta_trailing_reduction: pinned reductions") {
    PrecisionCtx ctx = ctx_bits(192);
    // deszeta_2(1,-1) = 5/12
    EvalResult r = deszeta_trailing_reduction({1, -1}, ctx);
    CHECK(err(r.value, BigFloat(5) / 12) < 1e-10);

    // trailing recurrence: deszeta_2(2,0) = deszeta_1(2) * deszeta_1(0)
    //                                     = (-zeta(2)) * (-1/2) = zeta(2)/2
    EvalResult r20 = deszeta_trailing_reduction({2, 0}, ctx);
    BigFloat want = mzv_eval(IndexVector{2}, ctx).value / 2;
    CHECK(err(r20.value, want) < 1e-30);

    // all-non-positive: agrees with the exact route
    EvalResult rnn = deszeta_trailing_reduction({-1, -2}, ctx);
    CHECK(err(rnn.value, to_bigfloat(Rational(-1, 60))) < 1e-30);
}

TEST_CASE("desli_quadrature_oracle: depth-1 spot checks against the series route") {
    PrecisionCtx ctx = ctx_bits(192);
    BigFloat t(0.5), l2 = mp::log(BigFloat(2));
    CHECK(err(desli_quadrature_oracle({0}, t, ctx).value, 1 - 2 * l2) < 1e-6);
    CHECK(err(desli_quadrature_oracle({1}, t, ctx).value,
              licomb_eval(Zfull({1}), t, ctx).value) < 1e-6);
    CHECK(err(desli_quadrature_oracle({-1}, t, ctx).value,
              licomb_eval(Zfull({-1}), t, ctx).value) < 1e-6);
}

TEST_CASE("lemma_limit_check: defect is O(eps)") {
    PrecisionCtx ctx = ctx_bits(192);
    double d1 = static_cast<double>(mp::abs(lemma_limit_check(3, 1e-4, ctx).value));
    CHECK(d1 <= 1e-3);
    double d2 = static_cast<double>(mp::abs(lemma_limit_check(2, 1e-5, ctx).value));
    CHECK(d2 <= 1e-4);
    // halving eps roughly halves the defect
    double a = static_cast<double>(mp::abs(lemma_limit_check(3, 2e-4, ctx).value));
    double b = static_cast<double>(mp::abs(lemma_limit_check(3, 1e-4, ctx).value));
    CHECK(b < 0.75 * a);
}
