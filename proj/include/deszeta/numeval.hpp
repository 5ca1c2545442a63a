#pragma once
// High-precision numeric kernel: multiple polylogarithms at integer indices,
// convergent MZVs, LiCombination evaluation, deszeta at arbitrary integer
// points via t->1 extrapolation, and independent quadrature/differencing
// oracles.

#include "deszeta/licomb.hpp"

#include <optional>
#include <string>
#include <vector>

namespace deszeta {

enum class Route { series, extrapolation_A, combination_B, quadrature_oracle, exact };

std::string route_name(Route r);

struct EvalResult {
    BigFloat value;
    BigFloat err_bound;            // >= 0; rigorous or heuristic, see flag
    Route route = Route::series;
    bool rigorous = false;
    std::optional<Rational> exact;  // set when the value is exactly rational
};

// Li_{k1..kr}(t) by nested summation with cumulative inner prefix sums;
// tail bounded by a polynomial-times-geometric ratio bound. The stop rule is
// bound <= tail_tol * max(1, |partial|).
EvalResult li_eval(const IndexVector& w, const BigFloat& t, const PrecisionCtx& ctx);

// sum of c * (-log t)^q/q! * Li_w(t) over the stored terms.
EvalResult licomb_eval(const LiCombination& c, const BigFloat& t, const PrecisionCtx& ctx);

// Euler-Zagier MZF at a point of the absolute-convergence domain D
// (depth <= 3). Real (BigFloat) entries allowed. Throws DomainError outside D.
EvalResult mzv_eval(const std::vector<BigFloat>& s, const PrecisionCtx& ctx);
EvalResult mzv_eval(const IndexVector& s, const PrecisionCtx& ctx);

enum class RouteChoice { automatic, A, B, exact_only };

// deszeta_r(k) at an arbitrary integer point. All-non-positive k delegates to
// the exact Bernoulli route; otherwise route B (finite MZF combination, when
// every shifted argument is evaluable) with fallback to route A (t->1
// extrapolation of Z(k;t) on t_j = 1-2^{-j} with Neville acceleration).
EvalResult deszeta_eval(const IndexVector& k, const PrecisionCtx& ctx,
                        RouteChoice route = RouteChoice::automatic);

// Depth reduction via the trailing-argument binomial recurrence (k_r <= 0).
EvalResult deszeta_trailing_reduction(const IndexVector& k, const PrecisionCtx& ctx);

// Literal nested quadrature (J = int_0^t dz/z) / central-difference (D)
// evaluation of desLi, from the closed-form desLi(0). Oracle quality: ~1e-6.
// Depth <= 2 and |k_i| <= 2 only.
EvalResult desli_quadrature_oracle(const IndexVector& k, const BigFloat& t,
                                   const PrecisionCtx& ctx);

// (s-1)*zeta_2(n,s) - zeta(n) at s = 1+eps; magnitude should be O(eps).
EvalResult lemma_limit_check(int n, double eps, const PrecisionCtx& ctx);

}  // namespace deszeta
