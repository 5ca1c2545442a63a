#pragma once
// Exact truncated Laurent series and multivariate polynomial/series
// arithmetic: substrate for g(z), the Birkhoff recursion, G_r and the
// generating-function identity checks.

#include "deszeta/numcore.hpp"

#include <map>
#include <vector>

namespace deszeta {

struct PoleCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One-variable Laurent series, exact coefficients, truncated at `order`
// (coefficients for exponents > order are unknown and never stored).
struct TruncatedLaurent {
    std::map<int, Rational> coeffs;  // exponent -> nonzero coefficient
    int order = 0;

    // Deepest pole accepted by laurent_mul; per-value and inherited by results
    // (the deeper of the two operands' caps).
    static constexpr int default_pole_cap = 8;
    int pole_cap = default_pole_cap;

    Rational coeff(int e) const {
        auto it = coeffs.find(e);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    int min_exp() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }
    void set(int e, const Rational& c) {
        if (c == 0)
            coeffs.erase(e);
        else
            coeffs[e] = c;
    }
};

TruncatedLaurent laurent_add(const TruncatedLaurent& a, const TruncatedLaurent& b);
TruncatedLaurent laurent_sub(const TruncatedLaurent& a, const TruncatedLaurent& b);
TruncatedLaurent laurent_scale(const TruncatedLaurent& a, const Rational& c);
// Exact product truncated to min(a.order, b.order); pole depths add.
// Throws PoleCapError when the product's pole would exceed pole_cap.
TruncatedLaurent laurent_mul(const TruncatedLaurent& a, const TruncatedLaurent& b);
// Termwise d/dz; resulting order is a.order - 1. Throws OrderError if order < 1.
TruncatedLaurent laurent_dz(const TruncatedLaurent& a);
TruncatedLaurent pole_part(const TruncatedLaurent& a);     // exponents < 0
TruncatedLaurent regular_part(const TruncatedLaurent& a);  // exponents >= 0

// exp(c*z) to order N.
TruncatedLaurent exp_series(const Rational& c, int N);
// Power-series division num/den to order N; den must have nonzero constant term.
TruncatedLaurent ps_div(const TruncatedLaurent& num, const TruncatedLaurent& den, int N);

// g(z) = e^z((1+z)-e^z)/(e^z-1)^2 as a power series to order N (the removable
// singularity handled by factoring z^2 from numerator and denominator).
// Coefficient of z^k equals deszeta_1(-k)/k!.
TruncatedLaurent expand_g(int N);
// h(x) = ((1-x)e^x-1)/(e^x-1)^2 = g(-x); factor of the generating identity.
TruncatedLaurent expand_h(int N);

// Exact multivariate Laurent polynomial (negative exponents allowed).
struct MultiPoly {
    int nvars = 0;
    std::map<std::vector<int>, Rational> terms;
    void add(const std::vector<int>& e, const Rational& c) {
        auto it = terms.find(e);
        Rational s = (it == terms.end() ? Rational(0) : it->second) + c;
        if (s == 0) {
            if (it != terms.end()) terms.erase(it);
        } else
            terms[e] = s;
    }
};

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b);

// Multivariate power series truncated by total degree.
struct MultiSeries {
    int nvars = 0;
    int total_order = 0;
    std::map<std::vector<int>, Rational> terms;
    void add(const std::vector<int>& e, const Rational& c) {
        auto it = terms.find(e);
        Rational s = (it == terms.end() ? Rational(0) : it->second) + c;
        if (s == 0) {
            if (it != terms.end()) terms.erase(it);
        } else
            terms[e] = s;
    }
};

MultiSeries ms_mul(const MultiSeries& a, const MultiSeries& b);

// f evaluated at the sum of the named variables (0-based indices into an
// nvars-variable ring), expanded multinomially to total degree N.
// Throws DomainError if f has a pole part.
MultiSeries mv_substitute_sum(const TruncatedLaurent& f, const std::vector<int>& vars,
                              int nvars, int total_order);

}  // namespace deszeta
