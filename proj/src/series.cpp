#include "deszeta/series.hpp"

#include <algorithm>

namespace deszeta {

TruncatedLaurent laurent_add(const TruncatedLaurent& a, const TruncatedLaurent& b) {
    TruncatedLaurent r;
    r.order = std::min(a.order, b.order);
    r.pole_cap = std::max(a.pole_cap, b.pole_cap);
    for (auto& [e, c] : a.coeffs)
        if (e <= r.order) r.set(e, c);
    for (auto& [e, c] : b.coeffs)
        if (e <= r.order) r.set(e, r.coeff(e) + c);
    return r;
}

TruncatedLaurent laurent_sub(const TruncatedLaurent& a, const TruncatedLaurent& b) {
    return laurent_add(a, laurent_scale(b, Rational(-1)));
}

TruncatedLaurent laurent_scale(const TruncatedLaurent& a, const Rational& c) {
    TruncatedLaurent r;
    r.order = a.order;
    r.pole_cap = a.pole_cap;
    if (c == 0) return r;
    for (auto& [e, x] : a.coeffs) r.coeffs[e] = x * c;
    return r;
}

TruncatedLaurent laurent_mul(const TruncatedLaurent& a, const TruncatedLaurent& b) {
    TruncatedLaurent r;
    // The coefficient of z^e in a*b needs a-coefficients up to e - min_exp(b)
    // and vice versa, so a pole in one factor lowers the trustworthy order of
    // the product below min(order_a, order_b).
    r.order = std::min(a.order + std::min(b.min_exp(), 0),
                       b.order + std::min(a.min_exp(), 0));
    r.pole_cap = std::max(a.pole_cap, b.pole_cap);
    if (a.min_exp() + b.min_exp() < -r.pole_cap)
        throw PoleCapError("laurent_mul: pole depth exceeds pole_cap");
    for (auto& [ea, ca] : a.coeffs)
        for (auto& [eb, cb] : b.coeffs) {
            int e = ea + eb;
            if (e <= r.order) r.set(e, r.coeff(e) + ca * cb);
        }
    return r;
}

TruncatedLaurent laurent_dz(const TruncatedLaurent& a) {
    if (a.order < 1) throw OrderError("laurent_dz: truncation order must be >= 1");
    TruncatedLaurent r;
    r.order = a.order - 1;
    r.pole_cap = a.pole_cap;
    for (auto& [e, c] : a.coeffs)
        if (e != 0) r.set(e - 1, c * e);
    return r;
}

TruncatedLaurent pole_part(const TruncatedLaurent& a) {
    TruncatedLaurent r;
    r.order = a.order;
    r.pole_cap = a.pole_cap;
    for (auto& [e, c] : a.coeffs)
        if (e < 0) r.coeffs[e] = c;
    return r;
}

TruncatedLaurent regular_part(const TruncatedLaurent& a) {
    TruncatedLaurent r;
    r.order = a.order;
    r.pole_cap = a.pole_cap;
    for (auto& [e, c] : a.coeffs)
        if (e >= 0) r.coeffs[e] = c;
    return r;
}

TruncatedLaurent exp_series(const Rational& c, int N) {
    TruncatedLaurent r;
    r.order = N;
    Rational term = 1;
    for (int n = 0; n <= N; ++n) {
        if (n > 0) term = term * c / n;
        r.set(n, term);
    }
    return r;
}

TruncatedLaurent ps_div(const TruncatedLaurent& num, const TruncatedLaurent& den, int N) {
    if (den.coeff(0) == 0 || den.min_exp() < 0)
        throw DomainError("ps_div: denominator must have nonzero constant term");
    if (num.min_exp() < 0) throw DomainError("ps_div: numerator must be a power series");
    TruncatedLaurent r;
    r.order = N;
    Rational d0 = den.coeff(0);
    for (int n = 0; n <= N; ++n) {
        Rational s = num.coeff(n);
        for (int j = 1; j <= n; ++j) s -= den.coeff(j) * r.coeff(n - j);
        r.set(n, s / d0);
    }
    return r;
}

TruncatedLaurent expand_g(int N) {
    int M = N + 2;
    // numerator e^z(1+z) - e^{2z} and denominator (e^z-1)^2 both carry a z^2
    // factor; shift both down by 2 and divide as power series.
    TruncatedLaurent ez = exp_series(1, M), e2z = exp_series(2, M);
    TruncatedLaurent num;
    num.order = M;
    for (int n = 0; n <= M; ++n) {
        Rational c = ez.coeff(n) - e2z.coeff(n);
        if (n >= 1) c += ez.coeff(n - 1);  // z * e^z
        num.set(n, c);
    }
    TruncatedLaurent em1 = ez;
    em1.set(0, Rational(0));
    TruncatedLaurent den = laurent_mul(em1, em1);
    TruncatedLaurent num2, den2;
    num2.order = den2.order = N;
    for (auto& [e, c] : num.coeffs)
        if (e >= 2 && e - 2 <= N) num2.set(e - 2, c);
    for (auto& [e, c] : den.coeffs)
        if (e >= 2 && e - 2 <= N) den2.set(e - 2, c);
    return ps_div(num2, den2, N);
}

TruncatedLaurent expand_h(int N) {
    // h(x) = g(-x)
    TruncatedLaurent g = expand_g(N), r;
    r.order = N;
    for (auto& [e, c] : g.coeffs) r.set(e, (e % 2 == 0) ? c : -c);
    return r;
}

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    r.nvars = a.nvars;
    for (auto& [ea, ca] : a.terms)
        for (auto& [eb, cb] : b.terms) {
            std::vector<int> e(ea);
            for (int i = 0; i < r.nvars; ++i) e[i] += eb[i];
            r.add(e, ca * cb);
        }
    return r;
}

namespace {
int total_deg(const std::vector<int>& e) {
    int s = 0;
    for (int x : e) s += x;
    return s;
}
}  // namespace

MultiSeries ms_mul(const MultiSeries& a, const MultiSeries& b) {
    MultiSeries r;
    r.nvars = a.nvars;
    r.total_order = std::min(a.total_order, b.total_order);
    for (auto& [ea, ca] : a.terms)
        for (auto& [eb, cb] : b.terms) {
            std::vector<int> e(ea);
            for (int i = 0; i < r.nvars; ++i) e[i] += eb[i];
            if (total_deg(e) <= r.total_order) r.add(e, ca * cb);
        }
    return r;
}

MultiSeries mv_substitute_sum(const TruncatedLaurent& f, const std::vector<int>& vars,
                              int nvars, int total_order) {
    if (f.min_exp() < 0)
        throw DomainError("mv_substitute_sum: pole part present, substitution unsupported");
    MultiSeries r;
    r.nvars = nvars;
    r.total_order = total_order;
    // (z_{i1}+...+z_im)^k expanded multinomially, degree by degree:
    // powers[k] holds the expansion of the k-th power.
    MultiSeries power;  // current power of the sum
    power.nvars = nvars;
    power.total_order = total_order;
    power.add(std::vector<int>(nvars, 0), Rational(1));
    MultiSeries lin;
    lin.nvars = nvars;
    lin.total_order = total_order;
    for (int v : vars) {
        std::vector<int> e(nvars, 0);
        e[v] = 1;
        lin.add(e, Rational(1));
    }
    for (int k = 0; k <= std::min(f.order, total_order); ++k) {
        if (k > 0) power = ms_mul(power, lin);
        Rational c = f.coeff(k);
        if (c == 0) continue;
        for (auto& [e, pc] : power.terms) r.add(e, pc * c);
    }
    return r;
}

}  // namespace deszeta
