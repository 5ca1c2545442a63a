#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deszeta/renorm.hpp"

using namespace deszeta;

namespace {

Word W(std::vector<int> exps) {
    Word w;
    w.exps = std::move(exps);
    return w;
}

TruncatedLaurent mono(int e, const Rational& c, int order) {
    TruncatedLaurent r;
    r.order = order;
    r.set(e, c);
    return r;
}

CharacterSpec spec_g(int order) {
    CharacterSpec s;
    s.f = expand_g(order);
    s.f.pole_cap = 32;
    s.order = order;
    return s;
}

CharacterSpec spec_poled(int order) {
    CharacterSpec s = spec_g(order);
    s.f.set(-1, Rational(1));  // g(z) + z^{-1}
    return s;
}

// all depth-r compositions of total weight <= wmax (entries >= 0)
std::vector<IndexVector> grid(int r, int wmax) {
    std::vector<IndexVector> out;
    IndexVector k(r, 0);
    while (true) {
        long w = 0;
        for (long x : k) w += x;
        if (w <= wmax) out.push_back(k);
        int pos = 0;
        while (pos < r && k[pos] == wmax) k[pos++] = 0;
        if (pos == r) break;
        ++k[pos];
    }
    return out;
}

}  // namespace

TEST_CASE("phi_eval: pinned evaluations") {
    CharacterSpec s = spec_g(8);
    TruncatedLaurent f = s.f;

    TruncatedLaurent py = phi_eval(W({0}), s);  // phi(y) = f
    for (int e = 0; e <= py.order; ++e) CHECK(py.coeff(e) == f.coeff(e));

    TruncatedLaurent pdy = phi_eval(W({-1}), s);  // phi(dy) = f'
    TruncatedLaurent fd = laurent_dz(f);
    for (int e = 0; e <= pdy.order; ++e) CHECK(pdy.coeff(e) == fd.coeff(e));

    TruncatedLaurent pyy = phi_eval(W({0, 0}), s);  // phi(yy) = f*f
    TruncatedLaurent ff = laurent_mul(f, f);
    for (int e = 0; e <= pyy.order; ++e) CHECK(pyy.coeff(e) == ff.coeff(e));

    CHECK_THROWS_AS(phi_eval(W({1}), s), DomainError);   // j letter
    CharacterSpec tiny = spec_g(1);
    CHECK_THROWS_AS(phi_eval(W({-2, -3}), tiny), OrderError);
}

TEST_CASE("birkhoff: power-series character decomposes trivially") {
    CharacterSpec s = spec_g(8);
    for (auto& k : grid(2, 3)) {
        std::vector<long> kl(k.begin(), k.end());
        Word w = word_of_dexps(kl);
        BirkhoffPair p = birkhoff_decompose(w, s);
        CHECK(p.minus.coeffs.empty());
        TruncatedLaurent ph = phi_eval(w, s);
        for (int e = 0; e <= std::min(p.plus.order, ph.order); ++e)
            CHECK(p.plus.coeff(e) == ph.coeff(e));
    }
}

TEST_CASE("birkhoff: pinned pole cases") {
    // f = z^{-1}: phi_-(y) = -z^{-1}, phi_+(y) = 0
    CharacterSpec s;
    s.f = mono(-1, 1, 6);
    s.f.pole_cap = 32;
    s.order = 6;
    BirkhoffPair p = birkhoff_decompose(W({0}), s);
    CHECK(p.minus.coeff(-1) == -1);
    CHECK(p.minus.coeffs.size() == 1);
    CHECK(p.plus.coeffs.empty());

    // f = z^{-1} + c: constant term of phi_+(yy) is c^2
    CharacterSpec sc;
    sc.f = mono(-1, 1, 6);
    sc.f.set(0, Rational(3));
    sc.f.pole_cap = 32;
    sc.order = 6;
    BirkhoffPair pyy = birkhoff_decompose(W({0, 0}), sc);
    CHECK(pyy.plus.coeff(0) == 9);
    CHECK(pyy.minus.min_exp() >= -sc.f.pole_cap);
    for (auto& [e, c] : pyy.minus.coeffs) CHECK(e < 0);
    for (auto& [e, c] : pyy.plus.coeffs) CHECK(e >= 0);
}

TEST_CASE("F_value: depth 1 is k! times the regular coefficient") {
    // phi_+(d^k y) = d^k f_{>=0}, whose constant term is k! [z^k] f
    CharacterSpec s = spec_g(10), sp = spec_poled(10);
    for (long k = 0; k <= 6; ++k) {
        Rational want = s.f.coeff(static_cast<int>(k)) * Rational(factorial(k));
        CHECK(F_value({k}, s) == want);
        CHECK(F_value({k}, sp) == want);  // pole drops out
    }
    CHECK_THROWS_AS(F_value({-1}, s), DomainError);
}

TEST_CASE("F_value: independent of the pole part") {
    CharacterSpec s = spec_g(12), sp = spec_poled(12);
    for (int r = 1; r <= 3; ++r)
        for (auto& k : grid(r, 4 - r + 1)) CHECK(F_value(k, s) == F_value(k, sp));
}

TEST_CASE("F_value: shuffle recurrence in the last argument") {
    // F(k1..kr) = sum_{i+j=kr} binom(kr,i) F(i) F(k1..k_{r-2}, k_{r-1}+j)
    CharacterSpec s = spec_poled(14);
    auto rec = [&](const IndexVector& k) {
        long kr = k.back();
        IndexVector head(k.begin(), k.end() - 1);
        Rational acc = 0;
        for (long i = 0; i <= kr; ++i) {
            long j = kr - i;
            IndexVector h = head;
            h.back() += j;
            acc += Rational(binom(kr, i)) * F_value({i}, s) * F_value(h, s);
        }
        return acc;
    };
    for (int r = 2; r <= 3; ++r)
        for (auto& k : grid(r, 5 - r))
            CHECK(F_value(k, s) == rec(k));
}

TEST_CASE("check_F_generating: exact generating comparison") {
    CharacterSpec s = spec_g(12), sp = spec_poled(12);
    CHECK(check_F_generating(1, s, 6).ok);
    CHECK(check_F_generating(1, sp, 6).ok);
    CHECK(check_F_generating(2, s, 4).ok);
    CHECK(check_F_generating(2, sp, 4).ok);
    CHECK(check_F_generating(3, sp, 3).ok);
    CHECK_THROWS_AS(check_F_generating(4, s, 3), DomainError);
}

TEST_CASE("orientation helpers") {
    CHECK(word_of_dexps({2, 0, 1}) == W({-2, 0, -1}));
    CHECK(reversed_word_for_F({1, 2}) == W({-2, -1}));
    CHECK_THROWS_AS(word_of_dexps({-1}), DomainError);
}
