#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deszeta/numeval.hpp"
#include "deszeta/wordalg.hpp"

#include <cstdlib>
#include <random>

using namespace deszeta;

namespace {

Word W(std::vector<int> exps) {
    Word w;
    w.exps = std::move(exps);
    return w;
}

WordSum one(const Word& w) {
    WordSum s;
    ws_add(s, w, Rational(1));
    return s;
}

Word random_word(std::mt19937_64& rng, int max_depth, int max_abs) {
    std::uniform_int_distribution<int> d(1, max_depth), e(-max_abs, max_abs);
    Word w;
    int dep = d(rng);
    for (int i = 0; i < dep; ++i) w.exps.push_back(e(rng));
    return w;
}

}  // namespace

TEST_CASE("word_normalize: pinned collapses") {
    CHECK(word_normalize({'j', 'd', 'y'}) == one(W({0})));    // jd cancels
    CHECK(word_normalize({'y', 'j'}).empty());                // trailing j: in T
    CHECK(word_normalize({'d', 'd', 'y', 'j', 'y'}) == one(W({-2, 1})));
    CHECK(word_normalize({}) == one(Word{}));                 // unit
}

TEST_CASE("shuffle0: pinned products") {
    CHECK(shuffle0(W({0}), W({0})) == one(W({0, 0})));  // y sh y = yy, coeff 1

    WordSum jj = shuffle0(W({1}), W({1}));              // jy sh jy = 2 jyjy
    REQUIRE(jj.size() == 1);
    CHECK(jj.at(W({1, 1})) == 2);

    WordSum dj = shuffle0(W({-1}), W({1}));             // dy sh jy = dyjy - yy
    REQUIRE(dj.size() == 2);
    CHECK(dj.at(W({-1, 1})) == 1);
    CHECK(dj.at(W({0, 0})) == -1);
}

TEST_CASE("shuffle0: y-power concatenation y^a sh y^b = y^{a+b}") {
    // the y sh y rule emits a single term, so pure-y shuffles never branch
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            WordSum s = shuffle0(W(std::vector<int>(a, 0)), W(std::vector<int>(b, 0)));
            REQUIRE(s.size() == 1);
            CHECK(s.at(W(std::vector<int>(a + b, 0))) == 1);
        }
}

TEST_CASE("shuffle0: unit-neutral, and raw-commutative on j-only words") {
    std::mt19937_64 rng(42);
    for (int rep = 0; rep < 40; ++rep) {
        Word u = random_word(rng, 2, 2), v = random_word(rng, 2, 2);
        CHECK(shuffle0(u, Word{}) == one(u));
        CHECK(shuffle0(Word{}, v) == one(v));
        // the j/y rewriting rules are literally symmetric, so words without
        // d letters commute as raw WordSums (d-words only commute modulo the
        // Leibniz ideal; see the numeric check below)
        for (int& e : u.exps) e = std::abs(e);
        for (int& e : v.exps) e = std::abs(e);
        CHECK(shuffle0(u, v) == shuffle0(v, u));
    }
}

TEST_CASE("shuffle0: commutative modulo L, checked under psi at t = 1/2") {
    set_working_precision(224);
    PrecisionCtx ctx;
    ctx.bits = 192;
    BigFloat t(0.5);
    auto psi_of = [&](const WordSum& s) {
        BigFloat v = 0;
        for (auto& [w, c] : s)
            v += to_bigfloat(c) * licomb_eval(Zfull(word_to_index(w)), t, ctx).value;
        return v;
    };
    std::mt19937_64 rng(4242);
    int raw_differ = 0;
    for (int rep = 0; rep < 12; ++rep) {
        Word u = random_word(rng, 2, 2), v = random_word(rng, 2, 2);
        WordSum a = shuffle0(u, v), b = shuffle0(v, u);
        if (a == b) continue;
        ++raw_differ;
        BigFloat diff = boost::multiprecision::abs(psi_of(a) - psi_of(b));
        CHECK(static_cast<double>(diff) < 1e-20);
    }
    CHECK(raw_differ >= 1);  // the sample must actually exercise the L-quotient
}

TEST_CASE("shuffle0: weight (sum of exponents) is conserved termwise") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        Word u = random_word(rng, 2, 2), v = random_word(rng, 2, 2);
        int wt = 0;
        for (int e : u.exps) wt += e;
        for (int e : v.exps) wt += e;
        for (auto& [w, c] : shuffle0(u, v)) {
            int ww = 0;
            for (int e : w.exps) ww += e;
            CHECK(ww == wt);
        }
    }
}

TEST_CASE("closed_shuffle_depth11: pinned expansions") {
    WordSum s11 = closed_shuffle_depth11(1, 1);  // dy sh jy
    CHECK(s11 == shuffle0(W({-1}), W({1})));
    CHECK(s11.at(W({-1, 1})) == 1);
    CHECK(s11.at(W({0, 0})) == -1);

    WordSum s21 = closed_shuffle_depth11(2, 1);  // d^2y sh jy
    CHECK(s21.at(W({-2, 1})) == 1);
    CHECK(s21.at(W({-1, 0})) == -1);
    CHECK(s21.at(W({0, -1})) == -1);

    WordSum s12 = closed_shuffle_depth11(1, 2);  // dy sh j^2y
    CHECK(s12.at(W({-1, 2})) == 1);
    CHECK(s12.at(W({0, 1})) == -1);
}

TEST_CASE("closed_shuffle_depth11: equals the recursion for k,l <= 4") {
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l)
            CHECK(closed_shuffle_depth11(k, l) == shuffle0(W({-k}), W({l})));
}

TEST_CASE("closed_shuffle_depth21: pinned expansion and recursion equality") {
    WordSum s = closed_shuffle_depth21(1, 1, 1);  // dyjy sh jy
    REQUIRE(s.size() == 2);
    CHECK(s.at(W({-1, 1, 1})) == 2);
    CHECK(s.at(W({0, 0, 1})) == -1);
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 3; ++l)
            for (int m = 1; m <= 3; ++m)
                CHECK(closed_shuffle_depth21(k, l, m) == shuffle0(W({-k, l}), W({m})));
}

TEST_CASE("reduced_coproduct: pinned values") {
    CHECK(reduced_coproduct(W({-3})).empty());  // depth-1 words are primitive
    CHECK(reduced_coproduct(W({0})).empty());

    TensorSum yy = reduced_coproduct(W({0, 0}));
    REQUIRE(yy.size() == 1);  // symmetrized: both orders coincide
    CHECK(yy.at({W({0}), W({0})}) == 2);

    // dyy: four raw terms of coefficient 1 merge symmetrically into
    // dy (x) y and y (x) dy with coefficient 2 each
    TensorSum dyy = reduced_coproduct(W({-1, 0}));
    REQUIRE(dyy.size() == 2);
    CHECK(dyy.at({W({-1}), W({0})}) == 2);
    CHECK(dyy.at({W({0}), W({-1})}) == 2);

    CHECK_THROWS_AS(reduced_coproduct(W({1, 0})), DomainError);  // j letter
}

TEST_CASE("reduced_coproduct: tensor factors stay in H_- and conserve weight") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        Word w = random_word(rng, 3, 2);
        for (int& e : w.exps) e = -std::abs(e);  // restrict to H_-
        int wt = 0;
        for (int e : w.exps) wt += e;
        for (auto& [t, c] : reduced_coproduct(w)) {
            CHECK(c != 0);
            int s = 0;
            for (int e : t.first.exps) {
                CHECK(e <= 0);
                s += e;
            }
            for (int e : t.second.exps) {
                CHECK(e <= 0);
                s += e;
            }
            CHECK(s == wt);
            CHECK(t.first.depth() + t.second.depth() == w.depth());
            CHECK(t.first.depth() >= 1);
            CHECK(t.second.depth() >= 1);
        }
    }
}

TEST_CASE("word_to_index: orientation map and inverse") {
    CHECK(word_to_index(W({0})) == IndexVector{0});
    CHECK(word_to_index(W({2, 1})) == IndexVector{1, 2});
    CHECK(word_to_index(W({-1, 1})) == IndexVector{1, -1});
    CHECK(word_from_index({1, 2}) == W({2, 1}));
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 30; ++rep) {
        Word w = random_word(rng, 3, 3);
        CHECK(word_from_index(word_to_index(w)) == w);
    }
    Word bad = W({0});
    bad.tail = 1;
    CHECK_THROWS_AS(word_to_index(bad), DomainError);
}

TEST_CASE("word literals and printing round-trip") {
    CHECK(parse_word_literal("[1]") == W({1}));
    CHECK(parse_word_literal("[-1,1]") == W({-1, 1}));
    CHECK(parse_word_literal("[0,0]") == W({0, 0}));
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        Word w = random_word(rng, 3, 3);
        CHECK(parse_word_literal(print_word(w)) == w);
    }
    WordSum dj = shuffle0(W({-1}), W({1}));
    CHECK(print_wordsum(dj) == "[-1,1] - [0,0]");
    CHECK(print_wordsum(shuffle0(W({1}), W({1}))) == "2*[1,1]");
}
