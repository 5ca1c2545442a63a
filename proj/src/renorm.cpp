#include "deszeta/renorm.hpp"

#include <sstream>

namespace deszeta {

Word word_of_dexps(const std::vector<long>& dexps) {
    Word w;
    for (long k : dexps) {
        if (k < 0) throw DomainError("word_of_dexps: d-exponents must be >= 0");
        w.exps.push_back(static_cast<int>(-k));
    }
    return w;
}

Word reversed_word_for_F(const IndexVector& k) {
    std::vector<long> rev(k.rbegin(), k.rend());
    return word_of_dexps(rev);
}

namespace {
std::vector<long> dexps_of(const Word& w) {
    if (w.tail != 0) throw DomainError("phi: word lies in T");
    std::vector<long> k;
    for (int e : w.exps) {
        if (e > 0) throw DomainError("phi: word not in H_- (j letter present)");
        k.push_back(-e);
    }
    return k;
}
}  // namespace

TruncatedLaurent phi_eval(const Word& w, const CharacterSpec& spec) {
    std::vector<long> k = dexps_of(w);
    long weight = 0;
    for (long x : k) weight += x;
    if (spec.order < weight)
        throw OrderError("phi_eval: truncation order " + std::to_string(spec.order) +
                         " insufficient, need >= " + std::to_string(weight));
    if (k.empty()) {
        TruncatedLaurent one;
        one.order = spec.order;
        one.set(0, Rational(1));
        return one;
    }
    TruncatedLaurent f = spec.f;
    f.order = spec.order;
    TruncatedLaurent cur;
    bool started = false;
    for (auto it = k.rbegin(); it != k.rend(); ++it) {
        cur = started ? laurent_mul(f, cur) : f;
        started = true;
        for (long j = 0; j < *it; ++j) cur = laurent_dz(cur);
    }
    return cur;
}

const BirkhoffPair& BirkhoffContext::decompose(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;

    // bar = phi(w) + sum phi_-(w') phi(w'') over the reduced coproduct;
    // phi_-(w) = -pi(bar), phi_+(w) = (Id - pi)(bar).
    TruncatedLaurent bar = phi_eval(w, spec_);
    for (auto& [pair, c] : reduced_coproduct(w)) {
        const BirkhoffPair& left = decompose(pair.first);
        TruncatedLaurent term = laurent_mul(left.minus, phi_eval(pair.second, spec_));
        bar = laurent_add(bar, laurent_scale(term, c));
    }
    BirkhoffPair res;
    res.minus = laurent_scale(pole_part(bar), Rational(-1));
    res.plus = regular_part(bar);
    return memo_.emplace(w, std::move(res)).first->second;
}

BirkhoffPair birkhoff_decompose(const Word& w, const CharacterSpec& spec) {
    BirkhoffContext ctx(spec);
    return ctx.decompose(w);
}

Rational F_value(const IndexVector& k, const CharacterSpec& spec) {
    for (long x : k)
        if (x < 0) throw DomainError("F_value: entries must be >= 0");
    BirkhoffContext ctx(spec);
    return ctx.decompose(reversed_word_for_F(k)).plus.coeff(0);
}

GenReport check_F_generating(int r, const CharacterSpec& spec, int N) {
    if (r > 3 || N > 6) throw DomainError("check_F_generating: caps are r <= 3, N <= 6");
    GenReport rep;
    TruncatedLaurent freg = regular_part(spec.f);
    freg.order = std::min(freg.order, N);
    MultiSeries rhs;
    rhs.nvars = r;
    rhs.total_order = N;
    rhs.add(std::vector<int>(r, 0), Rational(1));
    for (int j = 1; j <= r; ++j) {
        std::vector<int> vars;
        for (int v = j - 1; v < r; ++v) vars.push_back(v);
        rhs = ms_mul(rhs, mv_substitute_sum(freg, vars, r, N));
    }

    BirkhoffContext ctx(spec);
    MultiSeries lhs;
    lhs.nvars = r;
    lhs.total_order = N;
    std::vector<int> kv(r, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == r) {
            IndexVector k(kv.begin(), kv.end());
            Rational c = ctx.decompose(reversed_word_for_F(k)).plus.coeff(0);
            Rational fct = 1;
            for (int x : kv) fct *= Rational(factorial(static_cast<unsigned>(x)));
            lhs.add(kv, c / fct);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            kv[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, N);

    auto diff_at = [&](const std::vector<int>& e) {
        auto itl = lhs.terms.find(e);
        auto itr = rhs.terms.find(e);
        Rational a = itl == lhs.terms.end() ? Rational(0) : itl->second;
        Rational b = itr == rhs.terms.end() ? Rational(0) : itr->second;
        return std::make_pair(a, b);
    };
    for (auto* side : {&lhs.terms, &rhs.terms})
        for (auto& [e, c] : *side) {
            auto [a, b] = diff_at(e);
            if (a != b) {
                std::ostringstream os;
                os << "coefficient mismatch at z^(";
                for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
                os << "): F-side " << a << " vs product side " << b;
                rep.ok = false;
                rep.detail = os.str();
                return rep;
            }
        }
    return rep;
}

}  // namespace deszeta
