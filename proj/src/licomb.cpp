#include "deszeta/licomb.hpp"

#include <sstream>

namespace deszeta {

LiCombination Z0(const IndexVector& k) {
    int r = static_cast<int>(k.size());
    if (r < 1) throw DomainError("Z0: depth >= 1 required");
    const CoeffTable& tab = coeff_a(r, 0);
    LiCombination out;
    out.depth = r;
    for (auto& [lm, a] : tab.entries) {
        const auto& [l, m] = lm;
        Rational c = Rational(a);
        for (int j = 0; j < r; ++j) c *= Rational(pochhammer(k[j], static_cast<unsigned>(l[j])));
        if (c == 0) continue;
        IndexVector w(r);
        for (int j = 0; j < r; ++j) w[j] = k[j] + m[j];
        out.add(0, w, c);
    }
    return out;
}

namespace {
// D restricted to pure-Li combinations (every stored q is 0):
// D[Li_w] = Li_{w'} with the last index decremented.
LiCombination pure_D(const LiCombination& c) {
    LiCombination out;
    out.depth = c.depth;
    for (auto& [qw, coef] : c.terms) {
        if (qw.first != 0) throw DomainError("pure_D: log-power term present");
        IndexVector w = qw.second;
        w.back() -= 1;
        out.add(0, w, coef);
    }
    return out;
}
}  // namespace

LiCombination Zq(const IndexVector& k, int q) {
    int r = static_cast<int>(k.size());
    if (r < 1) throw DomainError("Zq: depth >= 1 required");
    if (q < 0) throw DomainError("Zq: q >= 0 required");
    if (q == 0) return Z0(k);

    // defining sum: sum_{i+j=q} (-1)^j binom(q,i) D^i[Z_0(k^{(j)})]
    LiCombination def;
    def.depth = r;
    for (int j = 0; j <= q; ++j) {
        int i = q - j;
        IndexVector kj = k;
        kj[r - 1] -= j;
        LiCombination term = Z0(kj);
        for (int s = 0; s < i; ++s) term = pure_D(term);
        Rational c = Rational(binom(q, i));
        if (j % 2) c = -c;
        for (auto& [qw, coef] : term.terms) def.add(qw.first, qw.second, coef * c);
    }

    if (q <= r) {
        // closed form via coeff_a(r, q)
        LiCombination app;
        app.depth = r;
        for (auto& [lm, a] : coeff_a(r, q).entries) {
            const auto& [l, m] = lm;
            Rational c = Rational(a);
            for (int j = 0; j < r; ++j)
                c *= Rational(pochhammer(k[j], static_cast<unsigned>(l[j])));
            if (c == 0) continue;
            IndexVector w(r);
            for (int j = 0; j < r; ++j) w[j] = k[j] + m[j];
            app.add(0, w, c);
        }
        if (!(def == app))
            throw IntegrityError("Zq: defining sum and closed-form route disagree");
    }
    return def;
}

int dr_bound(int r) {
    int d = 0;
    for (auto& [lm, a] : coeff_a(r, 0).entries) d = std::max(d, lm.first[r - 1]);
    return d;
}

LiCombination Zfull(const IndexVector& k) {
    int r = static_cast<int>(k.size());
    LiCombination out;
    out.depth = r;
    int dr = dr_bound(r);
    for (int q = 0; q <= dr; ++q) {
        LiCombination zq = Zq(k, q);
        for (auto& [qw, c] : zq.terms) out.add(q, qw.second, c);
    }
    return out;
}

LiCombination licomb_D(const LiCombination& c) {
    LiCombination out;
    out.depth = c.depth;
    for (auto& [qw, coef] : c.terms) {
        int q = qw.first;
        IndexVector w = qw.second;
        if (q >= 1) out.add(q - 1, w, -coef);
        w.back() -= 1;
        out.add(q, w, coef);
    }
    return out;
}

std::string print_licomb(const LiCombination& c) {
    if (c.terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [qw, coef] : c.terms) {
        int q = qw.first;
        // printed coefficient absorbs the (-1)^q/q! prefactor
        Rational eff = coef / Rational(factorial(static_cast<unsigned>(q)));
        if (q % 2) eff = -eff;
        if (!first) os << " + ";
        first = false;
        os << eff << " * logt^" << q << " * Li[";
        for (size_t i = 0; i < qw.second.size(); ++i) os << (i ? "," : "") << qw.second[i];
        os << "]";
    }
    return os.str();
}

LiCombination parse_licomb(const std::string& s) {
    LiCombination out;
    if (s == "0") return out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(" + ", pos);
        std::string term = s.substr(pos, next == std::string::npos ? next : next - pos);
        pos = next == std::string::npos ? s.size() : next + 3;

        std::istringstream is(term);
        std::string coef_s, star1, logt_s, star2, li_s;
        is >> coef_s >> star1 >> logt_s >> star2 >> li_s;
        if (star1 != "*" || star2 != "*" || logt_s.rfind("logt^", 0) != 0 ||
            li_s.rfind("Li[", 0) != 0 || li_s.back() != ']')
            throw DomainError("parse_licomb: malformed term '" + term + "'");
        Rational eff(coef_s);
        int q = std::stoi(logt_s.substr(5));
        IndexVector w;
        std::string inner = li_s.substr(3, li_s.size() - 4);
        std::istringstream ws(inner);
        std::string tok;
        while (std::getline(ws, tok, ',')) w.push_back(std::stol(tok));
        // undo the printed prefactor normalization
        Rational coef = eff * Rational(factorial(static_cast<unsigned>(q)));
        if (q % 2) coef = -coef;
        out.depth = static_cast<int>(w.size());
        out.add(q, w, coef);
    }
    return out;
}

}  // namespace deszeta
