#include "deszeta/closedform.hpp"

#include <mutex>
#include <sstream>

namespace deszeta {

MultiPoly gr_poly(int r) {
    if (r < 1) throw DomainError("gr_poly: r >= 1 required");
    int n = 2 * r;
    MultiPoly acc;
    acc.nvars = n;
    acc.add(std::vector<int>(n, 0), Rational(1));
    for (int j = 1; j <= r; ++j) {
        // bracket_j = 1 - (u_j v_j + ... + u_r v_r)(v_j^{-1} - v_{j-1}^{-1}),
        // with v_0^{-1} := 0.
        MultiPoly br;
        br.nvars = n;
        br.add(std::vector<int>(n, 0), Rational(1));
        for (int i = j; i <= r; ++i) {
            std::vector<int> e(n, 0);
            e[i - 1] += 1;      // u_i
            e[r + i - 1] += 1;  // v_i
            e[r + j - 1] -= 1;  // v_j^{-1}
            br.add(e, Rational(-1));
            if (j >= 2) {
                std::vector<int> e2(n, 0);
                e2[i - 1] += 1;
                e2[r + i - 1] += 1;
                e2[r + j - 2] -= 1;  // v_{j-1}^{-1}
                br.add(e2, Rational(1));
            }
        }
        acc = mp_mul(acc, br);
    }
    return acc;
}

namespace {

CoeffTable table_from_poly(const MultiPoly& p, int r, int q) {
    CoeffTable t;
    t.r = r;
    t.q = q;
    for (auto& [e, c] : p.terms) {
        std::vector<int> l(e.begin(), e.begin() + r);
        std::vector<int> m(e.begin() + r, e.end());
        int msum = 0;
        for (int x : l)
            if (x < 0) throw IntegrityError("coeff_a: negative u-exponent");
        for (int x : m) msum += x;
        if (msum != -q) throw IntegrityError("coeff_a: |m| != -q for a stored monomial");
        Rational cc = c;
        if (denominator(cc) != 1) throw IntegrityError("coeff_a: non-integer coefficient");
        t.entries[{l, m}] = numerator(cc);
    }
    return t;
}

// (v_r^{-1} d/du_r) applied once.
MultiPoly vdu(const MultiPoly& p, int r) {
    MultiPoly out;
    out.nvars = p.nvars;
    for (auto& [e, c] : p.terms) {
        int lu = e[r - 1];
        if (lu == 0) continue;
        std::vector<int> ne = e;
        ne[r - 1] -= 1;
        ne[2 * r - 1] -= 1;
        out.add(ne, c * lu);
    }
    return out;
}

std::recursive_mutex table_mutex;
std::map<std::pair<int, int>, CoeffTable> table_cache;

const CoeffTable& coeff_a_locked(int r, int q) {
    auto key = std::make_pair(r, q);
    auto it = table_cache.find(key);
    if (it != table_cache.end()) return it->second;

    MultiPoly p = gr_poly(r);
    for (int i = 0; i < q; ++i) p = vdu(p, r);
    CoeffTable direct = table_from_poly(p, r, q);

    if (q > 0) {
        // independent route: a_{l,m}(q) = (l_r+1)_q * a_{(..,l_r+q),(..,m_r+q)}(0)
        const CoeffTable& base = coeff_a_locked(r, 0);
        CoeffTable shifted;
        shifted.r = r;
        shifted.q = q;
        for (auto& [lm, a0] : base.entries) {
            std::vector<int> l = lm.first, m = lm.second;
            if (l[r - 1] < q) continue;
            l[r - 1] -= q;
            m[r - 1] -= q;
            Integer v = pochhammer(l[r - 1] + 1, static_cast<unsigned>(q)) * a0;
            if (v != 0) shifted.entries[{l, m}] += v;
        }
        for (auto it2 = shifted.entries.begin(); it2 != shifted.entries.end();)
            it2 = (it2->second == 0) ? shifted.entries.erase(it2) : std::next(it2);
        if (shifted.entries != direct.entries)
            throw IntegrityError("coeff_a: symbolic-derivative and shift-formula tables differ");
    }
    table_cache[key] = std::move(direct);
    return table_cache[key];
}

}  // namespace

const CoeffTable& coeff_a(int r, int q) {
    if (r < 1 || q < 0 || q > r) throw DomainError("coeff_a: need r >= 1 and 0 <= q <= r");
    std::lock_guard<std::recursive_mutex> lock(table_mutex);
    return coeff_a_locked(r, q);
}

namespace {
// Column-wise enumeration of the upper-triangular nu matrix: column i
// (1-indexed) is a composition of k_i into i parts nu_{1i}..nu_{ii}.
void bern_enum(const std::vector<long>& k, int col, std::vector<std::vector<int>>& nu,
               Rational factor, std::vector<long>& rowsum, Rational& total) {
    int r = static_cast<int>(k.size());
    if (col == r) {
        Rational term = factor;
        for (int i = 0; i < r; ++i)
            term *= bernoulli(static_cast<unsigned>(rowsum[i] + 1));
        total += term;
        return;
    }
    // compositions of k[col] into col+1 parts
    std::vector<int> parts(col + 1, 0);
    auto rec = [&](auto&& self, int pos, long rem) -> void {
        if (pos == col) {
            parts[pos] = static_cast<int>(rem);
            Rational f = factor * Rational(factorial(static_cast<unsigned>(k[col])));
            for (int i = 0; i <= col; ++i) {
                f /= Rational(factorial(static_cast<unsigned>(parts[i])));
                rowsum[i] += parts[i];
            }
            nu[col] = parts;
            bern_enum(k, col + 1, nu, f, rowsum, total);
            for (int i = 0; i <= col; ++i) rowsum[i] -= parts[i];
            return;
        }
        for (long v = 0; v <= rem; ++v) {
            parts[pos] = static_cast<int>(v);
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, k[col]);
}
}  // namespace

Rational deszeta_nonpos_bernoulli(const IndexVector& k, int depth_cap) {
    int r = static_cast<int>(k.size());
    if (r < 1) throw DomainError("deszeta_nonpos_bernoulli: depth >= 1 required");
    if (r > depth_cap) throw DomainError("deszeta_nonpos_bernoulli: depth cap exceeded");
    std::vector<long> kk(r);
    long total_weight = 0;
    for (int i = 0; i < r; ++i) {
        if (k[i] > 0) throw DomainError("deszeta_nonpos_bernoulli: all entries must be <= 0");
        kk[i] = -k[i];
        total_weight += kk[i];
    }
    std::vector<std::vector<int>> nu(r);
    std::vector<long> rowsum(r, 0);
    Rational total = 0;
    bern_enum(kk, 0, nu, Rational(1), rowsum, total);
    if (total_weight % 2) total = -total;
    return total;
}

Rational deszeta_nonpos_iterdiff(const IndexVector& k, int depth_cap) {
    int r = static_cast<int>(k.size());
    if (r < 1) throw DomainError("deszeta_nonpos_iterdiff: depth >= 1 required");
    if (r > depth_cap) throw DomainError("deszeta_nonpos_iterdiff: depth cap exceeded");
    long weight = 0;
    for (long x : k) {
        if (x > 0) throw DomainError("deszeta_nonpos_iterdiff: all entries must be <= 0");
        weight += -x;
    }
    int N = static_cast<int>(weight) + 1;
    TruncatedLaurent g = expand_g(N + static_cast<int>(weight));
    TruncatedLaurent cur;
    bool started = false;
    // deszeta_r(-k1..-kr) = lim_{z->0} d^{kr}[ g * d^{k_{r-1}}[ ... d^{k1}[g] ] ]
    for (int idx = 0; idx < r; ++idx) {
        cur = started ? laurent_mul(g, cur) : g;
        started = true;
        for (long j = 0; j < -k[idx]; ++j) {
            if (cur.order < 1)
                throw OrderError("deszeta_nonpos_iterdiff: truncation order too small, need >= " +
                                 std::to_string(weight + 1));
            cur = laurent_dz(cur);
        }
    }
    return cur.coeff(0);
}

GenfunReport genfun_check(int r, int N) {
    if (r > 4 || N > 8) throw DomainError("genfun_check: desk-scale caps are r <= 4, N <= 8");
    GenfunReport rep;
    // right side: prod_{i=1}^r h(t_i + ... + t_r)
    TruncatedLaurent h = expand_h(N);
    MultiSeries rhs;
    rhs.nvars = r;
    rhs.total_order = N;
    rhs.add(std::vector<int>(r, 0), Rational(1));
    for (int i = 1; i <= r; ++i) {
        std::vector<int> vars;
        for (int v = i - 1; v < r; ++v) vars.push_back(v);
        rhs = ms_mul(rhs, mv_substitute_sum(h, vars, r, N));
    }
    // left side: coefficient of prod t_i^{k_i} is (-1)^{|k|} deszeta(-k)/prod k_i!
    MultiSeries lhs;
    lhs.nvars = r;
    lhs.total_order = N;
    std::vector<int> kv(r, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == r) {
            IndexVector k(r);
            Rational fct = 1;
            long w = 0;
            for (int i = 0; i < r; ++i) {
                k[i] = -kv[i];
                w += kv[i];
                fct *= Rational(factorial(static_cast<unsigned>(kv[i])));
            }
            Rational c = deszeta_nonpos_bernoulli(k, std::max(r, 6)) / fct;
            if (w % 2) c = -c;
            lhs.add(kv, c);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            kv[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, N);

    for (auto& [e, c] : lhs.terms) {
        auto it = rhs.terms.find(e);
        Rational rc = (it == rhs.terms.end()) ? Rational(0) : it->second;
        if (rc != c) {
            rep.ok = false;
            std::ostringstream os;
            os << "monomial t^(";
            for (size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
            os << "): lhs " << c << " vs rhs " << rc;
            rep.first_discrepancy = os.str();
            return rep;
        }
    }
    for (auto& [e, c] : rhs.terms) {
        if (!lhs.terms.count(e) && c != 0) {
            rep.ok = false;
            rep.first_discrepancy = "rhs has an extra monomial";
            return rep;
        }
    }
    return rep;
}

}  // namespace deszeta
