#pragma once
// Exact rational machinery: G_r, the coefficient tables a^r_{l,m}(q), and
// deszeta at non-positive integers by two independent exact routes.

#include "deszeta/series.hpp"
#include "deszeta/wordalg.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace deszeta {

// Integer tables a^r_{l,m}(q): entries keyed by (l in N0^r, m in Z^r), with
// m1+...+mr = -q for every stored m.
struct CoeffTable {
    int r = 0;
    int q = 0;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Integer> entries;
};

// G_r in variables u1..ur (indices 0..r-1) and v1..vr (indices r..2r-1).
MultiPoly gr_poly(int r);

// a^r_{l,m}(q), computed BOTH by symbolically applying (v_r^{-1} d/du_r)^q to
// gr_poly and by the Pochhammer shift formula from the q=0 table; the two must
// agree exactly or an IntegrityError is thrown. Cached after verification.
const CoeffTable& coeff_a(int r, int q);

// Exact deszeta_r(k1,...,kr) for all entries <= 0, via the Seki-Bernoulli
// multinomial sum. Depth capped (default 6).
Rational deszeta_nonpos_bernoulli(const IndexVector& k, int depth_cap = 6);

// Same value via nested series multiplication/differentiation of g(z) and
// constant-term extraction at z = 0.
Rational deszeta_nonpos_iterdiff(const IndexVector& k, int depth_cap = 6);

struct GenfunReport {
    bool ok = true;
    std::string first_discrepancy;
};

// Expands both sides of the generating identity
//   sum_k deszeta(-k) prod (-t_i)^{k_i}/k_i!  =  prod_i h(t_i+...+t_r)
// as MultiSeries to total order N and compares exactly.
GenfunReport genfun_check(int r, int N);

}  // namespace deszeta
