#pragma once
// Symbolic layer: Z0, Zq, Z(k) as finite rational combinations of
// (log t)^q * Li_w(t), the D-operator calculus and the vanishing bound d_r.

#include "deszeta/closedform.hpp"

#include <map>
#include <string>
#include <utility>

namespace deszeta {

// Finite sum of terms; a stored term (q, w) -> c denotes
//   c * (-log t)^q / q! * Li_w(t)
// (the prefactor of the Z(k) definition is part of the data model).
struct LiCombination {
    int depth = 0;
    std::map<std::pair<int, IndexVector>, Rational> terms;
    void add(int q, const IndexVector& w, const Rational& c) {
        auto key = std::make_pair(q, w);
        auto it = terms.find(key);
        Rational s = (it == terms.end() ? Rational(0) : it->second) + c;
        if (s == 0) {
            if (it != terms.end()) terms.erase(it);
        } else
            terms[key] = s;
    }
    bool operator==(const LiCombination& o) const { return terms == o.terms; }
};

// q = 0 layer, assembled from coeff_a(r,0) and Pochhammer factors.
LiCombination Z0(const IndexVector& k);

// Z_q(k) WITHOUT the (-log t)^q/q! prefactor. Computed both by the defining
// sum  sum_{i+j=q} (-1)^j binom(q,i) D^i[Z_0(k^{(j)})]  and (for q <= r) by
// the closed form from coeff_a(r,q); a mismatch raises IntegrityError.
LiCombination Zq(const IndexVector& k, int q);

// Z(k) = sum_{q=0}^{d_r} (-log t)^q/q! * Z_q(k) in the stored-term convention.
LiCombination Zfull(const IndexVector& k);

// D = t d/dt, termwise: (q,w)->c maps to (q-1,w)->-c and (q,w')->c.
LiCombination licomb_D(const LiCombination& c);

// d_r = max degree in the last variable of the Pochhammer-assembled
// coefficient polynomials = max l_r over the coeff_a(r,0) support.
int dr_bound(int r);

// Terms printed as "c * logt^q * Li[k1,...,kr]", where the printed rational c
// absorbs the (-1)^q/q! prefactor (so the expression is literal in log t).
std::string print_licomb(const LiCombination& c);
LiCombination parse_licomb(const std::string& s);

}  // namespace deszeta
