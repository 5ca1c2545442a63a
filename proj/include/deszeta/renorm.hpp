#pragma once
// Shuffle-type renormalization: the iterated-differential character phi, the
// algebraic Birkhoff decomposition recursion and the renormalized values
// F(k1,...,kr).

#include "deszeta/closedform.hpp"
#include "deszeta/series.hpp"
#include "deszeta/wordalg.hpp"

#include <map>
#include <string>

namespace deszeta {

struct CharacterSpec {
    TruncatedLaurent f;  // input Laurent series, possibly with pole part
    int order = 0;       // truncation order for all phi computations
};

struct BirkhoffPair {
    TruncatedLaurent minus;  // only negative exponents
    TruncatedLaurent plus;   // only non-negative exponents
};

// Orientation helpers, centralized: phi applies d-exponents left-to-right on
// the word; F(k1..kr) evaluates phi_+ on the REVERSED word d^{kr}y...d^{k1}y.
Word word_of_dexps(const std::vector<long>& dexps);
Word reversed_word_for_F(const IndexVector& k);

// phi(d^{k1}y...d^{kr}y) = d^{k1}[ f * d^{k2}[ ... d^{kr}[f] ] ], truncated to
// spec.order minus the consumed derivatives. Throws OrderError (with the
// required order) when spec.order is insufficient.
TruncatedLaurent phi_eval(const Word& w, const CharacterSpec& spec);

// Memoizing context for the Birkhoff recursion over the coproduct lattice.
class BirkhoffContext {
  public:
    explicit BirkhoffContext(CharacterSpec spec) : spec_(std::move(spec)) {}
    const BirkhoffPair& decompose(const Word& w);
    const CharacterSpec& spec() const { return spec_; }

  private:
    CharacterSpec spec_;
    std::map<Word, BirkhoffPair> memo_;
};

BirkhoffPair birkhoff_decompose(const Word& w, const CharacterSpec& spec);

// F(k1,...,kr) = lim_{z->0} phi_+(d^{kr}y...d^{k1}y); entries >= 0.
Rational F_value(const IndexVector& k, const CharacterSpec& spec);

struct GenReport {
    bool ok = true;
    std::string detail;
};

// Builds F(z1,...,zr) from F_value coefficients and compares exactly with
// f_{>=0}(z_r) f_{>=0}(z_{r-1}+z_r) ... f_{>=0}(z_1+...+z_r) to total order N.
GenReport check_F_generating(int r, const CharacterSpec& spec, int N);

}  // namespace deszeta
