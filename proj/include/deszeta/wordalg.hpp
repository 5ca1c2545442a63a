#pragma once
// Hopf-algebra word calculus: canonical words of H, the recursive shuffle
// product, reduction modulo the trailing-exponent ideal T, the explicit
// reduced coproduct, and the word <-> index orientation map.

#include "deszeta/numcore.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace deszeta {

using IndexVector = std::vector<long>;

// Canonical word j^{e0} y j^{e1} y ... y j^{tail}. Adjacent d/j runs collapse
// to one integer exponent (negative = d-power); tail != 0 means the word lies
// in the ideal T. The empty word (depth 0, tail 0) is the unit.
struct Word {
    std::vector<int> exps;
    int tail = 0;
    int depth() const { return static_cast<int>(exps.size()); }
    auto operator<=>(const Word&) const = default;
};

using WordSum = std::map<Word, Rational>;
using TensorSum = std::map<std::pair<Word, Word>, Rational>;

void ws_add(WordSum& acc, const Word& w, const Rational& c);
void ws_add(WordSum& acc, const WordSum& other, const Rational& scale = Rational(1));

// Collapses a raw letter string over {d,j,y} into canonical form; words in T
// (nonzero trailing exponent) map to the zero sum.
WordSum word_normalize(const std::vector<char>& letters);

// Recursive shuffle product, bilinear, output reduced modulo T.
// Throws NonConvergenceError if the 10^6-step fuel bound is exhausted.
WordSum shuffle0(const WordSum& u, const WordSum& v);
WordSum shuffle0(const Word& u, const Word& v);

// Closed-form expansion of d^k y shuffle0 j^l y (k, l >= 1).
WordSum closed_shuffle_depth11(int k, int l);
// Closed-form expansion of d^k y j^l y shuffle0 j^m y (k, l, m >= 1).
// The first summation runs to min{k, l+m-2}; the printed source bound
// min{k, l-1} drops nonzero terms whenever l < m and k >= l (verified against
// the recursion and numerically).
WordSum closed_shuffle_depth21(int k, int l, int m);

// Reduced coproduct on H_- (d-only words: every canonical exponent <= 0).
// Depth-1 words are primitive (empty sum). Throws DomainError if a positive
// exponent (a j letter) is present.
TensorSum reduced_coproduct(const Word& w);

// Orientation map: reads exponents left-to-right, emits the REVERSED index
// vector. Throws DomainError if tail != 0 (element of T, no index meaning).
IndexVector word_to_index(const Word& w);
// Inverse of word_to_index (index vector -> canonical word, reversed).
Word word_from_index(const IndexVector& k);

// Word literal "[e1,e2,...,er]" = j^{e1}y ... j^{er}y.
Word parse_word_literal(const std::string& s);
std::string print_word(const Word& w);
std::string print_wordsum(const WordSum& ws);

}  // namespace deszeta
