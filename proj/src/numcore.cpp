#include "deszeta/numcore.hpp"

#include <cmath>
#include <mutex>
#include <vector>

namespace deszeta {

void set_working_precision(unsigned bits) {
    if (bits < 64) throw DomainError("precision must be >= 64 bits");
    BigFloat::default_precision(digits10_for_bits(bits));
}

unsigned digits10_for_bits(unsigned bits) {
    // ceil(bits * log10(2)) plus a small guard
    return static_cast<unsigned>(bits * 0.3010299957) + 4;
}

BigFloat to_bigfloat(const Rational& q) {
    BigFloat num(numerator(q).str());
    BigFloat den(denominator(q).str());
    return num / den;
}

BigFloat to_bigfloat(const Integer& n) { return BigFloat(n.str()); }

namespace {
std::mutex bern_mutex;
std::vector<Rational> bern_cache;  // B_m, x/(e^x-1) convention (B1 = -1/2)

// Extends the cache up to index m using the Akiyama-Tanigawa recurrence.
// AT natively produces B_m with B1 = +1/2; the x/(e^x-1) convention
// differs only at m = 1, where we flip the sign.
void bern_extend(unsigned m) {
    static std::vector<Rational> row;  // persists: row after processing m-1
    for (unsigned n = bern_cache.size(); n <= m; ++n) {
        row.push_back(Rational(1, n + 1));
        for (unsigned j = n; j >= 1; --j) row[j - 1] = Rational(j) * (row[j - 1] - row[j]);
        Rational b = row[0];
        if (n == 1) b = -b;
        bern_cache.push_back(b);
    }
}
}  // namespace

Rational bernoulli(unsigned m) {
    std::lock_guard<std::mutex> lock(bern_mutex);
    if (m >= bern_cache.size()) bern_extend(m);
    return bern_cache[m];
}

Integer pochhammer(long s, unsigned k) {
    Integer p = 1;
    for (unsigned i = 0; i < k; ++i) p *= Integer(s + static_cast<long>(i));
    return p;
}

BigFloat pochhammer(const BigFloat& s, unsigned k) {
    BigFloat p(1);
    for (unsigned i = 0; i < k; ++i) p *= s + i;
    return p;
}

Integer binom(long n, long i) {
    if (n < 0) throw DomainError("binom: n must be non-negative");
    if (i < 0 || i > n) return 0;
    if (i > n - i) i = n - i;
    Integer r = 1;
    for (long j = 1; j <= i; ++j) {
        r *= Integer(n - i + j);
        r /= j;
    }
    return r;
}

Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace deszeta
