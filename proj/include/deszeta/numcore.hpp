#pragma once
// Exact rational / high-precision floating arithmetic and the elementary
// combinatorial sequences (Seki-Bernoulli numbers, Pochhammer, binomials)
// that every other module consumes.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <stdexcept>
#include <string>

namespace deszeta {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Variable-precision MPFR float. Precision is per-variable, inherited from the
// thread-local default at construction time; see set_working_precision().
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                  boost::multiprecision::et_off>;

struct PrecisionCtx {
    unsigned bits = 192;      // working mantissa precision (>= 64)
    double tail_tol = 1e-30;  // series-tail stop: bound <= tail_tol*max(1,|partial|)
    long max_terms = 8'000'000;
};

struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IntegrityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Sets the thread-local default precision for newly constructed BigFloats.
void set_working_precision(unsigned bits);
unsigned digits10_for_bits(unsigned bits);

BigFloat to_bigfloat(const Rational& q);
BigFloat to_bigfloat(const Integer& n);

// m-th Seki-Bernoulli number, x/(e^x-1) convention (B1 = -1/2). Memoized.
Rational bernoulli(unsigned m);

// Rising factorial (s)_k = s(s+1)...(s+k-1), (s)_0 = 1.
Integer pochhammer(long s, unsigned k);
BigFloat pochhammer(const BigFloat& s, unsigned k);

// Binomial coefficient with the convention binom(n,i) = 0 for i < 0 or i > n.
Integer binom(long n, long i);

Integer factorial(unsigned n);

}  // namespace deszeta
