#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace coiso {

// Exact rational coefficients. All arithmetic in the toolkit is over Q;
// there is no floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long n) { return Rat(n); }
inline Rat rat(long n, long d) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

inline Rat rat_pow(const Rat& base, int e) {
    if (e < 0) {
        if (base == 0) throw std::domain_error("rat_pow: zero to negative power");
        Rat inv = 1 / base;
        return rat_pow(inv, -e);
    }
    Rat out(1);
    Rat b = base;
    int k = e;
    while (k > 0) {
        if (k & 1) out *= b;
        b *= b;
        k >>= 1;
    }
    return out;
}

// binomial(n, k) as an exact rational (integer-valued)
inline Rat rat_binomial(int n, int k) {
    if (k < 0 || k > n) return Rat(0);
    mpz_class z;
    mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rat(z);
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

// Errors thrown by scene loading and precondition checks (CLI exit code 2).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An identity the construction guarantees has failed (CLI exit code 3).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace coiso
