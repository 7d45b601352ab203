#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

namespace obstr {

// Exact arithmetic everywhere. mpq_class keeps values canonical
// (reduced, positive denominator), which the serialization relies on.
using Int = mpz_class;
using Rat = mpq_class;

inline std::string int_str(const Int& z) { return z.get_str(); }
inline Int int_from_str(const std::string& s) { return Int(s); }

inline std::string num_str(const Rat& q) { return q.get_num().get_str(); }
inline std::string den_str(const Rat& q) { return q.get_den().get_str(); }

inline Rat rat_from_strings(const std::string& num, const std::string& den) {
    Rat q{Int(num), Int(den)};
    q.canonicalize();
    return q;
}

inline Rat rat_pow(const Rat& q, unsigned long e) {
    Rat r = 1;
    Rat base = q;
    unsigned long n = e;
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

inline Int int_pow(const Int& z, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

using RatVec = std::vector<Rat>;

} // namespace obstr
