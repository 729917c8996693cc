#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace ctrliso {

// Exact scalars used throughout: arbitrary-precision integers and rationals.
using Int = mpz_class;
using Rat = mpq_class;

// p/q in lowest terms with positive denominator.
inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// Quotient of an exact division; refuses to round.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
        throw std::logic_error("exact_div: inexact integer division");
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline std::string to_decimal(const Int& v) { return v.get_str(); }

inline std::string to_decimal(const Rat& v) {
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

}  // namespace ctrliso
