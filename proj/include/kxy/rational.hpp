#pragma once

#include <gmpxx.h>

#include <string>

namespace kxy {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) as long as raw-constructed values are canonicalized.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "a" for integers, "a/b" otherwise.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace kxy
