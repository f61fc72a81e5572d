#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace degrowth {

// GMP keeps mpq_class canonical (reduced, positive denominator, zero is 0/1)
// as long as values are produced by its arithmetic or canonicalized after
// direct construction from a numerator/denominator pair.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// "a" or "a/b".
inline std::string to_string(const Rat& r) { return r.get_str(); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

}  // namespace degrowth
