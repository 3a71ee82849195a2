#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace verma510 {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical:
// lowest terms, denominator > 0.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

// Serialized form used in all JSON output: "p/q", or just "p" when q = 1.
inline std::string rat_to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty string");
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_from_string: bad rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace verma510
