#pragma once

// Exact rational scalars. Everything in qtau computes over Q; GMP does the
// bignum work and mpq_class keeps values canonical (gcd = 1, denominator > 0).

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qtau {

using Rational = mpq_class;

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Internal-invariant check. Failures signal bugs, not bad input.
#define QTAU_CHECK(cond, msg)                                        \
    do {                                                             \
        if (!(cond)) throw ::qtau::error(std::string("internal: ") + (msg)); \
    } while (0)

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

// Canonical text form: "p" when the value is integral, "p/q" with q > 0 and
// gcd(p, q) = 1 otherwise.
inline std::string rat_to_string(const Rational& x) {
    return x.get_str();
}

inline Rational rat_from_string(const std::string& s) {
    if (s.empty()) throw error("empty rational literal");
    Rational r;
    if (r.set_str(s, 10) != 0) throw error("bad rational literal: '" + s + "'");
    if (r.get_den() == 0) throw error("zero denominator in rational literal: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace qtau
