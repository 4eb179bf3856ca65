#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>

#include "errors.hpp"

namespace instcone {

// Exact rational coefficients. GMP's mpq_class keeps values reduced with a
// positive denominator once canonicalized, which is exactly the invariant we
// need; every construction funnels through the helpers below. No floating
// point is used anywhere in rank or homology computations.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// Parses "p", "-p", or "p/q" with an arbitrary-precision integer p and a
// nonzero integer q. Anything else is rejected.
inline Rational rational_from_string(const std::string& text) {
    auto bad = [&]() -> Rational {
        fail(ErrorKind::Parse, "invalid rational literal: \"" + text + "\"");
    };
    if (text.empty()) return bad();
    std::size_t slash = text.find('/');
    auto check_int = [&](std::size_t lo, std::size_t hi) {
        if (lo >= hi) return false;
        std::size_t i = lo;
        if (text[i] == '-' || text[i] == '+') ++i;
        if (i >= hi) return false;
        for (; i < hi; ++i)
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check_int(0, text.size())) return bad();
    } else {
        if (!check_int(0, slash) || !check_int(slash + 1, text.size())) return bad();
    }
    Rational q;
    if (q.set_str(text, 10) != 0) return bad();
    if (sgn(q.get_den()) == 0)
        fail(ErrorKind::Parse, "zero denominator in rational literal: \"" + text + "\"");
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rational& q) { return q.get_str(); }

inline Rational rational_of(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Deterministic pivot weight: |numerator * denominator|.
inline Integer pivot_weight(const Rational& q) {
    Integer w = q.get_num() * q.get_den();
    return abs(w);
}

} // namespace instcone
