// Exact arbitrary-precision integers and rationals, plus the deterministic
// pseudo-random generator used by the randomized checkers.
//
// Rat is always in canonical form: reduced to lowest terms with positive
// denominator.  No floating point appears anywhere in the library.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "rtorsion/errors.hpp"

namespace rtorsion {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int numerator_of(const Rat& r) { return numerator(r); }
inline Int denominator_of(const Rat& r) { return denominator(r); }

inline int sign_of(const Rat& r) { return r < 0 ? -1 : (r > 0 ? 1 : 0); }

inline Rat abs_of(const Rat& r) { return r < 0 ? Rat(-r) : r; }
inline Int abs_of(const Int& n) { return n < 0 ? Int(-n) : n; }

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Int& n) { return n.str(); }

namespace detail {
inline bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}
}  // namespace detail

// Accepts a decimal integer or a "p/q" literal with q > 0 after reduction.
inline Rat parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!detail::is_integer_literal(text))
            throw ParseError("invalid rational literal: \"" + text + "\"");
        return Rat(Int(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!detail::is_integer_literal(num) || !detail::is_integer_literal(den))
        throw ParseError("invalid rational literal: \"" + text + "\"");
    Int d(den);
    if (d == 0) throw ParseError("zero denominator in rational literal: \"" + text + "\"");
    return Rat(Int(num), d);
}

inline Int parse_integer(const std::string& text) {
    if (!detail::is_integer_literal(text))
        throw ParseError("invalid integer literal: \"" + text + "\"");
    return Int(text);
}

// Deterministic generator (xoshiro-style splitmix64 core).  The standard
// random engines are portable but the distributions are not, so all draws
// go through explicit modular reduction here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [lo, hi]; bias is irrelevant here, determinism is not.
    long long int_in(long long lo, long long hi) {
        auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(next() % span);
    }

    // Small random rational with numerator in [-bound, bound] and
    // denominator in [1, den_bound].
    Rat rat(long long bound = 5, long long den_bound = 3) {
        return Rat(Int(int_in(-bound, bound)), Int(int_in(1, den_bound)));
    }

    // Nonzero variant, for scale factors.
    Rat nonzero_rat(long long bound = 5, long long den_bound = 3) {
        for (;;) {
            Rat r = rat(bound, den_bound);
            if (r != 0) return r;
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace rtorsion
