#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bireflect {

// Exact scalar types. Rat is always canonical: gcd(num, den) = 1, den > 0.
// gmpxx maintains this for all arithmetic results; explicit num/den
// construction must call canonicalize().
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Int& z) { return sgn(z); }

inline bool is_perfect_square(const Int& z) {
    return sgn(z) >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

// Exact rational square root; returns false if z is not a square in Q.
inline bool rat_sqrt(const Rat& z, Rat& out) {
    if (sgn(z) < 0) return false;
    if (!is_perfect_square(z.get_num()) || !is_perfect_square(z.get_den())) return false;
    Int n, d;
    mpz_sqrt(n.get_mpz_t(), z.get_num().get_mpz_t());
    mpz_sqrt(d.get_mpz_t(), z.get_den().get_mpz_t());
    out = Rat(n, d);
    return true;
}

// Strict parse of "n" or "n/d" with optional leading '-'. Rejects anything
// else (whitespace, floats, empty parts); used by the interchange format,
// which is string-based to stay bit-exact.
inline Rat parse_rat(const std::string& s) {
    auto is_int = [](const std::string& t) {
        size_t i = (t.size() > 0 && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i >= t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) throw std::invalid_argument("malformed rational: '" + s + "'");
    Int n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Search budget exhausted; never evidence of nonexistence.
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bireflect
