#pragma once

// Scalar layer: metric kernels are templates over a scalar type S that is
// either mpq_class (exact rational mode, closed arithmetic, decidable
// comparison) or double (float mode, comparisons only against an explicit
// tolerance).

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace samc {

using Rational = mpq_class;

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

template <class S>
inline S abs_val(const S& v) {
    return v < S(0) ? S(-v) : v;
}

template <class S>
inline const S& max_val(const S& a, const S& b) {
    return a < b ? b : a;
}

template <class S>
inline const S& min_val(const S& a, const S& b) {
    return b < a ? b : a;
}

inline double to_double(const Rational& v) { return v.get_d(); }
inline double to_double(double v) { return v; }

// Canonicalizing constructor: mpq_class(n, d) alone keeps common factors,
// which breaks exact equality downstream.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_int(long n) { return Rational(n); }
    static Rational from_ratio(long num, long den) {
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    // Exact square root; throws when the operand is not a perfect rational
    // square (callers needing approximate norms use float mode instead).
    static Rational sqrt(const Rational& v) {
        if (v < 0) throw domain_error("sqrt of negative rational");
        mpz_class num = v.get_num(), den = v.get_den();
        mpz_class rn, rd;
        if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), 2) == 0 && num != rn * rn)
            throw domain_error("rational sqrt is irrational: " + v.get_str());
        if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), 2) == 0 && den != rd * rd)
            throw domain_error("rational sqrt is irrational: " + v.get_str());
        Rational r(rn, rd);
        r.canonicalize();
        return r;
    }
    static long floor_long(const Rational& v) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
        return q.get_si();
    }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double from_int(long n) { return double(n); }
    static double from_ratio(long num, long den) { return double(num) / double(den); }
    static double sqrt(double v) {
        if (v < 0) throw domain_error("sqrt of negative value");
        return std::sqrt(v);
    }
    static long floor_long(double v) { return long(std::floor(v)); }
};

// ---------------------------------------------------------------------------
// Parsing. Accepted scalar forms: "num/den", integers, and decimal/scientific
// literals ("0.25", "1e-3"); all convert exactly in rational mode.

Rational parse_rational(const std::string& text);
double parse_double(const std::string& text);

template <class S>
S parse_scalar(const std::string& text);

template <>
inline Rational parse_scalar<Rational>(const std::string& text) {
    return parse_rational(text);
}

template <>
inline double parse_scalar<double>(const std::string& text) {
    return parse_double(text);
}

// Canonical text forms: exact values as "num/den" (or "n" when integral),
// doubles via shortest round-trip format.
std::string format_scalar(const Rational& v);
std::string format_scalar(double v);

}  // namespace samc
