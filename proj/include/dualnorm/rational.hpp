#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dualnorm {

/// Error type for all domain violations (invalid data, failed preconditions).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal arithmetic fault (overflow of the fixed-width representation).
struct arithmetic_error : std::runtime_error {
    explicit arithmetic_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline long long narrow(__int128 v, const char* ctx) {
    if (v > static_cast<__int128>(INT64_MAX) || v < static_cast<__int128>(INT64_MIN))
        throw arithmetic_error(std::string("integer overflow in ") + ctx);
    return static_cast<long long>(v);
}
}  // namespace detail

/// Exact rational number with 64-bit numerator/denominator, always normalized:
/// gcd(num, den) == 1 and den > 0.  All workbench arithmetic that must be exact
/// (lattice membership, congruences, phases) runs on this type; floating point
/// only appears in display helpers and tolerance-based cross-checks.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n) : num(n), den(1) {}
    Rat(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    friend Rat operator+(const Rat& a, const Rat& b) {
        __int128 n = static_cast<__int128>(a.num) * b.den + static_cast<__int128>(b.num) * a.den;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return make(n, d);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + Rat(-b.num, b.den); }
    Rat operator-() const { return Rat(-num, den); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        __int128 n = static_cast<__int128>(a.num) * b.num;
        __int128 d = static_cast<__int128>(a.den) * b.den;
        return make(n, d);
    }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.num == 0) throw domain_error("division by zero rational");
        __int128 n = static_cast<__int128>(a.num) * b.den;
        __int128 d = static_cast<__int128>(a.den) * b.num;
        return make(n, d);
    }
    Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
    Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
    Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rat& a, const Rat& b) { return a == b || a < b; }
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator>=(const Rat& a, const Rat& b) { return b <= a; }

    bool is_integer() const { return den == 1; }
    bool is_zero() const { return num == 0; }
    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

    /// Reduce into the half-open interval [0, 1) by subtracting an integer.
    Rat mod1() const {
        long long q = num / den;
        Rat r(num - q * den, den);
        if (r.num < 0) r = r + Rat(1);
        return r;
    }

    static Rat make(__int128 n, __int128 d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 an = n < 0 ? -n : n;
        __int128 g = gcd128(an, d);
        if (g > 1) { n /= g; d /= g; }
        Rat r;
        r.num = detail::narrow(n, "rational arithmetic");
        r.den = detail::narrow(d, "rational arithmetic");
        return r;
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a < 0 ? -a : a;
    }
};

/// Canonical text form: "p" for integers, "p/q" otherwise.  This is also the
/// serialization used in catalog files and reports.
inline std::string to_string(const Rat& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

inline std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << to_string(r); }

/// Parse "p" or "p/q" (arbitrary whitespace is not accepted; catalogs are canonical).
inline Rat parse_rat(const std::string& s) {
    if (s.empty()) throw domain_error("empty rational literal");
    std::size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long n = std::stoll(s.substr(0, slash));
        long long d = std::stoll(s.substr(slash + 1));
        return Rat(n, d);
    } catch (const std::exception&) {
        throw domain_error("malformed rational literal: '" + s + "'");
    }
}

/// Complex number with exact rational real and imaginary parts.
struct CRat {
    Rat re;
    Rat im;

    CRat() = default;
    CRat(Rat r) : re(r) {}
    CRat(long long r) : re(Rat(r)) {}
    CRat(Rat r, Rat i) : re(r), im(i) {}

    friend CRat operator+(const CRat& a, const CRat& b) { return {a.re + b.re, a.im + b.im}; }
    friend CRat operator-(const CRat& a, const CRat& b) { return {a.re - b.re, a.im - b.im}; }
    CRat operator-() const { return {-re, -im}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend CRat operator/(const CRat& a, const CRat& b) {
        Rat n = b.re * b.re + b.im * b.im;
        if (n.is_zero()) throw domain_error("division by zero complex rational");
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    CRat conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }

    friend bool operator==(const CRat& a, const CRat& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

inline std::string to_string(const CRat& z) {
    return "(" + to_string(z.re) + ", " + to_string(z.im) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const CRat& z) { return os << to_string(z); }

}  // namespace dualnorm
