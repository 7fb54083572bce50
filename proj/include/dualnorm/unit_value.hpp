#pragma once

#include <cmath>
#include <complex>

#include "dualnorm/rational.hpp"

namespace dualnorm {

/// Exact value of a character evaluation:
///
///   value = e^{log_rat + pi*log_pi} * e^{2*pi*i*turns + i*radians}
///
/// with all four components rational.  Because 1 and pi are linearly
/// independent over the rationals, two values are equal iff their components
/// agree (turns compared mod 1); no floating point enters equality decisions.
/// The float projection exists only for tolerance-based cross-checks.
struct UnitValue {
    Rat log_rat;   // rational part of log|value|
    Rat log_pi;    // pi-multiple part of log|value|
    Rat turns;     // phase component e^{2 pi i * turns}, kept in [0,1)
    Rat radians;   // phase component e^{i * radians}, exact rational radians
    bool authoritative = true;  // false when the source data failed its congruence

    static UnitValue one() { return UnitValue{}; }

    static UnitValue from_turns(const Rat& t) {
        UnitValue u;
        u.turns = t.mod1();
        return u;
    }

    void normalize() { turns = turns.mod1(); }

    bool is_unimodular() const { return log_rat.is_zero() && log_pi.is_zero(); }

    bool is_one() const {
        return is_unimodular() && turns.mod1().is_zero() && radians.is_zero();
    }

    UnitValue conj() const {
        UnitValue u = *this;
        u.turns = (-u.turns).mod1();
        u.radians = -u.radians;
        return u;
    }

    UnitValue inverse() const {
        UnitValue u;
        u.log_rat = -log_rat;
        u.log_pi = -log_pi;
        u.turns = (-turns).mod1();
        u.radians = -radians;
        u.authoritative = authoritative;
        return u;
    }

    friend UnitValue operator*(const UnitValue& a, const UnitValue& b) {
        UnitValue u;
        u.log_rat = a.log_rat + b.log_rat;
        u.log_pi = a.log_pi + b.log_pi;
        u.turns = (a.turns + b.turns).mod1();
        u.radians = a.radians + b.radians;
        u.authoritative = a.authoritative && b.authoritative;
        return u;
    }

    UnitValue pow(long long e) const {
        UnitValue u;
        u.log_rat = log_rat * Rat(e);
        u.log_pi = log_pi * Rat(e);
        u.turns = (turns * Rat(e)).mod1();
        u.radians = radians * Rat(e);
        u.authoritative = authoritative;
        return u;
    }

    /// Exact equality as complex numbers.  Radians values are compared as
    /// rationals: a nonzero rational cannot be a multiple of 2*pi, so distinct
    /// radians components give distinct values unless absorbed here.
    friend bool operator==(const UnitValue& a, const UnitValue& b) {
        return a.log_rat == b.log_rat && a.log_pi == b.log_pi &&
               a.turns.mod1() == b.turns.mod1() && a.radians == b.radians;
    }
    friend bool operator!=(const UnitValue& a, const UnitValue& b) { return !(a == b); }
    friend bool operator<(const UnitValue& a, const UnitValue& b) {
        if (a.log_rat != b.log_rat) return a.log_rat < b.log_rat;
        if (a.log_pi != b.log_pi) return a.log_pi < b.log_pi;
        if (a.turns.mod1() != b.turns.mod1()) return a.turns.mod1() < b.turns.mod1();
        return a.radians < b.radians;
    }

    std::complex<double> to_complex() const {
        static const double kPi = 3.14159265358979323846264338327950288;
        double mag = std::exp(log_rat.to_double() + kPi * log_pi.to_double());
        double theta = 2.0 * kPi * turns.to_double() + radians.to_double();
        return {mag * std::cos(theta), mag * std::sin(theta)};
    }

    bool approx_equal(const UnitValue& o, double tol = 1e-12) const {
        return std::abs(to_complex() - o.to_complex()) <= tol;
    }
};

inline std::string to_string(const UnitValue& u) {
    // Render common exact values compactly; fall back to component form.
    if (u.is_unimodular() && u.radians.is_zero()) {
        Rat t = u.turns.mod1();
        if (t == Rat(0)) return "1";
        if (t == Rat(1, 2)) return "-1";
        if (t == Rat(1, 4)) return "i";
        if (t == Rat(3, 4)) return "-i";
        return "e(" + to_string(t) + ")";
    }
    std::string s = "exp(" + to_string(u.log_rat) + " + pi*" + to_string(u.log_pi) + ")";
    s += "*e(" + to_string(u.turns.mod1()) + ")";
    if (!u.radians.is_zero()) s += "*cis(" + to_string(u.radians) + ")";
    return s;
}

}  // namespace dualnorm
