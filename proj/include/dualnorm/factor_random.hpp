// Randomized numeric evaluation of factor expressions.  Each primitive atom
// receives a deterministic pseudo-random value keyed by (seed, atom label),
// and decorated atoms are resolved through single-step defining relations —
// independently of the rewrite engine — so numeric agreement of two
// expressions is evidence for (and a regression check on) the symbolic rules.
//
// In a bounded context every draw is unimodular; in an unbounded context
// non-sign atoms draw moduli in [1/2, 2), which exposes any rewrite that
// wrongly identifies conjugation with inversion.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

#include "dualnorm/factor_atoms.hpp"
#include "dualnorm/rational.hpp"

namespace dualnorm::factor {

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline double unit_interval(std::uint64_t seed, const std::string& label) {
    std::uint64_t bits = splitmix64(seed ^ fnv1a(label));
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace detail

class Sampler {
  public:
    using C = std::complex<double>;

    Sampler(std::uint64_t seed, const Context& ctx) : seed_(seed), ctx_(ctx) {}

    const Context& context() const { return ctx_; }
    std::uint64_t seed() const { return seed_; }

    C eval(const Expr& e) const {
        C out(1.0, 0.0);
        for (const Atom& at : e.atoms) out *= int_pow(base(at), at.exp);
        return out;
    }

    C eval_atom(const Atom& at) const { return int_pow(base(at), at.exp); }

    static C int_pow(C v, int e) {
        if (e < 0) {
            v = C(1.0, 0.0) / v;
            e = -e;
        }
        C out(1.0, 0.0);
        while (e > 0) {
            if (e & 1) out *= v;
            v *= v;
            e >>= 1;
        }
        return out;
    }

    static bool approx_equal(C a, C b, double tol = 1e-12) {
        double scale = std::max({1.0, std::abs(a), std::abs(b)});
        return std::abs(a - b) <= tol * scale;
    }

  private:
    std::uint64_t seed_;
    Context ctx_;

    static std::string label_of(Atom at) {
        at.exp = 1;
        return to_string(at);
    }

    double u01(const std::string& label) const {
        return detail::unit_interval(seed_, label);
    }

    double sign_draw(const std::string& label) const {
        return u01("sign|" + label) < 0.5 ? 1.0 : -1.0;
    }

    C unit_draw(const std::string& label) const {
        static const double kPi = 3.14159265358979323846264338327950288;
        double theta = u01("theta|" + label);
        return std::polar(1.0, 2.0 * kPi * theta);
    }

    // Unimodular when the context is bounded, otherwise modulus in [1/2, 2).
    C generic_draw(const std::string& label) const {
        C u = unit_draw(label);
        if (ctx_.bounded) return u;
        double m = 0.5 + 1.5 * u01("mod|" + label);
        return m * u;
    }

    // Global fourth root of unity shared by every spectral second factor.
    C ii_unit() const {
        std::uint64_t k = detail::splitmix64(seed_ ^ detail::fnv1a("ii-unit")) % 4;
        C u(1.0, 0.0);
        const C i(0.0, 1.0);
        for (std::uint64_t t = 0; t < k; ++t) u *= i;
        return u;
    }

    C base(Atom at) const {
        if (at.conj_op) {
            at.conj_op = false;
            return std::conj(base(at));
        }
        switch (at.kind) {
            case Kind::DeltaI:
                return base_delta_i(at);
            case Kind::DeltaII:
                return base_delta_ii(at);
            case Kind::DeltaIII:
                return base_delta_iii(at);
            case Kind::DeltaIII1:
                return base_delta_iii1(at);
            case Kind::DeltaIII2:
                return base_delta_iii2(at);
            case Kind::EpsL:
                return base_eps(at);
            case Kind::Varpi:
            case Kind::LambdaH1:
                if (at.norm == Norm::D) {
                    at.norm = Norm::Classical;
                    return C(1.0, 0.0) / base(at);
                }
                return generic_draw(label_of(at));
            case Kind::CScalar:
                return generic_draw(label_of(at));
            case Kind::DetV:
                return C(static_cast<double>(ctx_.detv_sign), 0.0);
            case Kind::IISquare:
                return ii_unit() * ii_unit();
            case Kind::ASign:
                return C(sign_draw("aSign|" + at.arg), 0.0);
            case Kind::Pairing:
                return base_pairing(at);
        }
        throw domain_error("sampler: unhandled atom kind");
    }

    // The first, second, and third-part-one terms do not depend on central
    // translations or twists of the arguments.
    static bool drop_argument_moves(Atom& at) {
        bool moved = at.z_shift != 0 || at.h_twist != 0;
        at.z_shift = 0;
        at.h_twist = 0;
        return moved;
    }

    C base_delta_i(Atom at) const {
        if (drop_argument_moves(at)) return base(at);
        if (at.s == Flag::Minus) {
            at.s = Flag::Plus;
            return C(1.0, 0.0) / base(at);
        }
        if (at.a == Flag::Minus) {
            at.a = Flag::Plus;
            return C(sign_draw("aSign|" + at.arg), 0.0) * base(at);
        }
        if (at.conj_args && at.side == Side::Spectral) {
            at.conj_args = false;
            return base(at);
        }
        if (ctx_.archimedean) return C(sign_draw(label_of(at)), 0.0);
        return generic_draw(label_of(at));
    }

    C base_delta_ii(Atom at) const {
        if (drop_argument_moves(at)) return base(at);
        if (at.norm == Norm::D && at.side == Side::Spectral) {
            at.norm = Norm::Classical;
            at.conj_args = !at.conj_args;
            return C(1.0, 0.0) / base(at);
        }
        if (at.chi == Flag::Minus) {
            at.chi = Flag::Plus;
            return C(1.0, 0.0) / base(at);
        }
        if (at.a == Flag::Minus) {
            at.a = Flag::Plus;
            return C(sign_draw("aSign|" + at.arg), 0.0) * base(at);
        }
        if (at.side == Side::Spectral && at.norm == Norm::Classical)
            return ii_unit() * sign_draw(label_of(at));
        return generic_draw(label_of(at));
    }

    C base_delta_iii(Atom at) const {
        if (at.s == Flag::Minus) {
            at.s = Flag::Plus;
            return C(1.0, 0.0) / base(at);
        }
        if (at.conj_args && at.side == Side::Spectral) {
            at.conj_args = false;
            return base(at);
        }
        bool carrier = ctx_.twisted && at.side == Side::Geometric &&
                       at.norm == Norm::Classical;
        if (carrier && at.z_shift != 0) {
            int k = at.z_shift;
            at.z_shift = 0;
            return base(at) * int_pow(base(lambda_h1("z1")), k);
        }
        if (carrier && at.h_twist != 0) {
            int k = at.h_twist;
            at.h_twist = 0;
            return base(at) * int_pow(base(varpi("h")), -k);
        }
        if (carrier && at.chi == Flag::Minus) {
            at.chi = Flag::Plus;
            return base(at) * int_pow(base(delta_ii(at.arg)), -2);
        }
        if (at.side == Side::Spectral && ctx_.archimedean)
            return C(sign_draw(label_of(at)), 0.0);
        return generic_draw(label_of(at));
    }

    C base_delta_iii1(Atom at) const {
        if (drop_argument_moves(at)) return base(at);
        if (at.s == Flag::Minus) {
            at.s = Flag::Plus;
            return C(1.0, 0.0) / base(at);
        }
        if (ctx_.archimedean) return C(sign_draw(label_of(at)), 0.0);
        return generic_draw(label_of(at));
    }

    C base_delta_iii2(Atom at) const {
        if (at.norm == Norm::D) {
            at.norm = Norm::Classical;
            return C(1.0, 0.0) / base(at);
        }
        bool carrier = !ctx_.twisted && at.norm == Norm::Classical;
        if (carrier && at.z_shift != 0) {
            int k = at.z_shift;
            at.z_shift = 0;
            return base(at) * int_pow(base(lambda_h1("z1")), -k);
        }
        if (carrier && at.chi == Flag::Minus) {
            at.chi = Flag::Plus;
            return base(at) * int_pow(base(delta_ii(at.arg)), 2);
        }
        return generic_draw(label_of(at));
    }

    C base_eps(Atom at) const {
        if (at.psi == Flag::Minus) {
            at.psi = Flag::Plus;
            return C(static_cast<double>(ctx_.detv_sign), 0.0) * base(at);
        }
        double s = sign_draw(label_of(at));
        if (ctx_.detv_sign > 0) return C(s, 0.0);
        return C(0.0, s);  // a square root of -1 when det V is -1
    }

    C base_pairing(Atom at) const {
        if (at.side == Side::Geometric) {
            if (at.m1 == Morph::J || at.m2 == Morph::JHat) {
                if (at.m1 == Morph::J && at.m2 != Morph::None)
                    throw domain_error("sampler: unsupported pairing combination");
                if (at.m2 == Morph::JHat && at.m1 != Morph::None)
                    throw domain_error("sampler: unsupported pairing combination");
                Atom b = at;
                if (at.m1 == Morph::J && at.norm == Norm::Classical) {
                    b.m1 = Morph::None;
                    b.m2 = Morph::IHat;
                    b.norm = Norm::D;
                    return C(1.0, 0.0) / base(b);
                }
                if (at.m2 == Morph::JHat && at.norm == Norm::Classical) {
                    b.m2 = Morph::None;
                    b.m1 = Morph::I;
                    b.norm = Norm::TN;
                    return base(b);
                }
                if (at.m1 == Morph::J && at.norm == Norm::Star) {
                    b.m1 = Morph::None;
                    b.m2 = Morph::IHat;
                    b.norm = Norm::Classical;
                    return C(1.0, 0.0) / base(b);
                }
                if (at.m2 == Morph::JHat && at.norm == Norm::Star) {
                    b.m2 = Morph::None;
                    b.m1 = Morph::I;
                    b.norm = Norm::TN;
                    return C(1.0, 0.0) / base(b);
                }
                throw domain_error("sampler: unsupported pairing combination");
            }
            return unit_draw(label_of(at));
        }
        // Spectral pairings take sign values.
        if (at.norm == Norm::D && at.conj_args) {
            Atom b = at;
            b.norm = Norm::Classical;
            b.conj_args = false;
            if (ctx_.whittaker)
                b.chi = at.chi == Flag::Plus ? Flag::Minus : Flag::Plus;
            return base(b);
        }
        return C(sign_draw(label_of(at)), 0.0);
    }
};

}  // namespace dualnorm::factor
