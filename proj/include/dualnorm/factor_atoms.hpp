// Formal multiplicative expressions in transfer-factor atoms.  An expression
// is a product of atoms with integer exponents; atoms carry the flags the
// rewrite rules act on (datum inversion, character inversion, gauge choice,
// formal conjugation, conjugated arguments, central shifts, twists, pairing
// morphisms and normalizations).
#pragma once

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "dualnorm/rational.hpp"

namespace dualnorm::factor {

enum class Kind {
    DeltaI,
    DeltaII,
    DeltaIII,
    DeltaIII1,
    DeltaIII2,
    EpsL,
    Varpi,
    LambdaH1,
    CScalar,
    DetV,
    IISquare,  // argument-independent sign: the square of any second-kind spectral atom
    ASign,     // gauge sign shared by the first- and second-kind atoms of one pair
    Pairing,
};

enum class Side { Geometric, Spectral };
enum class Norm { Classical, D, TN, Star };
enum class Flag { Plus, Minus };
enum class Morph { None, I, J, IHat, JHat };

struct Atom {
    Kind kind = Kind::DeltaI;
    Side side = Side::Geometric;
    Norm norm = Norm::Classical;
    Flag chi = Flag::Plus;   // character inversion on second/third-kind atoms
    Flag a = Flag::Plus;     // gauge choice on first/second-kind atoms
    Flag s = Flag::Plus;     // datum inversion
    Flag psi = Flag::Plus;   // additive-character orientation on EpsL
    bool conj_op = false;    // formal complex conjugation applied to the value
    bool conj_args = false;  // arguments replaced by their conjugates (spectral)
    Morph m1 = Morph::None;  // morphism in the first pairing slot
    Morph m2 = Morph::None;  // morphism in the second pairing slot
    int z_shift = 0;         // central translations of the first argument
    int h_twist = 0;         // twists of the second argument
    std::string arg = "x";   // opaque argument label
    int exp = 1;

    auto key() const {
        return std::make_tuple(static_cast<int>(kind), static_cast<int>(side),
                               static_cast<int>(norm), static_cast<int>(chi),
                               static_cast<int>(a), static_cast<int>(s),
                               static_cast<int>(psi), conj_op, conj_args,
                               static_cast<int>(m1), static_cast<int>(m2), z_shift,
                               h_twist, arg);
    }
    bool same_key(const Atom& o) const { return key() == o.key(); }
    bool operator<(const Atom& o) const { return key() < o.key(); }
    bool operator==(const Atom& o) const { return key() == o.key() && exp == o.exp; }
};

/// A finite product of atoms.
struct Expr {
    std::vector<Atom> atoms;
};

inline Expr operator*(const Expr& a, const Expr& b) {
    Expr out = a;
    out.atoms.insert(out.atoms.end(), b.atoms.begin(), b.atoms.end());
    return out;
}

inline Expr inverse(const Expr& e) {
    Expr out = e;
    for (auto& a : out.atoms) a.exp = -a.exp;
    return out;
}

inline Expr pow(const Expr& e, int k) {
    Expr out = e;
    for (auto& a : out.atoms) a.exp *= k;
    return out;
}

/// Formal conjugation distributes over the product.
inline Expr conj(const Expr& e) {
    Expr out = e;
    for (auto& a : out.atoms) a.conj_op = !a.conj_op;
    return out;
}

inline Expr expr(const Atom& a) { return Expr{{a}}; }
inline Expr one() { return Expr{}; }

// ---- atom constructors ----------------------------------------------------

inline Atom delta_i(const std::string& arg, Side side = Side::Geometric, int exp = 1) {
    Atom a;
    a.kind = Kind::DeltaI;
    a.side = side;
    a.arg = arg;
    a.exp = exp;
    return a;
}

inline Atom delta_ii(const std::string& arg, Side side = Side::Geometric, int exp = 1) {
    Atom a;
    a.kind = Kind::DeltaII;
    a.side = side;
    a.arg = arg;
    a.exp = exp;
    return a;
}

inline Atom delta_iii(const std::string& arg, Side side = Side::Geometric, int exp = 1) {
    Atom a;
    a.kind = Kind::DeltaIII;
    a.side = side;
    a.arg = arg;
    a.exp = exp;
    return a;
}

inline Atom delta_iii1(const std::string& arg, int exp = 1) {
    Atom a;
    a.kind = Kind::DeltaIII1;
    a.arg = arg;
    a.exp = exp;
    return a;
}

inline Atom delta_iii2(const std::string& arg, int exp = 1) {
    Atom a;
    a.kind = Kind::DeltaIII2;
    a.arg = arg;
    a.exp = exp;
    return a;
}

inline Atom eps_l(Flag psi = Flag::Plus, int exp = 1) {
    Atom a;
    a.kind = Kind::EpsL;
    a.psi = psi;
    a.arg = "V";
    a.exp = exp;
    return a;
}

inline Atom varpi(const std::string& arg, int exp = 1) {
    Atom a;
    a.kind = Kind::Varpi;
    a.arg = arg;
    a.exp = exp;
    return a;
}

inline Atom lambda_h1(const std::string& arg, int exp = 1) {
    Atom a;
    a.kind = Kind::LambdaH1;
    a.arg = arg;
    a.exp = exp;
    return a;
}

inline Atom c_scalar(const std::string& arg = "c", int exp = 1) {
    Atom a;
    a.kind = Kind::CScalar;
    a.arg = arg;
    a.exp = exp;
    return a;
}

inline Atom det_v(int exp = 1) {
    Atom a;
    a.kind = Kind::DetV;
    a.arg = "V";
    a.exp = exp;
    return a;
}

inline Atom ii_square(int exp = 1) {
    Atom a;
    a.kind = Kind::IISquare;
    a.side = Side::Spectral;
    a.arg = "II";
    a.exp = exp;
    return a;
}

inline Atom a_sign(const std::string& arg, int exp = 1) {
    Atom a;
    a.kind = Kind::ASign;
    a.arg = arg;
    a.exp = exp;
    return a;
}

inline Atom pairing_geom(Morph m1, Morph m2, Norm norm, const std::string& arg,
                         int exp = 1) {
    Atom a;
    a.kind = Kind::Pairing;
    a.side = Side::Geometric;
    a.norm = norm;
    a.m1 = m1;
    a.m2 = m2;
    a.arg = arg;
    a.exp = exp;
    return a;
}

inline Atom pairing_spec(Norm norm, bool conj_args, Flag orientation,
                         const std::string& arg, int exp = 1) {
    Atom a;
    a.kind = Kind::Pairing;
    a.side = Side::Spectral;
    a.norm = norm;
    a.conj_args = conj_args;
    a.chi = orientation;  // Plus = lambda, Minus = lambdabar
    a.arg = arg;
    a.exp = exp;
    return a;
}

// ---- modifiers ------------------------------------------------------------

inline Atom with_s_minus(Atom a) {
    a.s = Flag::Minus;
    return a;
}
inline Atom with_chi_minus(Atom a) {
    a.chi = Flag::Minus;
    return a;
}
inline Atom with_a_minus(Atom a) {
    a.a = Flag::Minus;
    return a;
}
inline Atom with_norm(Atom a, Norm n) {
    a.norm = n;
    return a;
}
inline Atom with_conj_args(Atom a) {
    a.conj_args = true;
    return a;
}
inline Atom with_z_shift(Atom a, int k) {
    a.z_shift += k;
    return a;
}
inline Atom with_h_twist(Atom a, int k) {
    a.h_twist += k;
    return a;
}
inline Atom with_exp(Atom a, int e) {
    a.exp = e;
    return a;
}

// ---- evaluation / proof context -------------------------------------------

struct Context {
    bool twisted = false;
    bool archimedean = true;
    bool bounded = true;
    bool quasi_split = false;
    bool whittaker = false;
    int detv_sign = 1;

    std::string name() const {
        std::string out = twisted ? "twisted" : "standard";
        out += archimedean ? ",arch" : ",nonarch";
        out += bounded ? ",bounded" : ",unbounded";
        if (quasi_split) out += ",qs";
        if (whittaker) out += ",whit";
        if (detv_sign < 0) out += ",detv-";
        return out;
    }
};

// ---- printing --------------------------------------------------------------

inline std::string to_string(const Atom& at) {
    std::string n;
    switch (at.kind) {
        case Kind::DeltaI: n = "DI"; break;
        case Kind::DeltaII: n = "DII"; break;
        case Kind::DeltaIII: n = "DIII"; break;
        case Kind::DeltaIII1: n = "DIII1"; break;
        case Kind::DeltaIII2: n = "DIII2"; break;
        case Kind::EpsL: n = "epsL"; break;
        case Kind::Varpi: n = "varpi"; break;
        case Kind::LambdaH1: n = "lamH1"; break;
        case Kind::CScalar: n = "c"; break;
        case Kind::DetV: n = "detV"; break;
        case Kind::IISquare: n = "IIsq"; break;
        case Kind::ASign: n = "aSign"; break;
        case Kind::Pairing: n = "pair"; break;
    }
    if (at.side == Side::Spectral) n += "^spec";
    switch (at.norm) {
        case Norm::Classical: break;
        case Norm::D: n += "_D"; break;
        case Norm::TN: n += "_tn"; break;
        case Norm::Star: n += "_*"; break;
    }
    std::string flags;
    if (at.chi == Flag::Minus) flags += "chi-";
    if (at.a == Flag::Minus) flags += "a-";
    if (at.s == Flag::Minus) flags += "s-";
    if (at.psi == Flag::Minus) flags += "psi-";
    if (at.conj_op) flags += "conj,";
    if (at.conj_args) flags += "cargs,";
    if (at.z_shift) flags += "z" + std::to_string(at.z_shift) + ",";
    if (at.h_twist) flags += "h" + std::to_string(at.h_twist) + ",";
    if (at.m1 != Morph::None)
        flags += std::string("m1=") + (at.m1 == Morph::I ? "i" : at.m1 == Morph::J ? "j"
                                       : at.m1 == Morph::IHat ? "ihat" : "jhat") + ",";
    if (at.m2 != Morph::None)
        flags += std::string("m2=") + (at.m2 == Morph::I ? "i" : at.m2 == Morph::J ? "j"
                                       : at.m2 == Morph::IHat ? "ihat" : "jhat") + ",";
    std::string out = n + "(" + at.arg;
    if (!flags.empty()) out += ";" + flags;
    out += ")";
    if (at.exp != 1) out += "^" + std::to_string(at.exp);
    return out;
}

inline std::string to_string(const Expr& e) {
    if (e.atoms.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < e.atoms.size(); ++i) {
        if (i) out += " * ";
        out += to_string(e.atoms[i]);
    }
    return out;
}

}  // namespace dualnorm::factor
