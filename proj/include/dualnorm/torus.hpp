#pragma once

#include "dualnorm/root_datum.hpp"
#include "dualnorm/unit_value.hpp"

namespace dualnorm {
namespace torus {

/// A real torus T(R) described through its cocharacter lattice X_*(T) = Z^n
/// (the coordinates in which torus points are written) and the Galois
/// involution sigma_T acting on that lattice.
struct RealTorusDatum {
    std::size_t rank = 0;
    IMat sigma;  // action of sigma_T on X_*(T)

    void validate() const {
        if (sigma.size() != rank) throw domain_error("torus datum: sigma dimension mismatch");
        for (const auto& row : sigma)
            if (row.size() != rank) throw domain_error("torus datum: sigma not square");
        if (mul(sigma, sigma) != identity_imat(rank))
            throw domain_error("torus datum: sigma is not an involution");
    }

    /// Contragredient action on the dual lattice (where character exponents live).
    IMat sigma_dual() const { return transpose(sigma); }
};

/// A point of T(R) presented as  exp(H) * exp(i*pi*lam_vee)  with
/// H = h_re + i*pi*h_im_pi in the real Lie algebra:  sigma fixes h_re and
/// lam_vee and negates h_im_pi.  The same point admits many presentations;
/// see point_equal.
struct TorusPoint {
    QVec h_re;
    QVec h_im_pi;
    IVec lam_vee;
};

inline TorusPoint make_torus_point(const RealTorusDatum& td, QVec h_re, QVec h_im_pi,
                                   IVec lam_vee) {
    if (h_re.size() != td.rank || h_im_pi.size() != td.rank || lam_vee.size() != td.rank)
        throw domain_error("torus point: coordinate dimension mismatch");
    if (mul(td.sigma, h_re) != h_re)
        throw domain_error("torus point: real part not sigma-invariant");
    if (mul(td.sigma, h_im_pi) != neg(h_im_pi))
        throw domain_error("torus point: imaginary part not sigma-anti-invariant");
    if (mul(td.sigma, lam_vee) != lam_vee)
        throw domain_error("torus point: torsion part not sigma-invariant");
    return TorusPoint{std::move(h_re), std::move(h_im_pi), std::move(lam_vee)};
}

inline TorusPoint identity_point(const RealTorusDatum& td) {
    return TorusPoint{zero_qvec(td.rank), zero_qvec(td.rank), zero_ivec(td.rank)};
}

/// Group law in exponential coordinates.
inline TorusPoint point_mul(const TorusPoint& a, const TorusPoint& b) {
    return TorusPoint{add(a.h_re, b.h_re), add(a.h_im_pi, b.h_im_pi),
                      add(a.lam_vee, b.lam_vee)};
}

/// Two presentations name the same point iff the real parts agree and the
/// combined imaginary data h_im_pi + lam_vee differ by an element of 2*Z^n
/// (exp has kernel 2*pi*i*X_*(T)).
inline bool point_equal(const TorusPoint& a, const TorusPoint& b) {
    if (a.h_re != b.h_re) return false;
    QVec ca = add(a.h_im_pi, to_qvec(a.lam_vee));
    QVec cb = add(b.h_im_pi, to_qvec(b.lam_vee));
    QVec d = sub(ca, cb);
    for (const auto& x : d) {
        Rat half = x / Rat(2);
        if (!half.is_integer()) return false;
    }
    return true;
}

/// Exponent data of a character: Lambda_{(nu, lam)} evaluated on
/// exp(H) exp(i*pi*lam_vee) is e^{<nu,H>} e^{2*pi*i*<lam,lam_vee>}.
struct CharacterData {
    CVec nu;
    QVec lam;

    friend bool operator==(const CharacterData& a, const CharacterData& b) {
        return a.nu == b.nu && a.lam == b.lam;
    }
    friend bool operator<(const CharacterData& a, const CharacterData& b) {
        auto key = [](const CharacterData& c) {
            std::vector<Rat> k;
            for (const auto& z : c.nu) { k.push_back(z.re); k.push_back(z.im); }
            for (const auto& r : c.lam) k.push_back(r);
            return k;
        };
        return key(a) < key(b);
    }
};

/// The well-definedness congruence: (nu - sigma*nu)/2 - (lam + sigma*lam)
/// must lie in the designated lattice (rows of `lattice`), with vanishing
/// imaginary part.  `sigma` acts on the lattice where nu and lam live.
inline bool check_character_congruence(const CharacterData& data, const IMat& sigma,
                                       const QMat& lattice) {
    CVec nu_minus = sub(data.nu, mul(sigma, data.nu));
    QVec lam_plus = add(data.lam, mul(sigma, data.lam));
    if (!is_real(nu_minus)) return false;
    QVec w = sub(scale(Rat(1, 2), re_part(nu_minus)), lam_plus);
    return in_lattice(lattice, w);
}

inline QMat standard_lattice(std::size_t n) {
    QMat rows(n, zero_qvec(n));
    for (std::size_t i = 0; i < n; ++i) rows[i][i] = Rat(1);
    return rows;
}

/// Evaluate Lambda_{(nu,lam)} at a torus point, exactly.  With
/// nu = x + i*y and H = A + i*pi*B:
///   <nu,H> = <x,A> - pi*<y,B>  +  i*( <y,A> + pi*<x,B> )
/// so the magnitude components are (<x,A>, -<y,B>) and the phase splits into
/// radians <y,A> plus turns <x,B>/2 + <lam,lam_vee>.
inline UnitValue eval_character(const CharacterData& data, const TorusPoint& p) {
    QVec x = re_part(data.nu), y = im_part(data.nu);
    UnitValue u;
    u.log_rat = dot(x, p.h_re);
    u.log_pi = -dot(y, p.h_im_pi);
    u.radians = dot(y, p.h_re);
    u.turns = (dot(x, p.h_im_pi) / Rat(2) + dot(data.lam, to_qvec(p.lam_vee))).mod1();
    return u;
}

/// Evaluate with the congruence checked against the torus's own character
/// lattice (Z^n); a failing congruence marks the result non-authoritative.
inline UnitValue eval_character_checked(const RealTorusDatum& td, const CharacterData& data,
                                        const TorusPoint& p) {
    UnitValue u = eval_character(data, p);
    u.authoritative =
        check_character_congruence(data, td.sigma_dual(), standard_lattice(td.rank));
    return u;
}

/// The renormalization on character data: (nu, lam) -> (-nu, -lam).
inline CharacterData d_character(const CharacterData& data) {
    return CharacterData{neg(data.nu), neg(data.lam)};
}

/// Central-character value e^{<mu,H>} e^{2 pi i <lam, lam_vee>} at a central
/// point z of the group whose dual frame is `rd` (coroots of the frame are the
/// roots of the group itself and must annihilate z).  Independence of the
/// value from the Weyl twist mu -> w(mu) is asserted over the whole group.
inline UnitValue central_value(const BasedRootDatum& rd, const CVec& mu, const QVec& lam,
                               const TorusPoint& z) {
    for (const auto& pr : root_system(rd)) {
        QVec c = to_qvec(pr.coroot);
        if (!dot(c, z.h_re).is_zero())
            throw domain_error("central point: a root acts nontrivially on the real part");
        Rat w = dot(c, z.h_im_pi) + dot(c, to_qvec(z.lam_vee));
        if (!(w / Rat(2)).is_integer())
            throw domain_error("central point: a root pairs nontrivially with the data");
    }
    UnitValue base = eval_character(CharacterData{mu, lam}, z);
    for (const auto& w : weyl_group(rd)) {
        UnitValue tw = eval_character(CharacterData{w.apply_cochar(mu), lam}, z);
        if (tw != base)
            throw domain_error("central value is not Weyl-twist independent");
    }
    return base;
}

}  // namespace torus
}  // namespace dualnorm
