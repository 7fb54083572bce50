// Discrete parameters attached to a based root datum frame: validation,
// kappa-lattice membership, renormalization, and opposite-orientation
// representatives.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dualnorm/linalg.hpp"
#include "dualnorm/rational.hpp"
#include "dualnorm/root_datum.hpp"
#include "dualnorm/smith.hpp"

namespace dualnorm::param {

/// Which of the two opposite positivity conventions the frame carries.
enum class Orientation { Standard, Opposite };

inline Orientation flip(Orientation o) {
    return o == Orientation::Standard ? Orientation::Opposite : Orientation::Standard;
}

inline std::string to_string(Orientation o) {
    return o == Orientation::Standard ? "standard" : "opposite";
}

/// A based root datum together with a lattice involution, a Levi subset of
/// the simple indices, and an orientation choice.  The involution acts on the
/// cocharacter lattice of the frame torus.
struct DualGroupFrame {
    BasedRootDatum rd;
    Involution sigma_bar;
    std::vector<std::size_t> levi;   // sorted simple indices
    Orientation orientation = Orientation::Standard;

    /// The based root datum with positivity matching the orientation: the
    /// opposite orientation negates every simple root and coroot.
    BasedRootDatum oriented_rd() const {
        if (orientation == Orientation::Standard) return rd;
        BasedRootDatum out = rd;
        for (auto& row : out.simple_roots) row = neg(row);
        for (auto& row : out.simple_coroots) row = neg(row);
        return out;
    }

    /// The Levi sub-datum (selected simple rows, same ambient lattice) in the
    /// frame's orientation.
    BasedRootDatum levi_datum() const {
        BasedRootDatum base = oriented_rd();
        BasedRootDatum out;
        out.rank = base.rank;
        for (std::size_t i : levi) {
            out.simple_roots.push_back(base.simple_roots.at(i));
            out.simple_coroots.push_back(base.simple_coroots.at(i));
        }
        return out;
    }

    void validate() const {
        rd.validate();
        for (std::size_t k = 0; k < levi.size(); ++k) {
            if (levi[k] >= rd.semisimple_rank())
                throw domain_error("frame: levi index out of range");
            if (k > 0 && levi[k] <= levi[k - 1])
                throw domain_error("frame: levi indices must be strictly increasing");
        }
        Involution plain = sigma_bar;
        plain.discrete_series_tag = false;
        plain.validate(rd);
        // The involution must preserve the span of the Levi coroots.
        QMat levi_coroots;
        for (std::size_t i : levi) levi_coroots.push_back(to_qvec(rd.simple_coroots[i]));
        for (std::size_t i : levi) {
            IVec img = sigma_bar.apply(rd.simple_coroots[i]);
            if (!in_rational_span(levi_coroots, to_qvec(img)))
                throw domain_error("frame: involution does not preserve the Levi coroot span");
        }
        if (sigma_bar.discrete_series_tag) {
            for (std::size_t i : levi) {
                if (sigma_bar.apply(rd.simple_coroots[i]) != neg(rd.simple_coroots[i]))
                    throw domain_error(
                        "frame: discrete-series tag requires the involution to negate the "
                        "Levi coroots");
            }
        }
    }

    /// Half sum of the positive coroots of the Levi, in the frame orientation.
    QVec iota() const { return half_sum_coroots(oriented_rd(), levi); }

    /// Half sum of the positive roots of the Levi, in the frame orientation.
    QVec rho() const { return half_sum_roots(oriented_rd(), levi); }

    bool operator==(const DualGroupFrame& o) const {
        return rd.simple_roots == o.rd.simple_roots &&
               rd.simple_coroots == o.rd.simple_coroots && rd.rank == o.rd.rank &&
               sigma_bar.matrix == o.sigma_bar.matrix &&
               sigma_bar.discrete_series_tag == o.sigma_bar.discrete_series_tag &&
               levi == o.levi && orientation == o.orientation;
    }
};

/// Convenience: frame on the full set of simple indices.
inline DualGroupFrame full_frame(const BasedRootDatum& rd, const Involution& sigma_bar,
                                 Orientation orientation = Orientation::Standard) {
    DualGroupFrame f;
    f.rd = rd;
    f.sigma_bar = sigma_bar;
    f.levi = all_simple_indices(rd);
    f.orientation = orientation;
    return f;
}

/// Membership in the lattice generated by the integral lattice together with
/// the (-1)-eigenspace of the involution: v lies in it iff (I + S) x = v + S v
/// has an integral solution x.
inline bool kappa_membership(const QVec& v, const DualGroupFrame& frame) {
    const IMat& s = frame.sigma_bar.matrix;
    if (v.size() != s.size()) throw domain_error("kappa_membership: size mismatch");
    IMat a = identity_imat(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) a[i][j] += s[i][j];
    QVec b = add(v, mul(s, v));
    IVec x;
    return solve_integer(a, b, x);
}

/// Whether the fixed space of the involution is contained in the rational
/// span of the Levi coroots (so the associated center has no split part).
inline bool anisotropic_center(const DualGroupFrame& frame) {
    const IMat& s = frame.sigma_bar.matrix;
    std::size_t n = frame.rd.rank;
    QMat s_minus_i(n, QVec(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            s_minus_i[i][j] = Rat(s[i][j] - (i == j ? 1 : 0));
    QMat fixed = kernel_basis(s_minus_i, n);
    QMat levi_coroots;
    for (std::size_t i : frame.levi)
        levi_coroots.push_back(to_qvec(frame.rd.simple_coroots[i]));
    for (const QVec& v : fixed)
        if (!in_rational_span(levi_coroots, v)) return false;
    return true;
}

/// A validated discrete parameter: an integral regular dominant infinitesimal
/// part together with a character-datum shift satisfying the congruence.
struct DiscreteParameter {
    CVec mu;
    QVec lam;
    DualGroupFrame frame;
    bool bounded = false;
};

namespace detail {

/// Real part of 1/2 (mu - S mu) - iota - (lam + S lam); the congruence holds
/// iff the imaginary part of mu - S mu vanishes and this vector is integral.
inline bool congruence_holds(const CVec& mu, const QVec& lam, const IMat& s,
                             const QVec& iota) {
    CVec smu = mul(s, mu);
    std::size_t n = mu.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!(mu[i].im - smu[i].im).is_zero()) return false;
    QVec slam = mul(s, lam);
    for (std::size_t i = 0; i < n; ++i) {
        Rat val = (mu[i].re - smu[i].re) / Rat(2) - iota[i] - (lam[i] + slam[i]);
        if (!val.is_integer()) return false;
    }
    return true;
}

}  // namespace detail

/// Validate (mu, lam) against the frame and normalize lam where the datum
/// forces it.  Throws domain_error when any condition fails.
inline DiscreteParameter validate_parameter(const CVec& mu, const QVec& lam,
                                            const DualGroupFrame& frame) {
    frame.validate();
    std::size_t n = frame.rd.rank;
    if (mu.size() != n || lam.size() != n)
        throw domain_error("parameter: size mismatch with frame rank");

    BasedRootDatum oriented = frame.oriented_rd();
    if (!is_integral_regular_dominant(mu, oriented, frame.levi))
        throw domain_error("parameter: mu is not integral regular dominant for the frame");

    const IMat& s = frame.sigma_bar.matrix;
    QVec iota = frame.iota();
    QVec lam_eff = lam;

    if (!detail::congruence_holds(mu, lam_eff, s, iota))
        throw domain_error("parameter: congruence between mu and lam fails");

    // Boundedness: the real part of mu + S mu vanishes.
    CVec smu = mul(s, mu);
    bool bounded = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!(mu[i].re + smu[i].re).is_zero()) bounded = false;

    bool minus_one_everywhere = true;
    for (std::size_t i = 0; i < n && minus_one_everywhere; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (s[i][j] != (i == j ? -1 : 0)) {
                minus_one_everywhere = false;
                break;
            }
    if (minus_one_everywhere) lam_eff = QVec(n);

    if (anisotropic_center(frame)) {
        for (std::size_t i = 0; i < n; ++i) {
            if (!mu[i].im.is_zero())
                throw domain_error(
                    "parameter: anisotropic center requires a real infinitesimal part");
            if (!(mu[i].re - iota[i]).is_integer())
                throw domain_error(
                    "parameter: anisotropic center requires mu - iota to be integral");
        }
        lam_eff = QVec(n);
        if (!detail::congruence_holds(mu, lam_eff, s, iota))
            throw domain_error(
                "parameter: congruence fails after normalizing lam to zero");
    }

    DiscreteParameter p;
    p.mu = mu;
    p.lam = lam_eff;
    p.frame = frame;
    p.bounded = bounded;
    return p;
}

/// Two parameters are equal when their frames and infinitesimal parts agree
/// and the character shifts differ by a kappa-lattice vector.
inline bool equal_parameters(const DiscreteParameter& a, const DiscreteParameter& b) {
    if (!(a.frame == b.frame)) return false;
    if (!(a.mu == b.mu)) return false;
    QVec diff = sub(a.lam, b.lam);
    return kappa_membership(diff, a.frame);
}

/// Renormalized parameter: mu goes to -w0 mu for the longest element w0 of
/// the Levi Weyl group, lam goes to -lam.  Same frame and orientation.
inline DiscreteParameter renormalize_parameter(const DiscreteParameter& p) {
    WeylElement w0 = longest_element(p.frame.levi_datum());
    CVec mu2 = neg(w0.apply_cochar(p.mu));
    QVec lam2 = neg(p.lam);
    return validate_parameter(mu2, lam2, p.frame);
}

/// Representative of the same parameter in the opposite orientation: the
/// frame flips and both data are negated.
inline DiscreteParameter opposite_representative(const DiscreteParameter& p) {
    DualGroupFrame f = p.frame;
    f.orientation = flip(f.orientation);
    return validate_parameter(neg(p.mu), neg(p.lam), f);
}

}  // namespace dualnorm::param
