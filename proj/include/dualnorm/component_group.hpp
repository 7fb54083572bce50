// Component groups of parameter centralizers in the frame torus, for either
// of the two isogeny lattices: finite abelian presentation via the Smith
// normal form, torsion representatives, the surjection between the two
// isogenies, and endoscopic root subsystems cut out by an element.
#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "dualnorm/linalg.hpp"
#include "dualnorm/parameters.hpp"
#include "dualnorm/rational.hpp"
#include "dualnorm/root_datum.hpp"
#include "dualnorm/smith.hpp"

namespace dualnorm::cg {

enum class Isogeny { Adjoint, SimplyConnected };

inline std::string to_string(Isogeny iso) {
    return iso == Isogeny::Adjoint ? "ad" : "sc";
}

/// Row bases (in frame coordinates) of the two isogeny lattices.  The larger
/// lattice `ad_basis` always feeds the numerator of the component formula.
struct IsogenyLattices {
    QMat ad_basis;
    QMat sc_basis;
};

/// A torsion point of the isogeny torus: a rational vector taken modulo the
/// isogeny lattice.  `order` is the order of the point, and `w` its image
/// under (S - I) inside the numerator lattice.
struct TorsionElement {
    QVec q;
    QVec w;
    long long order = 1;
    std::string label;
};

/// Finite abelian component group with exact representatives and discrete
/// logarithms with respect to the Smith-adapted generating set.
struct ComponentGroup {
    Isogeny isogeny = Isogeny::Adjoint;
    std::vector<long long> divisors;         // invariant factors > 1
    std::vector<TorsionElement> generators;  // one per divisor
    QMat numerator_basis;                    // basis rows of Im_Q(S-I) cap L_ad
    QMat isogeny_lattice;                    // basis rows of L_isog
    IMat s_minus_i;
    IMat log_u;                              // SNF row transform on numerator coords
    std::vector<long long> log_diag;         // full diagonal, one per numerator row
    std::vector<std::size_t> kept;           // indices with divisor > 1

    std::size_t order() const {
        std::size_t n = 1;
        for (long long d : divisors) n *= static_cast<std::size_t>(d);
        return n;
    }
    bool is_elementary_two() const {
        return std::all_of(divisors.begin(), divisors.end(),
                           [](long long d) { return d == 2; });
    }

    /// Exponents of an element of the numerator lattice with respect to the
    /// kept generators, each reduced modulo its divisor.
    IVec class_of_w(const QVec& w) const {
        QVec c = coords_in_basis(numerator_basis, w);
        IVec ci(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (!c[i].is_integer())
                throw domain_error("component group: vector outside the numerator lattice");
            ci[i] = c[i].num;
        }
        IVec gamma = mul(log_u, ci);
        IVec out(kept.size());
        for (std::size_t i = 0; i < kept.size(); ++i) {
            long long d = log_diag[kept[i]];
            long long e = gamma[kept[i]] % d;
            if (e < 0) e += d;
            out[i] = e;
        }
        // Unkept coordinates carry divisor 1 and reduce to zero automatically.
        return out;
    }

    /// Exponents of a torsion point (through w = (S - I) q).
    IVec class_of_point(const QVec& q) const { return class_of_w(mul(s_minus_i, q)); }

    /// Torsion point representing the element with the given exponents.
    TorsionElement element_from_exponents(const IVec& e) const {
        if (e.size() != generators.size())
            throw domain_error("component group: exponent tuple has the wrong length");
        std::size_t n = s_minus_i.size();
        QVec q(n), w(n);
        for (std::size_t i = 0; i < e.size(); ++i) {
            q = add(q, scale(Rat(e[i]), generators[i].q));
            w = add(w, scale(Rat(e[i]), generators[i].w));
        }
        TorsionElement t;
        t.q = q;
        t.w = w;
        t.order = point_order(q);
        t.label = exponent_label(e);
        return t;
    }

    /// All elements, ordered lexicographically by exponent tuple.
    std::vector<TorsionElement> elements() const {
        std::vector<TorsionElement> out;
        IVec e(generators.size(), 0);
        while (true) {
            out.push_back(element_from_exponents(e));
            std::size_t i = e.size();
            while (i > 0) {
                --i;
                if (++e[i] < divisors[i]) break;
                e[i] = 0;
                if (i == 0) return out;
            }
            if (e.empty()) return out;
        }
    }

    /// Order of a rational point modulo the isogeny lattice.
    long long point_order(const QVec& q) const {
        QVec c = coords_in_basis(isogeny_lattice, q);
        long long l = 1;
        for (const Rat& x : c) l = std::lcm(l, x.den);
        return l;
    }

    static std::string exponent_label(const IVec& e) {
        std::string out = "s[";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out += '.';
            out += std::to_string(e[i]);
        }
        return out + "]";
    }
};

namespace detail {

/// Basis rows of the lattice L cap W where L has the given basis rows and W
/// is the rational column space of `a`.
inline QMat lattice_intersect_image(const QMat& l_rows, const IMat& a) {
    std::size_t n = a.size();
    QMat at = transpose(to_qmat(a));
    QMat left_null = kernel_basis(at, n);  // rows u with u^T a = 0
    if (left_null.empty()) return l_rows;
    // Constraints on coefficient vectors c: sum_k c_k <u_j, b_k> = 0.
    std::size_t m = l_rows.size();
    IMat g;
    for (const QVec& u : left_null) {
        QVec row(m);
        long long denom = 1;
        for (std::size_t k = 0; k < m; ++k) {
            row[k] = dot(u, l_rows[k]);
            denom = std::lcm(denom, row[k].den);
        }
        IVec irow(m);
        for (std::size_t k = 0; k < m; ++k)
            irow[k] = row[k].num * (denom / row[k].den);
        g.push_back(std::move(irow));
    }
    Smith snf = smith_normal_form(g);
    std::size_t r = snf.rank();
    QMat out;
    for (std::size_t j = r; j < m; ++j) {
        // Column j of V spans part of the integer kernel.
        QVec v(l_rows.empty() ? 0 : l_rows[0].size());
        for (std::size_t k = 0; k < m; ++k)
            v = add(v, scale(Rat(snf.v[k][j]), l_rows[k]));
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace detail

/// Component group of the centralizer of the parameter inside the isogeny
/// torus.  Requires a regular parameter: no frame root may annihilate both
/// mu and its involution image (otherwise the centralizer is larger than the
/// torus and this presentation does not apply).
inline ComponentGroup component_group(const param::DiscreteParameter& p, Isogeny iso,
                                      const IsogenyLattices& lat) {
    const IMat& s = p.frame.sigma_bar.matrix;
    std::size_t n = p.frame.rd.rank;

    for (const RootPair& rp : root_system(p.frame.rd)) {
        CRat a = dot(to_qvec(rp.root), p.mu);
        CRat b = dot(to_qvec(rp.root), mul(s, p.mu));
        if (a.is_zero() && b.is_zero())
            throw domain_error(
                "component group: unsupported non-regular parameter (a root annihilates "
                "mu and its involution image)");
    }

    ComponentGroup out;
    out.isogeny = iso;
    out.s_minus_i = s;
    for (std::size_t i = 0; i < n; ++i) out.s_minus_i[i][i] -= 1;
    out.isogeny_lattice = iso == Isogeny::Adjoint ? lat.ad_basis : lat.sc_basis;

    out.numerator_basis = detail::lattice_intersect_image(lat.ad_basis, out.s_minus_i);
    std::size_t r = out.numerator_basis.size();

    // Relation matrix: coordinates of (S - I) l for l in the isogeny lattice.
    IMat rel_t(r, IVec(out.isogeny_lattice.size()));
    for (std::size_t k = 0; k < out.isogeny_lattice.size(); ++k) {
        QVec img = mul(out.s_minus_i, out.isogeny_lattice[k]);
        QVec c = coords_in_basis(out.numerator_basis, img);
        for (std::size_t i = 0; i < r; ++i) {
            if (!c[i].is_integer())
                throw domain_error("component group: denominator outside numerator lattice");
            rel_t[i][k] = c[i].num;
        }
    }
    Smith snf = smith_normal_form(rel_t);
    if (snf.rank() != r)
        throw domain_error("component group: quotient is not finite");
    out.log_u = snf.u;
    out.log_diag = snf.diag;

    IMat uinv = unimodular_inverse(snf.u);
    QMat a_q = to_qmat(out.s_minus_i);
    for (std::size_t i = 0; i < r; ++i) {
        if (snf.diag[i] <= 1) continue;
        out.kept.push_back(i);
        out.divisors.push_back(snf.diag[i]);
        QVec w(n);
        for (std::size_t k = 0; k < r; ++k)
            w = add(w, scale(Rat(uinv[k][i]), out.numerator_basis[k]));
        QVec q;
        if (!solve_rational(a_q, w, q))
            throw domain_error("component group: generator has no rational preimage");
        TorsionElement t;
        t.q = q;
        t.w = w;
        t.label = "g" + std::to_string(out.divisors.size());
        out.generators.push_back(std::move(t));
    }
    for (auto& g : out.generators) g.order = out.point_order(g.q);
    return out;
}

/// The two component groups together with the surjection from the simply
/// connected one onto the adjoint one and its kernel.
struct ComponentGroupPair {
    ComponentGroup ad;
    ComponentGroup sc;
    std::vector<IVec> surjection;        // sc generator i -> ad exponents
    std::vector<IVec> kernel_exponents;  // sc exponent tuples mapping to zero
};

inline ComponentGroupPair component_group_pair(const param::DiscreteParameter& p,
                                               const IsogenyLattices& lat) {
    ComponentGroupPair out;
    out.ad = component_group(p, Isogeny::Adjoint, lat);
    out.sc = component_group(p, Isogeny::SimplyConnected, lat);
    for (const auto& g : out.sc.generators) out.surjection.push_back(out.ad.class_of_w(g.w));
    for (const auto& e : out.sc.elements()) {
        IVec img = out.ad.class_of_w(e.w);
        if (std::all_of(img.begin(), img.end(), [](long long x) { return x == 0; }))
            out.kernel_exponents.push_back(out.sc.class_of_w(e.w));
    }
    return out;
}

/// The root subsystem on which the torsion element acts trivially, and a
/// dominance flag for the supplied infinitesimal part on that subsystem.
struct EndoscopicAssignment {
    TorsionElement s;
    std::vector<RootPair> roots_fixed;
    bool well_positioned = true;
};

inline EndoscopicAssignment endoscopic_roots(const TorsionElement& s,
                                             const param::DualGroupFrame& frame,
                                             const CVec& mu) {
    EndoscopicAssignment out;
    out.s = s;
    for (const RootPair& rp : root_system(frame.rd)) {
        Rat pairing = dot(to_qvec(rp.root), s.q);
        if (!pairing.is_integer()) continue;
        out.roots_fixed.push_back(rp);
        if (is_positive_root(frame.rd, all_simple_indices(frame.rd), rp.root)) {
            CRat val = dot(to_qvec(rp.root), mu);
            if (!(Rat(0) < val.re)) out.well_positioned = false;
        }
    }
    std::sort(out.roots_fixed.begin(), out.roots_fixed.end());
    return out;
}

}  // namespace dualnorm::cg
