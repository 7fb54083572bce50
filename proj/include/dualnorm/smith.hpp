#pragma once

#include <cstdlib>
#include <numeric>
#include <vector>

#include "dualnorm/linalg.hpp"

namespace dualnorm {

/// Smith normal form of an integer matrix A: unimodular U (rows x rows) and
/// V (cols x cols) with U * A * V = D, where D is diagonal with
/// d_1 | d_2 | ... | d_r, d_i > 0.  Row/column operations are tracked so the
/// transforms can be used to solve integer linear systems and to present
/// quotient lattices.
struct Smith {
    IMat u;                       // unimodular row transform
    IMat v;                       // unimodular column transform
    IMat d;                       // diagonal form, same shape as input
    std::vector<long long> diag;  // nonzero entries d_1 | d_2 | ... (r of them)

    std::size_t rank() const { return diag.size(); }
};

inline Smith smith_normal_form(IMat a) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    Smith s;
    s.u = identity_imat(rows);
    s.v = identity_imat(cols);
    if (rows == 0 || cols == 0) { s.d = a; return s; }

    auto row_swap = [&](std::size_t i, std::size_t j) {
        std::swap(a[i], a[j]);
        std::swap(s.u[i], s.u[j]);
    };
    auto col_swap = [&](std::size_t i, std::size_t j) {
        for (std::size_t r = 0; r < rows; ++r) std::swap(a[r][i], a[r][j]);
        for (std::size_t r = 0; r < cols; ++r) std::swap(s.v[r][i], s.v[r][j]);
    };
    auto row_addmul = [&](std::size_t dst, std::size_t src, long long f) {
        for (std::size_t c = 0; c < cols; ++c)
            a[dst][c] = detail::narrow(static_cast<__int128>(a[dst][c]) +
                                       static_cast<__int128>(f) * a[src][c], "snf row op");
        for (std::size_t c = 0; c < rows; ++c)
            s.u[dst][c] = detail::narrow(static_cast<__int128>(s.u[dst][c]) +
                                         static_cast<__int128>(f) * s.u[src][c], "snf row op");
    };
    auto col_addmul = [&](std::size_t dst, std::size_t src, long long f) {
        for (std::size_t r = 0; r < rows; ++r)
            a[r][dst] = detail::narrow(static_cast<__int128>(a[r][dst]) +
                                       static_cast<__int128>(f) * a[r][src], "snf col op");
        for (std::size_t r = 0; r < cols; ++r)
            s.v[r][dst] = detail::narrow(static_cast<__int128>(s.v[r][dst]) +
                                         static_cast<__int128>(f) * s.v[r][src], "snf col op");
    };
    auto row_negate = [&](std::size_t i) {
        for (auto& x : a[i]) x = -x;
        for (auto& x : s.u[i]) x = -x;
    };

    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Find the smallest-magnitude nonzero pivot candidate in the trailing block.
        std::size_t pi = t, pj = t;
        long long best = 0;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                long long m = std::llabs(a[i][j]);
                if (m != 0 && (best == 0 || m < best)) { best = m; pi = i; pj = j; }
            }
        if (best == 0) break;
        row_swap(t, pi);
        col_swap(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0) continue;
                long long q = a[i][t] / a[t][t];
                row_addmul(i, t, -q);
                if (a[i][t] != 0) {  // remainder smaller than pivot: swap up and restart
                    row_swap(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0) continue;
                long long q = a[t][j] / a[t][t];
                col_addmul(j, t, -q);
                if (a[t][j] != 0) {
                    col_swap(t, j);
                    dirty = true;
                }
            }
        }

        // Enforce the divisibility chain: fold any entry not divisible by the
        // pivot into the pivot column and redo this elimination step.
        bool redo = false;
        for (std::size_t i = t + 1; i < rows && !redo; ++i)
            for (std::size_t j = t + 1; j < cols && !redo; ++j)
                if (a[i][j] % a[t][t] != 0) {
                    row_addmul(t, i, 1);
                    redo = true;
                }
        if (redo) continue;

        if (a[t][t] < 0) row_negate(t);
        ++t;
    }

    s.d = a;
    for (std::size_t i = 0; i < t; ++i) s.diag.push_back(a[i][i]);
    return s;
}

/// Solve A x = b over the integers.  Returns false when no integral solution
/// exists (including when the rational solution is non-integral).
inline bool solve_integer(const IMat& a, const IVec& b, IVec& x) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    if (b.size() != rows) throw domain_error("integer solve: rhs dimension mismatch");
    Smith s = smith_normal_form(a);
    IVec c = mul(s.u, b);  // U b
    IVec y(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
        long long di = (i < s.diag.size()) ? s.diag[i] : 0;
        if (di == 0) {
            if (c[i] != 0) return false;
        } else {
            if (c[i] % di != 0) return false;
            if (i < cols) y[i] = c[i] / di;
        }
    }
    x = mul(s.v, y);
    return true;
}

/// Solve A x = b over the integers with a rational right-hand side: solvable
/// only when b is integral (an integer matrix times an integer vector is
/// integral).
inline bool solve_integer(const IMat& a, const QVec& b, IVec& x) {
    IVec bi(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!b[i].is_integer()) return false;
        bi[i] = b[i].num;
    }
    return solve_integer(a, bi, x);
}

/// Invert a unimodular integer matrix.
inline IMat unimodular_inverse(const IMat& m) {
    std::size_t n = m.size();
    IMat inv(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        IVec e(n, 0);
        e[i] = 1;
        IVec x;
        if (!solve_integer(m, e, x)) throw domain_error("matrix is not unimodular");
        for (std::size_t r = 0; r < n; ++r) inv[r][i] = x[r];
    }
    return inv;
}

/// A finitely generated abelian quotient  ambient / sub,  presented by its
/// invariant factors d_1 | d_2 | ... (all > 1), free rank, and generator
/// representatives written in the ambient space's coordinates: torsion_reps[i]
/// generates a cyclic summand of order divisors[i]; free_reps generate the
/// free part.
struct QuotientGroup {
    std::vector<long long> divisors;
    std::size_t free_rank = 0;
    QMat torsion_reps;
    QMat free_reps;

    std::size_t torsion_order() const {
        std::size_t n = 1;
        for (long long d : divisors) n *= static_cast<std::size_t>(d);
        return n;
    }
    bool is_finite() const { return free_rank == 0; }
    std::size_t order() const {
        if (!is_finite()) throw domain_error("order of infinite quotient group");
        return torsion_order();
    }
    bool is_trivial() const { return divisors.empty() && free_rank == 0; }
    bool is_elementary_two_group() const {
        if (free_rank != 0) return false;
        return std::all_of(divisors.begin(), divisors.end(),
                           [](long long d) { return d == 2; });
    }
};

/// Express v in the row basis `basis_rows`; requires exact solvability.
inline QVec coords_in_basis(const QMat& basis_rows, const QVec& v) {
    QMat cols = transpose(basis_rows);
    QVec x;
    if (!solve_rational(cols, v, x))
        throw domain_error("vector outside the span of the given basis");
    return x;
}

/// Quotient of the lattice spanned by `ambient_rows` (a basis, rational
/// coordinates allowed) by the sublattice generated by `sub_rows`.  Throws a
/// containment error when a generator of sub lies outside ambient.
inline QuotientGroup smith_quotient(const QMat& sub_rows, const QMat& ambient_rows) {
    std::size_t n = ambient_rows.size();
    QuotientGroup out;
    if (n == 0) {
        for (const auto& g : sub_rows)
            if (!is_zero(g)) throw domain_error("smith_quotient: sub not contained in ambient");
        return out;
    }

    // Express each sub generator in ambient coordinates; entries must be integers.
    IMat rel;
    for (const auto& g : sub_rows) {
        QVec x = [&] {
            try {
                return coords_in_basis(ambient_rows, g);
            } catch (const domain_error&) {
                throw domain_error("smith_quotient: sub not contained in ambient");
            }
        }();
        IVec row(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!x[i].is_integer())
                throw domain_error("smith_quotient: sub not contained in ambient");
            row[i] = x[i].num;
        }
        rel.push_back(row);
    }

    auto rep_from_column = [&](const IMat& uinv, std::size_t col) {
        QVec rep = zero_qvec(ambient_rows[0].size());
        for (std::size_t k = 0; k < n; ++k)
            rep = add(rep, scale(Rat(uinv[k][col]), ambient_rows[k]));
        return rep;
    };

    if (rel.empty()) {
        out.free_rank = n;
        for (std::size_t i = 0; i < n; ++i) out.free_reps.push_back(ambient_rows[i]);
        return out;
    }

    // Columns of rel^T generate the sublattice in ambient coordinates.
    // U (rel^T) V = D  =>  sublattice = span{ d_i * (U^{-1} e_i) }, so the
    // columns b_i of U^{-1} are an adapted basis of Z^n: the quotient is
    // generated by the images of the b_i with orders d_i (free when absent).
    Smith s = smith_normal_form(transpose(rel));
    IMat uinv = unimodular_inverse(s.u);
    for (std::size_t i = 0; i < s.diag.size(); ++i) {
        if (s.diag[i] == 1) continue;
        out.divisors.push_back(s.diag[i]);
        out.torsion_reps.push_back(rep_from_column(uinv, i));
    }
    for (std::size_t i = s.diag.size(); i < n; ++i) {
        ++out.free_rank;
        out.free_reps.push_back(rep_from_column(uinv, i));
    }
    return out;
}

/// Is v in the integer span of the rows of `basis_rows` (vectors with rational
/// coordinates allowed)?
inline bool in_lattice(const QMat& basis_rows, const QVec& v) {
    if (basis_rows.empty()) return is_zero(v);
    QMat cols = transpose(basis_rows);
    QVec x;
    if (!solve_rational(cols, v, x)) return false;
    // With free variables set to zero the solution of a basis system is exact;
    // verify the reconstruction so non-basis generating sets also work.
    for (const auto& c : x)
        if (!c.is_integer()) return false;
    QVec recon = zero_qvec(v.size());
    for (std::size_t i = 0; i < basis_rows.size(); ++i)
        recon = add(recon, scale(x[i], basis_rows[i]));
    return recon == v;
}

/// Basis of the lattice generated by the rows of `gens` (integer rows).
inline IMat lattice_basis(const IMat& gens) {
    if (gens.empty()) return {};
    // U * gens * V = D  =>  the nonzero rows of D V^{-1} form a basis of the
    // row lattice, since U is a unimodular change of generating set.
    Smith s = smith_normal_form(gens);
    IMat dv = mul(s.d, unimodular_inverse(s.v));
    IMat out;
    for (std::size_t i = 0; i < s.diag.size(); ++i) out.push_back(dv[i]);
    return out;
}

}  // namespace dualnorm
