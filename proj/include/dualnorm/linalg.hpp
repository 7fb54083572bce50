#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dualnorm/rational.hpp"

namespace dualnorm {

using IVec = std::vector<long long>;
using QVec = std::vector<Rat>;
using CVec = std::vector<CRat>;
using IMat = std::vector<IVec>;   // row-major
using QMat = std::vector<QVec>;   // row-major

inline QVec to_qvec(const IVec& v) {
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

inline QMat to_qmat(const IMat& m) {
    QMat out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = to_qvec(m[i]);
    return out;
}

inline Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw domain_error("dot product of mismatched vectors");
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline long long dot(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw domain_error("dot product of mismatched vectors");
    __int128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<__int128>(a[i]) * b[i];
    return detail::narrow(s, "integer dot product");
}

inline Rat dot(const QVec& a, const IVec& b) { return dot(a, to_qvec(b)); }
inline Rat dot(const IVec& a, const QVec& b) { return dot(to_qvec(a), b); }

inline CVec to_cvec(const QVec& v) {
    CVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = CRat(v[i]);
    return out;
}

inline CVec make_cvec(const QVec& re, const QVec& im) {
    if (re.size() != im.size()) throw domain_error("complex vector with mismatched parts");
    CVec out(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) out[i] = CRat(re[i], im[i]);
    return out;
}

inline QVec re_part(const CVec& v) {
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].re;
    return out;
}

inline QVec im_part(const CVec& v) {
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].im;
    return out;
}

inline CRat dot(const QVec& a, const CVec& b) {
    if (a.size() != b.size()) throw domain_error("dot product of mismatched vectors");
    CRat s;
    for (std::size_t i = 0; i < a.size(); ++i) s = s + CRat(a[i]) * b[i];
    return s;
}

inline CRat dot(const CVec& a, const QVec& b) { return dot(b, a); }

inline CVec add(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw domain_error("sum of mismatched vectors");
    CVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline CVec sub(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw domain_error("difference of mismatched vectors");
    CVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline CVec neg(const CVec& v) {
    CVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

inline CVec conj(const CVec& v) {
    CVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].conj();
    return out;
}

inline bool is_zero(const CVec& v) {
    return std::all_of(v.begin(), v.end(), [](const CRat& z) { return z.is_zero(); });
}

inline bool is_real(const CVec& v) {
    return std::all_of(v.begin(), v.end(), [](const CRat& z) { return z.im.is_zero(); });
}

inline QVec add(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw domain_error("sum of mismatched vectors");
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline QVec sub(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw domain_error("difference of mismatched vectors");
    QVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline QVec scale(const Rat& c, const QVec& v) {
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
    return out;
}

inline QVec neg(const QVec& v) { return scale(Rat(-1), v); }

inline IVec add(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw domain_error("sum of mismatched vectors");
    IVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

inline IVec sub(const IVec& a, const IVec& b) {
    if (a.size() != b.size()) throw domain_error("difference of mismatched vectors");
    IVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

inline IVec neg(const IVec& v) {
    IVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

inline bool is_zero(const QVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& r) { return r.is_zero(); });
}

inline bool is_zero(const IVec& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
}

inline QVec zero_qvec(std::size_t n) { return QVec(n); }
inline IVec zero_ivec(std::size_t n) { return IVec(n, 0); }

/// Matrix-vector product (matrix acts on column vectors: out = M v).
inline QVec mul(const QMat& m, const QVec& v) {
    QVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

inline IVec mul(const IMat& m, const IVec& v) {
    IVec out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
    return out;
}

inline QVec mul(const IMat& m, const QVec& v) { return mul(to_qmat(m), v); }

inline CVec mul(const QMat& m, const CVec& v) {
    return make_cvec(mul(m, re_part(v)), mul(m, im_part(v)));
}

inline CVec mul(const IMat& m, const CVec& v) { return mul(to_qmat(m), v); }

inline IMat mul(const IMat& a, const IMat& b) {
    if (a.empty() || b.empty()) throw domain_error("product with empty matrix");
    std::size_t n = a.size(), k = b.size(), p = b[0].size();
    if (a[0].size() != k) throw domain_error("matrix product dimension mismatch");
    IMat out(n, IVec(p, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            __int128 s = 0;
            for (std::size_t t = 0; t < k; ++t) s += static_cast<__int128>(a[i][t]) * b[t][j];
            out[i][j] = detail::narrow(s, "matrix product");
        }
    return out;
}

inline IMat transpose(const IMat& m) {
    if (m.empty()) return {};
    IMat out(m[0].size(), IVec(m.size(), 0));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

inline QMat transpose(const QMat& m) {
    if (m.empty()) return {};
    QMat out(m[0].size(), QVec(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
    return out;
}

inline IMat identity_imat(std::size_t n) {
    IMat m(n, IVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline bool operator_eq(const IMat& a, const IMat& b) { return a == b; }

/// Gauss-Jordan elimination over the rationals; returns the reduced row echelon
/// form along with the pivot column of each nonzero row.
struct Rref {
    QMat mat;
    std::vector<std::size_t> pivot_cols;
};

inline Rref rref(QMat m) {
    Rref out;
    if (m.empty()) { out.mat = m; return out; }
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        Rat inv = Rat(1) / m[r][c];
        for (auto& x : m[r]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Rat f = m[i][c];
            for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.mat = std::move(m);
    return out;
}

/// Rank of a rational matrix.
inline std::size_t rank(const QMat& m) { return rref(m).pivot_cols.size(); }

/// Solve M x = b over the rationals.  Returns false when inconsistent;
/// free variables are set to zero.
inline bool solve_rational(const QMat& m, const QVec& b, QVec& x) {
    if (m.empty()) { x.clear(); return is_zero(b); }
    std::size_t rows = m.size(), cols = m[0].size();
    if (b.size() != rows) throw domain_error("solve: rhs dimension mismatch");
    QMat aug(rows, QVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols] = b[i];
    }
    Rref rr = rref(std::move(aug));
    x.assign(cols, Rat());
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) {
        if (rr.pivot_cols[i] == cols) return false;  // pivot in augmented column
        x[rr.pivot_cols[i]] = rr.mat[i][cols];
    }
    return true;
}

/// Test whether v lies in the rational span of the given vectors (rows).
inline bool in_rational_span(const QMat& generators, const QVec& v) {
    if (generators.empty()) return is_zero(v);
    QMat cols = transpose(generators);  // columns = generators
    QVec x;
    return solve_rational(cols, v, x);
}

/// Basis (as rows) of the null space {x : M x = 0} of a rational matrix with
/// `cols` columns (pass the column count explicitly so empty matrices work).
inline QMat kernel_basis(const QMat& m, std::size_t cols) {
    if (m.empty()) {
        QMat id(cols, QVec(cols));
        for (std::size_t i = 0; i < cols; ++i) id[i][i] = Rat(1);
        return id;
    }
    if (m[0].size() != cols) throw domain_error("kernel_basis: column count mismatch");
    Rref rr = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;
    QMat out;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVec x(cols);
        x[free] = Rat(1);
        for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i)
            x[rr.pivot_cols[i]] = -rr.mat[i][free];
        out.push_back(std::move(x));
    }
    return out;
}

inline std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const IVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const CVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

}  // namespace dualnorm
