#pragma once

#include <map>
#include <optional>
#include <vector>

#include "dualnorm/smith.hpp"

namespace dualnorm {

/// A root paired with its coroot; roots live in the character lattice, coroots
/// in the cocharacter lattice, both written in the fixed coordinates of the
/// datum (canonical pairing = dot product).
struct RootPair {
    IVec root;
    IVec coroot;

    friend bool operator==(const RootPair& a, const RootPair& b) {
        return a.root == b.root && a.coroot == b.coroot;
    }
    friend bool operator<(const RootPair& a, const RootPair& b) {
        return a.root != b.root ? a.root < b.root : a.coroot < b.coroot;
    }
};

/// Based root datum on abstract lattices Z^n: simple roots (character side)
/// and simple coroots (cocharacter side) as integer rows.  Rank is the lattice
/// dimension; the number of simple roots may be smaller (tori have none).
struct BasedRootDatum {
    std::size_t rank = 0;
    IMat simple_roots;
    IMat simple_coroots;

    std::size_t semisimple_rank() const { return simple_roots.size(); }

    void validate() const {
        if (simple_roots.size() != simple_coroots.size())
            throw domain_error("root datum: roots/coroots count mismatch");
        for (const auto& r : simple_roots)
            if (r.size() != rank) throw domain_error("root datum: root of wrong dimension");
        for (const auto& c : simple_coroots)
            if (c.size() != rank) throw domain_error("root datum: coroot of wrong dimension");
        for (std::size_t i = 0; i < simple_roots.size(); ++i) {
            if (dot(simple_roots[i], simple_coroots[i]) != 2)
                throw domain_error("root datum: <alpha_i, alpha_i^vee> != 2");
            for (std::size_t j = 0; j < simple_roots.size(); ++j) {
                if (i == j) continue;
                if (dot(simple_roots[i], simple_coroots[j]) > 0)
                    throw domain_error("root datum: positive off-diagonal Cartan entry");
            }
        }
        QMat rows = to_qmat(simple_roots);
        if (!rows.empty() && dualnorm::rank(rows) != rows.size())
            throw domain_error("root datum: simple roots not linearly independent");
    }
};

/// Reflection matrix s_i acting on the cocharacter lattice:
/// v |-> v - <alpha, v> alpha^vee.
inline IMat simple_reflection_cochar(const BasedRootDatum& rd, std::size_t i) {
    IMat m = identity_imat(rd.rank);
    for (std::size_t r = 0; r < rd.rank; ++r)
        for (std::size_t c = 0; c < rd.rank; ++c)
            m[r][c] -= rd.simple_coroots[i][r] * rd.simple_roots[i][c];
    return m;
}

/// Element of the Weyl group: matrix on the cocharacter lattice, its inverse,
/// and a reduced word in simple-reflection indices.  The action on the
/// character lattice is x |-> minv^T x (the contragredient).
struct WeylElement {
    IMat m;
    IMat minv;
    std::vector<int> word;

    std::size_t length() const { return word.size(); }
    bool is_identity() const { return word.empty(); }

    IVec apply_cochar(const IVec& v) const { return mul(m, v); }
    QVec apply_cochar(const QVec& v) const { return mul(m, v); }
    CVec apply_cochar(const CVec& v) const { return mul(m, v); }
    IVec apply_char(const IVec& x) const { return mul(transpose(minv), x); }
    QVec apply_char(const QVec& x) const { return mul(transpose(minv), x); }
    CVec apply_char(const CVec& x) const { return mul(transpose(minv), x); }

    WeylElement inverse() const {
        WeylElement w;
        w.m = minv;
        w.minv = m;
        w.word.assign(word.rbegin(), word.rend());
        return w;
    }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m == b.m; }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.m < b.m; }
};

inline WeylElement weyl_identity(std::size_t n) {
    WeylElement w;
    w.m = identity_imat(n);
    w.minv = w.m;
    return w;
}

inline WeylElement weyl_product(const WeylElement& a, const WeylElement& b) {
    WeylElement w;
    w.m = mul(a.m, b.m);
    w.minv = mul(b.minv, a.minv);
    w.word = a.word;
    w.word.insert(w.word.end(), b.word.begin(), b.word.end());
    return w;
}

/// Build a Weyl element from a word in simple-reflection indices.
inline WeylElement weyl_from_word(const BasedRootDatum& rd, const std::vector<int>& word) {
    WeylElement w = weyl_identity(rd.rank);
    for (int i : word) {
        if (i < 0 || static_cast<std::size_t>(i) >= rd.simple_roots.size())
            throw domain_error("weyl word references unknown simple reflection");
        WeylElement g;
        g.m = simple_reflection_cochar(rd, static_cast<std::size_t>(i));
        g.minv = g.m;
        g.word = {i};
        w = weyl_product(w, g);
    }
    return w;
}

inline constexpr std::size_t kWeylClosureCap = 1000000;

/// Full Weyl group by breadth-first closure of the simple reflections; word
/// lengths are reduced because elements are first reached at their true depth.
/// Fails fast (invalid-datum error) if the closure exceeds the hard cap.
inline std::vector<WeylElement> weyl_group(const BasedRootDatum& rd) {
    std::vector<WeylElement> out;
    out.push_back(weyl_identity(rd.rank));
    std::map<IMat, std::size_t> seen;
    seen[out[0].m] = 0;

    std::vector<WeylElement> gens;
    for (std::size_t i = 0; i < rd.simple_roots.size(); ++i) {
        WeylElement g;
        g.m = simple_reflection_cochar(rd, i);
        g.minv = g.m;
        g.word = {static_cast<int>(i)};
        gens.push_back(g);
    }

    for (std::size_t head = 0; head < out.size(); ++head) {
        WeylElement cur = out[head];  // copy: out may reallocate below
        for (const auto& g : gens) {
            WeylElement nxt = weyl_product(cur, g);
            if (seen.count(nxt.m)) continue;
            if (out.size() >= kWeylClosureCap)
                throw domain_error("weyl closure exceeded element cap; datum invalid");
            seen[nxt.m] = out.size();
            out.push_back(std::move(nxt));
        }
    }
    return out;
}

/// All roots of the (possibly Levi-restricted) subsystem generated by the
/// simple roots with the given indices; empty `levi` means "use all" when
/// `full_when_empty` is passed accordingly by callers.  The closure applies
/// the selected simple reflections to the selected simple roots.
inline std::vector<RootPair> root_system(const BasedRootDatum& rd,
                                         const std::vector<std::size_t>& indices) {
    std::vector<RootPair> work;
    for (std::size_t i : indices) {
        if (i >= rd.simple_roots.size())
            throw domain_error("levi index out of range");
        work.push_back({rd.simple_roots[i], rd.simple_coroots[i]});
    }
    std::map<IVec, IVec> seen;
    for (const auto& p : work) seen[p.root] = p.coroot;
    for (std::size_t head = 0; head < work.size(); ++head) {
        RootPair cur = work[head];
        for (std::size_t i : indices) {
            // Reflect on the character side and the cocharacter side in step.
            long long pair_rc = dot(rd.simple_coroots[i], cur.root);
            long long pair_cr = dot(rd.simple_roots[i], cur.coroot);
            RootPair nxt;
            nxt.root = sub(cur.root, [&] {
                IVec s(rd.rank);
                for (std::size_t k = 0; k < rd.rank; ++k) s[k] = pair_rc * rd.simple_roots[i][k];
                return s;
            }());
            nxt.coroot = sub(cur.coroot, [&] {
                IVec s(rd.rank);
                for (std::size_t k = 0; k < rd.rank; ++k) s[k] = pair_cr * rd.simple_coroots[i][k];
                return s;
            }());
            if (seen.count(nxt.root)) continue;
            if (work.size() >= kWeylClosureCap)
                throw domain_error("root closure exceeded cap; datum invalid");
            seen[nxt.root] = nxt.coroot;
            work.push_back(std::move(nxt));
        }
    }
    return work;
}

inline std::vector<std::size_t> all_simple_indices(const BasedRootDatum& rd) {
    std::vector<std::size_t> idx(rd.simple_roots.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return idx;
}

inline std::vector<RootPair> root_system(const BasedRootDatum& rd) {
    return root_system(rd, all_simple_indices(rd));
}

/// Coefficients of a root in the chosen simple roots; present iff the root
/// lies in their span with a unique expansion.
inline std::optional<QVec> simple_coefficients(const BasedRootDatum& rd,
                                               const std::vector<std::size_t>& indices,
                                               const IVec& root) {
    QMat rows;
    for (std::size_t i : indices) rows.push_back(to_qvec(rd.simple_roots[i]));
    if (rows.empty()) return std::nullopt;
    QMat cols = transpose(rows);
    QVec x;
    if (!solve_rational(cols, to_qvec(root), x)) return std::nullopt;
    QVec recon = zero_qvec(rd.rank);
    for (std::size_t i = 0; i < rows.size(); ++i) recon = add(recon, scale(x[i], rows[i]));
    if (recon != to_qvec(root)) return std::nullopt;
    return x;
}

inline bool is_positive_root(const BasedRootDatum& rd,
                             const std::vector<std::size_t>& indices, const IVec& root) {
    auto coeffs = simple_coefficients(rd, indices, root);
    if (!coeffs) throw domain_error("vector is not in the root subsystem span");
    return std::all_of(coeffs->begin(), coeffs->end(),
                       [](const Rat& c) { return c >= Rat(0); });
}

inline std::vector<RootPair> positive_roots(const BasedRootDatum& rd,
                                            const std::vector<std::size_t>& indices) {
    std::vector<RootPair> out;
    for (const auto& p : root_system(rd, indices))
        if (is_positive_root(rd, indices, p.root)) out.push_back(p);
    std::sort(out.begin(), out.end());
    return out;
}

/// Half the sum of the positive coroots of the Levi subsystem given by
/// `levi` (simple indices).
inline QVec half_sum_coroots(const BasedRootDatum& rd, const std::vector<std::size_t>& levi) {
    QVec s = zero_qvec(rd.rank);
    for (const auto& p : positive_roots(rd, levi)) s = add(s, to_qvec(p.coroot));
    return scale(Rat(1, 2), s);
}

inline QVec half_sum_coroots(const BasedRootDatum& rd) {
    return half_sum_coroots(rd, all_simple_indices(rd));
}

/// Half the sum of the positive roots of the Levi subsystem (character side).
inline QVec half_sum_roots(const BasedRootDatum& rd, const std::vector<std::size_t>& levi) {
    QVec s = zero_qvec(rd.rank);
    for (const auto& p : positive_roots(rd, levi)) s = add(s, to_qvec(p.root));
    return scale(Rat(1, 2), s);
}

inline QVec half_sum_roots(const BasedRootDatum& rd) {
    return half_sum_roots(rd, all_simple_indices(rd));
}

/// The longest element: the unique Weyl element sending every simple root to a
/// negative root.  For a torus datum this is the identity.
inline WeylElement longest_element(const BasedRootDatum& rd) {
    auto group = weyl_group(rd);
    auto indices = all_simple_indices(rd);
    std::optional<WeylElement> found;
    for (const auto& w : group) {
        bool sends_all_negative = true;
        for (std::size_t i = 0; i < rd.simple_roots.size() && sends_all_negative; ++i) {
            IVec img = w.apply_char(rd.simple_roots[i]);
            if (is_positive_root(rd, indices, img)) sends_all_negative = false;
        }
        if (sends_all_negative) {
            if (found) throw domain_error("longest element not unique; datum invalid");
            found = w;
        }
    }
    if (!found) throw domain_error("no longest element found; datum invalid");
    return *found;
}

/// Galois-type involution on the cocharacter lattice.
struct Involution {
    IMat matrix;
    bool discrete_series_tag = false;

    void validate(const BasedRootDatum& rd) const {
        if (matrix.size() != rd.rank)
            throw domain_error("involution: matrix dimension mismatch");
        if (mul(matrix, matrix) != identity_imat(rd.rank))
            throw domain_error("involution: matrix is not an involution");
        // Must permute the coroot set up to sign.
        auto roots = root_system(rd);
        std::map<IVec, bool> coroot_set;
        for (const auto& p : roots) coroot_set[p.coroot] = true;
        for (const auto& p : roots) {
            IVec img = mul(matrix, p.coroot);
            if (!coroot_set.count(img) && !coroot_set.count(neg(img)))
                throw domain_error("involution: does not preserve the coroot set up to sign");
        }
        if (discrete_series_tag) {
            for (const auto& c : rd.simple_coroots)
                if (mul(matrix, c) != neg(c))
                    throw domain_error(
                        "involution: discrete-series tag requires inversion on simple coroots");
        }
    }

    IVec apply(const IVec& v) const { return mul(matrix, v); }
    QVec apply(const QVec& v) const { return mul(matrix, v); }
    CVec apply(const CVec& v) const { return mul(matrix, v); }

    /// Contragredient action on the dual lattice (transpose; an involution's
    /// transpose equals its inverse-transpose).
    IMat dual_matrix() const { return transpose(matrix); }
};

/// Integrality + regularity + dominance of mu (cocharacter side, complex):
/// every selected simple root pairs to a positive integer real part, and no
/// root of the selected subsystem pairs to zero.
inline bool is_integral_regular_dominant(const CVec& mu, const BasedRootDatum& rd,
                                         const std::vector<std::size_t>& levi) {
    if (mu.size() != rd.rank) throw domain_error("mu has wrong dimension");
    for (std::size_t i : levi) {
        if (i >= rd.simple_roots.size()) throw domain_error("levi index out of range");
        CRat p = dot(to_qvec(rd.simple_roots[i]), mu);
        if (!p.re.is_integer() || !(p.re > Rat(0))) return false;
    }
    for (const auto& pr : root_system(rd, levi)) {
        CRat p = dot(to_qvec(pr.root), mu);
        if (p.is_zero()) return false;
    }
    return true;
}

inline bool is_integral_regular_dominant(const CVec& mu, const BasedRootDatum& rd) {
    return is_integral_regular_dominant(mu, rd, all_simple_indices(rd));
}

}  // namespace dualnorm
