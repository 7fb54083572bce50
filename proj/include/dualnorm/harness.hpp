// Finite toy models of twisted endoscopic transfer.  A model carries a
// primed matching matrix, an equivariance character, and a duality scalar;
// orbital values, transfer, and the dual transfer are then defined exactly
// over Gaussian rationals, so the dual matching identity and its converse
// can be verified with no tolerance at all.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "dualnorm/rational.hpp"

namespace dualnorm::toy {

using dualnorm::CRat;
using dualnorm::Rat;
using dualnorm::domain_error;

namespace detail {

inline bool is_unit(const CRat& z) { return z.norm2() == Rat(1); }

}  // namespace detail

/// A finite geometric transfer model: `factor` is the primed matching matrix
/// indexed by (stable class, twisted class), `varpi` the equivariance
/// character on twisted classes, and `c` the duality scalar.  Matrix entries
/// are zero (no matching) or unimodular; `varpi` and `c` are unimodular.
struct ToyModel {
    std::size_t n_gamma = 0;
    std::size_t n_delta = 0;
    std::vector<std::vector<CRat>> factor;
    std::vector<CRat> varpi;
    CRat c{Rat(1)};

    void validate() const {
        if (n_gamma == 0 || n_delta == 0)
            throw domain_error("toy model: empty index set");
        if (factor.size() != n_gamma)
            throw domain_error("toy model: matching matrix has wrong row count");
        for (const auto& row : factor) {
            if (row.size() != n_delta)
                throw domain_error("toy model: matching matrix has wrong column count");
            for (const CRat& z : row)
                if (!z.is_zero() && !detail::is_unit(z))
                    throw domain_error("toy model: matching entries must be zero or unimodular");
        }
        if (varpi.size() != n_delta)
            throw domain_error("toy model: character has wrong length");
        for (const CRat& z : varpi)
            if (!detail::is_unit(z))
                throw domain_error("toy model: character values must be unimodular");
        if (!detail::is_unit(c))
            throw domain_error("toy model: duality scalar must be unimodular");
    }
};

inline std::vector<CRat> conj_function(const std::vector<CRat>& f) {
    std::vector<CRat> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].conj();
    return out;
}

/// Twisted orbital value at the d-th class.
inline CRat orbital(const ToyModel& m, std::size_t d, const std::vector<CRat>& f) {
    return m.varpi.at(d) * f.at(d);
}

/// Twisted orbital value for the dual character.
inline CRat orbital_dual(const ToyModel& m, std::size_t d,
                         const std::vector<CRat>& f) {
    return m.varpi.at(d).conj() * f.at(d);
}

/// Stable values of the transferred function, one per stable class.
inline std::vector<CRat> transfer(const ToyModel& m, const std::vector<CRat>& f) {
    if (f.size() != m.n_delta)
        throw domain_error("toy model: function has wrong length");
    std::vector<CRat> out(m.n_gamma);
    for (std::size_t g = 0; g < m.n_gamma; ++g) {
        CRat acc;
        for (std::size_t d = 0; d < m.n_delta; ++d)
            acc = acc + m.factor[g][d] * orbital(m, d, f);
        out[g] = acc;
    }
    return out;
}

/// Stable values of the dualized transfer: scale-and-conjugate the transfer
/// of the conjugated function.
inline std::vector<CRat> dual_transfer(const ToyModel& m,
                                       const std::vector<CRat>& f) {
    std::vector<CRat> base = transfer(m, conj_function(f));
    for (CRat& z : base) z = m.c * z.conj();
    return base;
}

/// The dual matching matrix: scale-and-conjugate each entry.
inline std::vector<std::vector<CRat>> dual_factor(const ToyModel& m) {
    std::vector<std::vector<CRat>> out = m.factor;
    for (auto& row : out)
        for (CRat& z : row) z = m.c * z.conj();
    return out;
}

struct DualityCheck {
    bool ok = true;
    std::string detail;
};

/// Conjugating the function intertwines the two orbital normalizations.
inline DualityCheck check_orbital_conjugation(const ToyModel& m,
                                              const std::vector<CRat>& f) {
    for (std::size_t d = 0; d < m.n_delta; ++d) {
        CRat lhs = orbital(m, d, conj_function(f)).conj();
        CRat rhs = orbital_dual(m, d, f);
        if (lhs != rhs)
            return {false, "orbital conjugation fails at class " + std::to_string(d)};
    }
    return {};
}

/// The dualized transfer matches against the dual matrix and dual orbitals.
inline DualityCheck check_geometric_duality(const ToyModel& m,
                                            const std::vector<CRat>& f) {
    std::vector<CRat> lhs = dual_transfer(m, f);
    std::vector<std::vector<CRat>> dual = dual_factor(m);
    for (std::size_t g = 0; g < m.n_gamma; ++g) {
        CRat rhs;
        for (std::size_t d = 0; d < m.n_delta; ++d)
            rhs = rhs + dual[g][d] * orbital_dual(m, d, f);
        if (lhs[g] != rhs)
            return {false,
                    "dual matching fails at stable class " + std::to_string(g)};
    }
    return {};
}

/// The matrix forced by requiring the dual matching against every basis
/// function; the converse statement is that this equals dual_factor.
inline std::vector<std::vector<CRat>> implied_dual_factor(const ToyModel& m) {
    std::vector<std::vector<CRat>> out(m.n_gamma, std::vector<CRat>(m.n_delta));
    for (std::size_t d = 0; d < m.n_delta; ++d) {
        std::vector<CRat> basis(m.n_delta);
        basis[d] = CRat(Rat(1));
        std::vector<CRat> image = dual_transfer(m, basis);
        for (std::size_t g = 0; g < m.n_gamma; ++g)
            out[g][d] = image[g] / m.varpi[d].conj();
    }
    return out;
}

/// Any matrix satisfying the dual matching for all functions is the
/// scale-and-conjugate of the primed one.
inline DualityCheck check_dual_factor_converse(const ToyModel& m) {
    std::vector<std::vector<CRat>> implied = implied_dual_factor(m);
    std::vector<std::vector<CRat>> expected = dual_factor(m);
    for (std::size_t g = 0; g < m.n_gamma; ++g)
        for (std::size_t d = 0; d < m.n_delta; ++d)
            if (implied[g][d] != expected[g][d])
                return {false, "implied dual matrix differs at (" +
                                   std::to_string(g) + "," + std::to_string(d) + ")"};
    return {};
}

// ---- spectral toy models -----------------------------------------------------

/// A finite spectral model: primed spectral values on a packet, the
/// conjugation involution on packet indices, and the duality scalar.
struct SpectralToy {
    std::size_t n = 0;
    std::vector<CRat> factor;
    std::vector<std::size_t> conj_perm;
    CRat c{Rat(1)};

    void validate() const {
        if (n == 0) throw domain_error("spectral toy: empty packet");
        if (factor.size() != n || conj_perm.size() != n)
            throw domain_error("spectral toy: inconsistent sizes");
        for (const CRat& z : factor)
            if (!detail::is_unit(z))
                throw domain_error("spectral toy: factor values must be unimodular");
        for (std::size_t i = 0; i < n; ++i) {
            if (conj_perm[i] >= n)
                throw domain_error("spectral toy: permutation out of range");
            if (conj_perm[conj_perm[i]] != i)
                throw domain_error("spectral toy: conjugation must be an involution");
        }
        if (!detail::is_unit(c))
            throw domain_error("spectral toy: duality scalar must be unimodular");
    }
};

/// Stable trace of the transferred function against the packet.
inline CRat stable_trace(const SpectralToy& s, const std::vector<CRat>& t) {
    if (t.size() != s.n)
        throw domain_error("spectral toy: trace vector has wrong length");
    CRat acc;
    for (std::size_t i = 0; i < s.n; ++i) acc = acc + s.factor[i] * t[i];
    return acc;
}

/// Trace values of the conjugated function: conjugate and permute.
inline std::vector<CRat> conj_traces(const SpectralToy& s,
                                     const std::vector<CRat>& t) {
    if (t.size() != s.n)
        throw domain_error("spectral toy: trace vector has wrong length");
    std::vector<CRat> out(s.n);
    for (std::size_t i = 0; i < s.n; ++i) out[i] = t[s.conj_perm[i]].conj();
    return out;
}

/// Dual spectral values: scale-and-conjugate at the conjugated member.
inline std::vector<CRat> dual_spectral_factor(const SpectralToy& s) {
    std::vector<CRat> out(s.n);
    for (std::size_t i = 0; i < s.n; ++i)
        out[i] = s.c * s.factor[s.conj_perm[i]].conj();
    return out;
}

/// The dualized stable trace equals the pairing of the dual spectral values
/// with the original traces.
inline DualityCheck check_spectral_duality(const SpectralToy& s,
                                           const std::vector<CRat>& t) {
    CRat lhs = s.c * stable_trace(s, conj_traces(s, t)).conj();
    std::vector<CRat> dual = dual_spectral_factor(s);
    CRat rhs;
    for (std::size_t i = 0; i < s.n; ++i) rhs = rhs + dual[i] * t[i];
    if (lhs != rhs) return {false, "spectral dual trace identity fails"};
    return {};
}

// ---- randomized model generation ----------------------------------------------

/// Deterministic source of exact random scalars: rational points on the unit
/// circle and small Gaussian rationals.
class ToyRng {
  public:
    explicit ToyRng(std::uint64_t seed) : eng_(seed) {}

    long long integer(long long lo, long long hi) {
        std::uniform_int_distribution<long long> dist(lo, hi);
        return dist(eng_);
    }

    bool chance(int percent) { return integer(0, 99) < percent; }

    Rat rational(long long max_abs_num = 12, long long max_den = 8) {
        return Rat(integer(-max_abs_num, max_abs_num), integer(1, max_den));
    }

    /// Exact unimodular value: the rational circle point of a random slope,
    /// mixed with the four exact unit axis points.
    CRat unit() {
        if (chance(20)) {
            switch (integer(0, 3)) {
                case 0: return CRat(Rat(1));
                case 1: return CRat(Rat(-1));
                case 2: return CRat(Rat(0), Rat(1));
                default: return CRat(Rat(0), Rat(-1));
            }
        }
        Rat t = rational(10, 7);
        Rat den = Rat(1) + t * t;
        return CRat((Rat(1) - t * t) / den, (Rat(2) * t) / den);
    }

    /// Small Gaussian rational; may be zero.
    CRat gaussian() { return CRat(rational(), rational()); }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

inline ToyModel random_model(ToyRng& rng, std::size_t n_gamma, std::size_t n_delta,
                             int zero_percent = 25) {
    ToyModel m;
    m.n_gamma = n_gamma;
    m.n_delta = n_delta;
    m.factor.assign(n_gamma, std::vector<CRat>(n_delta));
    for (auto& row : m.factor)
        for (CRat& z : row)
            if (!rng.chance(zero_percent)) z = rng.unit();
    m.varpi.resize(n_delta);
    for (CRat& z : m.varpi) z = rng.unit();
    m.c = rng.unit();
    m.validate();
    return m;
}

inline SpectralToy random_spectral(ToyRng& rng, std::size_t n) {
    SpectralToy s;
    s.n = n;
    s.factor.resize(n);
    for (CRat& z : s.factor) z = rng.unit();
    // Random involution: pair up indices with 50% probability.
    s.conj_perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) s.conj_perm[i] = i;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (s.conj_perm[i] != i) continue;
        if (!rng.chance(50)) continue;
        std::size_t span = n - i - 1;
        std::size_t j = i + 1 + static_cast<std::size_t>(rng.integer(
                                    0, static_cast<long long>(span) - 1));
        if (s.conj_perm[j] == j) {
            s.conj_perm[i] = j;
            s.conj_perm[j] = i;
        }
    }
    s.c = rng.unit();
    s.validate();
    return s;
}

inline std::vector<CRat> random_function(ToyRng& rng, std::size_t n) {
    std::vector<CRat> f(n);
    for (CRat& z : f) z = rng.gaussian();
    return f;
}

// ---- harness driver -----------------------------------------------------------

struct HarnessReport {
    std::size_t models = 0;
    std::size_t spectral_models = 0;
    std::size_t functions = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool all_passed() const { return failures == 0 && models > 0; }
};

/// Generate `models` random toy models with sides up to `max_size` and check
/// every duality statement exactly; each model is probed with
/// `functions_per_model` random functions.
inline HarnessReport run_harness(std::uint64_t seed, std::size_t models,
                                 std::size_t max_size,
                                 std::size_t functions_per_model = 3) {
    if (max_size == 0) throw domain_error("harness: max_size must be positive");
    HarnessReport rep;
    ToyRng rng(seed);
    auto record = [&rep](const DualityCheck& chk, std::size_t model_idx,
                         const char* what) {
        if (chk.ok) return;
        ++rep.failures;
        if (rep.first_failure.empty())
            rep.first_failure = std::string(what) + " (model " +
                                std::to_string(model_idx) + "): " + chk.detail;
    };
    for (std::size_t i = 0; i < models; ++i) {
        std::size_t ng = static_cast<std::size_t>(
            rng.integer(1, static_cast<long long>(max_size)));
        std::size_t nd = static_cast<std::size_t>(
            rng.integer(1, static_cast<long long>(max_size)));
        ToyModel m = random_model(rng, ng, nd);
        ++rep.models;
        record(check_dual_factor_converse(m), i, "converse");
        for (std::size_t k = 0; k < functions_per_model; ++k) {
            std::vector<CRat> f = random_function(rng, nd);
            ++rep.functions;
            record(check_orbital_conjugation(m, f), i, "orbital conjugation");
            record(check_geometric_duality(m, f), i, "geometric duality");
        }
        SpectralToy s = random_spectral(
            rng, static_cast<std::size_t>(rng.integer(1, static_cast<long long>(max_size))));
        ++rep.spectral_models;
        for (std::size_t k = 0; k < functions_per_model; ++k) {
            std::vector<CRat> t = random_function(rng, s.n);
            ++rep.functions;
            record(check_spectral_duality(s, t), i, "spectral duality");
        }
    }
    return rep;
}

}  // namespace dualnorm::toy
