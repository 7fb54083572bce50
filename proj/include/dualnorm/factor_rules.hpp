// Rewrite engine for factor expressions: a fixed, prioritized rule list with
// guarded single-atom rewrites, normalization to a canonical form, recorded
// traces, and symbolic equality proofs.  Every rule preserves the value of
// the expression under the evaluation model of the sampler.
#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dualnorm/factor_atoms.hpp"
#include "dualnorm/rational.hpp"

namespace dualnorm::factor {

namespace detail {

inline int mod2(int e) { return ((e % 2) + 2) % 2; }

/// Sign-valued atoms in the given context (real, so conjugation-transparent).
inline bool sign_valued(const Atom& at, const Context& ctx) {
    switch (at.kind) {
        case Kind::ASign:
        case Kind::DetV:
        case Kind::IISquare:
            return true;
        case Kind::DeltaI:
        case Kind::DeltaIII1:
            return ctx.archimedean;
        case Kind::DeltaIII:
            return ctx.archimedean && at.side == Side::Spectral;
        case Kind::Pairing:
            return at.side == Side::Spectral;
        default:
            return false;
    }
}

}  // namespace detail

struct Rule {
    std::string name;
    // Returns the replacement atoms when the rule applies to the atom.
    std::function<std::optional<std::vector<Atom>>(const Atom&, const Context&)> apply;
};

inline const std::vector<Rule>& rule_list() {
    static const std::vector<Rule> rules = [] {
        std::vector<Rule> r;

        r.push_back({"datum-inversion", [](const Atom& at, const Context&)
                                            -> std::optional<std::vector<Atom>> {
                         if (at.s != Flag::Minus) return std::nullopt;
                         if (at.kind != Kind::DeltaI && at.kind != Kind::DeltaIII1 &&
                             at.kind != Kind::DeltaIII)
                             return std::nullopt;
                         Atom b = at;
                         b.s = Flag::Plus;
                         b.exp = -b.exp;
                         return std::vector<Atom>{b};
                     }});

        r.push_back({"d-unfold", [](const Atom& at, const Context&)
                                     -> std::optional<std::vector<Atom>> {
                         if (at.norm != Norm::D) return std::nullopt;
                         if (at.kind != Kind::DeltaIII2 && at.kind != Kind::Varpi &&
                             at.kind != Kind::LambdaH1)
                             return std::nullopt;
                         Atom b = at;
                         b.norm = Norm::Classical;
                         b.exp = -b.exp;
                         return std::vector<Atom>{b};
                     }});

        r.push_back({"spectral-ii-d", [](const Atom& at, const Context&)
                                          -> std::optional<std::vector<Atom>> {
                         if (at.kind != Kind::DeltaII || at.side != Side::Spectral ||
                             at.norm != Norm::D)
                             return std::nullopt;
                         Atom b = at;
                         b.norm = Norm::Classical;
                         b.conj_args = !b.conj_args;
                         b.exp = -b.exp;
                         return std::vector<Atom>{b};
                     }});

        r.push_back({"conjugate-argument-invariance",
                     [](const Atom& at, const Context&)
                         -> std::optional<std::vector<Atom>> {
                         if (!at.conj_args || at.side != Side::Spectral)
                             return std::nullopt;
                         if (at.kind != Kind::DeltaI && at.kind != Kind::DeltaIII)
                             return std::nullopt;
                         Atom b = at;
                         b.conj_args = false;
                         return std::vector<Atom>{b};
                     }});

        r.push_back({"z-equivariance", [](const Atom& at, const Context& ctx)
                                           -> std::optional<std::vector<Atom>> {
                         if (at.z_shift == 0 || at.norm != Norm::Classical)
                             return std::nullopt;
                         bool std_carrier = at.kind == Kind::DeltaIII2 && !ctx.twisted;
                         bool tw_carrier = at.kind == Kind::DeltaIII && ctx.twisted &&
                                           at.side == Side::Geometric;
                         if (!std_carrier && !tw_carrier) return std::nullopt;
                         int lam_exp = (std_carrier ? -1 : 1) * at.z_shift * at.exp;
                         Atom lam = lambda_h1("z1", lam_exp);
                         lam.conj_op = at.conj_op;
                         Atom b = at;
                         b.z_shift = 0;
                         return std::vector<Atom>{lam, b};
                     }});

        r.push_back({"z-invariance", [](const Atom& at, const Context&)
                                         -> std::optional<std::vector<Atom>> {
                         if (at.z_shift == 0) return std::nullopt;
                         if (at.kind != Kind::DeltaI && at.kind != Kind::DeltaII &&
                             at.kind != Kind::DeltaIII1)
                             return std::nullopt;
                         Atom b = at;
                         b.z_shift = 0;
                         return std::vector<Atom>{b};
                     }});

        r.push_back({"h-equivariance", [](const Atom& at, const Context& ctx)
                                           -> std::optional<std::vector<Atom>> {
                         if (at.h_twist == 0 || at.norm != Norm::Classical)
                             return std::nullopt;
                         if (at.kind != Kind::DeltaIII || !ctx.twisted ||
                             at.side != Side::Geometric)
                             return std::nullopt;
                         Atom w = varpi("h", -at.h_twist * at.exp);
                         w.conj_op = at.conj_op;
                         Atom b = at;
                         b.h_twist = 0;
                         return std::vector<Atom>{w, b};
                     }});

        r.push_back({"h-invariance", [](const Atom& at, const Context&)
                                         -> std::optional<std::vector<Atom>> {
                         if (at.h_twist == 0) return std::nullopt;
                         if (at.kind != Kind::DeltaI && at.kind != Kind::DeltaII &&
                             at.kind != Kind::DeltaIII1)
                             return std::nullopt;
                         Atom b = at;
                         b.h_twist = 0;
                         return std::vector<Atom>{b};
                     }});

        r.push_back({"character-inversion", [](const Atom& at, const Context&)
                                                -> std::optional<std::vector<Atom>> {
                         if (at.chi != Flag::Minus || at.kind != Kind::DeltaII)
                             return std::nullopt;
                         Atom b = at;
                         b.chi = Flag::Plus;
                         b.exp = -b.exp;
                         return std::vector<Atom>{b};
                     }});

        r.push_back({"character-shift-third",
                     [](const Atom& at, const Context& ctx)
                         -> std::optional<std::vector<Atom>> {
                         if (at.chi != Flag::Minus || at.norm != Norm::Classical)
                             return std::nullopt;
                         bool std_carrier = at.kind == Kind::DeltaIII2 && !ctx.twisted;
                         bool tw_carrier = at.kind == Kind::DeltaIII && ctx.twisted &&
                                           at.side == Side::Geometric;
                         if (!std_carrier && !tw_carrier) return std::nullopt;
                         Atom ii = delta_ii(at.arg, at.side,
                                            (std_carrier ? 2 : -2) * at.exp);
                         ii.conj_op = at.conj_op;
                         Atom b = at;
                         b.chi = Flag::Plus;
                         return std::vector<Atom>{ii, b};
                     }});

        r.push_back({"gauge-change", [](const Atom& at, const Context&)
                                         -> std::optional<std::vector<Atom>> {
                         if (at.a != Flag::Minus) return std::nullopt;
                         if (at.kind != Kind::DeltaI && at.kind != Kind::DeltaII)
                             return std::nullopt;
                         Atom sg = a_sign(at.arg, at.exp);
                         sg.conj_op = at.conj_op;
                         Atom b = at;
                         b.a = Flag::Plus;
                         return std::vector<Atom>{sg, b};
                     }});

        r.push_back({"epsilon-psi", [](const Atom& at, const Context&)
                                        -> std::optional<std::vector<Atom>> {
                         if (at.kind != Kind::EpsL || at.psi != Flag::Minus)
                             return std::nullopt;
                         Atom dv = det_v(at.exp);
                         dv.conj_op = at.conj_op;
                         Atom b = at;
                         b.psi = Flag::Plus;
                         return std::vector<Atom>{dv, b};
                     }});

        r.push_back({"real-conjugation", [](const Atom& at, const Context& ctx)
                                             -> std::optional<std::vector<Atom>> {
                         if (!at.conj_op || !detail::sign_valued(at, ctx))
                             return std::nullopt;
                         Atom b = at;
                         b.conj_op = false;
                         return std::vector<Atom>{b};
                     }});

        r.push_back({"bounded-conjugation", [](const Atom& at, const Context& ctx)
                                                -> std::optional<std::vector<Atom>> {
                         if (!at.conj_op || !ctx.bounded) return std::nullopt;
                         Atom b = at;
                         b.conj_op = false;
                         b.exp = -b.exp;
                         return std::vector<Atom>{b};
                     }});

        r.push_back({"epsilon-square", [](const Atom& at, const Context&)
                                           -> std::optional<std::vector<Atom>> {
                         if (at.kind != Kind::EpsL || at.exp == 0 || at.exp == 1)
                             return std::nullopt;
                         int rr = detail::mod2(at.exp);
                         Atom dv = det_v((at.exp - rr) / 2);
                         dv.conj_op = at.conj_op;
                         Atom b = at;
                         b.exp = rr;
                         return std::vector<Atom>{dv, b};
                     }});

        r.push_back({"ii-square-extraction",
                     [](const Atom& at, const Context&)
                         -> std::optional<std::vector<Atom>> {
                         if (at.kind != Kind::DeltaII || at.side != Side::Spectral ||
                             at.norm != Norm::Classical || at.exp == 0 || at.exp == 1)
                             return std::nullopt;
                         int rr = detail::mod2(at.exp);
                         Atom sq = ii_square((at.exp - rr) / 2);
                         sq.conj_op = at.conj_op;
                         Atom b = at;
                         b.exp = rr;
                         return std::vector<Atom>{sq, b};
                     }});

        r.push_back({"sign-reduction", [](const Atom& at, const Context& ctx)
                                           -> std::optional<std::vector<Atom>> {
                         if (!detail::sign_valued(at, ctx)) return std::nullopt;
                         if (at.exp == 0 || at.exp == 1) return std::nullopt;
                         Atom b = at;
                         b.exp = detail::mod2(at.exp);
                         return std::vector<Atom>{b};
                     }});

        r.push_back({"pairing-adjunction", [](const Atom& at, const Context&)
                                               -> std::optional<std::vector<Atom>> {
                         if (at.kind != Kind::Pairing || at.side != Side::Geometric)
                             return std::nullopt;
                         Atom b = at;
                         if (at.m1 == Morph::J && at.norm == Norm::Classical) {
                             b.m1 = Morph::None;
                             b.m2 = Morph::IHat;
                             b.norm = Norm::D;
                             b.exp = -b.exp;
                             return std::vector<Atom>{b};
                         }
                         if (at.m2 == Morph::JHat && at.norm == Norm::Classical) {
                             b.m2 = Morph::None;
                             b.m1 = Morph::I;
                             b.norm = Norm::TN;
                             return std::vector<Atom>{b};
                         }
                         if (at.m1 == Morph::J && at.norm == Norm::Star) {
                             b.m1 = Morph::None;
                             b.m2 = Morph::IHat;
                             b.norm = Norm::Classical;
                             b.exp = -b.exp;
                             return std::vector<Atom>{b};
                         }
                         if (at.m2 == Morph::JHat && at.norm == Norm::Star) {
                             b.m2 = Morph::None;
                             b.m1 = Morph::I;
                             b.norm = Norm::TN;
                             b.exp = -b.exp;
                             return std::vector<Atom>{b};
                         }
                         return std::nullopt;
                     }});

        r.push_back({"pairing-renormalization",
                     [](const Atom& at, const Context& ctx)
                         -> std::optional<std::vector<Atom>> {
                         if (at.kind != Kind::Pairing || at.side != Side::Spectral)
                             return std::nullopt;
                         if (at.norm != Norm::D || !at.conj_args) return std::nullopt;
                         Atom b = at;
                         b.norm = Norm::Classical;
                         b.conj_args = false;
                         if (ctx.whittaker)
                             b.chi = at.chi == Flag::Plus ? Flag::Minus : Flag::Plus;
                         return std::vector<Atom>{b};
                     }});

        return r;
    }();
    return rules;
}

inline std::size_t rule_count() { return rule_list().size(); }

struct RewriteStep {
    std::string rule;
    std::string before;
    std::string after;
};

/// Merge atoms with identical keys (summing exponents), drop trivial ones,
/// and sort into the canonical order.
inline Expr merge_sorted(const Expr& e) {
    Expr out = e;
    std::stable_sort(out.atoms.begin(), out.atoms.end());
    Expr merged;
    for (const Atom& at : out.atoms) {
        if (!merged.atoms.empty() && merged.atoms.back().same_key(at))
            merged.atoms.back().exp += at.exp;
        else
            merged.atoms.push_back(at);
    }
    Expr final_e;
    for (const Atom& at : merged.atoms)
        if (at.exp != 0) final_e.atoms.push_back(at);
    return final_e;
}

constexpr std::size_t kRewriteStepCap = 100000;

/// Normalize with an explicit rule priority (a permutation of rule indices).
inline Expr normalize_with_order(Expr e, const Context& ctx,
                                 const std::vector<std::size_t>& order,
                                 std::vector<RewriteStep>* trace = nullptr) {
    const auto& rules = rule_list();
    std::size_t steps = 0;
    bool changed = true;
    while (changed) {
        // Merging between passes keeps exponent growth bounded.
        e = merge_sorted(e);
        changed = false;
        for (std::size_t ri : order) {
            const Rule& rule = rules.at(ri);
            for (std::size_t i = 0; i < e.atoms.size() && !changed; ++i) {
                auto rep = rule.apply(e.atoms[i], ctx);
                if (!rep) continue;
                if (++steps > kRewriteStepCap)
                    throw arithmetic_error("rewrite engine exceeded its step budget");
                if (trace) {
                    RewriteStep st;
                    st.rule = rule.name;
                    st.before = to_string(e.atoms[i]);
                    std::string after;
                    for (std::size_t k = 0; k < rep->size(); ++k) {
                        if (k) after += " * ";
                        after += to_string((*rep)[k]);
                    }
                    st.after = after.empty() ? "1" : after;
                    trace->push_back(std::move(st));
                }
                e.atoms.erase(e.atoms.begin() + static_cast<std::ptrdiff_t>(i));
                e.atoms.insert(e.atoms.begin() + static_cast<std::ptrdiff_t>(i),
                               rep->begin(), rep->end());
                changed = true;
            }
            if (changed) break;
        }
    }
    return merge_sorted(e);
}

inline std::vector<std::size_t> default_rule_order() {
    std::vector<std::size_t> order(rule_count());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    return order;
}

inline Expr normalize(const Expr& e, const Context& ctx,
                      std::vector<RewriteStep>* trace = nullptr) {
    return normalize_with_order(e, ctx, default_rule_order(), trace);
}

/// Apply one pairing-adjunction rewrite to a single atom; `applied` reports
/// whether any adjunction matched.
inline Atom pairing_rewrite(const Atom& at, bool& applied) {
    applied = false;
    for (const Rule& rule : rule_list()) {
        if (rule.name != "pairing-adjunction") continue;
        Context ctx;
        auto rep = rule.apply(at, ctx);
        if (rep && rep->size() == 1) {
            applied = true;
            return (*rep)[0];
        }
    }
    return at;
}

struct ProofResult {
    bool proved = false;
    Expr lhs_canonical;
    Expr rhs_canonical;
    std::vector<RewriteStep> steps;
};

inline ProofResult prove_equal(const Expr& lhs, const Expr& rhs, const Context& ctx) {
    ProofResult out;
    out.lhs_canonical = normalize(lhs, ctx, &out.steps);
    out.rhs_canonical = normalize(rhs, ctx, &out.steps);
    out.proved = out.lhs_canonical.atoms == out.rhs_canonical.atoms;
    return out;
}

}  // namespace dualnorm::factor
