// Fixture ledger for the factor calculus: each fixture states an identity
// between two factor expressions, is proved symbolically by the rewrite
// engine, and is replayed numerically on randomized instantiations.  A
// fixture that needs hypotheses a context does not satisfy is skipped with
// an explicit reason.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "dualnorm/factor_atoms.hpp"
#include "dualnorm/factor_defs.hpp"
#include "dualnorm/factor_random.hpp"
#include "dualnorm/factor_rules.hpp"

namespace dualnorm::factor {

// ---- whole-expression argument toggles -------------------------------------

/// Evaluate at the inverted twisting datum: flips the datum flag on the
/// datum-sensitive first and third terms.
inline Expr at_inverted_datum(Expr e) {
    for (Atom& a : e.atoms)
        if (a.kind == Kind::DeltaI || a.kind == Kind::DeltaIII1 ||
            a.kind == Kind::DeltaIII)
            a.s = a.s == Flag::Plus ? Flag::Minus : Flag::Plus;
    return e;
}

/// Evaluate at the inverted auxiliary character.
inline Expr at_inverted_character(Expr e) {
    for (Atom& a : e.atoms)
        if (a.kind == Kind::DeltaII || a.kind == Kind::DeltaIII2 ||
            (a.kind == Kind::DeltaIII && a.side == Side::Geometric))
            a.chi = a.chi == Flag::Plus ? Flag::Minus : Flag::Plus;
    return e;
}

/// Evaluate at changed gauge data.
inline Expr at_changed_gauge(Expr e) {
    for (Atom& a : e.atoms)
        if (a.kind == Kind::DeltaI || a.kind == Kind::DeltaII)
            a.a = a.a == Flag::Plus ? Flag::Minus : Flag::Plus;
    return e;
}

/// Translate the first argument by k central steps.
inline Expr with_z_shift_all(Expr e, int k) {
    for (Atom& a : e.atoms)
        switch (a.kind) {
            case Kind::DeltaI:
            case Kind::DeltaII:
            case Kind::DeltaIII1:
            case Kind::DeltaIII2:
            case Kind::DeltaIII:
                a.z_shift += k;
                break;
            default:
                break;
        }
    return e;
}

/// Twist the second argument k times.
inline Expr with_h_twist_all(Expr e, int k) {
    for (Atom& a : e.atoms)
        switch (a.kind) {
            case Kind::DeltaI:
            case Kind::DeltaII:
            case Kind::DeltaIII1:
            case Kind::DeltaIII:
                a.h_twist += k;
                break;
            default:
                break;
        }
    return e;
}

/// Replace every spectral argument by its conjugate.
inline Expr with_conj_args_all(Expr e) {
    for (Atom& a : e.atoms)
        if (a.side == Side::Spectral &&
            (a.kind == Kind::DeltaI || a.kind == Kind::DeltaII ||
             a.kind == Kind::DeltaIII))
            a.conj_args = true;
    return e;
}

// ---- fixtures ---------------------------------------------------------------

enum class NumericKind { Equality, Unimodularity };

struct Fixture {
    std::string name;
    std::string statement;
    std::function<std::optional<std::string>(const Context&)> skip;
    std::function<std::pair<Expr, Expr>(const Context&)> build;
    NumericKind numeric = NumericKind::Equality;
};

namespace gates {

inline std::optional<std::string> none(const Context&) { return std::nullopt; }
inline std::optional<std::string> bounded(const Context& c) {
    if (!c.bounded) return std::string("requires bounded data");
    return std::nullopt;
}
inline std::optional<std::string> archimedean(const Context& c) {
    if (!c.archimedean) return std::string("requires an archimedean context");
    return std::nullopt;
}
inline std::optional<std::string> standard_arch(const Context& c) {
    if (c.twisted) return std::string("requires a standard (untwisted) context");
    return archimedean(c);
}
inline std::optional<std::string> twisted(const Context& c) {
    if (!c.twisted) return std::string("requires a twisted context");
    return std::nullopt;
}
inline std::optional<std::string> bounded_arch(const Context& c) {
    if (auto r = bounded(c)) return r;
    return archimedean(c);
}
inline std::optional<std::string> quasi_split(const Context& c) {
    if (!c.quasi_split) return std::string("requires quasi-split data");
    return std::nullopt;
}
inline std::optional<std::string> quasi_split_bounded(const Context& c) {
    if (auto r = quasi_split(c)) return r;
    return bounded(c);
}
inline std::optional<std::string> spectral_whittaker(const Context& c) {
    if (auto r = quasi_split(c)) return r;
    return bounded_arch(c);
}
inline std::optional<std::string> plain_normalization(const Context& c) {
    if (c.whittaker)
        return std::string("requires a plain (non-generic) normalization");
    return std::nullopt;
}
inline std::optional<std::string> whittaker(const Context& c) {
    if (!c.whittaker)
        return std::string("requires a generic (Whittaker) normalization");
    return std::nullopt;
}

}  // namespace gates

inline const std::vector<Fixture>& fixture_list() {
    using P = std::pair<Expr, Expr>;
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> f;

        f.push_back({"inversion-defines-prime",
                     "evaluating the factor at the inverted twisting datum "
                     "yields the primed factor",
                     gates::none,
                     [](const Context& c) -> P {
                         return {at_inverted_datum(define_factor("Delta", c)),
                                 define_factor("Delta'", c)};
                     }});

        f.push_back({"prime-inverse-is-dual",
                     "the dual factor is the reciprocal of the primed factor",
                     gates::none,
                     [](const Context& c) -> P {
                         return {inverse(define_factor("Delta'", c)),
                                 define_factor("Delta_D", c)};
                     }});

        f.push_back({"dual-character-alternative",
                     "the dual factor equals the unprimed product taken at the "
                     "inverted auxiliary character",
                     gates::none,
                     [](const Context& c) -> P {
                         return {define_factor("Delta_D", c),
                                 define_factor("Delta_D_chi", c)};
                     }});

        f.push_back({"character-independence",
                     "the primed factor does not depend on the auxiliary "
                     "character",
                     gates::none,
                     [](const Context& c) -> P {
                         return {at_inverted_character(define_factor("Delta'", c)),
                                 define_factor("Delta'", c)};
                     }});

        f.push_back({"gauge-independence",
                     "the primed factor does not depend on the gauge data",
                     gates::none,
                     [](const Context& c) -> P {
                         return {at_changed_gauge(define_factor("Delta'", c)),
                                 define_factor("Delta'", c)};
                     }});

        f.push_back({"archimedean-collapse",
                     "over an archimedean field the primed factor equals the "
                     "unprimed one",
                     gates::standard_arch,
                     [](const Context& c) -> P {
                         return {define_factor("Delta'", c),
                                 define_factor("Delta", c)};
                     }});

        f.push_back({"bounded-conjugation",
                     "for bounded data the dual factor is the complex "
                     "conjugate of the primed factor",
                     gates::bounded,
                     [](const Context& c) -> P {
                         return {conj(define_factor("Delta'", c)),
                                 define_factor("Delta_D", c)};
                     }});

        f.push_back({"relative-dual-inverse",
                     "relative dual values invert relative primed values",
                     gates::none,
                     [](const Context& c) -> P {
                         Expr lhs = define_factor("Delta_D", c, "ga") *
                                    inverse(define_factor("Delta_D", c, "gb"));
                         Expr rhs =
                             inverse(define_factor("Delta'", c, "ga") *
                                     inverse(define_factor("Delta'", c, "gb")));
                         return {lhs, rhs};
                     }});

        f.push_back({"relative-conjugation",
                     "on bounded data relative dual values conjugate relative "
                     "primed values",
                     gates::bounded,
                     [](const Context& c) -> P {
                         Expr lhs = define_factor("Delta_D", c, "ga") *
                                    inverse(define_factor("Delta_D", c, "gb"));
                         Expr rhs =
                             conj(define_factor("Delta'", c, "ga") *
                                  inverse(define_factor("Delta'", c, "gb")));
                         return {lhs, rhs};
                     }});

        f.push_back({"standard-case-reduction",
                     "splitting the third term specializes the twisted dual "
                     "product to the standard one",
                     gates::none,
                     [](const Context& c) -> P {
                         Expr lhs = expr(delta_i("gd")) * expr(delta_iii1("gd")) *
                                    expr(delta_iii2("gd", -1)) *
                                    expr(delta_ii("gd", Side::Geometric, -1));
                         Context std_ctx = c;
                         std_ctx.twisted = false;
                         return {lhs, define_factor("Delta_D", std_ctx)};
                     }});

        f.push_back({"z-equivariance-prime",
                     "central translation of the first argument scales the "
                     "primed factor by the inverse central character",
                     gates::none,
                     [](const Context& c) -> P {
                         Expr lhs = with_z_shift_all(define_factor("Delta'", c), 1);
                         Expr rhs = expr(lambda_h1("z1", -1)) *
                                    define_factor("Delta'", c);
                         return {lhs, rhs};
                     }});

        f.push_back({"z-equivariance-dual",
                     "central translation of the first argument scales the "
                     "dual factor by the inverse dual central character",
                     gates::none,
                     [](const Context& c) -> P {
                         Expr lhs = with_z_shift_all(define_factor("Delta_D", c), 1);
                         Expr rhs =
                             expr(with_exp(with_norm(lambda_h1("z1"), Norm::D), -1)) *
                             define_factor("Delta_D", c);
                         return {lhs, rhs};
                     }});

        f.push_back({"h-equivariance-prime",
                     "twisting the second argument scales the primed factor by "
                     "the equivariance character",
                     gates::twisted,
                     [](const Context& c) -> P {
                         Expr lhs = with_h_twist_all(define_factor("Delta'", c), 1);
                         Expr rhs = expr(varpi("h")) * define_factor("Delta'", c);
                         return {lhs, rhs};
                     }});

        f.push_back({"h-equivariance-dual",
                     "twisting the second argument scales the dual factor by "
                     "the dual equivariance character",
                     gates::twisted,
                     [](const Context& c) -> P {
                         Expr lhs = with_h_twist_all(define_factor("Delta_D", c), 1);
                         Expr rhs = expr(with_norm(varpi("h"), Norm::D)) *
                                    define_factor("Delta_D", c);
                         return {lhs, rhs};
                     }});

        f.push_back({"dual-character-inversion",
                     "the dual equivariance and dual central characters are "
                     "the inverses of the plain ones",
                     gates::none,
                     [](const Context&) -> P {
                         Expr lhs = expr(with_norm(varpi("h"), Norm::D)) *
                                    expr(with_norm(lambda_h1("z1"), Norm::D));
                         Expr rhs = expr(varpi("h", -1)) * expr(lambda_h1("z1", -1));
                         return {lhs, rhs};
                     }});

        f.push_back({"quasi-split-base",
                     "for the quasi-split base datum the dual factor inverts "
                     "the primed factor",
                     gates::quasi_split,
                     [](const Context& c) -> P {
                         return {inverse(define_factor("Delta0'", c)),
                                 define_factor("Delta0_D", c)};
                     }});

        f.push_back({"whittaker-conjugation",
                     "the generically normalized dual factor is the "
                     "determinant sign times the conjugate primed factor",
                     gates::quasi_split_bounded,
                     [](const Context& c) -> P {
                         Expr lhs = define_factor("Delta_lambda_D", c);
                         Expr rhs = expr(det_v()) *
                                    conj(define_factor("Delta_lambda'", c));
                         return {lhs, rhs};
                     }});

        f.push_back({"whittakerbar-conjugation",
                     "switching the additive character makes the generically "
                     "normalized dual factor the plain conjugate",
                     gates::quasi_split_bounded,
                     [](const Context& c) -> P {
                         Expr lhs = define_factor("Delta_lambdabar_D", c);
                         Expr rhs = conj(define_factor("Delta_lambda'", c));
                         return {lhs, rhs};
                     }});

        f.push_back({"eps-square",
                     "the normalizing scalar squares to the determinant sign",
                     gates::none,
                     [](const Context&) -> P {
                         return {expr(eps_l(Flag::Plus, 2)), expr(det_v())};
                     }});

        f.push_back({"eps-psi-flip",
                     "switching the additive character multiplies the "
                     "normalizing scalar by the determinant sign",
                     gates::none,
                     [](const Context&) -> P {
                         return {expr(eps_l(Flag::Minus)),
                                 expr(det_v()) * expr(eps_l())};
                     }});

        f.push_back({"spectral-inversion-invariance",
                     "the spectral factor is unchanged by inverting the "
                     "twisting datum",
                     gates::archimedean,
                     [](const Context& c) -> P {
                         return {at_inverted_datum(define_factor("Delta_spec", c)),
                                 define_factor("Delta_spec", c)};
                     }});

        f.push_back({"spectral-relative-renormalized",
                     "relative spectral values agree with relative dual "
                     "spectral values at conjugated arguments",
                     gates::archimedean,
                     [](const Context& c) -> P {
                         Expr lhs = define_factor("Delta_spec", c, "pa") *
                                    inverse(define_factor("Delta_spec", c, "pb"));
                         Expr rhs =
                             with_conj_args_all(define_factor("Delta_D_spec", c, "pa")) *
                             inverse(with_conj_args_all(
                                 define_factor("Delta_D_spec", c, "pb")));
                         return {lhs, rhs};
                     }});

        f.push_back({"spectral-compatibility-conjugation",
                     "the spectral-to-geometric compatibility ratio for the "
                     "dual factor at conjugated arguments is the conjugate of "
                     "the primed ratio",
                     gates::bounded_arch,
                     [](const Context& c) -> P {
                         Expr lhs =
                             with_conj_args_all(define_factor("Delta_D_spec", c)) *
                             inverse(define_factor("Delta_D", c));
                         Expr rhs = conj(define_factor("Delta'_spec", c) *
                                         inverse(define_factor("Delta'", c)));
                         return {lhs, rhs};
                     }});

        f.push_back({"spectral-c-transfer",
                     "the scalar relating dual and conjugated primed factors "
                     "is the same on the spectral and geometric sides",
                     gates::bounded_arch,
                     [](const Context& c) -> P {
                         Expr lhs =
                             with_conj_args_all(define_factor("Delta_D_spec", c)) *
                             inverse(expr(c_scalar()) *
                                     conj(define_factor("Delta'_spec", c)));
                         Expr rhs = define_factor("Delta_D", c) *
                                    inverse(expr(c_scalar()) *
                                            conj(define_factor("Delta'", c)));
                         return {lhs, rhs};
                     }});

        f.push_back({"spectral-whittaker-conjugation",
                     "the generically normalized spectral dual factor at "
                     "conjugated arguments is the determinant sign times the "
                     "conjugate normalized spectral factor",
                     gates::spectral_whittaker,
                     [](const Context& c) -> P {
                         Expr lhs =
                             expr(eps_l()) *
                             with_conj_args_all(define_factor("Delta_D_spec", c));
                         Expr rhs = expr(det_v()) *
                                    conj(expr(eps_l()) *
                                         define_factor("Delta'_spec", c));
                         return {lhs, rhs};
                     }});

        f.push_back({"spectral-whittakerbar-conjugation",
                     "with the switched additive character the normalized "
                     "spectral dual factor is the plain conjugate",
                     gates::spectral_whittaker,
                     [](const Context& c) -> P {
                         Expr lhs =
                             expr(eps_l(Flag::Minus)) *
                             with_conj_args_all(define_factor("Delta_D_spec", c));
                         Expr rhs = conj(expr(eps_l()) *
                                         define_factor("Delta'_spec", c));
                         return {lhs, rhs};
                     }});

        f.push_back({"pairing-adjunction-d",
                     "pairing against the pushed-forward first argument "
                     "inverts the dual-normalized pairing of the pulled-back "
                     "second argument",
                     gates::none,
                     [](const Context&) -> P {
                         Expr lhs = expr(pairing_geom(Morph::J, Morph::None,
                                                      Norm::Classical, "u"));
                         Expr rhs = expr(pairing_geom(Morph::None, Morph::IHat,
                                                      Norm::D, "u", -1));
                         return {lhs, rhs};
                     }});

        f.push_back({"pairing-adjunction-tn",
                     "pairing against the pushed-forward second argument "
                     "equals the norm-one pairing of the pulled-back first "
                     "argument",
                     gates::none,
                     [](const Context&) -> P {
                         Expr lhs = expr(pairing_geom(Morph::None, Morph::JHat,
                                                      Norm::Classical, "z"));
                         Expr rhs = expr(
                             pairing_geom(Morph::I, Morph::None, Norm::TN, "z"));
                         return {lhs, rhs};
                     }});

        f.push_back({"pairing-adjunction-star-d",
                     "the starred pairing of the pushed-forward first argument "
                     "inverts the plain pairing of the pulled-back second "
                     "argument",
                     gates::none,
                     [](const Context&) -> P {
                         Expr lhs = expr(
                             pairing_geom(Morph::J, Morph::None, Norm::Star, "u"));
                         Expr rhs = expr(pairing_geom(Morph::None, Morph::IHat,
                                                      Norm::Classical, "u", -1));
                         return {lhs, rhs};
                     }});

        f.push_back({"pairing-adjunction-star-tn",
                     "the starred pairing of the pushed-forward second "
                     "argument inverts the norm-one pairing of the pulled-back "
                     "first argument",
                     gates::none,
                     [](const Context&) -> P {
                         Expr lhs = expr(pairing_geom(Morph::None, Morph::JHat,
                                                      Norm::Star, "z"));
                         Expr rhs = expr(pairing_geom(Morph::I, Morph::None,
                                                      Norm::TN, "z", -1));
                         return {lhs, rhs};
                     }});

        f.push_back({"pairing-renormalized-reuse",
                     "the dual-normalized spectral pairing at conjugated "
                     "arguments reuses the plain pairing values",
                     gates::plain_normalization,
                     [](const Context&) -> P {
                         Expr lhs = expr(with_conj_args(
                             pairing_spec(Norm::D, false, Flag::Plus, "s")));
                         Expr rhs = expr(
                             pairing_spec(Norm::Classical, false, Flag::Plus, "s"));
                         return {lhs, rhs};
                     }});

        f.push_back({"pairing-whittaker-transport",
                     "under a generic normalization the dual-normalized "
                     "pairing at conjugated arguments transports to the "
                     "switched-character pairing",
                     gates::whittaker,
                     [](const Context&) -> P {
                         Expr lhs = expr(with_conj_args(
                             pairing_spec(Norm::D, false, Flag::Plus, "s")));
                         Expr rhs = expr(
                             pairing_spec(Norm::Classical, false, Flag::Minus, "s"));
                         return {lhs, rhs};
                     }});

        f.push_back({"spectral-ii-square-central",
                     "the square of the spectral second term does not depend "
                     "on its argument",
                     gates::none,
                     [](const Context&) -> P {
                         return {expr(delta_ii("pa", Side::Spectral, 2)),
                                 expr(delta_ii("pb", Side::Spectral, 2))};
                     }});

        f.push_back({"spectral-ii-relative-sign",
                     "relative values of the spectral second term are signs",
                     gates::none,
                     [](const Context&) -> P {
                         Expr rel = expr(delta_ii("pa", Side::Spectral)) *
                                    expr(delta_ii("pb", Side::Spectral, -1));
                         return {pow(rel, 2), one()};
                     }});

        f.push_back({"spectral-ii-dual-conjugation",
                     "the dual spectral second term at conjugated arguments is "
                     "the conjugate of the plain one",
                     gates::bounded,
                     [](const Context&) -> P {
                         Expr lhs = expr(with_conj_args(
                             with_norm(delta_ii("pi", Side::Spectral), Norm::D)));
                         Expr rhs = conj(expr(delta_ii("pi", Side::Spectral)));
                         return {lhs, rhs};
                     }});

        f.push_back({"bounded-unimodularity",
                     "factors built from bounded data take unimodular values",
                     gates::bounded,
                     [](const Context& c) -> P {
                         Expr e = define_factor("Delta'", c) *
                                  define_factor("Delta_D", c);
                         return {e, e};
                     },
                     NumericKind::Unimodularity});

        return f;
    }();
    return fixtures;
}

inline const Fixture& find_fixture(const std::string& name) {
    for (const Fixture& f : fixture_list())
        if (f.name == name) return f;
    throw domain_error("unknown fixture: " + name);
}

// ---- suite runner -----------------------------------------------------------

enum class FixtureStatus { Proved, Skipped, Failed };

inline std::string to_string(FixtureStatus s) {
    switch (s) {
        case FixtureStatus::Proved: return "proved";
        case FixtureStatus::Skipped: return "skipped";
        case FixtureStatus::Failed: return "failed";
    }
    return "?";
}

struct FixtureOutcome {
    std::string name;
    std::string ctx;
    FixtureStatus status = FixtureStatus::Skipped;
    std::string reason;
    std::size_t steps = 0;
    std::size_t samples = 0;
    double max_dev = 0.0;
};

struct SuiteReport {
    std::vector<FixtureOutcome> outcomes;
    std::size_t proved = 0;
    std::size_t skipped = 0;
    std::size_t failed = 0;
    std::size_t samples = 0;

    bool all_passed() const { return failed == 0 && proved > 0; }
};

inline std::vector<Context> default_contexts() {
    std::vector<Context> out;
    for (bool twisted : {false, true})
        for (bool arch : {true, false})
            for (bool bounded : {true, false}) {
                Context c;
                c.twisted = twisted;
                c.archimedean = arch;
                c.bounded = bounded;
                out.push_back(c);
            }
    Context qs_plus;
    qs_plus.quasi_split = true;
    out.push_back(qs_plus);
    Context qs_minus = qs_plus;
    qs_minus.detv_sign = -1;
    out.push_back(qs_minus);
    Context tw_qs = qs_plus;
    tw_qs.twisted = true;
    out.push_back(tw_qs);
    Context whit = qs_plus;
    whit.whittaker = true;
    out.push_back(whit);
    Context whit_minus = whit;
    whit_minus.detv_sign = -1;
    out.push_back(whit_minus);
    return out;
}

inline SuiteReport theorem_suite(const std::vector<Context>& ctxs,
                                 std::uint64_t seed = 2026,
                                 std::size_t instances = 200,
                                 double tol = 1e-12) {
    SuiteReport report;
    for (const Fixture& fx : fixture_list()) {
        for (const Context& ctx : ctxs) {
            FixtureOutcome oc;
            oc.name = fx.name;
            oc.ctx = ctx.name();
            if (auto why = fx.skip(ctx)) {
                oc.status = FixtureStatus::Skipped;
                oc.reason = *why;
                ++report.skipped;
                report.outcomes.push_back(std::move(oc));
                continue;
            }
            auto [lhs, rhs] = fx.build(ctx);
            ProofResult pr = prove_equal(lhs, rhs, ctx);
            oc.steps = pr.steps.size();
            if (!pr.proved && fx.numeric != NumericKind::Unimodularity) {
                oc.status = FixtureStatus::Failed;
                oc.reason = "canonical forms differ: " +
                            to_string(pr.lhs_canonical) + "  vs  " +
                            to_string(pr.rhs_canonical);
                ++report.failed;
                report.outcomes.push_back(std::move(oc));
                continue;
            }
            std::uint64_t mix = detail::splitmix64(
                seed ^ detail::fnv1a(fx.name + "|" + ctx.name()));
            bool ok = true;
            for (std::size_t i = 0; i < instances && ok; ++i) {
                Sampler smp(detail::splitmix64(mix + i), ctx);
                double dev = 0.0;
                if (fx.numeric == NumericKind::Equality) {
                    auto a = smp.eval(lhs);
                    auto b = smp.eval(rhs);
                    double scale =
                        std::max({1.0, std::abs(a), std::abs(b)});
                    dev = std::abs(a - b) / scale;
                } else {
                    dev = std::abs(std::abs(smp.eval(lhs)) - 1.0);
                }
                oc.max_dev = std::max(oc.max_dev, dev);
                ++oc.samples;
                if (dev > tol) {
                    ok = false;
                    oc.status = FixtureStatus::Failed;
                    oc.reason = "numeric deviation " + std::to_string(dev) +
                                " exceeds tolerance";
                }
            }
            report.samples += oc.samples;
            if (ok) {
                oc.status = FixtureStatus::Proved;
                ++report.proved;
            } else {
                ++report.failed;
            }
            report.outcomes.push_back(std::move(oc));
        }
    }
    return report;
}

// ---- confluence of the rule system ------------------------------------------

struct ConfluenceReport {
    std::size_t expressions = 0;
    std::size_t orders = 0;
    bool all_confluent = true;
    std::string counterexample;
};

/// Re-normalize every fixture expression under randomly permuted rule
/// priorities and verify the canonical form never changes.
inline ConfluenceReport confluence_report(const std::vector<Context>& ctxs,
                                          std::size_t trials = 3,
                                          std::uint64_t seed = 48109) {
    ConfluenceReport rep;
    std::mt19937_64 rng(seed);
    for (const Fixture& fx : fixture_list()) {
        for (const Context& ctx : ctxs) {
            if (fx.skip(ctx)) continue;
            auto [lhs, rhs] = fx.build(ctx);
            for (const Expr* e : {&lhs, &rhs}) {
                Expr base = normalize(*e, ctx);
                ++rep.expressions;
                for (std::size_t t = 0; t < trials; ++t) {
                    std::vector<std::size_t> order = default_rule_order();
                    std::shuffle(order.begin(), order.end(), rng);
                    Expr cand = normalize_with_order(*e, ctx, order);
                    ++rep.orders;
                    if (!(cand.atoms == base.atoms)) {
                        rep.all_confluent = false;
                        if (rep.counterexample.empty())
                            rep.counterexample = fx.name + " [" + ctx.name() +
                                                 "]: " + to_string(cand) +
                                                 "  vs  " + to_string(base);
                    }
                }
            }
        }
    }
    return rep;
}

}  // namespace dualnorm::factor
