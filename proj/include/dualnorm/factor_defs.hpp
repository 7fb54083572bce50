// Named factor shapes: the standard, twisted, quasi-split, and spectral
// products built from the primitive atoms.  define_factor is the single
// lookup used by tests, fixtures, and the command-line tool.
#pragma once

#include <string>

#include "dualnorm/factor_atoms.hpp"
#include "dualnorm/rational.hpp"

namespace dualnorm::factor {

namespace detail {

inline Expr geometric_delta(const std::string& arg, const Context& ctx) {
    if (ctx.twisted)
        return expr(delta_i(arg)) * expr(delta_ii(arg)) * expr(delta_iii(arg));
    return expr(delta_i(arg)) * expr(delta_ii(arg)) * expr(delta_iii1(arg)) *
           expr(delta_iii2(arg));
}

inline Expr geometric_delta_prime(const std::string& arg, const Context& ctx) {
    if (ctx.twisted)
        return expr(delta_i(arg, Side::Geometric, -1)) *
               expr(delta_iii(arg, Side::Geometric, -1)) * expr(delta_ii(arg));
    return expr(delta_i(arg, Side::Geometric, -1)) * expr(delta_ii(arg)) *
           expr(delta_iii1(arg, -1)) * expr(delta_iii2(arg));
}

inline Expr geometric_delta_d(const std::string& arg, const Context& ctx) {
    if (ctx.twisted)
        return expr(delta_i(arg)) * expr(delta_iii(arg)) *
               expr(delta_ii(arg, Side::Geometric, -1));
    return expr(delta_i(arg)) * expr(delta_ii(arg, Side::Geometric, -1)) *
           expr(delta_iii1(arg)) * expr(with_norm(delta_iii2(arg), Norm::D));
}

inline Expr geometric_delta_d_chi(const std::string& arg, const Context& ctx) {
    if (ctx.twisted)
        return expr(delta_i(arg)) * expr(delta_ii(arg)) *
               expr(with_chi_minus(delta_iii(arg)));
    return expr(delta_i(arg)) * expr(delta_ii(arg)) * expr(delta_iii1(arg)) *
           expr(with_chi_minus(with_norm(delta_iii2(arg), Norm::D)));
}

inline Expr spectral_delta(const std::string& arg) {
    return expr(delta_i(arg, Side::Spectral)) * expr(delta_ii(arg, Side::Spectral)) *
           expr(delta_iii(arg, Side::Spectral));
}

inline Expr spectral_delta_d(const std::string& arg) {
    return expr(delta_i(arg, Side::Spectral)) *
           expr(with_norm(delta_ii(arg, Side::Spectral), Norm::D)) *
           expr(delta_iii(arg, Side::Spectral));
}

}  // namespace detail

/// Look up a named factor shape.  Geometric names use default argument label
/// "gd", quasi-split base names "g0", spectral names "pi"; pass `arg` to
/// override.  Shapes with a twisted variant follow ctx.twisted.
inline Expr define_factor(const std::string& name, const Context& ctx,
                          std::string arg = "") {
    auto pick = [&arg](const char* dflt) {
        return arg.empty() ? std::string(dflt) : arg;
    };
    if (name == "Delta") return detail::geometric_delta(pick("gd"), ctx);
    if (name == "Delta'") return detail::geometric_delta_prime(pick("gd"), ctx);
    if (name == "Delta_D") return detail::geometric_delta_d(pick("gd"), ctx);
    if (name == "Delta_D_chi") return detail::geometric_delta_d_chi(pick("gd"), ctx);

    if (name == "Delta0'") return detail::geometric_delta_prime(pick("g0"), ctx);
    if (name == "Delta0_D") return detail::geometric_delta_d(pick("g0"), ctx);
    if (name == "Delta_lambda'")
        return expr(eps_l()) * detail::geometric_delta_prime(pick("g0"), ctx);
    if (name == "Delta_lambda_D")
        return expr(eps_l()) * detail::geometric_delta_d(pick("g0"), ctx);
    if (name == "Delta_lambdabar_D")
        return expr(eps_l(Flag::Minus)) * detail::geometric_delta_d(pick("g0"), ctx);

    if (name == "Delta_spec") return detail::spectral_delta(pick("pi"));
    if (name == "Delta'_spec") return detail::spectral_delta(pick("pi"));
    if (name == "Delta_D_spec") return detail::spectral_delta_d(pick("pi"));

    throw domain_error("unknown factor name: " + name);
}

/// The names define_factor accepts, in catalogue order.
inline std::vector<std::string> factor_names() {
    return {"Delta",        "Delta'",         "Delta_D",        "Delta_D_chi",
            "Delta0'",      "Delta0_D",       "Delta_lambda'",  "Delta_lambda_D",
            "Delta_lambdabar_D", "Delta_spec", "Delta'_spec",   "Delta_D_spec"};
}

}  // namespace dualnorm::factor
