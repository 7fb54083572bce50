// Command-line driver: catalog inspection, packet and pairing reports, the
// identity suite, and the toy transfer-duality harness.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or data errors.
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dualnorm/catalog.hpp"
#include "dualnorm/dualnorm.hpp"

using namespace dualnorm;

namespace {

QVec parse_qvec(const std::string& text) {
    QVec out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw domain_error("empty coordinate in '" + text + "'");
        out.push_back(parse_rat(item));
    }
    if (out.empty()) throw domain_error("empty vector literal '" + text + "'");
    return out;
}

cat::Catalog load_active(const std::string& path_flag) {
    if (!path_flag.empty()) return cat::load_catalog(path_flag);
    if (std::getenv("DUALNORM_CATALOG") != nullptr) return cat::load_default_catalog();
    try {
        return cat::load_default_catalog();
    } catch (const domain_error&) {
        return cat::builtin_catalog();  // bundled file not generated yet
    }
}

void print_json(const cat::json& j) { std::cout << j.dump(2) << "\n"; }

struct EntryArgs {
    std::string entry;
    std::string mu;
    std::string lambda;

    const cat::CatalogEntry* resolve(const cat::Catalog& c) const {
        return &cat::find_entry(c, entry);
    }

    QVec mu_vec(const cat::CatalogEntry& e) const {
        QVec v = mu.empty() ? (e.mu_examples.empty()
                                   ? throw domain_error("entry '" + e.name +
                                                        "' has no example parameter; "
                                                        "pass --mu")
                                   : e.mu_examples.front())
                            : parse_qvec(mu);
        if (v.size() != e.rank)
            throw domain_error("--mu needs " + std::to_string(e.rank) +
                               " coordinates for entry '" + e.name + "'");
        return v;
    }

    QVec lambda_vec(const cat::CatalogEntry& e) const {
        if (lambda.empty()) return QVec(e.rank);
        QVec v = parse_qvec(lambda);
        if (v.size() != e.rank)
            throw domain_error("--lambda needs " + std::to_string(e.rank) +
                               " coordinates for entry '" + e.name + "'");
        return v;
    }
};

int run_catalog(const cat::Catalog& c, const std::string& entry, bool emit,
                bool emit_fixtures, bool as_json) {
    if (emit) {
        std::cout << cat::catalog_to_string(cat::builtin_catalog());
        return 0;
    }
    if (emit_fixtures) {
        cat::json j;
        j["schema"] = "dualnorm-fixtures/1";
        cat::json arr = cat::json::array();
        for (const auto& fx : factor::fixture_list()) {
            cat::json f;
            f["name"] = fx.name;
            f["statement"] = fx.statement;
            arr.push_back(f);
        }
        j["fixtures"] = arr;
        j["count"] = arr.size();
        print_json(j);
        return 0;
    }
    if (!entry.empty()) {
        print_json(cat::entry_to_json(cat::find_entry(c, entry)));
        return 0;
    }
    if (as_json) {
        print_json(cat::catalog_summary_json(c));
        return 0;
    }
    std::cout << c.entries.size() << " catalog entries\n";
    for (const auto& e : c.entries) {
        std::cout << "  " << e.name << "  (rank " << e.rank << ", semisimple rank "
                  << e.simple_roots.size()
                  << (e.quasi_split ? ", quasi-split" : "")
                  << (e.whittaker ? ", generic fixture" : "") << ")\n"
                  << "      " << e.description << "\n";
    }
    return 0;
}

int run_packet(const cat::Catalog& c, const EntryArgs& args,
               const std::string& flavor, const std::string& orientation,
               bool as_json) {
    const cat::CatalogEntry& e = *args.resolve(c);
    param::Flavor fl = flavor == "renormalized" ? param::Flavor::Renormalized
                                                : param::Flavor::Classical;
    param::Orientation orient = orientation == "opposite"
                                    ? param::Orientation::Opposite
                                    : param::Orientation::Standard;
    cat::json r =
        cat::packet_report(e, to_cvec(args.mu_vec(e)), args.lambda_vec(e), fl, orient);
    if (as_json) {
        print_json(r);
        return 0;
    }
    std::cout << "entry: " << r["entry"].get<std::string>() << "\n"
              << "flavor: " << r["flavor"].get<std::string>()
              << "   orientation: " << r["orientation"].get<std::string>()
              << "   bounded: " << (r["bounded"].get<bool>() ? "yes" : "no") << "\n"
              << "mu: " << r["mu"].dump() << "   lambda: " << r["lambda"].dump()
              << "\n"
              << "real-form subgroup order: " << r["omega_r_order"] << "\n"
              << "members:\n";
    for (const auto& m : r["members"]) {
        std::cout << "  " << m["label"].get<std::string>() << "  coset "
                  << m["coset"].dump() << "\n";
        for (const auto& ch : m["characters"])
            std::cout << "      nu " << ch["nu"].dump() << "  lambda "
                      << ch["lambda"].dump() << "\n";
    }
    std::cout << "stable numerators:";
    for (const auto& ch : r["stable_numerators"]) std::cout << " " << ch["nu"].dump();
    std::cout << "\n";
    for (const auto& cv : r["central_values"])
        std::cout << "central value at " << cv["label"].get<std::string>() << ": "
                  << cv["value"].get<std::string>() << "\n";
    std::cout << "renormalized parameter: mu "
              << r["renormalized_parameter"]["mu"].dump() << "  lambda "
              << r["renormalized_parameter"]["lambda"].dump() << "\n";
    return 0;
}

int run_pairing(const cat::Catalog& c, const EntryArgs& args, bool as_json) {
    const cat::CatalogEntry& e = *args.resolve(c);
    cat::json r = cat::pairing_report(e, to_cvec(args.mu_vec(e)), args.lambda_vec(e));
    if (as_json) {
        print_json(r);
        return 0;
    }
    std::cout << "entry: " << r["entry"].get<std::string>() << "\n"
              << "packet size: " << r["packet_size"] << "\n"
              << "component group: order " << r["adjoint"]["order"] << ", divisors "
              << r["adjoint"]["divisors"].dump() << " (sc order "
              << r["simply_connected"]["order"] << ", kernel " << r["kernel_order"]
              << ")\n\nplain table\n"
              << r["plain"]["csv"].get<std::string>();
    const auto& w = r["whittaker"];
    if (w["available"].get<bool>()) {
        std::cout << "\ngeneric table (base " << w["generic_member"].get<std::string>()
                  << ")\n"
                  << w["lambda"]["csv"].get<std::string>() << "\nconjugate table (base "
                  << w["generic_member_bar"].get<std::string>() << ")\n"
                  << w["lambdabar"]["csv"].get<std::string>()
                  << "\nrenormalized table\n"
                  << w["renormalized"]["csv"].get<std::string>();
    } else {
        std::cout << "\ngeneric tables unavailable: " << w["reason"].get<std::string>()
                  << "\n";
    }
    return 0;
}

int run_identities(std::size_t instances, std::uint64_t seed, bool as_json) {
    cat::json r = cat::identities_report(instances, seed);
    bool ok = r["ok"].get<bool>();
    if (as_json) {
        print_json(r);
        return ok ? 0 : 1;
    }
    std::cout << "fixture outcomes: " << r["fixtures"].size() << "  (proved "
              << r["proved"] << ", skipped " << r["skipped"] << ", failed "
              << r["failed"] << ")\n"
              << "numeric samples: " << r["samples"] << "\n"
              << "confluence: " << r["confluence"]["expressions"]
              << " expressions, " << r["confluence"]["orders"] << " rule orders, "
              << (r["confluence"]["all_confluent"].get<bool>() ? "all confluent"
                                                               : "NOT confluent")
              << "\n"
              << (ok ? "ok" : "FAILED") << "\n";
    if (!ok)
        for (const auto& f : r["fixtures"])
            if (f["status"] == "failed")
                std::cout << "  failed: " << f["name"].get<std::string>() << " in "
                          << f["context"].get<std::string>() << "\n";
    return ok ? 0 : 1;
}

int run_harness(std::size_t models, std::size_t size, std::uint64_t seed,
                bool as_json) {
    cat::json r = cat::harness_report_json(seed, models, size);
    bool ok = r["ok"].get<bool>();
    if (as_json) {
        print_json(r);
        return ok ? 0 : 1;
    }
    std::cout << "geometric models: " << r["models"]
              << "   spectral models: " << r["spectral_models"]
              << "   probe functions: " << r["functions"] << "\n"
              << "failures: " << r["failures"] << "\n";
    if (r.contains("first_failure"))
        std::cout << "first failure: " << r["first_failure"].get<std::string>() << "\n";
    std::cout << (ok ? "ok" : "FAILED") << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dualnorm: exact workbench for packets, pairings, and "
                 "normalization identities on catalog frames"};
    app.require_subcommand(1);

    std::string catalog_path;
    std::uint64_t seed = 2026;
    bool as_json = false;
    app.add_option("--catalog", catalog_path, "catalog JSON file to load");
    app.add_option("--seed", seed, "seed for randomized checks");
    app.add_flag("--json", as_json, "emit JSON instead of text");

    auto* cmd_catalog =
        app.add_subcommand("catalog", "list entries or show one entry");
    std::string cat_entry;
    bool emit = false, emit_fixtures = false;
    cmd_catalog->add_option("--entry", cat_entry, "entry to show in full");
    cmd_catalog->add_flag("--emit", emit,
                          "print the canonical builtin catalog serialization");
    cmd_catalog->add_flag("--emit-fixtures", emit_fixtures,
                          "print the identity-fixture inventory");

    EntryArgs packet_args;
    std::string flavor = "classical", orientation = "standard";
    auto* cmd_packet = app.add_subcommand("packet", "build a packet report");
    cmd_packet->add_option("--entry", packet_args.entry, "catalog entry")->required();
    cmd_packet->add_option("--mu", packet_args.mu,
                           "comma-separated rational coordinates");
    cmd_packet->add_option("--lambda", packet_args.lambda,
                           "comma-separated rational coordinates");
    cmd_packet->add_option("--flavor", flavor, "classical or renormalized")
        ->check(CLI::IsMember({"classical", "renormalized"}));
    cmd_packet->add_option("--orientation", orientation, "standard or opposite")
        ->check(CLI::IsMember({"standard", "opposite"}));

    EntryArgs pairing_args;
    auto* cmd_pairing =
        app.add_subcommand("pairing", "component groups and pairing tables");
    cmd_pairing->add_option("--entry", pairing_args.entry, "catalog entry")->required();
    cmd_pairing->add_option("--mu", pairing_args.mu,
                            "comma-separated rational coordinates");
    cmd_pairing->add_option("--lambda", pairing_args.lambda,
                            "comma-separated rational coordinates");

    std::size_t instances = 200;
    auto* cmd_identities =
        app.add_subcommand("identities", "prove and sample the identity suite");
    cmd_identities->add_option("--instances", instances,
                               "random instantiations per fixture and context");

    std::size_t models = 200, size = 5;
    auto* cmd_harness =
        app.add_subcommand("harness", "run the transfer-duality toy harness");
    cmd_harness->add_option("--models", models, "number of random models");
    cmd_harness->add_option("--size", size, "maximum side length");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_identities) return run_identities(instances, seed, as_json);
        if (*cmd_harness) return run_harness(models, size, seed, as_json);

        cat::Catalog c = load_active(catalog_path);
        if (*cmd_catalog)
            return run_catalog(c, cat_entry, emit, emit_fixtures, as_json);
        if (*cmd_packet)
            return run_packet(c, packet_args, flavor, orientation, as_json);
        if (*cmd_pairing) return run_pairing(c, pairing_args, as_json);
    } catch (const domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
