#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dualnorm/catalog.hpp"
#include "dualnorm/factor_theorems.hpp"

using namespace dualnorm;
using namespace dualnorm::cat;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string temp_path(const char* name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("builtin catalog shape", "[catalog]") {
    Catalog c = builtin_catalog();
    REQUIRE(c.entries.size() == 6);
    std::vector<std::string> names;
    for (const auto& e : c.entries) names.push_back(e.name);
    REQUIRE(names == std::vector<std::string>{"a1-compact", "a1-split", "c2-split",
                                              "t1-compact", "t1-split", "t2-swap"});
    REQUIRE_NOTHROW(validate_catalog(c));

    const CatalogEntry& a1 = find_entry(c, "a1-split");
    REQUIRE(a1.rank == 1);
    REQUIRE(a1.quasi_split);
    REQUIRE(a1.whittaker.has_value());
    REQUIRE(a1.whittaker->generic_word.empty());
    REQUIRE(a1.whittaker->generic_word_bar == std::vector<int>{0});
    REQUIRE(a1.mu_examples.size() == 3);

    REQUIRE(!find_entry(c, "a1-compact").quasi_split);
    REQUIRE(!find_entry(c, "t1-compact").whittaker.has_value());
    REQUIRE_THROWS_WITH(find_entry(c, "no-such-entry"),
                        Catch::Matchers::ContainsSubstring("unknown entry"));
}

TEST_CASE("canonical serialization round-trips byte for byte", "[catalog]") {
    Catalog c = builtin_catalog();
    std::string s = catalog_to_string(c);
    REQUIRE(!s.empty());
    REQUIRE(s.back() == '\n');

    json j = json::parse(s);
    REQUIRE(j["schema"] == "dualnorm-catalog/1");
    REQUIRE(j["entries"].size() == 6);

    Catalog again = catalog_from_string(s);
    REQUIRE(catalog_to_string(again) == s);
}

TEST_CASE("bundled data file is the canonical builtin serialization", "[catalog]") {
    unsetenv("DUALNORM_CATALOG");
    std::string path = default_catalog_path();
    REQUIRE(read_file(path) == catalog_to_string(builtin_catalog()));

    Catalog loaded = load_default_catalog();
    REQUIRE(loaded.entries.size() == 6);
}

TEST_CASE("environment variable overrides the bundled path", "[catalog]") {
    Catalog small;
    small.entries.push_back(find_entry(builtin_catalog(), "t1-split"));
    std::string tmp = temp_path("dualnorm-env-catalog.json");
    save_catalog(small, tmp);

    setenv("DUALNORM_CATALOG", tmp.c_str(), 1);
    REQUIRE(default_catalog_path() == tmp);
    Catalog got = load_default_catalog();
    REQUIRE(got.entries.size() == 1);
    REQUIRE(got.entries[0].name == "t1-split");
    unsetenv("DUALNORM_CATALOG");

    std::filesystem::remove(tmp);
    REQUIRE_THROWS_WITH(load_catalog(tmp),
                        Catch::Matchers::ContainsSubstring("cannot open"));
}

TEST_CASE("malformed catalogs are rejected with precise messages", "[catalog]") {
    REQUIRE(catalog_from_string("").entries.empty());
    REQUIRE(catalog_from_string("  \n").entries.empty());
    REQUIRE(catalog_from_string("null").entries.empty());
    REQUIRE(catalog_from_string("{}").entries.empty());

    REQUIRE_THROWS_WITH(catalog_from_string("[1,2]"),
                        Catch::Matchers::ContainsSubstring("top level must be an object"));
    REQUIRE_THROWS_WITH(catalog_from_string("{\"entries\": 3}"),
                        Catch::Matchers::ContainsSubstring("'entries' must be an array"));
    REQUIRE_THROWS_WITH(catalog_from_string("not json at all"),
                        Catch::Matchers::ContainsSubstring("catalog: parse error"));

    json j = json::parse(catalog_to_string(builtin_catalog()));
    json broken = j;
    broken["entries"][0].erase("description");
    REQUIRE_THROWS_WITH(
        catalog_from_json(broken),
        Catch::Matchers::ContainsSubstring("missing field 'description' in a1-compact"));

    json dup = j;
    dup["entries"].push_back(dup["entries"][0]);
    REQUIRE_THROWS_WITH(catalog_from_json(dup),
                        Catch::Matchers::ContainsSubstring("duplicate entry name"));

    json bad_sigma = j;
    bad_sigma["entries"][0]["sigma_bar"] = json::array({json::array({2})});
    REQUIRE_THROWS_WITH(catalog_from_json(bad_sigma),
                        Catch::Matchers::ContainsSubstring("entry 'a1-compact'"));
}

TEST_CASE("entry validation enforces lattice and fixture coherence", "[catalog]") {
    Catalog c = builtin_catalog();

    CatalogEntry bad = find_entry(c, "t1-split");
    bad.sc_basis = {{Rat(1, 2)}};
    REQUIRE_THROWS_WITH(
        validate_entry(bad),
        Catch::Matchers::ContainsSubstring("sc lattice is not inside the ad lattice"));

    CatalogEntry wh = find_entry(c, "a1-compact");
    wh.whittaker = WhittakerFixture{{}, {0}, 1};
    REQUIRE_THROWS_WITH(
        validate_entry(wh),
        Catch::Matchers::ContainsSubstring("whittaker fixture on a non-quasi-split entry"));

    CatalogEntry mu = find_entry(c, "a1-split");
    mu.mu_examples.push_back({Rat(1, 3)});
    REQUIRE_THROWS_WITH(validate_entry(mu),
                        Catch::Matchers::ContainsSubstring("mu example rejected"));
}

TEST_CASE("derived builders agree with the stored data", "[catalog]") {
    Catalog c = builtin_catalog();

    const CatalogEntry& sw = find_entry(c, "t2-swap");
    torus::RealTorusDatum td = torus_of(sw);
    REQUIRE(td.sigma == transpose(sw.sigma_bar));

    REQUIRE(omega_r_of(find_entry(c, "a1-split")).size() == 1);
    REQUIRE(omega_r_of(find_entry(c, "a1-compact")).size() == 2);
    REQUIRE(omega_r_of(find_entry(c, "c2-split")).size() == 2);

    const CatalogEntry& a1 = find_entry(c, "a1-split");
    param::DualGroupFrame frame = frame_of(a1);
    param::DiscreteParameter p =
        param::validate_parameter(to_cvec(QVec{Rat(2)}), QVec{Rat(0)}, frame);
    param::Packet pk = param::build_packet(p, omega_r_of(a1));
    BasedRootDatum ld = frame.levi_datum();
    REQUIRE(member_index_of_word(pk, ld, {}) == 0);
    REQUIRE(member_index_of_word(pk, ld, {0}) == 1);

    const CatalogEntry& t1 = find_entry(c, "t1-split");
    torus::TorusPoint z = central_point_of(t1, t1.central_points[0]);
    REQUIRE(z.lam_vee == IVec{1});
}

TEST_CASE("packet report pins", "[catalog]") {
    Catalog c = builtin_catalog();
    const CatalogEntry& a1 = find_entry(c, "a1-split");

    json r = packet_report(a1, to_cvec(QVec{Rat(2)}), QVec{Rat(0)},
                           param::Flavor::Classical);
    REQUIRE(r["entry"] == "a1-split");
    REQUIRE(r["flavor"] == "classical");
    REQUIRE(r["orientation"] == "standard");
    REQUIRE(r["bounded"] == true);
    REQUIRE(r["omega_r_order"] == 1);
    REQUIRE(r["mu"] == json::array({"(2, 0)"}));
    REQUIRE(r["lambda"] == json::array({"0"}));

    REQUIRE(r["members"].size() == 2);
    REQUIRE(r["members"][0]["label"] == "pi[e]");
    REQUIRE(r["members"][1]["label"] == "pi[0]");
    REQUIRE(r["members"][0]["characters"][0]["nu"] == json::array({"(1, 0)"}));
    REQUIRE(r["members"][1]["characters"][0]["nu"] == json::array({"(-3, 0)"}));
    REQUIRE(r["members"][0]["coset"] == json::array({"e"}));

    REQUIRE(r["stable_numerators"].size() == 2);
    REQUIRE(r["stable_numerators"][0]["nu"] == json::array({"(-2, 0)"}));
    REQUIRE(r["stable_numerators"][1]["nu"] == json::array({"(2, 0)"}));

    REQUIRE(r["central_values"].size() == 1);
    REQUIRE(r["central_values"][0]["label"] == "minus-one");
    REQUIRE(r["central_values"][0]["value"] == "-1");

    REQUIRE(r["renormalized_parameter"]["mu"] == json::array({"(2, 0)"}));

    json rd = packet_report(a1, to_cvec(QVec{Rat(2)}), QVec{Rat(0)},
                            param::Flavor::Renormalized);
    REQUIRE(rd["flavor"] == "renormalized");
    REQUIRE(rd["members"][0]["label"] == "piD[e]");
    REQUIRE(rd["members"][1]["label"] == "piD[0]");
    REQUIRE(rd["central_values"][0]["value"] == "-1");

    json r3 = packet_report(a1, to_cvec(QVec{Rat(3)}), QVec{Rat(0)},
                            param::Flavor::Classical);
    REQUIRE(r3["central_values"][0]["value"] == "1");
}

TEST_CASE("pairing report pins", "[catalog]") {
    Catalog c = builtin_catalog();
    const CatalogEntry& a1 = find_entry(c, "a1-split");

    json r = pairing_report(a1, to_cvec(QVec{Rat(1)}), QVec{Rat(0)});
    REQUIRE(r["entry"] == "a1-split");
    REQUIRE(r["packet_size"] == 2);
    REQUIRE(r["adjoint"]["divisors"] == json::array({2}));
    REQUIRE(r["adjoint"]["order"] == 2);
    REQUIRE(r["adjoint"]["elementary_two"] == true);
    REQUIRE(r["adjoint"]["elements"] == json::array({"s[0]", "s[1]"}));
    REQUIRE(r["simply_connected"]["divisors"] == json::array({4}));
    REQUIRE(r["simply_connected"]["elementary_two"] == false);
    REQUIRE(r["kernel_order"] == 2);

    const json& plain = r["plain"];
    REQUIRE(plain["normalization"] == "plain");
    REQUIRE(plain["rows"] == json::array({"s[0]", "s[1]"}));
    REQUIRE(plain["columns"] == json::array({"pi[e]", "pi[0]"}));
    REQUIRE(plain["values"] ==
            json::array({json::array({"1", "1"}), json::array({"1", "-1"})}));
    REQUIRE(plain["base_column"] == "pi[e]");
    REQUIRE(plain["csv"] == "member,s[0],s[1]\npi[e],1,1\npi[0],1,-1\n");

    const json& w = r["whittaker"];
    REQUIRE(w["available"] == true);
    REQUIRE(w["detv_sign"] == 1);
    REQUIRE(w["generic_member"] == "pi[e]");
    REQUIRE(w["generic_member_bar"] == "pi[0]");
    REQUIRE(w["lambda"]["normalization"] == "lambda");
    REQUIRE(w["lambda"]["values"] ==
            json::array({json::array({"1", "1"}), json::array({"1", "-1"})}));
    REQUIRE(w["lambdabar"]["values"] ==
            json::array({json::array({"1", "1"}), json::array({"-1", "1"})}));
    REQUIRE(w["lambdabar"]["base_column"] == "pi[0]");
    REQUIRE(w["renormalized"]["flavor"] == "renormalized");
    REQUIRE(w["renormalized"]["columns"] == json::array({"piD[e]", "piD[0]"}));
    REQUIRE(w["renormalized"]["values"] == w["lambda"]["values"]);

    json rc = pairing_report(find_entry(c, "c2-split"),
                             to_cvec(QVec{Rat(5, 2), Rat(3, 2)}), QVec(2));
    REQUIRE(rc["packet_size"] == 4);
    REQUIRE(rc["adjoint"]["divisors"] == json::array({2, 2}));
    REQUIRE(rc["whittaker"]["available"] == true);
    REQUIRE(rc["whittaker"]["generic_member"] == "pi[e]");
    REQUIRE(rc["whittaker"]["lambda"]["base_column"] == "pi[e]");

    json rt = pairing_report(find_entry(c, "t1-compact"), to_cvec(QVec{Rat(1)}),
                             QVec{Rat(0)});
    REQUIRE(rt["packet_size"] == 1);
    REQUIRE(rt["adjoint"]["order"] == 2);
    REQUIRE(rt["whittaker"]["available"] == false);
    REQUIRE(rt["whittaker"]["reason"] == "entry provides no generic fixture");
}

TEST_CASE("identity and harness reports", "[catalog]") {
    json r = identities_report(8, 2026);
    REQUIRE(r["ok"] == true);
    REQUIRE(r["failed"] == 0);
    REQUIRE(r["proved"].get<std::size_t>() > 0);
    std::size_t expected =
        factor::fixture_list().size() * factor::default_contexts().size();
    REQUIRE(r["fixtures"].size() == expected);
    REQUIRE(r["confluence"]["all_confluent"] == true);

    json again = identities_report(8, 2026);
    REQUIRE(again.dump() == r.dump());

    json h = harness_report_json(5, 20, 4);
    REQUIRE(h["ok"] == true);
    REQUIRE(h["models"] == 20);
    REQUIRE(h["functions"] == 120);
    REQUIRE(!h.contains("first_failure"));
}

TEST_CASE("catalog summary", "[catalog]") {
    Catalog c = builtin_catalog();
    json s = catalog_summary_json(c);
    REQUIRE(s["count"] == 6);
    REQUIRE(s["entries"].size() == 6);
    REQUIRE(s["entries"][0]["name"] == "a1-compact");
    REQUIRE(s["entries"][0]["semisimple_rank"] == 1);
    REQUIRE(s["entries"][0]["quasi_split"] == false);
    REQUIRE(s["entries"][0]["whittaker_fixture"] == false);
    REQUIRE(s["entries"][1]["name"] == "a1-split");
    REQUIRE(s["entries"][1]["whittaker_fixture"] == true);
    REQUIRE(s["entries"][3]["semisimple_rank"] == 0);
}

TEST_CASE("bundled fixture inventory matches the compiled suite", "[catalog]") {
    unsetenv("DUALNORM_CATALOG");
    std::string path = default_catalog_path();
    std::string::size_type at = path.rfind("catalog.json");
    REQUIRE(at != std::string::npos);
    path.replace(at, std::string("catalog.json").size(), "fixtures.json");

    json j = json::parse(read_file(path));
    REQUIRE(j["schema"] == "dualnorm-fixtures/1");
    const auto fixtures = factor::fixture_list();
    REQUIRE(j["count"] == fixtures.size());
    REQUIRE(j["fixtures"].size() == fixtures.size());
    for (std::size_t i = 0; i < fixtures.size(); ++i) {
        REQUIRE(j["fixtures"][i]["name"] == fixtures[i].name);
        REQUIRE(j["fixtures"][i]["statement"] == fixtures[i].statement);
    }
}
