// Catalog of worked frames: named torus/root-datum entries with canonical
// JSON storage, exact validation, and the report builders used by the
// command-line driver (packet, pairing, identity-suite, and harness reports).
#pragma once

#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dualnorm/component_group.hpp"
#include "dualnorm/factor_theorems.hpp"
#include "dualnorm/harness.hpp"
#include "dualnorm/packets.hpp"
#include "dualnorm/pairing.hpp"
#include "dualnorm/parameters.hpp"
#include "dualnorm/rational.hpp"
#include "dualnorm/root_datum.hpp"
#include "dualnorm/torus.hpp"

namespace dualnorm::cat {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Data model
// ---------------------------------------------------------------------------

/// A labelled torus point given in exponential coordinates.
struct CentralPoint {
    std::string label;
    QVec h_re;
    QVec h_im_pi;
    IVec lam_vee;
};

/// Generic-member words for the two table normalizations, plus the sign of
/// the associated determinant character at -1.
struct WhittakerFixture {
    std::vector<int> generic_word;
    std::vector<int> generic_word_bar;
    int detv_sign = 1;
};

/// One catalog entry: a dual-side based root datum on a fixed lattice, the
/// involution, the two isogeny lattices, the real-form subgroup generators,
/// and worked inputs (central points and example infinitesimal characters).
struct CatalogEntry {
    std::string name;
    std::string description;
    std::size_t rank = 0;
    IMat simple_roots;    // rows: simple roots of the dual datum
    IMat simple_coroots;  // rows: the corresponding coroots
    IMat sigma_bar;       // involution on the weight-side lattice
    bool discrete_series = false;
    QMat ad_basis;  // row basis of the larger isogeny lattice
    QMat sc_basis;  // row basis of the smaller isogeny lattice
    std::vector<std::vector<int>> omega_r_generators;  // words in simple letters
    bool quasi_split = false;
    std::optional<WhittakerFixture> whittaker;
    std::vector<CentralPoint> central_points;
    std::vector<QVec> mu_examples;
};

struct Catalog {
    std::vector<CatalogEntry> entries;
};

// ---------------------------------------------------------------------------
// JSON (de)serialization.  Canonical form: nlohmann's std::map backing sorts
// object keys; rationals are rendered as exact "p/q" strings; the file always
// ends with a newline.  `catalog_to_string(load_catalog(path))` reproduces
// the file byte for byte.
// ---------------------------------------------------------------------------

namespace detail {

inline json qvec_to_json(const QVec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(to_string(x));
    return a;
}

inline QVec qvec_from_json(const json& a, const std::string& what) {
    if (!a.is_array()) throw domain_error("catalog: " + what + " must be an array");
    QVec v;
    for (const auto& x : a) {
        if (!x.is_string())
            throw domain_error("catalog: " + what + " entries must be rational strings");
        v.push_back(parse_rat(x.get<std::string>()));
    }
    return v;
}

inline json qmat_to_json(const QMat& m) {
    json a = json::array();
    for (const QVec& row : m) a.push_back(qvec_to_json(row));
    return a;
}

inline QMat qmat_from_json(const json& a, const std::string& what) {
    if (!a.is_array()) throw domain_error("catalog: " + what + " must be an array");
    QMat m;
    for (const auto& row : a) m.push_back(qvec_from_json(row, what + " row"));
    return m;
}

inline json ivec_to_json(const IVec& v) {
    json a = json::array();
    for (long long x : v) a.push_back(x);
    return a;
}

inline IVec ivec_from_json(const json& a, const std::string& what) {
    if (!a.is_array()) throw domain_error("catalog: " + what + " must be an array");
    IVec v;
    for (const auto& x : a) {
        if (!x.is_number_integer())
            throw domain_error("catalog: " + what + " entries must be integers");
        v.push_back(x.get<long long>());
    }
    return v;
}

inline json imat_to_json(const IMat& m) {
    json a = json::array();
    for (const IVec& row : m) a.push_back(ivec_to_json(row));
    return a;
}

inline IMat imat_from_json(const json& a, const std::string& what) {
    if (!a.is_array()) throw domain_error("catalog: " + what + " must be an array");
    IMat m;
    for (const auto& row : a) m.push_back(ivec_from_json(row, what + " row"));
    return m;
}

inline json word_to_json(const std::vector<int>& w) {
    json a = json::array();
    for (int x : w) a.push_back(x);
    return a;
}

inline std::vector<int> word_from_json(const json& a, const std::string& what) {
    if (!a.is_array()) throw domain_error("catalog: " + what + " must be an array");
    std::vector<int> w;
    for (const auto& x : a) {
        if (!x.is_number_integer())
            throw domain_error("catalog: " + what + " letters must be integers");
        w.push_back(x.get<int>());
    }
    return w;
}

inline json words_to_json(const std::vector<std::vector<int>>& ws) {
    json a = json::array();
    for (const auto& w : ws) a.push_back(word_to_json(w));
    return a;
}

inline std::vector<std::vector<int>> words_from_json(const json& a,
                                                     const std::string& what) {
    if (!a.is_array()) throw domain_error("catalog: " + what + " must be an array");
    std::vector<std::vector<int>> ws;
    for (const auto& w : a) ws.push_back(word_from_json(w, what + " word"));
    return ws;
}

template <typename T>
inline const json& field(const json& j, const char* key, const T& where) {
    auto it = j.find(key);
    if (it == j.end())
        throw domain_error(std::string("catalog: missing field '") + key + "' in " +
                           where);
    return *it;
}

}  // namespace detail

inline json entry_to_json(const CatalogEntry& e) {
    json j;
    j["name"] = e.name;
    j["description"] = e.description;
    j["rank"] = e.rank;
    j["simple_roots"] = detail::imat_to_json(e.simple_roots);
    j["simple_coroots"] = detail::imat_to_json(e.simple_coroots);
    j["sigma_bar"] = detail::imat_to_json(e.sigma_bar);
    j["discrete_series"] = e.discrete_series;
    j["ad_basis"] = detail::qmat_to_json(e.ad_basis);
    j["sc_basis"] = detail::qmat_to_json(e.sc_basis);
    j["omega_r_generators"] = detail::words_to_json(e.omega_r_generators);
    j["quasi_split"] = e.quasi_split;
    if (e.whittaker) {
        json w;
        w["generic_word"] = detail::word_to_json(e.whittaker->generic_word);
        w["generic_word_bar"] = detail::word_to_json(e.whittaker->generic_word_bar);
        w["detv_sign"] = e.whittaker->detv_sign;
        j["whittaker"] = w;
    }
    json cps = json::array();
    for (const CentralPoint& cp : e.central_points) {
        json c;
        c["label"] = cp.label;
        c["h_re"] = detail::qvec_to_json(cp.h_re);
        c["h_im_pi"] = detail::qvec_to_json(cp.h_im_pi);
        c["lam_vee"] = detail::ivec_to_json(cp.lam_vee);
        cps.push_back(c);
    }
    j["central_points"] = cps;
    json mus = json::array();
    for (const QVec& mu : e.mu_examples) mus.push_back(detail::qvec_to_json(mu));
    j["mu_examples"] = mus;
    return j;
}

inline CatalogEntry entry_from_json(const json& j) {
    if (!j.is_object()) throw domain_error("catalog: entry must be an object");
    CatalogEntry e;
    e.name = detail::field(j, "name", std::string("entry")).get<std::string>();
    const std::string& where = e.name;
    e.description = detail::field(j, "description", where).get<std::string>();
    e.rank = detail::field(j, "rank", where).get<std::size_t>();
    e.simple_roots = detail::imat_from_json(detail::field(j, "simple_roots", where),
                                            where + ".simple_roots");
    e.simple_coroots = detail::imat_from_json(
        detail::field(j, "simple_coroots", where), where + ".simple_coroots");
    e.sigma_bar =
        detail::imat_from_json(detail::field(j, "sigma_bar", where), where + ".sigma_bar");
    e.discrete_series = detail::field(j, "discrete_series", where).get<bool>();
    e.ad_basis =
        detail::qmat_from_json(detail::field(j, "ad_basis", where), where + ".ad_basis");
    e.sc_basis =
        detail::qmat_from_json(detail::field(j, "sc_basis", where), where + ".sc_basis");
    e.omega_r_generators = detail::words_from_json(
        detail::field(j, "omega_r_generators", where), where + ".omega_r_generators");
    e.quasi_split = detail::field(j, "quasi_split", where).get<bool>();
    if (j.contains("whittaker")) {
        const json& w = j["whittaker"];
        WhittakerFixture f;
        f.generic_word = detail::word_from_json(detail::field(w, "generic_word", where),
                                                where + ".generic_word");
        f.generic_word_bar = detail::word_from_json(
            detail::field(w, "generic_word_bar", where), where + ".generic_word_bar");
        f.detv_sign = detail::field(w, "detv_sign", where).get<int>();
        e.whittaker = f;
    }
    for (const auto& c : detail::field(j, "central_points", where)) {
        CentralPoint cp;
        cp.label = detail::field(c, "label", where).get<std::string>();
        cp.h_re = detail::qvec_from_json(detail::field(c, "h_re", where), where + ".h_re");
        cp.h_im_pi = detail::qvec_from_json(detail::field(c, "h_im_pi", where),
                                            where + ".h_im_pi");
        cp.lam_vee = detail::ivec_from_json(detail::field(c, "lam_vee", where),
                                            where + ".lam_vee");
        e.central_points.push_back(std::move(cp));
    }
    for (const auto& m : detail::field(j, "mu_examples", where))
        e.mu_examples.push_back(detail::qvec_from_json(m, where + ".mu_examples"));
    return e;
}

inline json catalog_to_json(const Catalog& c) {
    json j;
    j["schema"] = "dualnorm-catalog/1";
    json entries = json::array();
    for (const CatalogEntry& e : c.entries) entries.push_back(entry_to_json(e));
    j["entries"] = entries;
    return j;
}

inline std::string catalog_to_string(const Catalog& c) {
    return catalog_to_json(c).dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Derived objects
// ---------------------------------------------------------------------------

inline BasedRootDatum root_datum_of(const CatalogEntry& e) {
    BasedRootDatum rd;
    rd.rank = e.rank;
    rd.simple_roots = e.simple_roots;
    rd.simple_coroots = e.simple_coroots;
    return rd;
}

inline Involution involution_of(const CatalogEntry& e) {
    Involution inv;
    inv.matrix = e.sigma_bar;
    inv.discrete_series_tag = e.discrete_series;
    return inv;
}

inline param::DualGroupFrame frame_of(
    const CatalogEntry& e, param::Orientation o = param::Orientation::Standard) {
    return param::full_frame(root_datum_of(e), involution_of(e), o);
}

/// The real torus datum: sigma acts on the cocharacter side, which is the
/// transpose of the weight-side involution stored in the entry.
inline torus::RealTorusDatum torus_of(const CatalogEntry& e) {
    torus::RealTorusDatum td;
    td.rank = e.rank;
    td.sigma = transpose(e.sigma_bar);
    return td;
}

inline cg::IsogenyLattices lattices_of(const CatalogEntry& e) {
    return cg::IsogenyLattices{e.ad_basis, e.sc_basis};
}

/// The real-form subgroup: closure of the entry's generator words.
inline std::vector<WeylElement> omega_r_of(const CatalogEntry& e) {
    BasedRootDatum ld = frame_of(e).levi_datum();
    std::vector<WeylElement> gens;
    for (const auto& w : e.omega_r_generators) gens.push_back(weyl_from_word(ld, w));
    return param::subgroup_closure(gens, e.rank);
}

inline torus::TorusPoint central_point_of(const CatalogEntry& e, const CentralPoint& cp) {
    return torus::make_torus_point(torus_of(e), cp.h_re, cp.h_im_pi, cp.lam_vee);
}

/// Index of the packet member whose coset contains the Weyl element spelled
/// by `word`.
inline std::size_t member_index_of_word(const param::Packet& pk,
                                        const BasedRootDatum& ld,
                                        const std::vector<int>& word) {
    WeylElement w = weyl_from_word(ld, word);
    for (std::size_t i = 0; i < pk.members.size(); ++i)
        for (const WeylElement& k : pk.members[i].coset)
            if (k.m == w.m) return i;
    throw domain_error("catalog: no packet member contains the requested word");
}

// ---------------------------------------------------------------------------
// Validation
// ---------------------------------------------------------------------------

inline void validate_entry(const CatalogEntry& e) {
    if (e.name.empty()) throw domain_error("catalog: entry with empty name");
    if (e.rank == 0) throw domain_error("catalog: entry '" + e.name + "' has rank zero");
    auto fail = [&](const std::string& msg) {
        throw domain_error("catalog: entry '" + e.name + "': " + msg);
    };
    if (e.simple_roots.size() != e.simple_coroots.size())
        fail("simple root and coroot counts differ");
    for (const IVec& row : e.simple_roots)
        if (row.size() != e.rank) fail("simple root of wrong dimension");
    for (const IVec& row : e.simple_coroots)
        if (row.size() != e.rank) fail("simple coroot of wrong dimension");

    BasedRootDatum rd = root_datum_of(e);
    try {
        rd.validate();
        involution_of(e).validate(rd);
    } catch (const domain_error& ex) {
        fail(ex.what());
    }

    auto check_basis = [&](const QMat& b, const char* which) {
        if (b.size() != e.rank) fail(std::string(which) + " basis is not square");
        for (const QVec& row : b)
            if (row.size() != e.rank) fail(std::string(which) + " basis row of wrong size");
        QMat copy = b;
        if (dualnorm::rank(copy) != e.rank)
            fail(std::string(which) + " basis is singular");
    };
    check_basis(e.ad_basis, "ad");
    check_basis(e.sc_basis, "sc");
    for (const QVec& row : e.sc_basis)
        if (!in_lattice(e.ad_basis, row)) fail("sc lattice is not inside the ad lattice");
    for (const IVec& c : e.simple_coroots)
        if (!in_lattice(e.sc_basis, to_qvec(c)))
            fail("a simple coroot lies outside the sc lattice");

    std::size_t ss = rd.semisimple_rank();
    auto check_word = [&](const std::vector<int>& w, const char* which) {
        for (int letter : w)
            if (letter < 0 || static_cast<std::size_t>(letter) >= ss)
                fail(std::string(which) + " word uses an out-of-range letter");
    };
    for (const auto& w : e.omega_r_generators) check_word(w, "omega_r generator");
    omega_r_of(e);  // must close into a finite subgroup

    if (e.whittaker) {
        if (!e.quasi_split) fail("whittaker fixture on a non-quasi-split entry");
        check_word(e.whittaker->generic_word, "generic");
        check_word(e.whittaker->generic_word_bar, "generic-bar");
        if (e.whittaker->detv_sign != 1 && e.whittaker->detv_sign != -1)
            fail("detv_sign must be +1 or -1");
    }

    std::set<std::string> labels;
    for (const CentralPoint& cp : e.central_points) {
        if (!labels.insert(cp.label).second) fail("duplicate central point label");
        try {
            central_point_of(e, cp);
        } catch (const domain_error& ex) {
            fail(std::string("central point '") + cp.label + "': " + ex.what());
        }
    }
    for (const QVec& mu : e.mu_examples) {
        if (mu.size() != e.rank) fail("mu example of wrong dimension");
        try {
            param::validate_parameter(to_cvec(mu), QVec(e.rank), frame_of(e));
        } catch (const domain_error& ex) {
            fail(std::string("mu example rejected: ") + ex.what());
        }
    }
}

inline void validate_catalog(const Catalog& c) {
    std::set<std::string> names;
    for (const CatalogEntry& e : c.entries) {
        if (!names.insert(e.name).second)
            throw domain_error("catalog: duplicate entry name '" + e.name + "'");
        validate_entry(e);
    }
}

inline Catalog catalog_from_json(const json& j) {
    Catalog c;
    if (j.is_null()) return c;
    if (!j.is_object()) throw domain_error("catalog: top level must be an object");
    if (!j.contains("entries")) return c;
    if (!j["entries"].is_array())
        throw domain_error("catalog: 'entries' must be an array");
    for (const auto& e : j["entries"]) c.entries.push_back(entry_from_json(e));
    validate_catalog(c);
    return c;
}

inline Catalog catalog_from_string(const std::string& text) {
    bool blank = true;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            blank = false;
            break;
        }
    if (blank) return Catalog{};
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& ex) {
        throw domain_error(std::string("catalog: parse error: ") + ex.what());
    }
    return catalog_from_json(j);
}

inline Catalog load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("catalog: cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return catalog_from_string(buf.str());
}

inline void save_catalog(const Catalog& c, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw domain_error("catalog: cannot write " + path);
    out << catalog_to_string(c);
}

inline const CatalogEntry& find_entry(const Catalog& c, const std::string& name) {
    for (const CatalogEntry& e : c.entries)
        if (e.name == name) return e;
    throw domain_error("catalog: unknown entry '" + name + "'");
}

/// Path resolution: the DUALNORM_CATALOG environment variable wins, then the
/// compiled-in bundled file.
inline std::string default_catalog_path() {
    if (const char* env = std::getenv("DUALNORM_CATALOG")) return env;
#ifdef DUALNORM_BUNDLED_CATALOG
    return DUALNORM_BUNDLED_CATALOG;
#else
    throw domain_error("catalog: no catalog path configured");
#endif
}

inline Catalog load_default_catalog() { return load_catalog(default_catalog_path()); }

// ---------------------------------------------------------------------------
// Built-in entries.  The bundled data file is the canonical serialization of
// exactly this catalog.
// ---------------------------------------------------------------------------

namespace detail {

inline QVec qrow(const std::vector<std::string>& xs) {
    QVec v;
    for (const auto& s : xs) v.push_back(parse_rat(s));
    return v;
}

inline QMat qrows(const std::vector<std::vector<std::string>>& rows) {
    QMat m;
    for (const auto& r : rows) m.push_back(qrow(r));
    return m;
}

}  // namespace detail

inline Catalog builtin_catalog() {
    using detail::qrow;
    using detail::qrows;
    Catalog c;

    {
        CatalogEntry e;
        e.name = "a1-compact";
        e.description =
            "Rank-one frame of type A1 whose real form is the compact one: the "
            "full Weyl group acts as the real-form subgroup, so the packet has a "
            "single member and no generic fixture exists.";
        e.rank = 1;
        e.simple_roots = {{1}};
        e.simple_coroots = {{2}};
        e.sigma_bar = {{-1}};
        e.discrete_series = true;
        e.ad_basis = qrows({{"1"}});
        e.sc_basis = qrows({{"2"}});
        e.omega_r_generators = {{0}};
        e.quasi_split = false;
        e.central_points = {{"minus-one", qrow({"0"}), qrow({"1"}), {0}}};
        e.mu_examples = {qrow({"1"}), qrow({"2"})};
        c.entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "a1-split";
        e.description =
            "Rank-one frame of type A1 with trivial real-form subgroup: a "
            "two-member packet against a component group of order two, with a "
            "perfect generic table.";
        e.rank = 1;
        e.simple_roots = {{1}};
        e.simple_coroots = {{2}};
        e.sigma_bar = {{-1}};
        e.discrete_series = true;
        e.ad_basis = qrows({{"1"}});
        e.sc_basis = qrows({{"2"}});
        e.omega_r_generators = {};
        e.quasi_split = true;
        e.whittaker = WhittakerFixture{{}, {0}, 1};
        e.central_points = {{"minus-one", qrow({"0"}), qrow({"1"}), {0}}};
        e.mu_examples = {qrow({"1"}), qrow({"2"}), qrow({"3"})};
        c.entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "c2-split";
        e.description =
            "Rank-two frame of type C2 with real-form subgroup generated by the "
            "long reflection s1.s2.s1: four packet members against a component "
            "group of type (2,2), with a perfect four-by-four generic table.";
        e.rank = 2;
        e.simple_roots = {{1, -1}, {0, 2}};
        e.simple_coroots = {{1, -1}, {0, 1}};
        e.sigma_bar = {{-1, 0}, {0, -1}};
        e.discrete_series = true;
        e.ad_basis = qrows({{"1/2", "1/2"}, {"0", "1"}});
        e.sc_basis = qrows({{"1", "0"}, {"0", "1"}});
        e.omega_r_generators = {{0, 1, 0}};
        e.quasi_split = true;
        e.whittaker = WhittakerFixture{{}, {1}, 1};
        e.central_points = {{"identity", qrow({"0", "0"}), qrow({"0", "0"}), {0, 0}}};
        e.mu_examples = {qrow({"5/2", "3/2"}), qrow({"7/2", "1/2"})};
        c.entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "t1-compact";
        e.description =
            "Anisotropic one-dimensional torus: the involution is negation, the "
            "component group has order two, and every parameter is bounded.";
        e.rank = 1;
        e.simple_roots = {};
        e.simple_coroots = {};
        e.sigma_bar = {{-1}};
        e.discrete_series = false;
        e.ad_basis = qrows({{"1"}});
        e.sc_basis = qrows({{"1"}});
        e.omega_r_generators = {};
        e.quasi_split = true;
        e.central_points = {{"angle-pi", qrow({"0"}), qrow({"1"}), {0}}};
        e.mu_examples = {qrow({"1"}), qrow({"2"})};
        c.entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "t1-split";
        e.description =
            "Split one-dimensional torus: the involution is the identity, the "
            "component group is trivial, and character data admit shifts that "
            "leave the lattice coset.";
        e.rank = 1;
        e.simple_roots = {};
        e.simple_coroots = {};
        e.sigma_bar = {{1}};
        e.discrete_series = false;
        e.ad_basis = qrows({{"1"}});
        e.sc_basis = qrows({{"1"}});
        e.omega_r_generators = {};
        e.quasi_split = true;
        e.central_points = {{"minus-one", qrow({"0"}), qrow({"0"}), {1}},
                            {"positive-unit", qrow({"1"}), qrow({"0"}), {0}}};
        e.mu_examples = {qrow({"0"})};
        c.entries.push_back(std::move(e));
    }
    {
        CatalogEntry e;
        e.name = "t2-swap";
        e.description =
            "Two-dimensional torus with coordinate-swapping involution: a "
            "restriction-of-scalars shape whose component group is trivial but "
            "whose lattice coset tests are nontrivial.";
        e.rank = 2;
        e.simple_roots = {};
        e.simple_coroots = {};
        e.sigma_bar = {{0, 1}, {1, 0}};
        e.discrete_series = false;
        e.ad_basis = qrows({{"1", "0"}, {"0", "1"}});
        e.sc_basis = qrows({{"1", "0"}, {"0", "1"}});
        e.omega_r_generators = {};
        e.quasi_split = true;
        e.central_points = {{"real-pair", qrow({"1", "1"}), qrow({"0", "0"}), {1, 1}},
                            {"swap-phase", qrow({"0", "0"}), qrow({"1", "-1"}), {0, 0}}};
        e.mu_examples = {qrow({"1", "-1"}), qrow({"2", "-2"})};
        c.entries.push_back(std::move(e));
    }

    validate_catalog(c);
    return c;
}

// ---------------------------------------------------------------------------
// Report builders
// ---------------------------------------------------------------------------

namespace detail {

inline json cvec_to_json(const CVec& v) {
    json a = json::array();
    for (const CRat& x : v) a.push_back(to_string(x));
    return a;
}

inline json character_to_json(const torus::CharacterData& cd) {
    json j;
    j["nu"] = cvec_to_json(cd.nu);
    j["lambda"] = qvec_to_json(cd.lam);
    return j;
}

inline std::string turn_string(const Rat& t) {
    return to_string(UnitValue::from_turns(t));
}

inline std::string double_string(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

}  // namespace detail

inline json table_to_json(const cg::PairingTable& t) {
    json j;
    j["flavor"] = param::to_string(t.flavor);
    j["normalization"] = t.normalization;
    j["rows"] = t.row_labels;
    j["columns"] = t.col_labels;
    j["base_column"] = t.col_labels.at(t.base_column);
    json vals = json::array();
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < t.col_labels.size(); ++c)
            row.push_back(detail::turn_string(t.turns[i][c]));
        vals.push_back(row);
    }
    j["values"] = vals;
    json zeta = json::array();
    for (const Rat& z : t.zeta_turns) zeta.push_back(detail::turn_string(z));
    j["zeta"] = zeta;
    return j;
}

/// CSV rendering: one row per packet member, one column per group element.
inline std::string table_csv(const cg::PairingTable& t) {
    std::string out = "member";
    for (const std::string& r : t.row_labels) out += "," + r;
    out += "\n";
    for (std::size_t c = 0; c < t.col_labels.size(); ++c) {
        out += t.col_labels[c];
        for (std::size_t i = 0; i < t.row_labels.size(); ++i)
            out += "," + detail::turn_string(t.turns[i][c]);
        out += "\n";
    }
    return out;
}

inline json packet_report(const CatalogEntry& e, const CVec& mu, const QVec& lam,
                          param::Flavor flavor,
                          param::Orientation orientation = param::Orientation::Standard) {
    param::DualGroupFrame frame = frame_of(e, orientation);
    param::DiscreteParameter p = param::validate_parameter(mu, lam, frame);
    std::vector<WeylElement> omega = omega_r_of(e);
    param::Packet pk = flavor == param::Flavor::Classical
                           ? param::build_packet(p, omega)
                           : param::build_packet_D(p, omega);

    json j;
    j["entry"] = e.name;
    j["flavor"] = param::to_string(pk.flavor);
    j["orientation"] = param::to_string(frame.orientation);
    j["mu"] = detail::cvec_to_json(p.mu);
    j["lambda"] = detail::qvec_to_json(p.lam);
    j["bounded"] = p.bounded;
    j["omega_r_order"] = pk.omega_r.size();

    json members = json::array();
    for (const auto& m : pk.members) {
        json mj;
        mj["label"] = m.label;
        mj["word"] = detail::word_to_json(m.rep.word);
        json coset = json::array();
        for (const WeylElement& k : m.coset) coset.push_back(param::word_label(k.word));
        mj["coset"] = coset;
        json chars = json::array();
        for (const auto& cd : m.char_data) chars.push_back(detail::character_to_json(cd));
        mj["characters"] = chars;
        members.push_back(mj);
    }
    j["members"] = members;

    json stable = json::array();
    for (const auto& cd : param::stable_character_data(pk))
        stable.push_back(detail::character_to_json(cd));
    j["stable_characters"] = stable;
    json nums = json::array();
    for (const auto& cd : param::stable_numerator_data(pk))
        nums.push_back(detail::character_to_json(cd));
    j["stable_numerators"] = nums;

    json central = json::array();
    for (const CentralPoint& cp : e.central_points) {
        torus::TorusPoint z = central_point_of(e, cp);
        json cj;
        cj["label"] = cp.label;
        cj["value"] = to_string(param::packet_central_value(pk, z));
        central.push_back(cj);
    }
    j["central_values"] = central;

    param::DiscreteParameter rp = param::renormalize_parameter(p);
    json rj;
    rj["mu"] = detail::cvec_to_json(rp.mu);
    rj["lambda"] = detail::qvec_to_json(rp.lam);
    j["renormalized_parameter"] = rj;
    return j;
}

inline json group_to_json(const cg::ComponentGroup& g) {
    json j;
    j["isogeny"] = cg::to_string(g.isogeny);
    json divisors = json::array();
    for (long long d : g.divisors) divisors.push_back(d);
    j["divisors"] = divisors;
    j["order"] = g.order();
    j["elementary_two"] = g.is_elementary_two();
    json gens = json::array();
    for (const auto& t : g.generators) {
        json gj;
        gj["label"] = t.label;
        gj["q"] = detail::qvec_to_json(t.q);
        gj["order"] = t.order;
        gens.push_back(gj);
    }
    j["generators"] = gens;
    json elems = json::array();
    for (const auto& t : g.elements()) elems.push_back(t.label);
    j["elements"] = elems;
    return j;
}

inline json pairing_report(const CatalogEntry& e, const CVec& mu, const QVec& lam) {
    param::DualGroupFrame frame = frame_of(e);
    param::DiscreteParameter p = param::validate_parameter(mu, lam, frame);
    std::vector<WeylElement> omega = omega_r_of(e);
    param::Packet packet = param::build_packet(p, omega);
    param::Packet packet_d = param::build_packet_D(p, omega);
    cg::ComponentGroupPair pair_groups = cg::component_group_pair(p, lattices_of(e));

    json j;
    j["entry"] = e.name;
    j["mu"] = detail::cvec_to_json(p.mu);
    j["lambda"] = detail::qvec_to_json(p.lam);
    j["packet_size"] = packet.members.size();
    j["adjoint"] = group_to_json(pair_groups.ad);
    j["simply_connected"] = group_to_json(pair_groups.sc);
    j["kernel_order"] = pair_groups.kernel_exponents.size();

    cg::RelSign rel = cg::default_rel_signs(frame, packet);
    std::vector<Rat> trivial(pair_groups.ad.divisors.size());
    cg::PairingTable plain =
        cg::pairing_from_signs(pair_groups.ad, packet, 0, trivial, rel);
    json pj = table_to_json(plain);
    pj["csv"] = table_csv(plain);
    j["plain"] = pj;

    if (e.whittaker) {
        BasedRootDatum ld = frame.levi_datum();
        std::size_t gi = member_index_of_word(packet, ld, e.whittaker->generic_word);
        std::size_t gbar =
            member_index_of_word(packet, ld, e.whittaker->generic_word_bar);
        cg::PairingTable lam_table = cg::whittaker_table(
            pair_groups.ad, packet, cg::LambdaOrientation::Lambda, rel, gi,
            e.quasi_split);
        cg::PairingTable lambar_table = cg::whittaker_table(
            pair_groups.ad, packet, cg::LambdaOrientation::LambdaBar, rel, gbar,
            e.quasi_split);
        cg::PairingTable d_table = cg::renormalized_table(lam_table, packet_d);
        json w;
        w["available"] = true;
        w["detv_sign"] = e.whittaker->detv_sign;
        w["generic_member"] = packet.members.at(gi).label;
        w["generic_member_bar"] = packet.members.at(gbar).label;
        json lj = table_to_json(lam_table);
        lj["csv"] = table_csv(lam_table);
        w["lambda"] = lj;
        json bj = table_to_json(lambar_table);
        bj["csv"] = table_csv(lambar_table);
        w["lambdabar"] = bj;
        json dj = table_to_json(d_table);
        dj["csv"] = table_csv(d_table);
        w["renormalized"] = dj;
        j["whittaker"] = w;
    } else {
        json w;
        w["available"] = false;
        w["reason"] = "entry provides no generic fixture";
        j["whittaker"] = w;
    }
    return j;
}

inline json identities_report(std::size_t instances, std::uint64_t seed) {
    std::vector<factor::Context> ctxs = factor::default_contexts();
    factor::SuiteReport rep = factor::theorem_suite(ctxs, seed, instances);
    factor::ConfluenceReport conf =
        factor::confluence_report(ctxs, 2, seed ^ 0x9e3779b97f4a7c15ULL);

    json j;
    json fixtures = json::array();
    for (const auto& oc : rep.outcomes) {
        json f;
        f["name"] = oc.name;
        f["context"] = oc.ctx;
        f["status"] = factor::to_string(oc.status);
        if (!oc.reason.empty()) f["reason"] = oc.reason;
        f["steps"] = oc.steps;
        f["samples"] = oc.samples;
        f["max_dev"] = detail::double_string(oc.max_dev);
        fixtures.push_back(f);
    }
    j["fixtures"] = fixtures;
    j["proved"] = rep.proved;
    j["skipped"] = rep.skipped;
    j["failed"] = rep.failed;
    j["samples"] = rep.samples;
    json cj;
    cj["expressions"] = conf.expressions;
    cj["orders"] = conf.orders;
    cj["all_confluent"] = conf.all_confluent;
    if (!conf.counterexample.empty()) cj["counterexample"] = conf.counterexample;
    j["confluence"] = cj;
    j["ok"] = rep.all_passed() && conf.all_confluent;
    return j;
}

inline json harness_report_json(std::uint64_t seed, std::size_t models,
                                std::size_t max_size) {
    toy::HarnessReport rep = toy::run_harness(seed, models, max_size);
    json j;
    j["seed"] = seed;
    j["models"] = rep.models;
    j["spectral_models"] = rep.spectral_models;
    j["functions"] = rep.functions;
    j["failures"] = rep.failures;
    if (!rep.first_failure.empty()) j["first_failure"] = rep.first_failure;
    j["ok"] = rep.all_passed();
    return j;
}

inline json catalog_summary_json(const Catalog& c) {
    json j;
    json entries = json::array();
    for (const CatalogEntry& e : c.entries) {
        json ej;
        ej["name"] = e.name;
        ej["rank"] = e.rank;
        ej["semisimple_rank"] = e.simple_roots.size();
        ej["quasi_split"] = e.quasi_split;
        ej["whittaker_fixture"] = bool(e.whittaker);
        ej["description"] = e.description;
        entries.push_back(ej);
    }
    j["entries"] = entries;
    j["count"] = c.entries.size();
    return j;
}

}  // namespace dualnorm::cat
