#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "dualnorm/harness.hpp"

using namespace dualnorm;
using namespace dualnorm::toy;

namespace {

CRat cr(long long re) { return CRat(Rat(re)); }

CRat cr(Rat re, Rat im) { return CRat(re, im); }

CRat unit_i() { return CRat(Rat(0), Rat(1)); }

/// The worked 1x2 example used throughout: matching matrix [1, i],
/// character (1, -1), duality scalar i.
ToyModel tiny_model() {
    ToyModel m;
    m.n_gamma = 1;
    m.n_delta = 2;
    m.factor = {{cr(1), unit_i()}};
    m.varpi = {cr(1), cr(-1)};
    m.c = unit_i();
    m.validate();
    return m;
}

/// Spectral model on two members swapped by conjugation.
SpectralToy tiny_spectral() {
    SpectralToy s;
    s.n = 2;
    s.factor = {unit_i(), cr(-1)};
    s.conj_perm = {1, 0};
    s.c = cr(Rat(0), Rat(-1));
    s.validate();
    return s;
}

}  // namespace

TEST_CASE("geometric toy model pins", "[harness]") {
    ToyModel m = tiny_model();
    std::vector<CRat> f = {cr(2), cr(Rat(3), Rat(1))};

    REQUIRE(orbital(m, 0, f) == cr(2));
    REQUIRE(orbital(m, 1, f) == cr(Rat(-3), Rat(-1)));
    REQUIRE(orbital_dual(m, 0, f) == cr(2));
    REQUIRE(orbital_dual(m, 1, f) == cr(Rat(-3), Rat(-1)));

    std::vector<CRat> t = transfer(m, f);
    REQUIRE(t.size() == 1);
    REQUIRE(t[0] == cr(Rat(3), Rat(-3)));

    std::vector<CRat> dt = dual_transfer(m, f);
    REQUIRE(dt.size() == 1);
    REQUIRE(dt[0] == cr(Rat(-3), Rat(1)));

    auto dual = dual_factor(m);
    REQUIRE(dual.size() == 1);
    REQUIRE(dual[0][0] == unit_i());
    REQUIRE(dual[0][1] == cr(1));

    auto implied = implied_dual_factor(m);
    REQUIRE(implied == dual);

    REQUIRE(check_orbital_conjugation(m, f).ok);
    REQUIRE(check_geometric_duality(m, f).ok);
    REQUIRE(check_dual_factor_converse(m).ok);
}

TEST_CASE("transfer is linear and dualization is involutive", "[harness]") {
    ToyRng rng(314159);
    ToyModel m = random_model(rng, 3, 4);
    std::vector<CRat> f = random_function(rng, 4);
    std::vector<CRat> g = random_function(rng, 4);

    std::vector<CRat> sum(4);
    for (std::size_t d = 0; d < 4; ++d) sum[d] = f[d] + g[d];
    std::vector<CRat> tf = transfer(m, f);
    std::vector<CRat> tg = transfer(m, g);
    std::vector<CRat> ts = transfer(m, sum);
    for (std::size_t i = 0; i < 3; ++i) REQUIRE(ts[i] == tf[i] + tg[i]);

    // Scale-and-conjugate twice returns the original matching matrix because
    // the duality scalar is unimodular.
    ToyModel md = m;
    md.factor = dual_factor(m);
    REQUIRE(dual_factor(md) == m.factor);
}

TEST_CASE("zero matching entries drop classes from the transfer", "[harness]") {
    ToyModel m;
    m.n_gamma = 1;
    m.n_delta = 2;
    m.factor = {{CRat{}, cr(1)}};
    m.varpi = {cr(1), cr(1)};
    m.c = cr(1);
    REQUIRE_NOTHROW(m.validate());

    std::vector<CRat> f = {cr(7), cr(Rat(1), Rat(2))};
    REQUIRE(transfer(m, f)[0] == cr(Rat(1), Rat(2)));
    REQUIRE(check_geometric_duality(m, f).ok);
    REQUIRE(check_dual_factor_converse(m).ok);
}

TEST_CASE("toy model validation rejects malformed data", "[harness]") {
    ToyModel m = tiny_model();

    ToyModel bad = m;
    bad.n_gamma = 0;
    REQUIRE_THROWS_WITH(bad.validate(),
                        Catch::Matchers::ContainsSubstring("empty index set"));

    bad = m;
    bad.factor.push_back({cr(1), cr(1)});
    REQUIRE_THROWS_WITH(bad.validate(),
                        Catch::Matchers::ContainsSubstring("wrong row count"));

    bad = m;
    bad.factor[0].pop_back();
    REQUIRE_THROWS_WITH(bad.validate(),
                        Catch::Matchers::ContainsSubstring("wrong column count"));

    bad = m;
    bad.factor[0][0] = cr(2);
    REQUIRE_THROWS_WITH(
        bad.validate(),
        Catch::Matchers::ContainsSubstring("zero or unimodular"));

    bad = m;
    bad.varpi.pop_back();
    REQUIRE_THROWS_WITH(
        bad.validate(),
        Catch::Matchers::ContainsSubstring("character has wrong length"));

    bad = m;
    bad.varpi[0] = CRat{};
    REQUIRE_THROWS_WITH(
        bad.validate(),
        Catch::Matchers::ContainsSubstring("character values must be unimodular"));

    bad = m;
    bad.c = cr(Rat(1, 2), Rat(0));
    REQUIRE_THROWS_WITH(
        bad.validate(),
        Catch::Matchers::ContainsSubstring("duality scalar must be unimodular"));

    REQUIRE_THROWS_WITH(transfer(m, {cr(1)}),
                        Catch::Matchers::ContainsSubstring("wrong length"));
}

TEST_CASE("spectral toy pins", "[harness]") {
    SpectralToy s = tiny_spectral();
    std::vector<CRat> t = {cr(Rat(1), Rat(1)), cr(2)};

    REQUIRE(stable_trace(s, t) == cr(Rat(-3), Rat(1)));

    std::vector<CRat> ct = conj_traces(s, t);
    REQUIRE(ct[0] == cr(2));
    REQUIRE(ct[1] == cr(Rat(1), Rat(-1)));

    std::vector<CRat> dual = dual_spectral_factor(s);
    REQUIRE(dual[0] == unit_i());
    REQUIRE(dual[1] == cr(-1));

    REQUIRE(check_spectral_duality(s, t).ok);

    SpectralToy fixed;
    fixed.n = 1;
    fixed.factor = {cr(1)};
    fixed.conj_perm = {0};
    fixed.c = cr(1);
    REQUIRE_NOTHROW(fixed.validate());
    REQUIRE(check_spectral_duality(fixed, {cr(Rat(2), Rat(5))}).ok);
}

TEST_CASE("spectral toy validation rejects malformed data", "[harness]") {
    SpectralToy s = tiny_spectral();

    SpectralToy bad = s;
    bad.n = 0;
    REQUIRE_THROWS_WITH(bad.validate(),
                        Catch::Matchers::ContainsSubstring("empty packet"));

    bad = s;
    bad.factor.pop_back();
    REQUIRE_THROWS_WITH(bad.validate(),
                        Catch::Matchers::ContainsSubstring("inconsistent sizes"));

    bad = s;
    bad.factor[0] = cr(3);
    REQUIRE_THROWS_WITH(
        bad.validate(),
        Catch::Matchers::ContainsSubstring("factor values must be unimodular"));

    bad = s;
    bad.conj_perm = {2, 0};
    REQUIRE_THROWS_WITH(bad.validate(),
                        Catch::Matchers::ContainsSubstring("out of range"));

    bad = s;
    bad.conj_perm = {1, 1};
    REQUIRE_THROWS_WITH(bad.validate(),
                        Catch::Matchers::ContainsSubstring("involution"));

    bad = s;
    bad.c = cr(0);
    REQUIRE_THROWS_WITH(
        bad.validate(),
        Catch::Matchers::ContainsSubstring("duality scalar must be unimodular"));

    REQUIRE_THROWS_WITH(stable_trace(s, {cr(1)}),
                        Catch::Matchers::ContainsSubstring("trace vector"));
    REQUIRE_THROWS_WITH(conj_traces(s, {cr(1)}),
                        Catch::Matchers::ContainsSubstring("trace vector"));
}

TEST_CASE("toy rng produces exact unimodular values deterministically",
          "[harness]") {
    ToyRng rng(2026);
    for (int i = 0; i < 200; ++i) {
        CRat z = rng.unit();
        REQUIRE(z.norm2() == Rat(1));
    }

    ToyRng a(42), b(42);
    for (int i = 0; i < 100; ++i) {
        REQUIRE(a.unit() == b.unit());
        REQUIRE(a.gaussian() == b.gaussian());
        REQUIRE(a.integer(-50, 50) == b.integer(-50, 50));
    }

    ToyRng c(1), d(2);
    bool diverged = false;
    for (int i = 0; i < 50 && !diverged; ++i)
        diverged = !(c.unit() == d.unit());
    REQUIRE(diverged);
}

TEST_CASE("random generators yield valid models", "[harness]") {
    ToyRng rng(777);

    ToyModel m = random_model(rng, 3, 5);
    REQUIRE(m.n_gamma == 3);
    REQUIRE(m.n_delta == 5);
    REQUIRE_NOTHROW(m.validate());

    ToyModel dense = random_model(rng, 2, 2, 0);
    for (const auto& row : dense.factor)
        for (const CRat& z : row) REQUIRE(!z.is_zero());

    ToyModel sparse = random_model(rng, 2, 2, 100);
    for (const auto& row : sparse.factor)
        for (const CRat& z : row) REQUIRE(z.is_zero());
    REQUIRE_NOTHROW(sparse.validate());

    for (int trial = 0; trial < 20; ++trial) {
        SpectralToy s = random_spectral(rng, 6);
        REQUIRE(s.n == 6);
        REQUIRE_NOTHROW(s.validate());
    }

    std::vector<CRat> f = random_function(rng, 4);
    REQUIRE(f.size() == 4);
}

TEST_CASE("harness driver checks every duality exactly", "[harness]") {
    HarnessReport rep = run_harness(20260816, 50, 4);
    REQUIRE(rep.all_passed());
    REQUIRE(rep.models == 50);
    REQUIRE(rep.spectral_models == 50);
    REQUIRE(rep.functions == 300);
    REQUIRE(rep.failures == 0);
    REQUIRE(rep.first_failure.empty());

    HarnessReport again = run_harness(20260816, 50, 4);
    REQUIRE(again.models == rep.models);
    REQUIRE(again.functions == rep.functions);
    REQUIRE(again.failures == 0);

    HarnessReport custom = run_harness(7, 10, 3, 5);
    REQUIRE(custom.all_passed());
    REQUIRE(custom.functions == 100);

    HarnessReport empty;
    REQUIRE(!empty.all_passed());

    REQUIRE_THROWS_WITH(run_harness(1, 5, 0),
                        Catch::Matchers::ContainsSubstring("max_size"));
}
