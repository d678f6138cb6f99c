#include "jetbrackets/catalog.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace jb;

namespace {

const Catalog& order5() {
    static const Catalog c = build_catalog(JetContext{2, 5});
    return c;
}

const Catalog& dim3() {
    static const Catalog c = build_catalog(JetContext{3, 3});
    return c;
}

Polynomial E(const std::string& text) { return evaluate_in_catalog(order5(), text); }

/// Three distinct random catalog entries of order at most four, so the products stay small.
std::vector<const NamedInvariant*> random_triple(std::mt19937& rng) {
    std::vector<const NamedInvariant*> small;
    for (const auto& e : order5().entries())
        if (e.meta.weight <= 8) small.push_back(&e);
    std::shuffle(small.begin(), small.end(), rng);
    return {small[0], small[1], small[2]};
}

}  // namespace

TEST_CASE("bracket examples") {
    CHECK(bracket(jet(1, 1), jet(2, 1)) == -delta(1, 2));
    CHECK(E("[Lambda3, f1']") == E("D13*f1' - 3*D12*f1''"));
    CHECK(E("[Lambda5_1, Lambda5_2]") == E("-5*Lambda3*M8"));
    CHECK(E("[M8, Lambda3]") == order5().poly("N12"));
    CHECK(bracket(Polynomial(), jet(1, 1)).is_zero());
}

TEST_CASE("covariant derivative examples") {
    CHECK(covariant(jet(2, 1), 1) == delta(1, 2));
    for (int i = 1; i <= 2; ++i) CHECK(covariant(delta(1, 2), i) == order5().poly("Lambda5_" + std::to_string(i)));
    std::mt19937 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        auto t = random_triple(rng);
        const Polynomial& p = t[0]->poly;
        const Polynomial& q = t[1]->poly;
        int k = 1 + trial % 2;
        CHECK(covariant(p, k) == bracket(p, jet(k, 1)));
        CHECK(covariant(p * q, k) == covariant(p, k) * q + p * covariant(q, k));
    }
}

TEST_CASE("bracket antisymmetry, weight additivity and Leibniz rule") {
    const auto& entries = order5().entries();
    for (std::size_t a = 0; a < entries.size(); a += 3)
        for (std::size_t b = 1; b < entries.size(); b += 4) {
            if (entries[a].meta.weight + entries[b].meta.weight > 20) continue;
            Polynomial pq = bracket(entries[a], entries[b]);
            CHECK((pq + bracket(entries[b], entries[a])).is_zero());
            if (!pq.is_zero()) CHECK(weight(pq) == entries[a].meta.weight + entries[b].meta.weight + 1);
        }
    std::mt19937 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        auto t = random_triple(rng);
        const Polynomial& p = t[0]->poly;
        const Polynomial& q = t[1]->poly;
        const Polynomial& r = t[2]->poly;
        CHECK(bracket(p, q * r) == bracket(p, q) * r + bracket(p, r) * q);
    }
}

TEST_CASE("catalog sizes and fundamental names") {
    CHECK(order5().size() == 31);
    CHECK(fundamental_names(JetContext{2, 5}).size() == 25);
    CHECK(dim3().size() == 16);
    CHECK(fundamental_names(JetContext{3, 3}) == dim3().names());
    Catalog low = build_catalog(JetContext{2, 2});
    CHECK(low.names() == std::vector<std::string>{"f1'", "f2'", "Lambda3"});
    for (const auto& name : fundamental_names(JetContext{2, 5})) CHECK(order5().has(name));
    for (const char* ghost : {"X18", "X19", "X21", "X23", "X25", "X27"}) CHECK(order5().at(ghost).meta.ghost);
    CHECK_FALSE(order5().has("Y23"));
    CHECK(order5().lookup("Y23") != nullptr);
}

TEST_CASE("every construction check agrees") {
    for (const Catalog* c : {&order5(), &dim3()})
        for (const auto& check : c->checks) {
            INFO(check.name);
            CHECK(check.agree);
        }
    auto has_check = [](const std::string& name) {
        for (const auto& c : order5().checks)
            if (c.name == name) return true;
        return false;
    };
    CHECK(has_check("Lambda7_12 = Lambda7_21"));
    CHECK(has_check("Lambda9_112 = Lambda9_121 - f1' M8"));
    CHECK(has_check("K12_12 = K12_21"));
    CHECK(has_check("Y23 = X23"));
    CHECK(has_check("X27 = M8*X19"));
    CHECK(has_check("M10_2"));
}

TEST_CASE("explicit formulas for the low weights") {
    CHECK(order5().poly("M8") == 3 * delta(1, 4) * delta(1, 2) + 12 * delta(2, 3) * delta(1, 2) - 5 * delta(1, 3).pow(2));
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k) {
                std::string ijk = std::to_string(i) + std::to_string(j) + std::to_string(k);
                Polynomial l7 = *order5().lookup("Lambda7_" + std::to_string(i) + std::to_string(j));
                CHECK(bracket(l7, jet(k, 1)) == *order5().lookup("Lambda9_" + ijk));
            }
    CHECK(E("[Lambda7_11, Lambda5_2]") == E("f1'*K12_12 - 5/2*Lambda3*M10_1 - 5*Lambda5_1*M8"));
}

TEST_CASE("weights, bidegrees and bi-invariance of the catalog") {
    const std::map<std::string, Bidegree> schur = {
        {"f1'", {1, 0}},        {"Lambda3", {1, 1}}, {"Lambda5_1", {2, 1}}, {"Lambda7_11", {3, 1}},
        {"M8", {2, 2}},         {"Lambda9_111", {4, 1}}, {"M10_1", {3, 2}}, {"N12", {3, 3}},
        {"K12_11", {4, 2}},     {"H14_1", {4, 3}},   {"F16_11", {5, 3}}};
    UnipotentAction two{2};
    for (const auto& e : order5().entries()) {
        INFO(e.name);
        CHECK(weight(e.poly) == e.meta.weight);
        CHECK(weight(total_derivative(e.poly)) == e.meta.weight + 1);
        CHECK(is_bi_invariant(two, e.poly) == e.meta.bi_invariant);
        if (schur.count(e.name)) CHECK(e.meta.bidegree == schur.at(e.name));
    }
    CHECK(bi_invariant_names(order5()).size() == 17);
    UnipotentAction three{3};
    for (const auto& e : dim3().entries()) {
        INFO(e.name);
        CHECK(is_bi_invariant(three, e.poly) == e.meta.bi_invariant);
    }
    CHECK(bi_invariant_names(dim3()) == std::vector<std::string>{"f1'", "Lambda3_12", "Lambda5_12_1", "D6_123"});
}

TEST_CASE("reparametrization invariance of the catalog") {
    for (const auto& e : order5().entries()) {
        INFO(e.name);
        InvarianceResult r = check_reparametrization_invariance(order5().ctx(), e.poly);
        CHECK(r.invariant);
        CHECK(r.weight == e.meta.weight);
    }
    for (const auto& e : dim3().entries()) CHECK(check_reparametrization_invariance(dim3().ctx(), e.poly).invariant);
}

TEST_CASE("ghost quotients") {
    CHECK(order5().poly("X18") == ghost_extract("X18", E("-5*Lambda9_111*M10_1 + 56*Lambda7_11*K12_11"), 1));
    CHECK(weight(order5().poly("X19")) == 19);
    CHECK(order5().poly("X27") == E("M8*X19"));
    CHECK_THROWS_AS(ghost_extract("bad", E("Lambda3*Lambda5_1"), 1), NotDivisible);
    CHECK(restrict_at_zero(E("Lambda3*Lambda5_1")) != Polynomial());
    CHECK(dim3().poly("D6_123") == wronskian3(dim3().ctx()));
}

TEST_CASE("minor tokens") {
    CHECK(*minor_token("D12") == delta(1, 2));
    CHECK(*minor_token("D13_23") == delta(1, 3, 2, 3));
    CHECK(*minor_token("D13_21") == -delta(1, 3, 1, 2));
    CHECK(*minor_token("D31") == -delta(1, 3));
    CHECK(minor_token("D22")->is_zero());
    CHECK(minor_token("D12_11")->is_zero());
    CHECK_FALSE(minor_token("M8").has_value());
    CHECK_THROWS_AS(E("unknown_name"), ParseError);
}

TEST_CASE("displayed forms expand to their targets") {
    FixtureStore store;
    auto checks = verify_display_forms(order5(), store.load("display_nu2.fix"));
    CHECK(checks.size() >= 20);
    for (const auto& c : checks) {
        INFO(c.name);
        CHECK(c.pass);
    }
    CHECK(verify_display_form(order5(), "DLambda5_2", store.load("display_nu2.fix")).pass);
    auto fifth = verify_display_form(order5(), "Lambda7_12_Lambda5_1", store.load("display_nu2.fix"));
    CHECK(fifth.pass);
    REQUIRE(fifth.printed_pass.has_value());
    CHECK_FALSE(*fifth.printed_pass);

    auto ghosts = store.load("ghosts.fix");
    auto shown = verify_display_forms(order5(), ghosts);
    CHECK(shown.size() == 3);
    for (const auto& c : shown) CHECK(c.pass);
    CHECK(verify_display_form(order5(), "X18", ghosts).printed_pass == std::optional<bool>(false));
    auto spots = spot_checks(ghosts);
    REQUIRE(spots.size() == 2);
    CHECK(spots[0].displayed == Rational(-25088));
    CHECK(spots[1].displayed == Rational(16000));
    for (const auto& s : spots) CHECK(s.pass);
}

TEST_CASE("a wrong explicit formula aborts a strict build") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "jb_catalog_mismatch";
    fs::create_directories(dir);
    for (const auto& entry : fs::directory_iterator(FixtureStore().dir()))
        fs::copy_file(entry.path(), dir / entry.path().filename(), fs::copy_options::overwrite_existing);
    {
        std::ofstream out(dir / "catalog_nu2.fix");
        out << "[M8]\nlocator: test\nweight: 8\nexpr: 3*D14*D12 + 12*D23*D12 - 4*D13^2\n";
    }
    CatalogOptions strict;
    strict.fixtures = FixtureStore(dir);
    CHECK_THROWS_AS(build_catalog(JetContext{2, 4}, strict), ConstructionMismatch);
    CatalogOptions lenient = strict;
    lenient.strict = false;
    Catalog c = build_catalog(JetContext{2, 4}, lenient);
    bool found = false;
    for (const auto& check : c.checks)
        if (check.name == "M8") {
            found = true;
            CHECK_FALSE(check.agree);
            CHECK(check.residual == delta(1, 3).pow(2));
        }
    CHECK(found);
    fs::remove_all(dir);
}
