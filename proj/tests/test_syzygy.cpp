#include "jetbrackets/syzygy.hpp"

#include <doctest.h>

using namespace jb;

namespace {

const Catalog& order5() {
    static const Catalog c = build_catalog(JetContext{2, 5});
    return c;
}

Polynomial E(const std::string& text) { return evaluate_in_catalog(order5(), text); }

void require_all(const SyzygyReport& r, std::size_t total) {
    INFO(r.suite);
    for (const auto* f : r.failures()) {
        INFO(f->identity.id << " " << f->detail << " " << to_string(f->residual));
        CHECK(f->pass);
    }
    CHECK(r.total() == total);
    CHECK(r.passed() + r.failures().size() == r.total());
}

}  // namespace

TEST_CASE("jacobi examples") {
    CHECK(jacobi(jet(1, 1), jet(2, 1), E("Lambda3")).is_zero());
    CHECK(E(jacobi_text("f1'", "f2'", "Lambda3")) == E("Lambda7_12 - Lambda7_21"));
    Polynomial p = E("Lambda5_1");
    Polynomial q = E("M8");
    CHECK(jacobi(p, p, q).is_zero());
    for (const char* l5 : {"Lambda5_1", "Lambda5_2"}) CHECK(jacobi(jet(1, 1), jet(2, 1), E(l5)).is_zero());
    require_all(jacobi_examples(order5()), 6);
}

TEST_CASE("plucker templates") {
    Polynomial f1 = jet(1, 1);
    Polynomial f2 = jet(2, 1);
    Polynomial l3 = E("Lambda3");
    CHECK(plck1(f1, f2, l3) == E("f2'*Lambda5_1 - f1'*Lambda5_2 - 3*Lambda3*Lambda3"));
    CHECK(plck1(f1, l3, l3).is_zero());
    CHECK(plck2(f1, f2, l3, E("Lambda5_1")).is_zero());
    CHECK(plck2(f1, f1, l3, E("M8")).is_zero());
    CHECK(E(plck2_text("f1'", "f2'", "Lambda5_1", "Lambda5_2")) ==
          E("5*Lambda3*Lambda3*M8 + Lambda7_21*Lambda7_12 - Lambda7_22*Lambda7_11"));
    const std::vector<std::string> gens{"f1'", "f2'", "Lambda3", "Lambda5_1", "Lambda5_2"};
    int count = 0;
    for (std::size_t a = 0; a < gens.size(); ++a)
        for (std::size_t b = a + 1; b < gens.size(); ++b)
            for (std::size_t c = b + 1; c < gens.size(); ++c) {
                CHECK(plck1(E(gens[a]), E(gens[b]), E(gens[c])).is_zero());
                ++count;
            }
    CHECK(count == 10);
}

TEST_CASE("curated lists") {
    const std::map<std::string, std::size_t> sizes = {{"ORDER4_NINE", 9},   {"ORDER5_FIFTEEN", 15}, {"GHOST_ABCDEF", 6},
                                                      {"GHOST_EXTRA4", 4},  {"SEVENTH_FAMILY", 3},  {"CROSS_M10", 1},
                                                      {"FIFTH_FAMILY_JAC", 2}, {"APPENDIX9_SYNTH", 5}};
    CHECK(curated_list_ids().size() == sizes.size());
    for (const auto& id : curated_list_ids()) {
        REQUIRE(sizes.count(id));
        require_all(verify_curated(order5(), id), sizes.at(id));
    }
    auto seventh = verify_curated(order5(), "SEVENTH_FAMILY");
    CHECK(seventh.notes.size() == 3);
    auto app9 = verify_curated(order5(), "APPENDIX9_SYNTH");
    REQUIRE(app9.notes.size() == 2);
    CHECK(app9.notes[1].find("8/16") != std::string::npos);
    CHECK_THROWS_AS(verify_curated(order5(), "NO_SUCH_LIST"), ParseError);
}

TEST_CASE("a corrupted coefficient is caught") {
    auto records = parse_fixture_text(
        "[BAD:1]\nlist: BAD\nlocator: test\nexpr: f2'*Lambda5_1 - f1'*Lambda5_2 - 3*Lambda3*Lambda3\n"
        "[BAD:2]\nlist: BAD\nlocator: test\nexpr: f2'*Lambda7_11 - f1'*Lambda7_12 - 4*Lambda3*Lambda5_1\n");
    auto r = verify_curated_records(order5(), "BAD", records);
    CHECK(r.total() == 2);
    CHECK(r.passed() == 1);
    REQUIRE(r.failures().size() == 1);
    CHECK(r.failures()[0]->identity.id == "BAD:2");
    CHECK(r.failures()[0]->residual.terms == E("Lambda3*Lambda5_1").size());
}

TEST_CASE("curated identities are homogeneous term by term") {
    for (const auto& r : FixtureStore().load("syzygies.fix")) {
        if (r.has("indices")) continue;
        INFO(r.name);
        CHECK(is_homogeneous(order5(), r.get("expr")));
    }
    auto grades = grade_terms(order5(), "f1'*M8 - Lambda5_1*Lambda5_1");
    REQUIRE(grades.size() == 2);
    CHECK(grades[0].weight == 9);
    CHECK(grades[1].weight == 10);
    CHECK_FALSE(is_homogeneous(order5(), "f1'*M8 - Lambda5_1*Lambda5_1"));
    CHECK_FALSE(is_homogeneous(order5(), "f1'*Lambda3 - f2'*Lambda3"));
}

TEST_CASE("residual summaries") {
    Polynomial p = E("Lambda7_11*M8");
    auto s = summarize(p);
    CHECK(s.terms == p.size());
    CHECK(s.extremal.size() == 6);
    CHECK(summarize(Polynomial()).terms == 0);
    CHECK(to_string(summarize(Polynomial())) == "0 terms");
}

TEST_CASE("all Plck instances over the nine order-4 invariants vanish") {
    auto r = order4_plucker_suite(order5());
    require_all(r, 210);
    std::size_t p1 = 0;
    for (const auto& o : r.outcomes)
        if (o.identity.family == IdentityFamily::plck1) ++p1;
    CHECK(p1 == 84);
    require_all(order4_jacobi_suite(order5()), 84);
}

TEST_CASE("a-o reconstruction") {
    auto r = reconstruction_suite(order5());
    require_all(r, 25);
    bool o_note = false;
    for (const auto& n : r.notes)
        if (n.rfind("o:", 0) == 0) o_note = n.find("differs") != std::string::npos;
    CHECK(o_note);
    for (const auto& o : r.outcomes)
        if (o.identity.id == "m") CHECK(o.detail.find("ORDER4_NINE:9") != std::string::npos);
}

TEST_CASE("restricted division table") {
    auto r = restricted_identities(order5());
    require_all(r, 13);
    CHECK(r.notes.size() == 3);
    Polynomial l3 = restrict_at_zero(E("Lambda3"));
    Polynomial l5 = restrict_at_zero(E("Lambda5_1"));
    CHECK(restrict_at_zero(E("Lambda7_11")) * 3 * l3 == 5 * l5 * l5);
    CHECK(restrict_at_zero(E("X21")) * 3 * l3 ==
          -5 * restrict_at_zero(E("N12")).pow(2) - 64 * restrict_at_zero(E("M8")).pow(3));
    CHECK(restrict_at_zero(E("f1'*M8")).is_zero());
}

TEST_CASE("jacobian rank probes") {
    auto r = independence_rank_suite(order5());
    require_all(r, 5);
    CHECK(jacobian_rank({jet(1, 1), 2 * jet(1, 1)}, 1, 2) == 1);
    CHECK(jacobian_rank({jet(1, 1), jet(2, 2)}, 1, 2) == 2);
    CHECK(jacobian_rank({}, 1, 2) == 0);
}

TEST_CASE("ghost non-expressibility") {
    auto gens = bracket_bi_invariants();
    CHECK(gens.size() == 11);
    CHECK(std::holds_alternative<Infeasible>(ghost_nonmembership("X18", gens)));
    gens.push_back("X18");
    CHECK(std::holds_alternative<Infeasible>(ghost_nonmembership("X19", gens)));
    auto m8 = ghost_nonmembership("M8", {"M8"});
    REQUIRE(std::holds_alternative<Feasible>(m8));
    CHECK(std::get<Feasible>(m8).exponents == std::vector<int>{1});
    for (const char* sum : {"X21", "X23", "X25"}) CHECK(std::holds_alternative<Unsupported>(ghost_nonmembership(sum, gens)));
    auto k12 = ghost_nonmembership("K12_11", {"Lambda3", "Lambda5_1", "Lambda7_11", "M8"});
    CHECK(std::holds_alternative<Infeasible>(k12));
    auto l9 = ghost_nonmembership("X27", {"M8", "X19"});
    REQUIRE(std::holds_alternative<Feasible>(l9));
    CHECK(std::get<Feasible>(l9).exponents == std::vector<int>{1, 1});
    CHECK(std::holds_alternative<Feasible>(monomial_membership({2, 0, 1}, {{1, 0, 0}, {0, 0, 1}})));
    CHECK(std::holds_alternative<Infeasible>(monomial_membership({-1, 2, 0}, {{1, 0, 0}, {0, 1, 0}})));
    CHECK(std::holds_alternative<Feasible>(monomial_membership({-1, 2, 0}, {{-1, 2, 0}})));
}

TEST_CASE("restricted table exponents") {
    for (const auto& v : restricted_table()) {
        INFO(v.name);
        if (v.name == "f1'") CHECK(v.zero);
        if (v.name == "X18") {
            REQUIRE(v.terms.size() == 1);
            CHECK(v.terms[0].exponents == std::vector<int>{-3, 3, 0, 1});
            CHECK(v.terms[0].coefficient == Rational(1225, 27));
        }
        if (v.name == "X21") CHECK(v.terms.size() == 2);
    }
}

TEST_CASE("staircase families are non-redundant") {
    auto r = staircase_nonredundancy_check();
    require_all(r, 12);
    auto families = staircase_families();
    REQUIRE(families.size() == 6);
    auto d = families_disjoint(families[0], families[1]);
    CHECK(d.disjoint);
    CHECK(d.certificate.size() == 4);
    ExponentFamily shifted = families[0];
    shifted.name = "shifted";
    shifted.offset[1] += 2;
    auto overlap = families_disjoint(families[0], shifted);
    CHECK_FALSE(overlap.disjoint);
    REQUIRE(overlap.witness.has_value());
}

TEST_CASE("dimension three wronskian") {
    Catalog dim3 = build_catalog(JetContext{3, 3});
    require_all(appendix3_suite(dim3), 3 + dim3.size());
}
