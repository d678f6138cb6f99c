#include "jetbrackets/expression.hpp"
#include "jetbrackets/jet.hpp"

#include <doctest.h>

using namespace jb;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

/// d/dt of a polynomial in f_i^(mu)(phi(t)) and phi^(mu)(t).
Polynomial chain_derivative(const Polynomial& p) {
    std::map<Var, Polynomial> images;
    for (Var v : p.variables()) {
        const VariableId& id = var_info(v);
        if (id.kind == VarKind::jet) images.emplace(v, jet(id.component, id.order + 1) * phi(1));
        if (id.kind == VarKind::reparam) images.emplace(v, phi(id.order + 1));
    }
    return apply_derivation(p, images);
}

}  // namespace

TEST_CASE("faa di bruno examples") {
    JetContext ctx{2, 5};
    CHECK(faa_di_bruno(ctx, 1, 1) == P("f1'*phi'"));
    CHECK(faa_di_bruno(ctx, 1, 2) == P("f1''*phi'^2 + f1'*phi''"));
    CHECK(faa_di_bruno(ctx, 2, 3) == P("f2'''*phi'^3 + 3*f2''*phi'*phi'' + f2'*phi'''"));
    CHECK_THROWS_AS(faa_di_bruno(ctx, 3, 2), PreconditionError);
    CHECK_THROWS_AS(faa_di_bruno(ctx, 1, 0), OrderCapExceeded);
}

TEST_CASE("faa di bruno agrees with repeated chain-rule differentiation") {
    JetContext ctx{2, 7};
    for (int i = 1; i <= 2; ++i) {
        Polynomial g = jet(i, 1) * phi(1);
        for (int kappa = 1; kappa <= 8; ++kappa) {
            CHECK(faa_di_bruno(ctx, i, kappa) == g);
            if (kappa < 8) g = chain_derivative(g);
        }
    }
}

TEST_CASE("total derivative is a derivation") {
    Polynomial a = P("f1'*f2'' - 2*f1''^2");
    Polynomial b = P("f2'^3 + f1'''");
    CHECK(total_derivative(P("f1'")) == P("f1''"));
    CHECK(total_derivative(delta(1, 2)) == delta(1, 3));
    CHECK(total_derivative(a * b) == total_derivative(a) * b + a * total_derivative(b));
    CHECK_THROWS_AS(total_derivative(P("phi'")), PreconditionError);
}

TEST_CASE("wronskian minors") {
    JetContext ctx{2, 5};
    CHECK(delta(ctx, {1, 2, 1, 2}) == P("f1'*f2'' - f1''*f2'"));
    CHECK(delta(ctx, {2, 4, 1, 2}) == P("f1''*f2'''' - f1''''*f2''"));
    CHECK_THROWS_AS(delta(ctx, {2, 2, 1, 2}), PreconditionError);
    CHECK_THROWS_AS(delta(ctx, {3, 1, 1, 2}), PreconditionError);
    CHECK_THROWS_AS(delta(ctx, {1, 2, 1, 3}), PreconditionError);
    CHECK(delta(1, 2, 2, 1) == -delta(1, 2, 1, 2));
}

TEST_CASE("three-dimensional wronskian") {
    JetContext ctx{3, 3};
    Polynomial w = wronskian3(ctx);
    CHECK(w.size() == 6);
    CHECK(weight(w) == 6);
    CHECK(check_reparametrization_invariance(ctx, w).invariant);
    CHECK(is_bi_invariant(UnipotentAction{3}, w));
    CHECK_THROWS_AS(wronskian3(JetContext{2, 3}), PreconditionError);
}

TEST_CASE("weight and bidegree") {
    CHECK(weight(delta(1, 2)) == 3);
    CHECK(bidegree(delta(1, 2)) == Bidegree{1, 1});
    CHECK_FALSE(weight_of(P("f1' + f1''")).has_value());
    CHECK_THROWS_AS(weight(P("f1' + f1''")), NotHomogeneous);
    CHECK_FALSE(bidegree_of(P("f1'*f2' + f1'^2")).has_value());
}

TEST_CASE("reparametrization invariance on both routes") {
    JetContext ctx{2, 5};
    Polynomial l3 = delta(1, 2);
    Polynomial l5 = delta(1, 3) * jet(1, 1) - 3 * delta(1, 2) * jet(1, 2);
    Polynomial m8 = 3 * delta(1, 4) * delta(1, 2) + 12 * delta(2, 3) * delta(1, 2) - 5 * delta(1, 3).pow(2);
    for (const Polynomial& p : {jet(1, 1), l3, l5, m8}) {
        auto a = check_reparametrization_invariance(ctx, p, {InvarianceRoute::substitution});
        auto b = check_reparametrization_invariance(ctx, p, {InvarianceRoute::infinitesimal});
        CHECK(a.invariant);
        CHECK(b.invariant);
        CHECK(a.weight == b.weight);
    }
    CHECK(check_reparametrization_invariance(ctx, m8).weight == 8);
    for (const Polynomial& p : {jet(1, 2), delta(1, 3), P("f1'*f2''' - 3*f1''*f2''")}) {
        auto a = check_reparametrization_invariance(ctx, p, {InvarianceRoute::substitution});
        auto b = check_reparametrization_invariance(ctx, p, {InvarianceRoute::infinitesimal});
        CHECK_FALSE(a.invariant);
        CHECK_FALSE(b.invariant);
        CHECK_FALSE(a.residual.is_zero());
    }
    CHECK_FALSE(check_reparametrization_invariance(ctx, P("f1' + f1'^2")).invariant);
}

TEST_CASE("unipotent derivations are derivations and satisfy the commutator relation") {
    UnipotentAction two{2};
    UnipotentAction three{3};
    Polynomial a = P("f1'*f2'' + f2'^2");
    Polynomial b = P("f2''' - f1''*f2'");
    auto U = [&](const Polynomial& p) { return unipotent_derivation(two, UnipotentGenerator::u, p); };
    CHECK(U(a * b) == U(a) * b + a * U(b));
    CHECK(U(jet(2, 3)) == jet(1, 3));
    CHECK(U(jet(1, 3)).is_zero());
    auto G = [&](UnipotentGenerator g, const Polynomial& p) { return unipotent_derivation(three, g, p); };
    for (int i = 1; i <= 3; ++i)
        for (int lambda = 1; lambda <= 4; ++lambda) {
            Polynomial x = jet(i, lambda);
            Polynomial comm = G(UnipotentGenerator::u_a, G(UnipotentGenerator::u_b, x)) -
                              G(UnipotentGenerator::u_b, G(UnipotentGenerator::u_a, x));
            CHECK(comm == G(UnipotentGenerator::u_c, x));
        }
    CHECK(is_bi_invariant(two, delta(1, 2)));
    CHECK_FALSE(is_bi_invariant(two, jet(2, 1)));
    CHECK_THROWS_AS(unipotent_derivation(two, UnipotentGenerator::u_a, a), PreconditionError);
}

TEST_CASE("plucker identity among wronskian minors") {
    // D12 D34 - D13 D24 + D14 D23 vanishes identically in dimension two.
    Polynomial r = delta(1, 2) * delta(3, 4) - delta(1, 3) * delta(2, 4) + delta(1, 4) * delta(2, 3);
    CHECK(r.is_zero());
}

TEST_CASE("normalization relation with a repeated row") {
    for (int i = 1; i <= 2; ++i) {
        Polynomial base = delta(2, 4) * jet(i, 1) - delta(1, 4) * jet(i, 2);
        CHECK((base + delta(1, 2) * jet(i, 4)).is_zero());
        CHECK_FALSE((base + delta(1, 2) * jet(i, 3)).is_zero());
    }
}

TEST_CASE("restriction to the zero locus of the first derivative") {
    CHECK(restrict_at_zero(P("f1'*f2'' + f1''*f2'")) == P("f1''*f2'"));
    CHECK(restrict_at_zero(P("f1'")).is_zero());
}
