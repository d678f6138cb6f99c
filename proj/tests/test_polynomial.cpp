#include "jetbrackets/expression.hpp"
#include "jetbrackets/jet.hpp"
#include "jetbrackets/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace jb;

namespace {

Polynomial P(const std::string& s) { return parse_polynomial(s); }

Polynomial random_poly(std::mt19937& rng, const std::vector<Var>& vars, int terms, int max_exp) {
    std::uniform_int_distribution<int> coef(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> ex(0, max_exp);
    std::vector<Term> ts;
    for (int k = 0; k < terms; ++k) {
        std::vector<std::pair<Var, unsigned>> pairs;
        for (Var v : vars) pairs.emplace_back(v, static_cast<unsigned>(ex(rng)));
        ts.push_back(Term{Monomial::from_pairs(pairs), Rational(coef(rng), den(rng))});
    }
    return Polynomial::from_terms(ts);
}

std::vector<Var> some_vars() { return {jet_var(1, 1), jet_var(2, 1), jet_var(1, 2), jet_var(2, 3), abstract_var("x")}; }

}  // namespace

TEST_CASE("arith examples") {
    Polynomial x = P("x");
    Polynomial y = P("y");
    CHECK(arith(x, -x, ArithOp::add).is_zero());
    CHECK(arith(x + y, x - y, ArithOp::mul) == P("x^2 - y^2"));
    Polynomial d = P("f1'*f2'' - f1''*f2'");
    Polynomial sq = d * d;
    REQUIRE(sq.size() == 3);
    std::vector<std::string> coeffs;
    for (const auto& t : sq.terms()) coeffs.push_back(t.coeff.get_str());
    std::sort(coeffs.begin(), coeffs.end());
    CHECK(coeffs == std::vector<std::string>{"-2", "1", "1"});
}

TEST_CASE("partial derivative examples") {
    CHECK(partial_derivative(P("f1'*f2''"), jet_var(1, 1)) == P("f2''"));
    CHECK(partial_derivative(P("17/3"), jet_var(1, 1)).is_zero());
    CHECK(partial_derivative(delta(1, 2), jet_var(2, 2)) == P("f1'"));
}

TEST_CASE("substitute examples") {
    Polynomial l3 = delta(1, 2);
    CHECK(restrict_at_zero(l3) == P("-f1''*f2'"));
    CHECK(substitute(l3, {}) == l3);
    Polynomial l5 = delta(1, 3) * jet(1, 1) - 3 * delta(1, 2) * jet(1, 2);
    Bindings zero{{jet_var(1, 1), Polynomial()}};
    CHECK(substitute(l5, zero) == P("3*(f1''*f2')*f1''"));
}

TEST_CASE("divide_exact examples and refusal") {
    Polynomial l3 = delta(1, 2);
    Polynomial l5 = delta(1, 3) * jet(1, 1) - 3 * delta(1, 2) * jet(1, 2);
    CHECK_FALSE(divide_exact(l3 * l5, jet(1, 1)).has_value());
    auto q = divide_exact(l3 * l5, l3);
    REQUIRE(q.has_value());
    CHECK(*q == l5);
    CHECK_THROWS_AS(divide_exact(l3, Polynomial()), PreconditionError);
}

TEST_CASE("integrate_poly examples") {
    Var e = integration_var("e");
    Polynomial m = Polynomial::variable(integration_var("m"));
    CHECK(integrate_poly(Polynomial(1), e, Polynomial(), m) == m);
    Polynomial integrand = (m - 8 * Polynomial::variable(e)).pow(3);
    CHECK(integrate_poly(integrand, e, Polynomial(), m * Rational(1, 8)) == m.pow(4) * Rational(1, 32));
    CHECK_THROWS_AS(integrate_poly(integrand, e, Polynomial(), Polynomial::variable(e)), PreconditionError);
}

TEST_CASE("order-4 triple integral of the A2 integrand") {
    // (1/6) (m - 3b - 4c - 8e)^3 over 3b <= m - 5c - 8e, 5c <= m - 8e, 8e <= m.
    Var b = integration_var("b"), c = integration_var("c"), e = integration_var("e");
    auto V = [](Var v) { return Polynomial::variable(v); };
    Polynomial m = V(integration_var("m"));
    Polynomial integrand = (m - 3 * V(b) - 4 * V(c) - 8 * V(e)).pow(3) * Rational(1, 6);
    Polynomial r = integrate_poly(integrand, b, Polynomial(), (m - 5 * V(c) - 8 * V(e)) * Rational(1, 3));
    r = integrate_poly(r, c, Polynomial(), (m - 8 * V(e)) * Rational(1, 5));
    r = integrate_poly(r, e, Polynomial(), m * Rational(1, 8));
    CHECK(r == m.pow(6) * Rational(13, 900000));
}

TEST_CASE("jacobian rank examples") {
    Point pt{{jet_var(1, 1), Rational(3)}, {jet_var(2, 1), Rational(-2, 7)}};
    CHECK(jacobian_rank_at({jet(1, 1), jet(2, 1)}, {jet_var(1, 1), jet_var(2, 1)}, pt) == 2);
    CHECK(jacobian_rank_at({jet(1, 1), 2 * jet(1, 1)}, {jet_var(1, 1), jet_var(2, 1)}, pt) == 1);
}

TEST_CASE("textual serialization round-trips") {
    std::mt19937 rng(7);
    auto vars = some_vars();
    for (int trial = 0; trial < 20; ++trial) {
        Polynomial p = random_poly(rng, vars, 6, 3);
        CHECK(parse_polynomial(to_string(p)) == p);
    }
    CHECK(to_string(Polynomial()) == "0");
    CHECK_THROWS_AS(parse_polynomial("3 * * x"), ParseError);
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(11);
    auto vars = some_vars();
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial a = random_poly(rng, vars, 5, 2);
        Polynomial b = random_poly(rng, vars, 5, 2);
        Polynomial c = random_poly(rng, vars, 4, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("exact division recovers the cofactor") {
    std::mt19937 rng(13);
    auto vars = some_vars();
    for (int trial = 0; trial < 15; ++trial) {
        Polynomial p = random_poly(rng, vars, 5, 2);
        Polynomial q = random_poly(rng, vars, 3, 2);
        if (q.is_zero()) continue;
        auto r = divide_exact(p * q, q);
        REQUIRE(r.has_value());
        CHECK(*r == p);
    }
}

TEST_CASE("substitution is a ring homomorphism") {
    std::mt19937 rng(17);
    auto vars = some_vars();
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial a = random_poly(rng, vars, 4, 2);
        Polynomial b = random_poly(rng, vars, 4, 2);
        Bindings bind{{vars[0], random_poly(rng, vars, 3, 1)}, {vars[4], random_poly(rng, vars, 2, 1)}};
        CHECK(substitute(a * b, bind) == substitute(a, bind) * substitute(b, bind));
        CHECK(substitute(a + b, bind) == substitute(a, bind) + substitute(b, bind));
    }
}

TEST_CASE("integration is linear and additive over split intervals") {
    std::mt19937 rng(19);
    Var t = integration_var("t");
    Var s = integration_var("s");
    std::vector<Var> vars{t, s};
    for (int trial = 0; trial < 10; ++trial) {
        Polynomial p = random_poly(rng, vars, 4, 3);
        Polynomial q = random_poly(rng, vars, 4, 3);
        Polynomial lo = Polynomial(Rational(-1, 2));
        Polynomial hi = Polynomial::variable(s) * 2;
        Polynomial mid = Polynomial::variable(s).pow(2) + 1;
        CHECK(integrate_poly(p + 3 * q, t, lo, hi) == integrate_poly(p, t, lo, hi) + 3 * integrate_poly(q, t, lo, hi));
        CHECK(integrate_poly(p, t, lo, hi) == integrate_poly(p, t, lo, mid) + integrate_poly(p, t, mid, hi));
    }
}

TEST_CASE("jacobian rank ignores permutation and rescaling") {
    std::mt19937 rng(23);
    auto vars = some_vars();
    std::vector<Polynomial> ps;
    for (int k = 0; k < 4; ++k) ps.push_back(random_poly(rng, vars, 3, 2));
    ps.push_back(ps[0] * ps[1]);
    Point pt;
    for (Var v : vars) pt[v] = Rational(static_cast<long>(rng() % 17) - 8, static_cast<long>(rng() % 5) + 1);
    int r = jacobian_rank_at(ps, vars, pt);
    std::vector<Polynomial> permuted{ps[4], ps[2], ps[0], ps[3], ps[1] * Rational(-5, 3)};
    CHECK(jacobian_rank_at(permuted, vars, pt) == r);
}
