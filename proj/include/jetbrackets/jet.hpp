#pragma once

#include "jetbrackets/polynomial.hpp"

#include <optional>
#include <string>
#include <utility>

namespace jb {

/// Dimension nu and jet order kappa of a computation.
struct JetContext {
    int nu = 2;
    int kappa = 5;

    /// Highest derivative order produced while working in this context (brackets raise order by one).
    int order_margin() const { return kappa + 1; }
};

/// Validates the supported contexts: nu = 2 with kappa in 1..5, or nu = 3 with kappa = 3.
void require_supported(const JetContext& ctx);

Polynomial jet(int component, int order);
Polynomial phi(int order);

/// g_i^(kappa) for g = f o phi, as a polynomial in phi^(mu) and f_i^(mu).
Polynomial faa_di_bruno(const JetContext& ctx, int component, int kappa);

/// Applies the derivation v -> images[v], extended by Leibniz and linearity.
Polynomial apply_derivation(const Polynomial& p, const std::map<Var, Polynomial>& images);

/// D p = sum over jet variables of (dp / df^(lambda)) f^(lambda+1).
Polynomial total_derivative(const Polynomial& p);

struct WronskianIndex {
    int alpha = 1;
    int beta = 2;
    int i = 1;
    int j = 2;
};

/// f_i^(alpha) f_j^(beta) - f_i^(beta) f_j^(alpha); requires alpha < beta and i < j.
Polynomial delta(const JetContext& ctx, const WronskianIndex& w);
Polynomial delta(int alpha, int beta, int i = 1, int j = 2);

/// The 3x3 wronskian determinant of the columns (f', f'', f''') in dimension three.
Polynomial wronskian3(const JetContext& ctx);

class NotHomogeneous : public Error {
public:
    using Error::Error;
};

/// Common weighted degree with deg f^(lambda) = lambda, or nullopt for a non-graded polynomial.
std::optional<int> weight_of(const Polynomial& p);
/// As weight_of, throwing NotHomogeneous.
int weight(const Polynomial& p);

using Bidegree = std::pair<int, int>;

/// Counts of component-1 and component-2 variable occurrences per monomial, when uniform.
std::optional<Bidegree> bidegree_of(const Polynomial& p);
Bidegree bidegree(const Polynomial& p);

/// Highest jet order occurring in p (0 for constants).
int max_jet_order(const Polynomial& p);

enum class InvarianceRoute {
    automatic,
    substitution,   // literal joint-ring expansion under Faa di Bruno
    infinitesimal,  // weight homogeneity plus annihilation by the reparametrization derivations
};

std::string to_string(InvarianceRoute route);

struct InvarianceOptions {
    InvarianceRoute route = InvarianceRoute::automatic;
    /// Estimated expansion size above which the automatic route uses the infinitesimal test.
    std::size_t substitution_budget = 4'000'000;
};

struct InvarianceResult {
    bool invariant = false;
    int weight = 0;
    Polynomial residual;
    InvarianceRoute route = InvarianceRoute::substitution;
};

/// Estimated number of monomial products produced by the substitution route.
std::size_t substitution_cost(const Polynomial& p);

/// The derivation generated by the flow t + e t^k / k!: f^(lambda) -> C(lambda, k) f^(lambda - k + 1).
Polynomial reparametrization_derivation(const Polynomial& p, int k);

InvarianceResult check_reparametrization_invariance(const JetContext& ctx, const Polynomial& p,
                                                    const InvarianceOptions& options = {});

enum class UnipotentGenerator {
    u,    // nu = 2: f2 -> f1
    u_a,  // nu = 3: f2 -> f1
    u_b,  // nu = 3: f3 -> f2
    u_c,  // nu = 3: f3 -> f1
};

struct UnipotentAction {
    int nu = 2;
};

/// Applies the chosen unipotent derivation, sum over lambda of f_src^(lambda) d/df_dst^(lambda).
Polynomial unipotent_derivation(const UnipotentAction& action, UnipotentGenerator generator, const Polynomial& p);

/// True when every generator of the action annihilates p.
bool is_bi_invariant(const UnipotentAction& action, const Polynomial& p);

/// Substitutes f1' := 0.
Polynomial restrict_at_zero(const Polynomial& p);

}  // namespace jb
