#include "jetbrackets/jet.hpp"

#include <algorithm>
#include <functional>

namespace jb {

void require_supported(const JetContext& ctx) {
    bool ok = (ctx.nu == 2 && ctx.kappa >= 1 && ctx.kappa <= 5) || (ctx.nu == 3 && ctx.kappa == 3);
    if (!ok)
        throw PreconditionError("unsupported jet context nu=" + std::to_string(ctx.nu) +
                                " kappa=" + std::to_string(ctx.kappa));
}

Polynomial jet(int component, int order) { return Polynomial::variable(jet_var(component, order)); }

Polynomial phi(int order) { return Polynomial::variable(phi_var(order)); }

namespace {

/// Visits every partition of n as multiplicities mult[lambda] of parts lambda = 1..n.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> mult(static_cast<std::size_t>(n) + 1, 0);
    std::function<void(int, int)> rec = [&](int remaining, int largest) {
        if (remaining == 0) {
            visit(mult);
            return;
        }
        for (int part = std::min(remaining, largest); part >= 1; --part) {
            ++mult[static_cast<std::size_t>(part)];
            rec(remaining - part, part);
            --mult[static_cast<std::size_t>(part)];
        }
    };
    rec(n, n);
}

int ctx_cap(const JetContext& ctx) { return std::max(ctx.order_margin(), 8); }

}  // namespace

Polynomial faa_di_bruno(const JetContext& ctx, int component, int kappa) {
    if (kappa < 1 || kappa > ctx_cap(ctx)) throw OrderCapExceeded("Faa di Bruno order out of range");
    if (component < 1 || component > ctx.nu) throw PreconditionError("component out of range");
    std::vector<Term> terms;
    for_each_partition(kappa, [&](const std::vector<int>& mult) {
        Rational coeff = factorial(static_cast<unsigned>(kappa));
        std::vector<std::pair<Var, unsigned>> pairs;
        int parts = 0;
        for (int lambda = 1; lambda <= kappa; ++lambda) {
            int mu = mult[static_cast<std::size_t>(lambda)];
            if (mu == 0) continue;
            Rational denom = factorial(static_cast<unsigned>(mu));
            for (int k = 0; k < mu; ++k) denom *= factorial(static_cast<unsigned>(lambda));
            coeff /= denom;
            pairs.emplace_back(phi_var(lambda), static_cast<unsigned>(mu));
            parts += mu;
        }
        pairs.emplace_back(jet_var(component, parts), 1u);
        terms.push_back(Term{Monomial::from_pairs(std::move(pairs)), coeff});
    });
    return Polynomial::from_terms(std::move(terms));
}

Polynomial apply_derivation(const Polynomial& p, const std::map<Var, Polynomial>& images) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        for (auto w : t.mono.words()) {
            Var v = Monomial::var_of(w);
            auto it = images.find(v);
            if (it == images.end() || it->second.is_zero()) continue;
            unsigned e = Monomial::exp_of(w);
            Monomial rest = t.mono.without(v) * Monomial::variable(v, e - 1);
            Rational c = t.coeff * e;
            for (const auto& s : it->second.terms()) out.push_back(Term{rest * s.mono, c * s.coeff});
        }
    }
    return Polynomial::from_terms(std::move(out));
}

namespace {

void require_jet_only(const Polynomial& p, const char* what) {
    for (Var v : p.variables())
        if (var_info(v).kind != VarKind::jet)
            throw PreconditionError(std::string(what) + " expects jet variables only, found " + var_name(v));
}

}  // namespace

Polynomial total_derivative(const Polynomial& p) {
    require_jet_only(p, "total_derivative");
    std::map<Var, Polynomial> images;
    for (Var v : p.variables()) {
        const VariableId& id = var_info(v);
        images.emplace(v, jet(id.component, id.order + 1));
    }
    return apply_derivation(p, images);
}

Polynomial delta(const JetContext& ctx, const WronskianIndex& w) {
    if (w.alpha >= w.beta) throw PreconditionError("wronskian index requires alpha < beta");
    if (w.i >= w.j) throw PreconditionError("wronskian index requires i < j");
    if (w.alpha < 1 || w.j > ctx.nu || w.beta > ctx_cap(ctx))
        throw PreconditionError("wronskian index outside the context caps");
    return delta(w.alpha, w.beta, w.i, w.j);
}

Polynomial delta(int alpha, int beta, int i, int j) {
    if (alpha >= beta) throw PreconditionError("wronskian index requires alpha < beta");
    if (i == j) throw PreconditionError("wronskian index requires distinct components");
    return jet(i, alpha) * jet(j, beta) - jet(i, beta) * jet(j, alpha);
}

Polynomial wronskian3(const JetContext& ctx) {
    if (ctx.nu != 3) throw PreconditionError("wronskian3 requires dimension three");
    // Rows are components, columns are derivative orders 1, 2, 3.
    Polynomial det;
    const int perms[6][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {1, 3, 2}, {3, 2, 1}, {2, 1, 3}};
    for (int k = 0; k < 6; ++k) {
        Polynomial prod = jet(perms[k][0], 1) * jet(perms[k][1], 2) * jet(perms[k][2], 3);
        if (k < 3) det += prod;
        else det -= prod;
    }
    return det;
}

std::optional<int> weight_of(const Polynomial& p) {
    if (p.is_zero()) return std::nullopt;
    std::optional<int> w;
    for (const auto& t : p.terms()) {
        int d = 0;
        for (auto word : t.mono.words()) {
            const VariableId& id = var_info(Monomial::var_of(word));
            if (id.kind != VarKind::jet) return std::nullopt;
            d += id.order * static_cast<int>(Monomial::exp_of(word));
        }
        if (w && *w != d) return std::nullopt;
        w = d;
    }
    return w;
}

int weight(const Polynomial& p) {
    auto w = weight_of(p);
    if (!w) throw NotHomogeneous("polynomial is not weighted-homogeneous in jet variables");
    return *w;
}

std::optional<Bidegree> bidegree_of(const Polynomial& p) {
    if (p.is_zero()) return std::nullopt;
    std::optional<Bidegree> b;
    for (const auto& t : p.terms()) {
        Bidegree d{0, 0};
        for (auto word : t.mono.words()) {
            const VariableId& id = var_info(Monomial::var_of(word));
            if (id.kind != VarKind::jet || id.component > 2) return std::nullopt;
            (id.component == 1 ? d.first : d.second) += static_cast<int>(Monomial::exp_of(word));
        }
        if (b && *b != d) return std::nullopt;
        b = d;
    }
    return b;
}

Bidegree bidegree(const Polynomial& p) {
    auto b = bidegree_of(p);
    if (!b) throw NotHomogeneous("polynomial is not bihomogeneous in the two components");
    return *b;
}

int max_jet_order(const Polynomial& p) {
    int m = 0;
    for (Var v : p.variables()) {
        const VariableId& id = var_info(v);
        if (id.kind == VarKind::jet) m = std::max(m, id.order);
    }
    return m;
}

std::string to_string(InvarianceRoute route) {
    switch (route) {
        case InvarianceRoute::automatic: return "automatic";
        case InvarianceRoute::substitution: return "substitution";
        case InvarianceRoute::infinitesimal: return "infinitesimal";
    }
    return "?";
}

namespace {

std::size_t partition_count(int n) {
    std::size_t count = 0;
    for_each_partition(n, [&](const std::vector<int>&) { ++count; });
    return count;
}

}  // namespace

std::size_t substitution_cost(const Polynomial& p) {
    std::vector<std::size_t> sizes(16, 0);
    std::size_t total = 0;
    for (const auto& t : p.terms()) {
        std::size_t product = 1;
        for (auto w : t.mono.words()) {
            const VariableId& id = var_info(Monomial::var_of(w));
            if (id.kind != VarKind::jet) continue;
            auto order = static_cast<std::size_t>(id.order);
            if (order >= sizes.size()) sizes.resize(order + 1, 0);
            if (sizes[order] == 0) sizes[order] = partition_count(id.order);
            for (unsigned k = 0; k < Monomial::exp_of(w); ++k) {
                product *= sizes[order];
                if (product > (std::size_t{1} << 40)) return std::size_t{1} << 40;
            }
        }
        total += product;
        if (total > (std::size_t{1} << 40)) return std::size_t{1} << 40;
    }
    return total;
}

Polynomial reparametrization_derivation(const Polynomial& p, int k) {
    std::map<Var, Polynomial> images;
    for (Var v : p.variables()) {
        const VariableId& id = var_info(v);
        if (id.kind != VarKind::jet || id.order < k) continue;
        Rational c = binomial(static_cast<unsigned>(id.order), static_cast<unsigned>(k));
        images.emplace(v, jet(id.component, id.order - k + 1) * c);
    }
    return apply_derivation(p, images);
}

InvarianceResult check_reparametrization_invariance(const JetContext& ctx, const Polynomial& p,
                                                    const InvarianceOptions& options) {
    require_jet_only(p, "check_reparametrization_invariance");
    InvarianceResult result;
    auto w = weight_of(p);
    if (!w) {
        result.invariant = false;
        result.route = InvarianceRoute::infinitesimal;
        // A non-graded polynomial fails scaling invariance; report its top-weight component.
        result.residual = p;
        return result;
    }
    result.weight = *w;
    InvarianceRoute route = options.route;
    if (route == InvarianceRoute::automatic)
        route = substitution_cost(p) <= options.substitution_budget ? InvarianceRoute::substitution
                                                                     : InvarianceRoute::infinitesimal;
    result.route = route;
    if (route == InvarianceRoute::substitution) {
        Bindings bindings;
        for (Var v : p.variables()) {
            const VariableId& id = var_info(v);
            bindings.emplace(v, faa_di_bruno(ctx, id.component, id.order));
        }
        Polynomial lhs = substitute(p, bindings);
        Polynomial rhs = phi(1).pow(static_cast<unsigned>(*w)) * p;
        result.residual = lhs - rhs;
    } else {
        int top = max_jet_order(p);
        for (int k = 2; k <= top; ++k) {
            Polynomial r = reparametrization_derivation(p, k);
            if (!r.is_zero()) {
                result.residual = r;
                break;
            }
        }
    }
    result.invariant = result.residual.is_zero();
    return result;
}

Polynomial unipotent_derivation(const UnipotentAction& action, UnipotentGenerator generator, const Polynomial& p) {
    int src = 1;
    int dst = 2;
    switch (generator) {
        case UnipotentGenerator::u:
            if (action.nu != 2) throw PreconditionError("generator U belongs to dimension two");
            break;
        case UnipotentGenerator::u_a:
        case UnipotentGenerator::u_b:
        case UnipotentGenerator::u_c:
            if (action.nu != 3) throw PreconditionError("generators U_a, U_b, U_c belong to dimension three");
            if (generator == UnipotentGenerator::u_b) src = 2, dst = 3;
            if (generator == UnipotentGenerator::u_c) src = 1, dst = 3;
            break;
    }
    std::map<Var, Polynomial> images;
    for (Var v : p.variables()) {
        const VariableId& id = var_info(v);
        if (id.kind == VarKind::jet && id.component == dst) images.emplace(v, jet(src, id.order));
    }
    return apply_derivation(p, images);
}

bool is_bi_invariant(const UnipotentAction& action, const Polynomial& p) {
    if (action.nu == 2) return unipotent_derivation(action, UnipotentGenerator::u, p).is_zero();
    for (auto g : {UnipotentGenerator::u_a, UnipotentGenerator::u_b, UnipotentGenerator::u_c})
        if (!unipotent_derivation(action, g, p).is_zero()) return false;
    return true;
}

Polynomial restrict_at_zero(const Polynomial& p) {
    Var v = jet_var(1, 1);
    std::vector<Term> out;
    for (const auto& t : p.terms())
        if (t.mono.degree(v) == 0) out.push_back(t);
    return Polynomial::from_terms(std::move(out));
}

}  // namespace jb
