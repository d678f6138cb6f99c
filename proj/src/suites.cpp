#include "jetbrackets/suites.hpp"

#include <algorithm>

namespace jb {

namespace {

IdentityOutcome outcome(IdentityFamily family, std::string id, std::string locator, bool pass, std::string detail,
                        const Polynomial& residual = Polynomial()) {
    IdentityOutcome o;
    o.identity.family = family;
    o.identity.id = std::move(id);
    o.identity.locator = std::move(locator);
    o.pass = pass;
    o.detail = std::move(detail);
    o.residual = summarize(residual);
    return o;
}

bool is_ghost_check(const std::string& name) { return !name.empty() && (name[0] == 'X' || name[0] == 'Y'); }

void add_display_checks(SyzygyReport& report, IdentityFamily family, const std::vector<DisplayCheck>& checks) {
    for (const auto& c : checks) {
        report.outcomes.push_back(outcome(family, "display " + c.name, c.locator, c.pass,
                                          c.pass ? "displayed form expands to the catalog polynomial" : c.note,
                                          c.residual));
        if (c.printed_pass)
            report.notes.push_back(c.name + ": printed text " + (*c.printed_pass ? "holds" : "fails") +
                                   (c.note.empty() ? "" : "; " + c.note));
    }
}

}  // namespace

Polynomial chain_rule_derivative(const Polynomial& p) {
    std::map<Var, Polynomial> images;
    for (Var v : p.variables()) {
        const VariableId& id = var_info(v);
        if (id.kind == VarKind::jet) images.emplace(v, jet(id.component, id.order + 1) * phi(1));
        if (id.kind == VarKind::reparam) images.emplace(v, phi(id.order + 1));
    }
    return apply_derivation(p, images);
}

SyzygyReport construction_suite(const Catalog& catalog, const FixtureStore& fixtures) {
    SyzygyReport report;
    report.suite = "construction";
    for (const auto& c : catalog.checks) {
        if (is_ghost_check(c.name)) continue;
        report.outcomes.push_back(outcome(IdentityFamily::construction, c.name, c.locator, c.agree,
                                          c.agree ? "constructions agree" : c.note, c.residual));
        if (!c.note.empty() && c.agree) report.notes.push_back(c.name + ": " + c.note);
    }
    if (catalog.ctx().nu == 2 && catalog.ctx().kappa == 5)
        add_display_checks(report, IdentityFamily::construction,
                           verify_display_forms(catalog, fixtures.load("display_nu2.fix")));
    return report;
}

SyzygyReport invariance_suite(const Catalog& catalog) {
    SyzygyReport report;
    report.suite = "invariance";
    for (const auto& e : catalog.entries()) {
        InvarianceResult r = check_reparametrization_invariance(catalog.ctx(), e.poly);
        bool pass = r.invariant && r.weight == e.meta.weight;
        report.outcomes.push_back(outcome(IdentityFamily::invariance, e.name, e.meta.locator, pass,
                                          "weight " + std::to_string(r.weight) + " (recorded " +
                                              std::to_string(e.meta.weight) + "), route " + to_string(r.route),
                                          r.residual));
    }
    return report;
}

SyzygyReport bi_invariance_suite(const Catalog& catalog, const FixtureStore& fixtures) {
    SyzygyReport report;
    report.suite = "bi-invariance";
    UnipotentAction action{catalog.ctx().nu};
    for (const auto& e : catalog.entries()) {
        bool bi = is_bi_invariant(action, e.poly);
        report.outcomes.push_back(outcome(IdentityFamily::bi_invariance, e.name, e.meta.locator,
                                          bi == e.meta.bi_invariant,
                                          std::string(bi ? "annihilated" : "not annihilated") +
                                              " by the unipotent derivations, recorded " +
                                              (e.meta.bi_invariant ? "bi-invariant" : "not bi-invariant")));
    }
    if (catalog.ctx().nu == 2 && catalog.ctx().kappa == 5) {
        Correspondence corr = load_correspondence(fixtures);
        for (const auto& [name, g] : corr.generators) {
            bool known = catalog.has(name);
            bool pass = known && catalog.at(name).meta.weight == g.weight && catalog.at(name).meta.bidegree &&
                        *catalog.at(name).meta.bidegree == Bidegree{g.l1, g.l2};
            report.outcomes.push_back(outcome(IdentityFamily::bi_invariance, "Schur " + name, corr.locator, pass,
                                              "weight " + std::to_string(g.weight) + ", bidegree (" +
                                                  std::to_string(g.l1) + "," + std::to_string(g.l2) + ")"));
        }
    }
    return report;
}

SyzygyReport ghost_suite(const Catalog& catalog, const FixtureStore& fixtures) {
    SyzygyReport report;
    report.suite = "ghosts";
    for (const auto& c : catalog.checks) {
        if (!is_ghost_check(c.name)) continue;
        report.outcomes.push_back(outcome(IdentityFamily::ghost, c.name, c.locator, c.agree,
                                          c.agree ? "exact equality" : c.note, c.residual));
    }
    auto records = fixtures.load("ghosts.fix");
    add_display_checks(report, IdentityFamily::ghost, verify_display_forms(catalog, records));
    for (const auto& s : spot_checks(records)) {
        report.outcomes.push_back(outcome(IdentityFamily::ghost, "coefficient " + s.name + " " + s.monomial,
                                          "ghosts.fix " + s.name, s.pass,
                                          "displayed " + to_string(s.displayed) + ", fixture " + to_string(s.expected)));
    }
    return report;
}

SyzygyReport oracle_suite(const SyzygyOptions& options, int max_kappa) {
    SyzygyReport report;
    report.suite = "oracles";
    JetContext ctx{2, std::min(max_kappa, 8) - 1};
    for (int i = 1; i <= 2; ++i) {
        Polynomial g = jet(i, 1) * phi(1);
        for (int kappa = 1; kappa <= max_kappa; ++kappa) {
            Polynomial fdb = faa_di_bruno(ctx, i, kappa);
            report.outcomes.push_back(outcome(IdentityFamily::oracle,
                                              "faa di bruno f" + std::to_string(i) + " order " + std::to_string(kappa),
                                              "Faa di Bruno theorem", fdb == g,
                                              std::to_string(fdb.size()) + " terms", fdb - g));
            if (kappa < max_kappa) g = chain_rule_derivative(g);
        }
    }
    auto gens = bracket_bi_invariants();
    auto x18 = ghost_nonmembership("X18", gens, options);
    report.outcomes.push_back(outcome(IdentityFamily::nonmembership, "X18 not a bracket monomial",
                                      "assertions on X18", std::holds_alternative<Infeasible>(x18),
                                      to_string(x18)));
    gens.push_back("X18");
    auto x19 = ghost_nonmembership("X19", gens, options);
    report.outcomes.push_back(outcome(IdentityFamily::nonmembership, "X19 not a monomial in brackets and X18",
                                      "assertions on X19", std::holds_alternative<Infeasible>(x19),
                                      to_string(x19)));
    return report;
}

SuiteRunner::SuiteRunner(RunConfig config) : config_(std::move(config)) {}

SyzygyOptions SuiteRunner::syzygy_options() const {
    SyzygyOptions o;
    o.fixtures = config_.fixtures;
    o.seed = config_.seed;
    o.rank_trials = config_.rank_trials;
    return o;
}

const Catalog& SuiteRunner::catalog() {
    if (config_.ctx.nu == 2 && config_.ctx.kappa == 5) return order5_catalog();
    if (config_.ctx.nu == 3 && config_.ctx.kappa == 3) return dim3_catalog();
    if (!catalog_) {
        CatalogOptions o;
        o.fixtures = config_.fixtures;
        catalog_ = std::make_unique<Catalog>(build_catalog(config_.ctx, o));
    }
    return *catalog_;
}

const Catalog& SuiteRunner::order5_catalog() {
    if (!order5_) {
        CatalogOptions o;
        o.fixtures = config_.fixtures;
        order5_ = std::make_unique<Catalog>(build_catalog(JetContext{2, 5}, o));
    }
    return *order5_;
}

const Catalog& SuiteRunner::dim3_catalog() {
    if (!dim3_) {
        CatalogOptions o;
        o.fixtures = config_.fixtures;
        dim3_ = std::make_unique<Catalog>(build_catalog(JetContext{3, 3}, o));
    }
    return *dim3_;
}

std::vector<std::string> SuiteRunner::suite_names() {
    return {"construction", "invariance",     "bi-invariance", "ghosts", "oracles",   "jacobi",
            "plucker",      "curated",        "reconstruction", "restricted", "ranks", "nonredundancy",
            "appendix3",    "staircase",      "groebner",      "euler"};
}

SyzygyReport SuiteRunner::run(const std::string& name) {
    SyzygyOptions so = syzygy_options();
    if (name == "all") {
        SyzygyReport all;
        all.suite = "all";
        for (const auto& n : suite_names()) all.append(run(n));
        return all;
    }
    if (name.rfind("curated:", 0) == 0) return verify_curated(order5_catalog(), name.substr(8), so);
    if (name == "curated") {
        SyzygyReport r;
        r.suite = "curated";
        for (const auto& id : curated_list_ids(so)) r.append(verify_curated(order5_catalog(), id, so));
        return r;
    }
    if (name == "construction") return construction_suite(catalog(), config_.fixtures);
    if (name == "invariance") return invariance_suite(catalog());
    if (name == "bi-invariance") return bi_invariance_suite(catalog(), config_.fixtures);
    if (name == "ghosts") return ghost_suite(order5_catalog(), config_.fixtures);
    if (name == "oracles") return oracle_suite(so);
    if (name == "jacobi") {
        SyzygyReport r = jacobi_examples(order5_catalog());
        r.append(order4_jacobi_suite(order5_catalog()));
        r.suite = "jacobi";
        return r;
    }
    if (name == "plucker") return order4_plucker_suite(order5_catalog());
    if (name == "reconstruction") return reconstruction_suite(order5_catalog(), so);
    if (name == "restricted") return restricted_identities(order5_catalog(), so);
    if (name == "ranks") return independence_rank_suite(order5_catalog(), so);
    if (name == "nonredundancy") return staircase_nonredundancy_check(so);
    if (name == "appendix3") return appendix3_suite(dim3_catalog(), so);
    if (name == "staircase") return staircase_suite(config_.fixtures);
    if (name == "groebner") {
        GroebnerOptions go;
        go.pair_budget = config_.pair_budget;
        return groebner_suite(order5_catalog(), config_.fixtures, go);
    }
    if (name == "euler") {
        SyzygyReport r;
        r.suite = "euler";
        EulerOptions eo;
        eo.fixtures = config_.fixtures;
        eo.sum_cap = config_.sum_cap_m;
        for (int order : {2, 3, 4, 5}) r.append(euler_suite(order, eo));
        return r;
    }
    throw ParseError("unknown suite '" + name + "'");
}

}  // namespace jb
