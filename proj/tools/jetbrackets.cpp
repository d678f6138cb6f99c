#include "jetbrackets/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using json = nlohmann::ordered_json;
using namespace jb;

std::string row_text(const json& row) {
    if (row.is_string()) return row.get<std::string>();
    if (!row.is_object()) return row.dump();
    std::string out;
    for (const auto& [key, value] : row.items())
        out += (out.empty() ? "" : "  ") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    return out;
}

struct Report {
    std::string command;
    json config;
    json checks = json::array();
    json notes = json::array();
    json results = json::object();
    std::size_t failed = 0;

    void add(const IdentityOutcome& o) {
        checks.push_back({{"id", o.identity.id},
                          {"family", to_string(o.identity.family)},
                          {"paper_locator", o.identity.locator},
                          {"status", o.pass ? "pass" : "fail"},
                          {"detail", o.detail},
                          {"residual", to_string(o.residual)}});
        if (!o.pass) ++failed;
    }
    void add(const SyzygyReport& r) {
        for (const auto& o : r.outcomes) add(o);
        for (const auto& n : r.notes) notes.push_back(n);
    }
    void add(const std::string& id, const std::string& locator, bool pass, const std::string& detail) {
        IdentityOutcome o;
        o.identity.id = id;
        o.identity.locator = locator;
        o.pass = pass;
        o.detail = detail;
        add(o);
    }

    json body() const {
        json j;
        j["command"] = command;
        j["config"] = config;
        j["checks"] = checks;
        j["notes"] = notes;
        if (!results.empty()) j["results"] = results;
        j["totals"] = {{"checks", checks.size()}, {"passed", checks.size() - failed}, {"failed", failed}};
        return j;
    }

    std::string text() const {
        std::ostringstream out;
        out << command << "\n";
        for (const auto& c : checks)
            out << "  [" << c["status"].get<std::string>() << "] " << c["id"].get<std::string>() << ": "
                << c["detail"].get<std::string>() << "\n";
        for (const auto& n : notes) out << "  note: " << n.get<std::string>() << "\n";
        for (const auto& [key, value] : results.items()) {
            if (value.is_array()) {
                out << "  " << key << ":\n";
                for (const auto& row : value) out << "    " << row_text(row) << "\n";
            } else {
                out << "  " << key << ": " << row_text(value) << "\n";
            }
        }
        out << "  " << (checks.size() - failed) << "/" << checks.size() << " passed\n";
        return out.str();
    }
};

std::string join_basis(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
    std::string out;
    for (const auto& g : basis) out += (out.empty() ? "" : " ; ") + to_string(g, order);
    return out;
}

std::string bidegree_text(const std::optional<Bidegree>& b) {
    return b ? "(" + std::to_string(b->first) + "," + std::to_string(b->second) + ")" : "-";
}

void catalog_command(Report& report, SuiteRunner& runner) {
    const Catalog& c = runner.catalog();
    json rows = json::array();
    for (const auto& e : c.entries())
        rows.push_back({{"name", e.name},
                        {"weight", e.meta.weight},
                        {"bidegree", bidegree_text(e.meta.bidegree)},
                        {"terms", e.poly.size()},
                        {"construction", to_string(e.construction.kind)},
                        {"recipe", e.construction.recipe},
                        {"ghost", e.meta.ghost}});
    report.results["entries"] = rows;
    report.results["count"] = c.size();
    for (const auto& check : c.checks)
        report.add("construction " + check.name, check.locator, check.agree, check.agree ? "agree" : check.note);
}

void groebner_command(Report& report, SuiteRunner& runner, const std::string& fixture, const std::string& mode,
                      std::string against) {
    const RunConfig& cfg = runner.config();
    GroebnerOptions go;
    go.pair_budget = cfg.pair_budget;
    AbstractIdeal ideal = load_ideal(fixture, cfg.fixtures);
    if (mode == "certify") {
        auto cert = is_groebner(ideal.generators, ideal.order);
        std::string detail = std::to_string(cert.pairs) + " S-pairs reduced, " + std::to_string(cert.coprime_pairs) +
                             " with coprime heads, at most " + std::to_string(cert.max_s_terms) + " terms";
        if (cert.failure)
            detail += "; pair (" + std::to_string(cert.failure->first + 1) + ", " +
                      std::to_string(cert.failure->second + 1) + ") leaves " + to_string(summarize(cert.failure->remainder));
        report.add(fixture + " certify", ideal.locator, cert.pass(), detail);
        report.results["pairs"] = cert.pairs;
        report.results["coprime_pairs"] = cert.coprime_pairs;
        report.results["max_s_terms"] = cert.max_s_terms;
    } else if (mode == "derive") {
        BuchbergerStats stats;
        auto basis = buchberger(ideal, go, &stats);
        bool certified = is_groebner(basis, ideal.order).pass();
        report.add(fixture + " derive", ideal.locator, certified,
                   std::to_string(basis.size()) + " elements, " + std::to_string(stats.pairs_reduced) +
                       " pairs reduced, " + std::to_string(stats.pairs_skipped) + " skipped");
        report.results["basis"] = join_basis(basis, ideal.order);
        report.results["size"] = basis.size();
        if (!against.empty()) {
            AbstractIdeal other = load_ideal(against, cfg.fixtures);
            bool same = basis == reduce_basis(other.generators, other.order);
            report.add(fixture + " reduced basis equals " + against, other.locator, same,
                       std::to_string(basis.size()) + " against " + std::to_string(other.generators.size()));
        }
    } else {
        if (against.empty()) {
            FixtureStore store = cfg.fixtures;
            for (const auto& id : ideal_ids(store)) {
                FixtureRecord r = store.find("groebner.fix", id);
                if (r.get_or("derived_from", "") == fixture) against = id;
            }
            FixtureRecord own = store.find("groebner.fix", fixture);
            if (against.empty()) against = own.get_or("derived_from", "");
            if (against.empty()) throw ParseError("membership needs --against for " + fixture);
        }
        report.add(ideal_equality_suite(ideal, load_ideal(against, cfg.fixtures), go));
    }
}

void staircase_command(Report& report, SuiteRunner& runner, const std::string& fixture,
                       std::optional<std::size_t> max_fixed, bool disjoint) {
    AbstractIdeal ideal = load_ideal(fixture, runner.config().fixtures);
    auto comps = staircase_complement(leading_monomials(ideal), ideal.variables, max_fixed);
    if (disjoint) comps = disjointify(std::vector<StaircaseComponent>(comps.rbegin(), comps.rend()));
    json rows = json::array();
    std::size_t k = 0;
    for (const auto& c : comps) {
        rows.push_back({{"component", to_string(c)}, {"dimension", c.dimension()}, {"fixed", c.fixed_count()}});
        report.add(fixture + " component " + std::to_string(++k), ideal.locator, true,
                   to_string(c) + ", dimension " + std::to_string(c.dimension()));
    }
    json letters = json::array();
    for (std::size_t i = 0; i < ideal.variables.size(); ++i)
        letters.push_back(coordinate_letter(i) + "=" + var_name(ideal.variables[i]));
    report.results["coordinates"] = letters;
    report.results["components"] = rows;
    report.results["count"] = comps.size();
}

void euler_command(Report& report, SuiteRunner& runner, int order, std::optional<int> degree,
                   std::optional<int> m_check) {
    EulerOptions eo;
    eo.fixtures = runner.config().fixtures;
    eo.sum_cap = runner.config().sum_cap_m;
    eo.degree = degree;
    eo.m_check = m_check;
    report.add(euler_suite(order, eo));
    EulerComputation e = euler_compute(order, eo);
    json fams = json::array();
    if (e.leading)
        for (const auto& f : e.leading->families) {
            std::string component;
            for (const auto& spec : e.families)
                if (spec.name == f.name) component = spec.component;
            fams.push_back({{"name", f.name},
                            {"component", component},
                            {"c1sq", to_string(f.c1sq_coeff)},
                            {"c2", to_string(f.c2_coeff)},
                            {"skipped", f.skipped}});
        }
    report.results["order"] = order;
    report.results["families"] = fams;
    if (e.leading) {
        report.results["m_power"] = e.leading->N;
        report.results["C1"] = to_string(e.leading->c1sq_coeff);
        report.results["C2"] = to_string(e.leading->c2_coeff);
    }
    report.results["quotient"] = to_string(e.quotient);
    report.results["quotient_decimal"] = e.quotient.get_d();
    report.results["threshold"] = e.threshold;
    if (e.lattice_sum) report.results["lattice_sum"] = to_string(*e.lattice_sum);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Reparametrization invariants of jets: catalog, verification, Groebner bases and Euler characteristics"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig cfg;
    int nu = 2;
    int kappa = 5;
    std::string fixtures_dir;
    std::string out_path;
    bool as_json = false;
    app.add_option("--nu", nu, "dimension (2 or 3)")->check(CLI::IsMember({2, 3}));
    app.add_option("--kappa", kappa, "jet order")->check(CLI::Range(1, 5));
    app.add_option("--seed", cfg.seed, "seed of the randomized probes");
    app.add_option("--rank-trials", cfg.rank_trials, "random points per rank probe")->check(CLI::PositiveNumber);
    app.add_option("--pair-budget", cfg.pair_budget, "S-pair budget of Buchberger runs")->check(CLI::PositiveNumber);
    app.add_option("--sum-cap", cfg.sum_cap_m, "largest m of an exact lattice sum")->check(CLI::PositiveNumber);
    app.add_option("--fixtures", fixtures_dir, "fixture directory")->check(CLI::ExistingDirectory);
    app.add_option("--out", out_path, "write the report to this file");
    app.add_flag("--json", as_json, "print the JSON report");

    auto* catalog = app.add_subcommand("catalog", "build the catalog and list its invariants");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    verify->add_option("suite", suite, "suite name, curated:<list> or all")->required();

    auto* groebner = app.add_subcommand("groebner", "Groebner certification, derivation and membership");
    std::string ideal_id;
    std::string mode = "certify";
    std::string against;
    groebner->add_option("fixture", ideal_id, "ideal record of groebner.fix")->required();
    groebner->add_option("--mode", mode, "certify, derive or membership")
        ->check(CLI::IsMember({"certify", "derive", "membership"}));
    groebner->add_option("--against", against, "second ideal for derive and membership");

    auto* staircase = app.add_subcommand("staircase", "standard-monomial components of an ideal");
    std::string stair_id;
    std::optional<std::size_t> max_fixed;
    bool disjoint = false;
    staircase->add_option("fixture", stair_id, "ideal record of groebner.fix")->required();
    staircase->add_option("--max-fixed", max_fixed, "drop components with more fixed coordinates");
    staircase->add_flag("--disjoint", disjoint, "disjoint pieces, last component first");

    auto* euler = app.add_subcommand("euler", "leading Euler characteristic coefficients");
    int order = 4;
    std::optional<int> degree;
    std::optional<int> m_check;
    euler->add_option("--order", order, "jet order")->check(CLI::IsMember({2, 3, 4, 5}));
    euler->add_option("--degree", degree, "surface degree d")->check(CLI::PositiveNumber);
    euler->add_option("--m-check", m_check, "exact lattice sum at this m")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    Report report;
    try {
        cfg.ctx = JetContext{nu, kappa};
        require_supported(cfg.ctx);
        if (!fixtures_dir.empty()) cfg.fixtures = FixtureStore(fixtures_dir);
        report.config = {{"nu", nu},
                         {"kappa", kappa},
                         {"seed", cfg.seed},
                         {"rank_trials", cfg.rank_trials},
                         {"pair_budget", cfg.pair_budget},
                         {"sum_cap_m", cfg.sum_cap_m},
                         {"fixture_dir", cfg.fixtures.dir().string()}};
        SuiteRunner runner(cfg);
        if (*catalog) {
            report.command = "catalog";
            catalog_command(report, runner);
        } else if (*verify) {
            report.command = "verify " + suite;
            report.add(runner.run(suite));
        } else if (*groebner) {
            report.command = "groebner " + ideal_id + " --mode " + mode;
            groebner_command(report, runner, ideal_id, mode, against);
        } else if (*staircase) {
            report.command = "staircase " + stair_id;
            staircase_command(report, runner, stair_id, max_fixed, disjoint);
        } else if (*euler) {
            report.command = "euler --order " + std::to_string(order);
            euler_command(report, runner, order, degree, m_check);
        }
    } catch (const jb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::string text = as_json ? report.body().dump(2) + "\n" : report.text();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return 2;
        }
        out << text;
    }
    return report.failed == 0 ? 0 : 1;
}
