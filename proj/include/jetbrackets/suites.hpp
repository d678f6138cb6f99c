#pragma once

#include "jetbrackets/euler.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace jb {

/// Limits and inputs shared by every suite of a run.
struct RunConfig {
    JetContext ctx{2, 5};
    std::uint64_t seed = 20240607;
    int rank_trials = 4;
    std::size_t pair_budget = 100000;
    int sum_cap_m = 400;
    FixtureStore fixtures;
};

/// Explicit formulas against bracket constructions, then the displayed forms of the fixtures.
SyzygyReport construction_suite(const Catalog& catalog, const FixtureStore& fixtures = {});

/// Reparametrization invariance of every entry with its recorded weight.
SyzygyReport invariance_suite(const Catalog& catalog);

/// Bi-invariance flags, and weights and bidegrees against the Schur correspondence.
SyzygyReport bi_invariance_suite(const Catalog& catalog, const FixtureStore& fixtures = {});

/// Ghost identities, ghost displayed forms and the pinned printed coefficients.
SyzygyReport ghost_suite(const Catalog& catalog, const FixtureStore& fixtures = {});

/// Faa di Bruno against repeated chain-rule differentiation up to max_kappa, and the
/// Diophantine non-expressibility of X18 and X19.
SyzygyReport oracle_suite(const SyzygyOptions& options = {}, int max_kappa = 8);

/// d/dt of a polynomial in f_i^(mu)(phi(t)) and phi^(mu)(t).
Polynomial chain_rule_derivative(const Polynomial& p);

/// Lazily built catalogs for the suites of a run.
class SuiteRunner {
public:
    explicit SuiteRunner(RunConfig config);

    const RunConfig& config() const { return config_; }
    const Catalog& catalog();
    const Catalog& order5_catalog();
    const Catalog& dim3_catalog();

    /// Names accepted by run, in the order used by "all".
    static std::vector<std::string> suite_names();

    /// Runs a named suite, "curated:<list>" or "all"; throws ParseError for unknown names.
    SyzygyReport run(const std::string& name);

private:
    SyzygyOptions syzygy_options() const;
    RunConfig config_;
    std::unique_ptr<Catalog> catalog_;
    std::unique_ptr<Catalog> order5_;
    std::unique_ptr<Catalog> dim3_;
};

}  // namespace jb
