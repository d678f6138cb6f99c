#pragma once

#include "jetbrackets/syzygy.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jb {

/// An ideal over abstract variables. `variables` fixes the exponent coordinates a, b, c, ...
struct AbstractIdeal {
    std::string name;
    std::string locator;
    std::vector<Var> variables;
    std::vector<Polynomial> generators;
    MonomialOrder order;
    /// The variables stand for restrictions at f1' = 0.
    bool restricted = false;
};

/// Parses text with every identifier read as an abstract variable, f1' included.
Polynomial parse_abstract(const std::string& text);

/// Semicolon-separated list of parse_abstract texts.
std::vector<Polynomial> parse_abstract_list(const std::string& text);

AbstractIdeal ideal_from_record(const FixtureRecord& record);
AbstractIdeal load_ideal(const std::string& id, const FixtureStore& fixtures = {});

/// Names of the records of groebner.fix that define ideals.
std::vector<std::string> ideal_ids(const FixtureStore& fixtures = {});

struct GroebnerOptions {
    std::size_t pair_budget = 100000;
};

struct BuchbergerStats {
    std::size_t pairs_reduced = 0;
    std::size_t pairs_skipped = 0;
};

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, const MonomialOrder& order);

/// Full reduction of p by the basis: no term of the result is divisible by a leading monomial.
Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// Monic, interreduced and sorted by decreasing leading monomial; zeros dropped.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrder& order);

/// Reduced Groebner basis of the ideal.
std::vector<Polynomial> buchberger(const AbstractIdeal& ideal, const GroebnerOptions& options = {},
                                   BuchbergerStats* stats = nullptr);

struct FailingPair {
    std::size_t first = 0;
    std::size_t second = 0;
    Polynomial remainder;
};

/// Outcome of reducing every S-polynomial of a basis, coprime pairs included.
struct GroebnerCertificate {
    std::size_t pairs = 0;
    std::size_t coprime_pairs = 0;
    std::size_t max_s_terms = 0;
    std::optional<FailingPair> failure;

    bool pass() const { return !failure.has_value(); }
};

GroebnerCertificate is_groebner(const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// One outcome per member: pass when its normal form against the certified basis is zero.
SyzygyReport membership_verification(const std::string& suite, const std::vector<Polynomial>& members,
                                     const std::vector<Polynomial>& basis, const MonomialOrder& order);

/// Members of `from` reduce to zero modulo a Groebner basis of `to`, in both directions,
/// followed by the comparison of the two reduced bases.
SyzygyReport ideal_equality_suite(const AbstractIdeal& a, const AbstractIdeal& b, const GroebnerOptions& options = {});

/// The saturation ideal : v^infinity, by elimination of an auxiliary variable ordered first.
AbstractIdeal saturate(const AbstractIdeal& ideal, Var v, const GroebnerOptions& options = {});

/// Substitutes the catalog polynomials, restricted at f1' = 0 when the ideal is, into every generator.
SyzygyReport bridge_suite(const Catalog& catalog, const AbstractIdeal& ideal);

/// Interval constraint lo <= x <= hi on one coordinate; no hi means unbounded.
struct CoordinateConstraint {
    unsigned lo = 0;
    std::optional<unsigned> hi;

    static CoordinateConstraint fixed(unsigned v) { return {v, v}; }
    static CoordinateConstraint free() { return {0, std::nullopt}; }
    static CoordinateConstraint at_least(unsigned v) { return {v, std::nullopt}; }
    bool is_fixed() const { return hi && *hi == lo; }
    bool is_free() const { return lo == 0 && !hi; }
    bool contains(unsigned x) const { return x >= lo && (!hi || x <= *hi); }
    bool operator==(const CoordinateConstraint&) const = default;
};

/// A box of exponent vectors, one constraint per coordinate.
struct StaircaseComponent {
    std::vector<CoordinateConstraint> constraints;

    std::size_t dimension() const;
    std::size_t fixed_count() const;
    bool contains(const std::vector<unsigned>& exponents) const;
    bool contains(const StaircaseComponent& other) const;
    bool operator==(const StaircaseComponent&) const = default;
};

/// Exponent letters a, b, c, ... of the coordinates.
std::string coordinate_letter(std::size_t k);

/// Letter form such as "a=b=0, f=2, c>=1".
std::string to_string(const StaircaseComponent& component);

/// Exponent vector of a monomial over the coordinate variables.
std::vector<unsigned> exponents_of(const Monomial& m, const std::vector<Var>& variables);

/// Complement in N^n of the monomial ideal of the leads, as maximal boxes with fixed
/// finite values. Components with more than max_fixed fixed coordinates are discarded.
std::vector<StaircaseComponent> staircase_complement(const std::vector<Monomial>& leads,
                                                     const std::vector<Var>& variables,
                                                     std::optional<std::size_t> max_fixed = std::nullopt);

/// Pairwise-disjoint pieces with the same union; each component minus the earlier ones, in input order.
std::vector<StaircaseComponent> disjointify(const std::vector<StaircaseComponent>& components);

/// Components listed in a fixture: `zero` letters, `fixed` letter=value, `prefactor` letter at least 1, `free` letters.
std::vector<StaircaseComponent> component_list(const std::string& list_id, std::size_t coordinates,
                                               const FixtureStore& fixtures = {});

/// Leading monomials of the generators under the ideal's order.
std::vector<Monomial> leading_monomials(const AbstractIdeal& ideal);

/// Leads, component tables and the disjoint lemma shape for the restricted and full bases.
SyzygyReport staircase_suite(const FixtureStore& fixtures = {});

/// Certification, derivation from the fifteen, membership both ways and the invariant bridges.
SyzygyReport groebner_suite(const Catalog& catalog, const FixtureStore& fixtures = {},
                            const GroebnerOptions& options = {});

}  // namespace jb
