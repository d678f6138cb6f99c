#pragma once

#include "jetbrackets/expression.hpp"
#include "jetbrackets/fixture.hpp"
#include "jetbrackets/jet.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jb {

enum class ConstructionKind { base, explicit_formula, bracket, ghost_quotient };

std::string to_string(ConstructionKind kind);

/// How the ground-truth polynomial of an invariant was produced.
struct Construction {
    ConstructionKind kind = ConstructionKind::base;
    /// Human-readable recipe, e.g. "[Lambda5_1, Lambda3] / f1'".
    std::string recipe;
    std::vector<std::string> parents;
    int divisor_power = 0;
};

struct InvariantMeta {
    int weight = 0;
    std::optional<Bidegree> bidegree;
    bool bi_invariant = false;
    bool ghost = false;
    std::string locator;
};

struct NamedInvariant {
    std::string name;
    JetContext ctx;
    Polynomial poly;
    InvariantMeta meta;
    Construction construction;
};

/// Result of comparing two constructions of the same polynomial.
struct ConstructionCheck {
    std::string name;
    std::string locator;
    bool agree = false;
    Polynomial residual;
    std::string note;
};

/// Immutable-after-build ordered collection of invariants.
class Catalog {
public:
    explicit Catalog(JetContext ctx = {}) : ctx_(ctx) {}

    const JetContext& ctx() const { return ctx_; }
    void add(NamedInvariant inv);
    bool has(const std::string& name) const { return index_.count(name) != 0; }
    const NamedInvariant& at(const std::string& name) const;
    const Polynomial& poly(const std::string& name) const { return at(name).poly; }
    const std::vector<NamedInvariant>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::vector<std::string> names() const;

    /// Explicit-versus-bracket comparisons recorded while building.
    std::vector<ConstructionCheck> checks;
    /// Polarizations and equal copies outside the generating list, e.g. Lambda7_21 and Y23.
    std::map<std::string, Polynomial> auxiliary;
    /// A listed entry or an auxiliary polynomial.
    const Polynomial* lookup(const std::string& name) const;

private:
    JetContext ctx_;
    std::vector<NamedInvariant> entries_;
    std::map<std::string, std::size_t> index_;
};

/// [P, Q] = n DP Q - m P DQ for P of weight m and Q of weight n.
Polynomial bracket(const Polynomial& p, const Polynomial& q);
Polynomial bracket(const NamedInvariant& p, const NamedInvariant& q);

/// P_{;k} = f_k' DP - m f_k'' P.
Polynomial covariant(const Polynomial& p, int component);
Polynomial covariant(const NamedInvariant& p, int component);

/// Exact quotient of the numerator by (f1')^divisor_power; throws NotDivisible.
Polynomial ghost_extract(const std::string& name, const Polynomial& numerator, int divisor_power);

/// Evaluates catalog expressions: catalog names, the minors Dab and Dab_ij, jet tokens,
/// brackets [A, B] and the calls D(x) (total derivative) and at0(x) (restriction to f1' = 0).
class CatalogResolver : public Resolver {
public:
    explicit CatalogResolver(const Catalog* catalog = nullptr) : catalog_(catalog) {}
    Polynomial identifier(const std::string& token) override;
    Polynomial call(const std::string& function, const std::vector<Polynomial>& args) override;
    Polynomial bracket(const Polynomial& p, const Polynomial& q) override;

private:
    const Catalog* catalog_;
};

/// Parses and evaluates a catalog expression, with index placeholders substituted.
Polynomial evaluate_in_catalog(const Catalog& catalog, const std::string& text,
                               const std::map<char, int>& indices = {});

/// Recognizes Dab and Dab_ij tokens; the minor with i = j is zero and swapping i, j negates it.
std::optional<Polynomial> minor_token(const std::string& token);

struct CatalogOptions {
    FixtureStore fixtures;
    /// Compares the bracket construction with the explicit fixture formulas.
    bool compare_explicit = true;
    /// Appends the ghost quotients in dimension two at order five.
    bool include_ghosts = true;
    /// Throws on any construction mismatch instead of only recording it.
    bool strict = true;
};

class ConstructionMismatch : public Error {
public:
    ConstructionMismatch(const std::string& what, Polynomial residual)
        : Error(what), residual_(std::move(residual)) {}
    const Polynomial& residual() const { return residual_; }

private:
    Polynomial residual_;
};

/// Builds every named invariant of the context by brackets, divisions and ghost quotients,
/// restricted to jet order at most kappa, and cross-checks the explicit fixture formulas.
Catalog build_catalog(const JetContext& ctx, const CatalogOptions& options = {});

/// Ordered names of the fundamental invariants of the context (without ghosts).
std::vector<std::string> fundamental_names(const JetContext& ctx);

/// Names whose lower indices are all 1 (the bi-invariants), ghosts included.
std::vector<std::string> bi_invariant_names(const Catalog& catalog);

struct DisplayCheck {
    std::string name;
    std::string locator;
    bool pass = false;
    Polynomial residual;
    /// Outcome for the `printed` variant of the record, when present.
    std::optional<bool> printed_pass;
    std::string note;
};

/// Expands every displayed form of a fixture file and compares it with its catalog target.
std::vector<DisplayCheck> verify_display_forms(const Catalog& catalog, const std::vector<FixtureRecord>& records);

/// The display check of a single named record (instance names such as "DLambda5_1" are accepted).
DisplayCheck verify_display_form(const Catalog& catalog, const std::string& name,
                                 const std::vector<FixtureRecord>& records);

/// A pinned coefficient of a displayed form (the printed text when the record has one),
/// read with minors kept as abstract symbols.
struct SpotCheck {
    std::string name;
    std::string monomial;
    Rational expected;
    Rational displayed;
    bool pass = false;
};

std::vector<SpotCheck> spot_checks(const std::vector<FixtureRecord>& records);

}  // namespace jb
