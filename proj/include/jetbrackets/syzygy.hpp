#pragma once

#include "jetbrackets/catalog.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace jb {

enum class IdentityFamily { jacobi, plck1, plck2, curated, restricted, rank, reconstruction, nonmembership, staircase,
                            groebner, bridge, euler, construction, invariance, bi_invariance, ghost, oracle };

std::string to_string(IdentityFamily family);

/// A single relation either generated from operands or read from a curated list.
struct IdentityInstance {
    IdentityFamily family = IdentityFamily::curated;
    std::string id;
    std::vector<std::string> operands;
    std::string locator;
    /// Expression text that must expand to zero, when the identity has one.
    std::string expr;
};

/// Term count and the three highest and lowest monomials of a nonzero residual.
struct ResidualSummary {
    std::size_t terms = 0;
    std::vector<std::string> extremal;
};

ResidualSummary summarize(const Polynomial& residual);
std::string to_string(const ResidualSummary& summary);

struct IdentityOutcome {
    IdentityInstance identity;
    bool pass = false;
    ResidualSummary residual;
    std::string detail;
};

/// Outcomes in identity order; total and passed are derived from them.
struct SyzygyReport {
    std::string suite;
    std::vector<IdentityOutcome> outcomes;
    /// Observations that are not pass/fail items, such as failing printed variants.
    std::vector<std::string> notes;

    std::size_t total() const { return outcomes.size(); }
    std::size_t passed() const;
    std::vector<const IdentityOutcome*> failures() const;
    bool all_passed() const { return passed() == total(); }
    void append(const SyzygyReport& other);
};

/// [[P, Q], R] + [[R, P], Q] + [[Q, R], P].
Polynomial jacobi(const Polynomial& p, const Polynomial& q, const Polynomial& r);

/// m P [Q, R] + o R [P, Q] + n Q [R, P] for P, Q, R of weights m, n, o.
Polynomial plck1(const Polynomial& p, const Polynomial& q, const Polynomial& r);

/// [P, Q] [R, S] + [S, P] [R, Q] + [Q, S] [R, P].
Polynomial plck2(const Polynomial& p, const Polynomial& q, const Polynomial& r, const Polynomial& s);

/// Expression texts of the three templates over named operands with the given weights.
std::string jacobi_text(const std::string& p, const std::string& q, const std::string& r);
std::string plck1_text(const std::string& p, int m, const std::string& q, int n, const std::string& r, int o);
std::string plck2_text(const std::string& p, const std::string& q, const std::string& r, const std::string& s);

/// The weight and Schur bidegree of each additive term of an expression, graded by the catalog.
struct TermGrade {
    std::string term;
    std::optional<int> weight;
    std::optional<Bidegree> bidegree;
};

std::vector<TermGrade> grade_terms(const Catalog& catalog, const std::string& text);

/// True when every additive term has the same weight and bidegree.
bool is_homogeneous(const Catalog& catalog, const std::string& text);

struct SyzygyOptions {
    FixtureStore fixtures;
    std::uint64_t seed = 20240607;
    int rank_trials = 4;
};

/// Identifiers of the curated lists, in fixture order.
std::vector<std::string> curated_list_ids(const SyzygyOptions& options = {});

/// Every identity of the curated list expands to zero after a weight and bidegree check.
SyzygyReport verify_curated(const Catalog& catalog, const std::string& list_id, const SyzygyOptions& options = {});

/// verify_curated over the records of an explicit fixture, for corrupted copies and ad hoc lists.
SyzygyReport verify_curated_records(const Catalog& catalog, const std::string& list_id,
                                    const std::vector<FixtureRecord>& records);

/// The nine order-4 invariants f1' ... Lambda7_22, M8.
std::vector<std::string> order4_invariants();

/// All C(9,3) Plck1 and C(9,4) Plck2 instances over the nine order-4 invariants.
SyzygyReport order4_plucker_suite(const Catalog& catalog);

/// Jacobi over every triple of distinct order-4 catalog entries.
SyzygyReport order4_jacobi_suite(const Catalog& catalog);

/// The named Jacobi consequences: Lambda7_12 = Lambda7_21 and the four Lambda9 index relations.
SyzygyReport jacobi_examples(const Catalog& catalog);

/// The 15 Plck instances over the five order-3 generators, rewritten with the bracket table
/// and matched against the labeled relations they yield.
SyzygyReport reconstruction_suite(const Catalog& catalog, const SyzygyOptions& options = {});

/// The division table at f1' = 0, each entry compared after clearing the powers of Lambda3.
SyzygyReport restricted_identities(const Catalog& catalog, const SyzygyOptions& options = {});

/// Jacobian ranks at random rational points against the transcendence-degree targets.
SyzygyReport independence_rank_suite(const Catalog& catalog, const SyzygyOptions& options = {});

/// Maximum Jacobian rank over seeded random points with entries p/q, |p| <= 1000, 1 <= q <= 1000.
int jacobian_rank(const std::vector<Polynomial>& polys, std::uint64_t seed, int trials);

/// A monomial in the restricted fundamentals Lambda3, Lambda5_1, M8, N12 with a rational factor.
struct RestrictedMonomial {
    Rational coefficient;
    std::vector<int> exponents;
};

/// Restricted value of an invariant from the fixture table: a monomial, zero, or a sum.
struct RestrictedValue {
    std::string name;
    bool zero = false;
    std::vector<RestrictedMonomial> terms;
};

std::vector<RestrictedValue> restricted_table(const SyzygyOptions& options = {});

struct Infeasible {};
struct Feasible {
    std::vector<int> exponents;
};
struct Unsupported {
    std::string reason;
};
using MembershipResult = std::variant<Infeasible, Feasible, Unsupported>;

std::string to_string(const MembershipResult& result);

/// Solves target = prod g^e_g over nonnegative integers e_g on the exponent vectors of the restricted values.
MembershipResult ghost_nonmembership(const std::string& target, const std::vector<std::string>& generators,
                                     const SyzygyOptions& options = {});

/// The same Diophantine problem on explicit exponent vectors.
MembershipResult monomial_membership(const std::vector<int>& target, const std::vector<std::vector<int>>& generators);

/// The eleven bracket-generated bi-invariants f1', Lambda3, ... F16_11.
std::vector<std::string> bracket_bi_invariants();

/// An affine exponent map offset + matrix * parameters over nonnegative integer parameters.
struct ExponentFamily {
    std::string name;
    std::vector<int> offset;
    std::vector<std::vector<int>> matrix;
};

std::vector<ExponentFamily> staircase_families(const SyzygyOptions& options = {});

/// Whether two families have no common image point, with a separating certificate when found.
struct DisjointnessResult {
    bool disjoint = false;
    std::vector<Rational> certificate;
    std::optional<std::vector<int>> witness;
};

DisjointnessResult families_disjoint(const ExponentFamily& a, const ExponentFamily& b);

SyzygyReport staircase_nonredundancy_check(const SyzygyOptions& options = {});

/// The dimension-three quotient identity and the bordered determinant of the restriction.
SyzygyReport appendix3_suite(const Catalog& dim3, const SyzygyOptions& options = {});

}  // namespace jb
