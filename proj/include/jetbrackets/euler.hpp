#pragma once

#include "jetbrackets/groebner.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jb {

/// Chern numbers of a surface; from_degree uses the smooth surface of degree d in P3.
struct ChernData {
    std::optional<int> degree;
    Rational c1sq;
    Rational c2;

    static ChernData from_degree(int d);
};

struct Chern3 {
    Rational c1, c2, c3;
};

struct Chern4 {
    Rational c1, c2, c3, c4;
};

/// (1/6) c1^2 (l1^3 - l2^3) - (1/6) c2 (l1 - l2)^3.
Rational chi2_leading(const Rational& l1, const Rational& l2, const ChernData& chern);

/// The two polynomial parts with chi2 = c1sq_part c1^2 - c2_part c2.
struct Chi2Parts {
    Polynomial c1sq_part;
    Polynomial c2_part;
};

Chi2Parts chi2_parts(const Polynomial& l1, const Polynomial& l2);

/// Leading determinant combination for a threefold.
Rational chi3_leading(const Rational& l1, const Rational& l2, const Rational& l3, const Chern3& chern);

/// Leading determinant combination for a fourfold.
Rational chi4_leading(const Rational& l1, const Rational& l2, const Rational& l3, const Rational& l4,
                      const Chern4& chern);

/// Determinant of the matrix with rows (l_j^p) for p in powers.
Rational power_determinant(const std::vector<Rational>& l, const std::vector<unsigned>& powers);

struct SchurGenerator {
    std::string name;
    int weight = 0;
    int l1 = 0;
    int l2 = 0;
};

struct SchurShift {
    int weight = 0;
    int l1 = 0;
    int l2 = 0;
};

enum class SlackMode {
    /// The slack exponent is solved from the weight equation.
    eliminated,
    /// The slack is integrated from 0 to m as an outer variable of the simplex.
    integrated
};

std::string to_string(SlackMode mode);

struct FamilySpec {
    std::string name;
    std::string component;
    std::vector<SchurGenerator> free_generators;
    SchurShift fixed_offset;
    bool has_slack = false;
    std::string slack_name = "f1'";
    SlackMode slack_mode = SlackMode::eliminated;

    const SchurGenerator* slack() const;
};

struct Correspondence {
    std::map<std::string, SchurGenerator> generators;
    std::string slack_name;
    std::string locator;
};

Correspondence load_correspondence(const FixtureStore& fixtures = {});

/// Each component becomes one family per value of its bounded non-fixed coordinates.
/// Fixed values and lower bounds contribute to the offset. Throws ParseError on unknown names.
std::vector<FamilySpec> families_from_staircase(const std::vector<StaircaseComponent>& components,
                                                const std::vector<std::string>& variable_names,
                                                const Correspondence& correspondence, SlackMode mode,
                                                const std::vector<std::string>& names = {});

struct FamilyCoefficients {
    std::string name;
    Rational c1sq_coeff;
    Rational c2_coeff;
    int degree = 0;
    bool skipped = false;
};

struct LeadingCoefficients {
    Rational c1sq_coeff;
    Rational c2_coeff;
    int N = 0;
    std::vector<FamilyCoefficients> families;
    std::vector<std::string> notes;

    Rational quotient() const { return c1sq_coeff / c2_coeff; }
};

/// Top coefficients in m of the simplex integral of chi2_parts, offsets dropped.
/// `nesting` lists generator names innermost first; by default lighter weights are inner and the slack outermost.
FamilyCoefficients family_coefficients(const FamilySpec& family,
                                       const std::optional<std::vector<std::string>>& nesting = std::nullopt);

/// Sum over the families with slack; the others are reported in notes.
LeadingCoefficients leading_coefficients(const std::vector<FamilySpec>& families);

/// Exact sum of chi2_leading over the lattice points of weight m of every family, offsets included.
Rational chi_sum_exact(const std::vector<FamilySpec>& families, int m, const ChernData& chern, int cap = 400);

struct ConvergencePoint {
    int m = 0;
    Rational scaled_sum;
    Rational error;
};

struct ConvergenceCheck {
    std::vector<ConvergencePoint> points;
    Rational fitted_K;
    bool monotone = false;
};

/// |chi_sum_exact(m)/m^N - (C1 c1^2 - C2 c2)| at each m; K is the largest m times error.
ConvergenceCheck convergence_check(const std::vector<FamilySpec>& families, const LeadingCoefficients& leading,
                                   const ChernData& chern, const std::vector<int>& ms, int cap = 400);

/// d^2 (C - 1) - d (8C - 4) + 16C - 6.
Rational q_polynomial(const Rational& C, const Rational& d);

/// Smallest positive d0 with q_C(d) > 0 for every integer d >= d0; requires C > 1.
int degree_threshold(const Rational& C);

struct EulerOptions {
    FixtureStore fixtures;
    std::optional<int> degree;
    std::optional<int> m_check;
    int sum_cap = 400;
};

/// Families, coefficients and thresholds for one jet order.
struct EulerComputation {
    int order = 0;
    std::string locator;
    std::vector<FamilySpec> families;
    std::optional<LeadingCoefficients> leading;
    Rational quotient;
    int threshold = 0;
    std::optional<ConvergenceCheck> convergence;
    std::optional<Rational> lattice_sum;
    std::vector<std::string> notes;
};

EulerComputation euler_compute(int order, const EulerOptions& options = {});

/// Checks of one order against the fixture targets.
SyzygyReport euler_suite(int order, const EulerOptions& options = {});

}  // namespace jb
