#include "jetbrackets/euler.hpp"

#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace jb {

namespace {

const char* euler_file = "euler.fix";

std::vector<std::string> split_semicolons(const std::string& text) {
    std::vector<std::string> parts;
    boost::algorithm::split(parts, text, [](char c) { return c == ';'; });
    std::vector<std::string> out;
    for (auto& p : parts) {
        boost::algorithm::trim(p);
        if (!p.empty()) out.push_back(p);
    }
    return out;
}

Rational pow_q(const Rational& x, unsigned e) {
    Rational r = 1;
    for (unsigned k = 0; k < e; ++k) r *= x;
    return r;
}

Rational fact_product(std::initializer_list<unsigned> ns) {
    Rational r = 1;
    for (unsigned n : ns) r *= factorial(n);
    return r;
}

IdentityOutcome outcome(std::string id, std::string locator, bool pass, std::string detail) {
    IdentityOutcome o;
    o.identity.family = IdentityFamily::euler;
    o.identity.id = std::move(id);
    o.identity.locator = std::move(locator);
    o.pass = pass;
    o.detail = std::move(detail);
    return o;
}

std::string compare_detail(const Rational& got, const Rational& want) {
    return "computed " + to_string(got) + ", expected " + to_string(want);
}

Rational abs_q(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Decimal rendering with a fixed number of digits after the point.
std::string decimal(const Rational& x, int digits) {
    Rational scaled = abs_q(x);
    Integer ten_pow = 1;
    for (int k = 0; k < digits; ++k) ten_pow *= 10;
    Integer n = scaled.get_num() * ten_pow / scaled.get_den();
    std::string s = n.get_str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1 - s.size()), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return (x < 0 ? "-" : "") + s;
}

/// Adds lattice sums of l1^3 - l2^3 and (l1 - l2)^3 over exponent vectors of the given total weight.
void enumerate_points(const std::vector<SchurGenerator>& gens, std::size_t k, long remaining, long l1, long l2,
                      Integer& s1, Integer& s2) {
    if (k + 1 == gens.size() || gens.empty()) {
        if (gens.empty()) {
            if (remaining != 0) return;
        } else {
            const auto& g = gens[k];
            if (remaining % g.weight != 0) return;
            long x = remaining / g.weight;
            l1 += x * g.l1;
            l2 += x * g.l2;
        }
        Integer a = l1;
        Integer b = l2;
        Integer d = a - b;
        s1 += a * a * a - b * b * b;
        s2 += d * d * d;
        return;
    }
    const auto& g = gens[k];
    for (long x = 0; x * g.weight <= remaining; ++x)
        enumerate_points(gens, k + 1, remaining - x * g.weight, l1 + x * g.l1, l2 + x * g.l2, s1, s2);
}

std::vector<StaircaseComponent> expand_bounded(const StaircaseComponent& c) {
    std::vector<StaircaseComponent> out{c};
    for (std::size_t k = 0; k < c.constraints.size(); ++k) {
        const auto& x = c.constraints[k];
        if (!x.hi || x.is_fixed()) continue;
        std::vector<StaircaseComponent> next;
        for (const auto& piece : out)
            for (unsigned v = x.lo; v <= *x.hi; ++v) {
                StaircaseComponent p = piece;
                p.constraints[k] = CoordinateConstraint::fixed(v);
                next.push_back(p);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<std::string> variable_names(const AbstractIdeal& ideal) {
    std::vector<std::string> out;
    for (Var v : ideal.variables) out.push_back(var_name(v));
    return out;
}

SlackMode parse_slack_mode(const FixtureRecord& r) {
    std::string mode = r.get("slack_mode");
    if (mode == "eliminated") return SlackMode::eliminated;
    if (mode == "integrated") return SlackMode::integrated;
    throw ParseError(r.where() + ": unknown slack_mode '" + mode + "'");
}

const FamilyCoefficients* find_family(const LeadingCoefficients& lc, const std::string& name) {
    for (const auto& f : lc.families)
        if (f.name == name) return &f;
    return nullptr;
}

/// Default nesting innermost first, with the order reversed among the non-slack generators.
std::vector<std::string> permuted_nesting(const FamilySpec& family) {
    std::vector<const SchurGenerator*> gens;
    for (const auto& g : family.free_generators)
        if (!family.has_slack || g.name != family.slack_name) gens.push_back(&g);
    std::stable_sort(gens.begin(), gens.end(),
                     [](const SchurGenerator* a, const SchurGenerator* b) { return a->weight > b->weight; });
    std::vector<std::string> out;
    for (const auto* g : gens) out.push_back(g->name);
    if (family.has_slack && family.slack_mode == SlackMode::integrated) out.insert(out.begin(), family.slack_name);
    return out;
}

}  // namespace

ChernData ChernData::from_degree(int d) {
    ChernData c;
    c.degree = d;
    c.c1sq = Rational((4 - d) * (4 - d) * d);
    c.c2 = Rational(d * (d * d - 4 * d + 6));
    return c;
}

Rational chi2_leading(const Rational& l1, const Rational& l2, const ChernData& chern) {
    Rational sixth(1, 6);
    return sixth * chern.c1sq * (pow_q(l1, 3) - pow_q(l2, 3)) - sixth * chern.c2 * pow_q(l1 - l2, 3);
}

Chi2Parts chi2_parts(const Polynomial& l1, const Polynomial& l2) {
    Rational sixth(1, 6);
    return {sixth * (l1.pow(3) - l2.pow(3)), sixth * (l1 - l2).pow(3)};
}

Rational power_determinant(const std::vector<Rational>& l, const std::vector<unsigned>& powers) {
    const std::size_t n = l.size();
    if (powers.size() != n) throw PreconditionError("power_determinant needs a square matrix");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rational det = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        Rational prod = inversions % 2 == 0 ? 1 : -1;
        for (std::size_t row = 0; row < n; ++row) prod *= pow_q(l[perm[row]], powers[row]);
        det += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Rational chi3_leading(const Rational& l1, const Rational& l2, const Rational& l3, const Chern3& c) {
    std::vector<Rational> l{l1, l2, l3};
    Rational minus_chi = -c.c3 / fact_product({1, 2, 3}) * power_determinant(l, {1, 2, 3}) +
                         (-c.c1 * c.c2 + c.c3) / fact_product({0, 2, 4}) * power_determinant(l, {0, 2, 4}) +
                         (-pow_q(c.c1, 3) + 2 * c.c1 * c.c2 - c.c3) / fact_product({0, 1, 5}) *
                             power_determinant(l, {0, 1, 5});
    return -minus_chi;
}

Rational chi4_leading(const Rational& l1, const Rational& l2, const Rational& l3, const Rational& l4,
                      const Chern4& c) {
    std::vector<Rational> l{l1, l2, l3, l4};
    Rational c1sq = c.c1 * c.c1;
    Rational c2sq = c.c2 * c.c2;
    return (-c1sq * c1sq + 3 * c1sq * c.c2 - c2sq - 2 * c.c1 * c.c3 + c.c4) / fact_product({0, 1, 2, 7}) *
               power_determinant(l, {0, 1, 2, 7}) +
           (-c.c4) / fact_product({1, 2, 3, 4}) * power_determinant(l, {1, 2, 3, 4}) +
           (-c.c1 * c.c3 + c.c4) / fact_product({0, 2, 3, 5}) * power_determinant(l, {0, 2, 3, 5}) +
           (-c1sq * c.c2 + c2sq + c.c1 * c.c3 - c.c4) / fact_product({0, 1, 3, 6}) *
               power_determinant(l, {0, 1, 3, 6}) +
           (c.c1 * c.c3 - c2sq) / fact_product({0, 1, 4, 5}) * power_determinant(l, {0, 1, 4, 5});
}

std::string to_string(SlackMode mode) { return mode == SlackMode::eliminated ? "eliminated" : "integrated"; }

const SchurGenerator* FamilySpec::slack() const {
    if (!has_slack) return nullptr;
    for (const auto& g : free_generators)
        if (g.name == slack_name) return &g;
    return nullptr;
}

Correspondence load_correspondence(const FixtureStore& fixtures) {
    FixtureRecord r = fixtures.find(euler_file, "SCHUR");
    Correspondence c;
    c.slack_name = r.get("slack");
    c.locator = r.get_or("locator", "");
    for (const auto& entry : split_semicolons(r.get("entries"))) {
        std::istringstream in(entry);
        SchurGenerator g;
        if (!(in >> g.name >> g.weight >> g.l1 >> g.l2))
            throw ParseError(r.where() + ": malformed correspondence entry '" + entry + "'");
        c.generators[g.name] = g;
    }
    return c;
}

std::vector<FamilySpec> families_from_staircase(const std::vector<StaircaseComponent>& components,
                                                const std::vector<std::string>& variable_names,
                                                const Correspondence& correspondence, SlackMode mode,
                                                const std::vector<std::string>& names) {
    std::vector<FamilySpec> out;
    for (const auto& original : components) {
        if (original.constraints.size() != variable_names.size())
            throw PreconditionError("component and variable list differ in length");
        for (const auto& c : expand_bounded(original)) {
            FamilySpec f;
            f.component = to_string(c);
            f.slack_name = correspondence.slack_name;
            f.slack_mode = mode;
            for (std::size_t k = 0; k < c.constraints.size(); ++k) {
                const auto& x = c.constraints[k];
                if (x.is_fixed() && x.lo == 0) continue;
                auto it = correspondence.generators.find(variable_names[k]);
                if (it == correspondence.generators.end())
                    throw ParseError("no Schur correspondence for '" + variable_names[k] + "'");
                const SchurGenerator& g = it->second;
                int lo = static_cast<int>(x.lo);
                f.fixed_offset.weight += lo * g.weight;
                f.fixed_offset.l1 += lo * g.l1;
                f.fixed_offset.l2 += lo * g.l2;
                if (x.is_fixed()) continue;
                f.free_generators.push_back(g);
                if (g.name == correspondence.slack_name) f.has_slack = true;
            }
            std::size_t index = out.size();
            f.name = index < names.size() ? names[index] : f.component;
            out.push_back(std::move(f));
        }
    }
    return out;
}

FamilyCoefficients family_coefficients(const FamilySpec& family, const std::optional<std::vector<std::string>>& nesting) {
    FamilyCoefficients out;
    out.name = family.name;
    if (!family.has_slack) {
        out.skipped = true;
        return out;
    }
    Var m = integration_var("m");
    Polynomial l1 = Polynomial::variable(m);
    Polynomial l2;
    std::vector<const SchurGenerator*> region;
    for (const auto& g : family.free_generators) {
        if (g.name == family.slack_name) continue;
        Polynomial x = Polynomial::variable(integration_var(g.name));
        l1 -= x * (g.weight - g.l1);
        l2 += x * g.l2;
        region.push_back(&g);
    }
    std::stable_sort(region.begin(), region.end(),
                     [](const SchurGenerator* a, const SchurGenerator* b) { return a->weight < b->weight; });
    if (family.slack_mode == SlackMode::integrated) region.push_back(family.slack());
    if (nesting) {
        std::vector<const SchurGenerator*> chosen;
        for (const auto& name : *nesting) {
            auto it = std::find_if(region.begin(), region.end(),
                                   [&](const SchurGenerator* g) { return g->name == name; });
            if (it == region.end()) throw PreconditionError("nesting names '" + name + "' outside the region");
            chosen.push_back(*it);
        }
        if (chosen.size() != region.size()) throw PreconditionError("nesting does not list every region variable");
        region = chosen;
    }
    Chi2Parts parts = chi2_parts(l1, l2);
    for (std::size_t i = 0; i < region.size(); ++i) {
        Polynomial hi = Polynomial::variable(m);
        for (std::size_t j = i + 1; j < region.size(); ++j)
            hi -= Polynomial::variable(integration_var(region[j]->name)) * region[j]->weight;
        hi *= Rational(1, region[i]->weight);
        Var v = integration_var(region[i]->name);
        parts.c1sq_part = integrate_poly(parts.c1sq_part, v, Polynomial(), hi);
        parts.c2_part = integrate_poly(parts.c2_part, v, Polynomial(), hi);
    }
    out.degree = 3 + static_cast<int>(region.size());
    auto top = [&](const Polynomial& p) {
        auto coeffs = coefficients_in(p, m);
        if (coeffs.size() <= static_cast<std::size_t>(out.degree)) return Rational(0);
        return coeffs[static_cast<std::size_t>(out.degree)].constant_term();
    };
    out.c1sq_coeff = top(parts.c1sq_part);
    out.c2_coeff = top(parts.c2_part);
    return out;
}

LeadingCoefficients leading_coefficients(const std::vector<FamilySpec>& families) {
    LeadingCoefficients lc;
    for (const auto& f : families) {
        FamilyCoefficients c = family_coefficients(f);
        if (c.skipped) {
            lc.notes.push_back(f.name + " " + f.component + ": no " + f.slack_name +
                               " slack, lower order in m, skipped");
        } else {
            lc.c1sq_coeff += c.c1sq_coeff;
            lc.c2_coeff += c.c2_coeff;
            lc.N = std::max(lc.N, c.degree);
        }
        lc.families.push_back(c);
    }
    return lc;
}

Rational chi_sum_exact(const std::vector<FamilySpec>& families, int m, const ChernData& chern, int cap) {
    if (m > cap) throw BudgetExceeded("lattice sum at m = " + std::to_string(m) + " exceeds the cap " + std::to_string(cap));
    Integer s1 = 0;
    Integer s2 = 0;
    for (const auto& f : families) {
        long target = m - f.fixed_offset.weight;
        if (target < 0) continue;
        enumerate_points(f.free_generators, 0, target, f.fixed_offset.l1, f.fixed_offset.l2, s1, s2);
    }
    Rational sixth(1, 6);
    return sixth * chern.c1sq * Rational(s1) - sixth * chern.c2 * Rational(s2);
}

ConvergenceCheck convergence_check(const std::vector<FamilySpec>& families, const LeadingCoefficients& leading,
                                   const ChernData& chern, const std::vector<int>& ms, int cap) {
    ConvergenceCheck out;
    Rational limit = leading.c1sq_coeff * chern.c1sq - leading.c2_coeff * chern.c2;
    out.monotone = true;
    for (int m : ms) {
        ConvergencePoint p;
        p.m = m;
        p.scaled_sum = chi_sum_exact(families, m, chern, cap) / pow_q(Rational(m), static_cast<unsigned>(leading.N));
        p.error = abs_q(p.scaled_sum - limit);
        if (!out.points.empty() && !(p.error < out.points.back().error)) out.monotone = false;
        Rational scaled = p.error * m;
        if (scaled > out.fitted_K) out.fitted_K = scaled;
        out.points.push_back(p);
    }
    return out;
}

Rational q_polynomial(const Rational& C, const Rational& d) {
    return d * d * (C - 1) - d * (8 * C - 4) + 16 * C - 6;
}

int degree_threshold(const Rational& C) {
    if (!(C > 1)) throw PreconditionError("degree_threshold needs C > 1, got " + to_string(C));
    Rational t = C - 1;
    Rational bound_q = Rational(10) / t;
    Integer ceil_bound = (bound_q.get_num() + bound_q.get_den() - 1) / bound_q.get_den();
    int top = 6 + static_cast<int>(ceil_bound.get_si());
    for (int d = top; d >= 1; --d)
        if (q_polynomial(C, Rational(d)) <= 0) return d + 1;
    return 1;
}

EulerComputation euler_compute(int order, const EulerOptions& options) {
    if (order < 2 || order > 5) throw PreconditionError("Euler computations cover orders 2 to 5, got " + std::to_string(order));
    FixtureRecord r = options.fixtures.find(euler_file, "ORDER" + std::to_string(order));
    EulerComputation out;
    out.order = order;
    out.locator = r.get_or("locator", "");
    if (!r.has("ideal")) {
        out.quotient = parse_rational(r.get("quotient"));
        out.threshold = degree_threshold(out.quotient);
        out.notes.push_back("quotient " + to_string(out.quotient) + " taken from the fixture");
        if (options.m_check) throw PreconditionError("no families for order " + std::to_string(order));
        return out;
    }
    AbstractIdeal ideal = load_ideal(r.get("ideal"), options.fixtures);
    std::optional<std::size_t> max_fixed;
    if (r.has("max_fixed")) max_fixed = static_cast<std::size_t>(r.get_int("max_fixed"));
    auto comps = staircase_complement(leading_monomials(ideal), ideal.variables, max_fixed);
    bool disjoint = r.get_or("disjoint", "") == "reversed";
    if (disjoint) comps = disjointify(std::vector<StaircaseComponent>(comps.rbegin(), comps.rend()));
    Correspondence corr = load_correspondence(options.fixtures);
    SlackMode mode = parse_slack_mode(r);
    auto names = r.words("names");
    auto vars = variable_names(ideal);
    out.families = families_from_staircase(comps, vars, corr, mode, names);
    out.leading = leading_coefficients(out.families);
    out.notes.insert(out.notes.end(), out.leading->notes.begin(), out.leading->notes.end());
    out.quotient = out.leading->quotient();
    out.threshold = degree_threshold(out.quotient);

    if (r.has("printed_rows")) {
        for (const auto& rec : options.fixtures.load("groebner.fix")) {
            if (rec.get_or("list", "") != r.get("printed_rows") || !rec.has("printed_zero")) continue;
            StaircaseComponent printed;
            printed.constraints.assign(vars.size(), CoordinateConstraint::free());
            for (const auto& w : rec.words("printed_zero"))
                printed.constraints[static_cast<std::size_t>(w[0] - 'a')] = CoordinateConstraint::fixed(0);
            auto printed_family = families_from_staircase({printed}, vars, corr, mode);
            FamilyCoefficients pc = family_coefficients(printed_family[0]);
            std::string row = rec.name.substr(rec.name.find(':') + 1);
            const FamilyCoefficients* computed = find_family(*out.leading, row);
            if (!computed) continue;
            Rational t1 = out.leading->c1sq_coeff - computed->c1sq_coeff + pc.c1sq_coeff;
            Rational t2 = out.leading->c2_coeff - computed->c2_coeff + pc.c2_coeff;
            out.notes.push_back("with the printed row " + row + " " + printed_family[0].component + ": C1 = " +
                                to_string(t1) + ", C2 = " + to_string(t2) + ", quotient " + decimal(t1 / t2, 6));
        }
    }

    std::optional<int> check_degree = options.degree;
    if (!check_degree && r.has("check_degree")) check_degree = r.get_int("check_degree");
    if (check_degree) {
        ChernData chern = ChernData::from_degree(*check_degree);
        Rational lead = out.leading->c1sq_coeff * chern.c1sq - out.leading->c2_coeff * chern.c2;
        out.notes.push_back("d = " + std::to_string(*check_degree) + ": c1^2 = " + to_string(chern.c1sq) +
                            ", c2 = " + to_string(chern.c2) + ", leading coefficient of m^" +
                            std::to_string(out.leading->N) + " = " + to_string(lead) + ", q_C(d) = " +
                            to_string(q_polynomial(out.quotient, Rational(*check_degree))));
        if (disjoint && r.has("check_m")) {
            std::vector<int> ms;
            for (const auto& w : r.words("check_m")) ms.push_back(std::stoi(w));
            out.convergence = convergence_check(out.families, *out.leading, chern, ms, options.sum_cap);
        }
        if (options.m_check) {
            if (!disjoint) throw PreconditionError("lattice sums need disjoint families; order " + std::to_string(order) + " families overlap");
            out.lattice_sum = chi_sum_exact(out.families, *options.m_check, chern, options.sum_cap);
        }
    } else if (options.m_check) {
        throw PreconditionError("a lattice sum needs a degree");
    }
    return out;
}

SyzygyReport euler_suite(int order, const EulerOptions& options) {
    EulerComputation e = euler_compute(order, options);
    FixtureRecord r = options.fixtures.find(euler_file, "ORDER" + std::to_string(order));
    SyzygyReport report;
    report.suite = "euler" + std::to_string(order);
    report.notes = e.notes;
    const std::string& loc = e.locator;
    if (r.has("threshold")) {
        int want = r.get_int("threshold");
        report.outcomes.push_back(outcome("threshold", loc, e.threshold == want,
                                          "degree threshold " + std::to_string(e.threshold) + " for C = " +
                                              to_string(e.quotient) + ", expected " + std::to_string(want)));
    }
    if (!e.leading) return report;
    const LeadingCoefficients& lc = *e.leading;

    for (const auto& [key, value] : r.fields) {
        if (key.rfind("expect_", 0) != 0 || key.rfind("expect_total", 0) == 0) continue;
        std::string name = key.substr(7, key.size() - 8);
        char part = key.back();
        const FamilyCoefficients* f = find_family(lc, name);
        Rational want = parse_rational(value);
        Rational got = f ? (part == '1' ? f->c1sq_coeff : f->c2_coeff) : Rational(0);
        report.outcomes.push_back(outcome(name + std::string(1, part), loc, f && got == want,
                                          f ? compare_detail(got, want) : "no family " + name));
    }
    for (char part : {'1', '2'}) {
        std::string key = std::string("expect_total") + part;
        if (!r.has(key)) continue;
        Rational want = parse_rational(r.get(key));
        Rational got = part == '1' ? lc.c1sq_coeff : lc.c2_coeff;
        report.outcomes.push_back(outcome(std::string("C") + part, loc, got == want, compare_detail(got, want)));
    }
    Rational s1 = 0;
    Rational s2 = 0;
    for (const auto& f : lc.families) {
        s1 += f.c1sq_coeff;
        s2 += f.c2_coeff;
    }
    report.outcomes.push_back(outcome("sum consistency", loc, s1 == lc.c1sq_coeff && s2 == lc.c2_coeff,
                                      std::to_string(lc.families.size()) + " family coefficients add up to the totals"));
    bool positive = true;
    for (const auto& f : lc.families)
        if (!f.skipped) positive = positive && f.c1sq_coeff > 0 && f.c2_coeff > 0;
    report.outcomes.push_back(outcome("positive coefficients", loc, positive && lc.c1sq_coeff > 0 && lc.c2_coeff > 0,
                                      "every family with slack has positive coefficients"));

    std::string quotient_text = "C1/C2 = " + to_string(e.quotient) + " = " + decimal(e.quotient, 6) +
                                ", threshold " + std::to_string(e.threshold);
    if (r.has("quotient")) {
        Rational want = parse_rational(r.get("quotient"));
        report.outcomes.push_back(outcome("quotient", loc, e.quotient == want, quotient_text));
    }
    if (r.has("quotient_above") && r.has("quotient_below")) {
        Rational lo = parse_rational(r.get("quotient_above"));
        Rational hi = parse_rational(r.get("quotient_below"));
        report.outcomes.push_back(outcome("quotient range", loc, e.quotient > lo && e.quotient < hi,
                                          quotient_text + ", expected in (" + decimal(lo, 3) + ", " + decimal(hi, 3) + ")"));
        Rational order4 = parse_rational(options.fixtures.find(euler_file, "ORDER4").get("quotient"));
        report.outcomes.push_back(outcome("quotient below order 4", loc, e.quotient < order4,
                                          quotient_text + " against " + to_string(order4)));
    }

    const FamilySpec* probe = nullptr;
    for (const auto& f : e.families)
        if (f.has_slack) {
            probe = &f;
            break;
        }
    if (probe) {
        FamilyCoefficients base = family_coefficients(*probe);
        FamilyCoefficients permuted = family_coefficients(*probe, permuted_nesting(*probe));
        std::string nest;
        for (const auto& n : permuted_nesting(*probe)) nest += (nest.empty() ? "" : " ") + n;
        report.outcomes.push_back(outcome("permuted nesting " + probe->name, loc,
                                          base.c1sq_coeff == permuted.c1sq_coeff && base.c2_coeff == permuted.c2_coeff,
                                          "innermost first: " + nest));
    }
    if (e.convergence) {
        std::ostringstream detail;
        for (const auto& p : e.convergence->points)
            detail << "m=" << p.m << " error " << decimal(p.error, 8) << "; ";
        detail << "K = " << decimal(e.convergence->fitted_K, 4);
        report.outcomes.push_back(outcome("lattice convergence", loc, e.convergence->monotone, detail.str()));
    }
    return report;
}

}  // namespace jb
