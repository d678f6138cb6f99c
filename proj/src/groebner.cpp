#include "jetbrackets/groebner.hpp"

#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace jb {

namespace {

/// Every identifier, f1' included, is an abstract variable.
class AbstractResolver : public Resolver {
public:
    Polynomial identifier(const std::string& token) override { return Polynomial::variable(abstract_var(token)); }
};

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    boost::algorithm::split(parts, text, [](char c) { return c == ';'; });
    std::vector<std::string> out;
    for (auto& p : parts) {
        boost::algorithm::trim(p);
        if (!p.empty()) out.push_back(p);
    }
    return out;
}

std::vector<Var> abstract_vars(const std::vector<std::string>& names) {
    std::vector<Var> out;
    for (const auto& n : names) out.push_back(abstract_var(n));
    return out;
}

const char* groebner_file = "groebner.fix";

Monomial lead_monomial(const Polynomial& p, const MonomialOrder& order) { return p.leading_term(order).mono; }

Polynomial monic(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) return p;
    return p * Rational(1 / p.leading_term(order).coeff);
}

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

std::string numbered(const std::string& ideal, std::size_t k) { return ideal + ":" + std::to_string(k + 1); }

}  // namespace

Polynomial parse_abstract(const std::string& text) {
    AbstractResolver resolver;
    return evaluate(*parse_expression(text), resolver);
}

std::vector<Polynomial> parse_abstract_list(const std::string& text) {
    std::vector<Polynomial> out;
    for (const auto& part : split_list(text)) out.push_back(parse_abstract(part));
    return out;
}

AbstractIdeal ideal_from_record(const FixtureRecord& record) {
    AbstractIdeal ideal;
    ideal.name = record.name;
    ideal.locator = record.get_or("locator", record.name);
    ideal.variables = abstract_vars(record.words("variables"));
    ideal.order = MonomialOrder(abstract_vars(record.words("order")));
    ideal.generators = parse_abstract_list(record.get("generators"));
    ideal.restricted = record.get_or("restricted", "no") == "yes";
    std::set<Var> declared(ideal.variables.begin(), ideal.variables.end());
    for (Var v : ideal.variables)
        if (!ideal.order.lists(v)) throw ParseError(record.where() + ": variable " + var_name(v) + " is not ordered");
    for (const auto& g : ideal.generators)
        for (Var v : g.variables())
            if (!declared.count(v))
                throw ParseError(record.where() + ": generator uses undeclared variable " + var_name(v));
    return ideal;
}

AbstractIdeal load_ideal(const std::string& id, const FixtureStore& fixtures) {
    return ideal_from_record(fixtures.find(groebner_file, id));
}

std::vector<std::string> ideal_ids(const FixtureStore& fixtures) {
    std::vector<std::string> out;
    for (const auto& r : fixtures.load(groebner_file))
        if (r.has("generators")) out.push_back(r.name);
    return out;
}

Polynomial s_polynomial(const Polynomial& p, const Polynomial& q, const MonomialOrder& order) {
    const Term& a = p.leading_term(order);
    const Term& b = q.leading_term(order);
    Monomial l = a.mono.lcm(b.mono);
    return p.times_term(l.quotient(a.mono), Rational(1 / a.coeff)) -
           q.times_term(l.quotient(b.mono), Rational(1 / b.coeff));
}

Polynomial normal_form(const Polynomial& p, const std::vector<Polynomial>& basis, const MonomialOrder& order) {
    std::vector<Term> leads;
    std::vector<const Polynomial*> divisors;
    for (const auto& g : basis) {
        if (g.is_zero()) continue;
        leads.push_back(g.leading_term(order));
        divisors.push_back(&g);
    }
    auto cmp = [&order](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; };
    std::map<Monomial, Rational, decltype(cmp)> rem(cmp);
    for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
    std::vector<Term> out;
    while (!rem.empty()) {
        auto it = rem.begin();
        std::size_t k = 0;
        while (k < leads.size() && !leads[k].mono.divides(it->first)) ++k;
        if (k == leads.size()) {
            out.push_back(Term{it->first, it->second});
            rem.erase(it);
            continue;
        }
        Monomial m = it->first.quotient(leads[k].mono);
        Rational c = it->second / leads[k].coeff;
        for (const auto& t : divisors[k]->terms()) {
            auto [pos, inserted] = rem.try_emplace(t.mono * m, Rational(0));
            pos->second -= t.coeff * c;
            if (sgn(pos->second) == 0) rem.erase(pos);
        }
    }
    return Polynomial::from_terms(std::move(out));
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis, const MonomialOrder& order) {
    std::vector<Polynomial> nonzero;
    for (auto& g : basis)
        if (!g.is_zero()) nonzero.push_back(monic(g, order));
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < nonzero.size(); ++k) {
        Monomial lk = lead_monomial(nonzero[k], order);
        bool redundant = false;
        for (std::size_t j = 0; j < nonzero.size() && !redundant; ++j) {
            if (j == k) continue;
            Monomial lj = lead_monomial(nonzero[j], order);
            redundant = lj.divides(lk) && (!(lj == lk) || j < k);
        }
        if (!redundant) minimal.push_back(nonzero[k]);
    }
    std::vector<Polynomial> reduced;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != k) others.push_back(minimal[j]);
        const Term& lead = minimal[k].leading_term(order);
        Polynomial tail = minimal[k] - Polynomial::monomial(lead.mono, lead.coeff);
        reduced.push_back(Polynomial::monomial(lead.mono, lead.coeff) + normal_form(tail, others, order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return order.compare(lead_monomial(a, order), lead_monomial(b, order)) > 0;
    });
    return reduced;
}

std::vector<Polynomial> buchberger(const AbstractIdeal& ideal, const GroebnerOptions& options, BuchbergerStats* stats) {
    const MonomialOrder& order = ideal.order;
    std::vector<Polynomial> g;
    for (const auto& p : ideal.generators)
        if (!p.is_zero()) g.push_back(monic(p, order));
    BuchbergerStats local;
    using Pair = std::pair<std::size_t, std::size_t>;
    auto pair_degree = [&](const Pair& pr) {
        return lead_monomial(g[pr.first], order).lcm(lead_monomial(g[pr.second], order)).total_degree();
    };
    std::vector<Pair> queue;
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) queue.emplace_back(i, j);
    while (!queue.empty()) {
        auto best = std::min_element(queue.begin(), queue.end(), [&](const Pair& a, const Pair& b) {
            unsigned da = pair_degree(a);
            unsigned db = pair_degree(b);
            return da != db ? da < db : a < b;
        });
        Pair pr = *best;
        queue.erase(best);
        Monomial li = lead_monomial(g[pr.first], order);
        Monomial lj = lead_monomial(g[pr.second], order);
        if (li.coprime(lj)) {
            ++local.pairs_skipped;
            continue;
        }
        if (++local.pairs_reduced > options.pair_budget)
            throw BudgetExceeded(ideal.name + ": more than " + std::to_string(options.pair_budget) + " S-pairs");
        Polynomial h = normal_form(s_polynomial(g[pr.first], g[pr.second], order), g, order);
        if (h.is_zero()) continue;
        g.push_back(monic(h, order));
        if (h.is_constant()) break;
        for (std::size_t i = 0; i + 1 < g.size(); ++i) queue.emplace_back(i, g.size() - 1);
    }
    if (stats) *stats = local;
    for (const auto& p : g)
        if (p.is_constant()) return {Polynomial(1)};
    return reduce_basis(std::move(g), order);
}

GroebnerCertificate is_groebner(const std::vector<Polynomial>& basis, const MonomialOrder& order) {
    GroebnerCertificate cert;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            ++cert.pairs;
            if (lead_monomial(basis[i], order).coprime(lead_monomial(basis[j], order))) ++cert.coprime_pairs;
            Polynomial s = s_polynomial(basis[i], basis[j], order);
            cert.max_s_terms = std::max(cert.max_s_terms, s.size());
            Polynomial r = normal_form(s, basis, order);
            if (!r.is_zero() && !cert.failure) cert.failure = FailingPair{i, j, r};
        }
    return cert;
}

SyzygyReport membership_verification(const std::string& suite, const std::vector<Polynomial>& members,
                                     const std::vector<Polynomial>& basis, const MonomialOrder& order) {
    SyzygyReport report;
    report.suite = suite;
    for (std::size_t k = 0; k < members.size(); ++k) {
        Polynomial r = normal_form(members[k], basis, order);
        report.outcomes.push_back(outcome(IdentityFamily::groebner, numbered(suite, k), suite, r.is_zero(),
                                          r.is_zero() ? "normal form 0" : "nonzero normal form", r));
    }
    return report;
}

SyzygyReport ideal_equality_suite(const AbstractIdeal& a, const AbstractIdeal& b, const GroebnerOptions& options) {
    SyzygyReport report;
    report.suite = "ideal " + a.name + " = " + b.name;
    std::vector<Polynomial> ga = buchberger(a, options);
    std::vector<Polynomial> gb = buchberger(b, options);
    SyzygyReport ab = membership_verification(a.name + " in " + b.name, a.generators, gb, b.order);
    SyzygyReport ba = membership_verification(b.name + " in " + a.name, b.generators, ga, a.order);
    report.append(ab);
    report.append(ba);
    bool same = ga == gb;
    report.outcomes.push_back(outcome(IdentityFamily::groebner, "reduced bases", a.locator, same,
                                      "reduced bases of " + std::to_string(ga.size()) + " and " +
                                          std::to_string(gb.size()) + " elements " + (same ? "coincide" : "differ")));
    return report;
}

AbstractIdeal saturate(const AbstractIdeal& ideal, Var v, const GroebnerOptions& options) {
    Var t = abstract_var("saturation_t");
    AbstractIdeal extended = ideal;
    std::vector<Var> priority{t};
    priority.insert(priority.end(), ideal.order.priority().begin(), ideal.order.priority().end());
    extended.order = MonomialOrder(priority);
    extended.generators.push_back(1 - Polynomial::variable(t) * Polynomial::variable(v));
    AbstractIdeal out = ideal;
    out.name = ideal.name + " : " + var_name(v) + "^inf";
    out.generators.clear();
    for (auto& g : buchberger(extended, options))
        if (!g.contains(t)) out.generators.push_back(g);
    out.generators = reduce_basis(out.generators, ideal.order);
    return out;
}

SyzygyReport bridge_suite(const Catalog& catalog, const AbstractIdeal& ideal) {
    SyzygyReport report;
    report.suite = "bridge " + ideal.name;
    Bindings bindings;
    for (Var v : ideal.variables) {
        Polynomial value = evaluate_in_catalog(catalog, var_info(v).name);
        bindings[v] = ideal.restricted ? restrict_at_zero(value) : value;
    }
    for (std::size_t k = 0; k < ideal.generators.size(); ++k) {
        Polynomial r = substitute(ideal.generators[k], bindings);
        report.outcomes.push_back(outcome(IdentityFamily::bridge, numbered(ideal.name, k), ideal.locator, r.is_zero(),
                                          ideal.restricted ? "restricted invariants substituted"
                                                           : "invariants substituted",
                                          r));
    }
    return report;
}

// ---------------------------------------------------------------------------------------------
// Staircases

std::size_t StaircaseComponent::dimension() const {
    return static_cast<std::size_t>(
        std::count_if(constraints.begin(), constraints.end(), [](const CoordinateConstraint& c) { return !c.hi; }));
}

std::size_t StaircaseComponent::fixed_count() const {
    return static_cast<std::size_t>(std::count_if(constraints.begin(), constraints.end(),
                                                  [](const CoordinateConstraint& c) { return c.is_fixed(); }));
}

bool StaircaseComponent::contains(const std::vector<unsigned>& exponents) const {
    if (exponents.size() != constraints.size()) throw PreconditionError("exponent vector of the wrong length");
    for (std::size_t k = 0; k < constraints.size(); ++k)
        if (!constraints[k].contains(exponents[k])) return false;
    return true;
}

bool StaircaseComponent::contains(const StaircaseComponent& other) const {
    for (std::size_t k = 0; k < constraints.size(); ++k) {
        const auto& a = constraints[k];
        const auto& b = other.constraints[k];
        if (b.lo < a.lo) return false;
        if (a.hi && (!b.hi || *b.hi > *a.hi)) return false;
    }
    return true;
}

std::string coordinate_letter(std::size_t k) {
    if (k < 26) return std::string(1, static_cast<char>('a' + k));
    return "x" + std::to_string(k);
}

std::string to_string(const StaircaseComponent& component) {
    std::string zeros;
    std::vector<std::string> rest;
    for (std::size_t k = 0; k < component.constraints.size(); ++k) {
        const auto& c = component.constraints[k];
        std::string x = coordinate_letter(k);
        if (c.is_fixed() && c.lo == 0) {
            zeros += (zeros.empty() ? "" : "=") + x;
        } else if (c.is_fixed()) {
            rest.push_back(x + "=" + std::to_string(c.lo));
        } else if (c.hi) {
            rest.push_back(std::to_string(c.lo) + "<=" + x + "<=" + std::to_string(*c.hi));
        } else if (c.lo > 0) {
            rest.push_back(x + ">=" + std::to_string(c.lo));
        }
    }
    std::string out = zeros.empty() ? "" : zeros + "=0";
    for (const auto& r : rest) out += (out.empty() ? "" : ", ") + r;
    return "{" + out + "}";
}

std::vector<unsigned> exponents_of(const Monomial& m, const std::vector<Var>& variables) {
    std::vector<unsigned> out;
    for (Var v : variables) out.push_back(m.degree(v));
    for (Monomial::Word w : m.words())
        if (std::find(variables.begin(), variables.end(), Monomial::var_of(w)) == variables.end())
            throw PreconditionError("monomial variable " + var_name(Monomial::var_of(w)) + " is not a coordinate");
    return out;
}

namespace {

using UpperBox = std::vector<std::optional<unsigned>>;

bool box_within(const UpperBox& a, const UpperBox& b) {
    for (std::size_t k = 0; k < a.size(); ++k)
        if (b[k] && (!a[k] || *a[k] > *b[k])) return false;
    return true;
}

void prune_boxes(std::vector<UpperBox>& boxes) {
    std::sort(boxes.begin(), boxes.end());
    boxes.erase(std::unique(boxes.begin(), boxes.end()), boxes.end());
    std::vector<UpperBox> kept;
    for (std::size_t k = 0; k < boxes.size(); ++k) {
        bool dominated = false;
        for (std::size_t j = 0; j < boxes.size() && !dominated; ++j)
            dominated = j != k && box_within(boxes[k], boxes[j]);
        if (!dominated) kept.push_back(boxes[k]);
    }
    boxes = std::move(kept);
}

void prune_components(std::vector<StaircaseComponent>& comps) {
    std::vector<StaircaseComponent> kept;
    for (std::size_t k = 0; k < comps.size(); ++k) {
        bool dominated = false;
        for (std::size_t j = 0; j < comps.size() && !dominated; ++j)
            dominated = j != k && comps[j].contains(comps[k]) && (!(comps[j] == comps[k]) || j < k);
        if (!dominated) kept.push_back(comps[k]);
    }
    comps = std::move(kept);
}

/// Fixed coordinates before unbounded ones, larger fixed values first.
bool component_before(const StaircaseComponent& a, const StaircaseComponent& b) {
    auto key = [](const CoordinateConstraint& c) {
        return std::tuple<int, long, long>(c.hi ? 0 : 1, -static_cast<long>(c.lo), c.hi ? -static_cast<long>(*c.hi) : 0);
    };
    for (std::size_t k = 0; k < a.constraints.size(); ++k) {
        auto ka = key(a.constraints[k]);
        auto kb = key(b.constraints[k]);
        if (ka != kb) return ka < kb;
    }
    return false;
}

/// Pieces of a minus b, splitting one coordinate at a time.
std::vector<StaircaseComponent> box_difference(const StaircaseComponent& a, const StaircaseComponent& b) {
    const std::size_t n = a.constraints.size();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& x = a.constraints[k];
        const auto& y = b.constraints[k];
        bool below = x.hi && *x.hi < y.lo;
        bool above = y.hi && x.lo > *y.hi;
        if (below || above) return {a};
    }
    std::vector<StaircaseComponent> out;
    StaircaseComponent core = a;
    for (std::size_t k = 0; k < n; ++k) {
        const auto x = core.constraints[k];
        const auto& y = b.constraints[k];
        if (x.lo < y.lo) {
            StaircaseComponent piece = core;
            piece.constraints[k] = CoordinateConstraint{x.lo, y.lo - 1};
            out.push_back(piece);
        }
        if (y.hi && (!x.hi || *x.hi > *y.hi)) {
            StaircaseComponent piece = core;
            piece.constraints[k] = CoordinateConstraint{*y.hi + 1, x.hi};
            out.push_back(piece);
        }
        core.constraints[k] = CoordinateConstraint{std::max(x.lo, y.lo), y.hi ? (x.hi ? std::min(*x.hi, *y.hi) : *y.hi)
                                                                            : x.hi};
    }
    return out;
}

/// Joins two boxes that differ in one coordinate whose intervals abut.
std::optional<StaircaseComponent> merge_pair(const StaircaseComponent& a, const StaircaseComponent& b) {
    std::optional<std::size_t> differing;
    for (std::size_t k = 0; k < a.constraints.size(); ++k) {
        if (a.constraints[k] == b.constraints[k]) continue;
        if (differing) return std::nullopt;
        differing = k;
    }
    if (!differing) return a;
    const auto& x = a.constraints[*differing];
    const auto& y = b.constraints[*differing];
    const auto& low = x.lo <= y.lo ? x : y;
    const auto& high = x.lo <= y.lo ? y : x;
    if (!low.hi || *low.hi + 1 != high.lo) return std::nullopt;
    StaircaseComponent out = a;
    out.constraints[*differing] = CoordinateConstraint{low.lo, high.hi};
    return out;
}

void merge_pieces(std::vector<StaircaseComponent>& pieces) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < pieces.size() && !changed; ++i)
            for (std::size_t j = i + 1; j < pieces.size() && !changed; ++j)
                if (auto m = merge_pair(pieces[i], pieces[j])) {
                    pieces[i] = *m;
                    pieces.erase(pieces.begin() + static_cast<long>(j));
                    changed = true;
                }
    }
}

}  // namespace

std::vector<StaircaseComponent> staircase_complement(const std::vector<Monomial>& leads,
                                                     const std::vector<Var>& variables,
                                                     std::optional<std::size_t> max_fixed) {
    const std::size_t n = variables.size();
    std::vector<UpperBox> boxes{UpperBox(n)};
    for (const auto& lead : leads) {
        if (lead.is_one()) throw PreconditionError("constant leading monomial");
        std::vector<unsigned> e = exponents_of(lead, variables);
        std::vector<UpperBox> next;
        for (const auto& box : boxes) {
            bool avoids = false;
            for (std::size_t k = 0; k < n && !avoids; ++k) avoids = e[k] > 0 && box[k] && *box[k] < e[k];
            if (avoids) {
                next.push_back(box);
                continue;
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (e[k] == 0) continue;
                UpperBox b = box;
                b[k] = b[k] ? std::min(*b[k], e[k] - 1) : e[k] - 1;
                next.push_back(b);
            }
        }
        prune_boxes(next);
        boxes = std::move(next);
    }
    std::vector<StaircaseComponent> comps;
    for (const auto& box : boxes) {
        std::vector<StaircaseComponent> expanded{StaircaseComponent{}};
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<StaircaseComponent> grown;
            for (const auto& partial : expanded) {
                if (!box[k]) {
                    grown.push_back(partial);
                    grown.back().constraints.push_back(CoordinateConstraint::free());
                    continue;
                }
                for (unsigned v = 0; v <= *box[k]; ++v) {
                    grown.push_back(partial);
                    grown.back().constraints.push_back(CoordinateConstraint::fixed(v));
                }
            }
            expanded = std::move(grown);
        }
        comps.insert(comps.end(), expanded.begin(), expanded.end());
    }
    prune_components(comps);
    if (max_fixed)
        comps.erase(std::remove_if(comps.begin(), comps.end(),
                                   [&](const StaircaseComponent& c) { return c.fixed_count() > *max_fixed; }),
                    comps.end());
    std::sort(comps.begin(), comps.end(), component_before);
    return comps;
}

std::vector<StaircaseComponent> disjointify(const std::vector<StaircaseComponent>& components) {
    std::vector<StaircaseComponent> out;
    for (std::size_t k = 0; k < components.size(); ++k) {
        std::vector<StaircaseComponent> pieces{components[k]};
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<StaircaseComponent> next;
            for (const auto& p : pieces) {
                auto d = box_difference(p, components[j]);
                next.insert(next.end(), d.begin(), d.end());
            }
            pieces = std::move(next);
        }
        merge_pieces(pieces);
        out.insert(out.end(), pieces.begin(), pieces.end());
    }
    return out;
}

std::vector<StaircaseComponent> component_list(const std::string& list_id, std::size_t coordinates,
                                               const FixtureStore& fixtures) {
    auto letter_index = [&](const FixtureRecord& r, const std::string& w) {
        if (w.size() != 1 || w[0] < 'a' || static_cast<std::size_t>(w[0] - 'a') >= coordinates)
            throw ParseError(r.where() + ": bad coordinate letter '" + w + "'");
        return static_cast<std::size_t>(w[0] - 'a');
    };
    std::vector<StaircaseComponent> out;
    for (const auto& r : fixtures.load(groebner_file)) {
        if (r.get_or("list", "") != list_id) continue;
        StaircaseComponent c;
        bool explicit_free = r.has("free") || r.has("prefactor");
        c.constraints.assign(coordinates,
                             explicit_free ? CoordinateConstraint::fixed(0) : CoordinateConstraint::free());
        for (const auto& w : r.words("zero")) c.constraints[letter_index(r, w)] = CoordinateConstraint::fixed(0);
        for (const auto& w : r.words("free")) c.constraints[letter_index(r, w)] = CoordinateConstraint::free();
        for (const auto& w : r.words("prefactor")) c.constraints[letter_index(r, w)] = CoordinateConstraint::at_least(1);
        for (const auto& w : r.words("fixed")) {
            auto eq = w.find('=');
            if (eq == std::string::npos) throw ParseError(r.where() + ": malformed fixed value '" + w + "'");
            c.constraints[letter_index(r, w.substr(0, eq))] =
                CoordinateConstraint::fixed(static_cast<unsigned>(std::stoul(w.substr(eq + 1))));
        }
        out.push_back(c);
    }
    if (out.empty()) throw ParseError("no component list '" + list_id + "' in " + groebner_file);
    return out;
}

std::vector<Monomial> leading_monomials(const AbstractIdeal& ideal) {
    std::vector<Monomial> out;
    for (const auto& g : ideal.generators) out.push_back(lead_monomial(g, ideal.order));
    return out;
}

namespace {

/// True when no point of the component is divisible by a lead.
bool component_is_standard(const StaircaseComponent& c, const std::vector<Monomial>& leads,
                           const std::vector<Var>& variables) {
    for (const auto& lead : leads) {
        auto e = exponents_of(lead, variables);
        bool avoids = false;
        for (std::size_t k = 0; k < e.size() && !avoids; ++k)
            avoids = e[k] > 0 && c.constraints[k].hi && *c.constraints[k].hi < e[k];
        if (!avoids) return false;
    }
    return true;
}

std::string listing(const std::vector<StaircaseComponent>& comps) {
    std::string s;
    for (const auto& c : comps) s += (s.empty() ? "" : " ") + to_string(c);
    return s;
}

void compare_lists(SyzygyReport& report, const std::string& id, const std::string& locator,
                   const std::vector<StaircaseComponent>& computed, const std::vector<StaircaseComponent>& expected) {
    bool same = computed == expected;
    report.outcomes.push_back(outcome(IdentityFamily::staircase, id, locator, same,
                                      std::to_string(computed.size()) + " computed, " +
                                          std::to_string(expected.size()) + " expected" +
                                          (same ? "" : "; computed " + listing(computed))));
}

}  // namespace

SyzygyReport staircase_suite(const FixtureStore& fixtures) {
    SyzygyReport report;
    report.suite = "staircase";

    AbstractIdeal r21 = load_ideal("RESTRICTED21", fixtures);
    auto leads21 = leading_monomials(r21);
    bool binomial_heads = true;
    for (std::size_t k = 0; k < r21.generators.size(); ++k)
        binomial_heads = binomial_heads && r21.generators[k].size() == 2 && leads21[k].total_degree() == 2 &&
                         leads21[k].size() == 2;
    report.outcomes.push_back(outcome(IdentityFamily::staircase, "RESTRICTED21 heads", r21.locator, binomial_heads,
                                      "21 two-term equations with squarefree quadratic heads"));
    auto seven = staircase_complement(leads21, r21.variables);
    compare_lists(report, "RESTRICTED21 components", r21.locator, seven,
                  component_list("SEVEN", r21.variables.size(), fixtures));
    bool six_zeros = seven.size() == 7;
    for (const auto& c : seven) six_zeros = six_zeros && c.fixed_count() == 6 && c.dimension() == 4;
    report.outcomes.push_back(outcome(IdentityFamily::staircase, "RESTRICTED21 six equations", r21.locator, six_zeros,
                                      "7 components, each with six coordinates fixed to 0"));
    std::vector<StaircaseComponent> reversed(seven.rbegin(), seven.rend());
    compare_lists(report, "RESTRICTED21 unique writing", r21.locator, disjointify(reversed),
                  component_list("LEMMA7", r21.variables.size(), fixtures));

    AbstractIdeal f26 = load_ideal("FULL26", fixtures);
    auto leads26 = leading_monomials(f26);
    auto printed_leads = parse_abstract_list(fixtures.find(groebner_file, "FULL26").get("leads"));
    bool leads_match = printed_leads.size() == leads26.size();
    for (std::size_t k = 0; leads_match && k < leads26.size(); ++k)
        leads_match = Polynomial::monomial(leads26[k], 1) == printed_leads[k];
    report.outcomes.push_back(outcome(IdentityFamily::staircase, "FULL26 heads", f26.locator, leads_match,
                                      "computed leading monomials against the printed subsets"));
    auto sixteen = staircase_complement(leads26, f26.variables, 6);
    auto rows = component_list("ROWS16", f26.variables.size(), fixtures);
    compare_lists(report, "FULL26 components", f26.locator, sixteen, rows);
    bool dim5 = sixteen.size() == 16;
    for (const auto& c : sixteen) dim5 = dim5 && c.dimension() == 5;
    report.outcomes.push_back(outcome(IdentityFamily::staircase, "FULL26 dimension 5", f26.locator, dim5,
                                      std::to_string(sixteen.size()) + " components of dimension 5"));
    for (const auto& r : fixtures.load(groebner_file)) {
        if (r.get_or("list", "") != "ROWS16" || !r.has("printed_zero")) continue;
        StaircaseComponent printed;
        printed.constraints.assign(f26.variables.size(), CoordinateConstraint::free());
        for (const auto& w : r.words("printed_zero"))
            printed.constraints[static_cast<std::size_t>(w[0] - 'a')] = CoordinateConstraint::fixed(0);
        bool standard = component_is_standard(printed, leads26, f26.variables);
        report.notes.push_back(r.name + ": printed row " + to_string(printed) + " is " +
                               (standard ? "standard" : "not standard (a head divides its free monomials)") +
                               "; the computed row is " + r.get("zero"));
    }

    AbstractIdeal o4 = load_ideal("ORDER4_REORDERED", fixtures);
    auto two = staircase_complement(leading_monomials(o4), o4.variables);
    report.outcomes.push_back(outcome(IdentityFamily::staircase, "ORDER4 components", o4.locator, two.size() == 2,
                                      listing(two)));
    std::vector<StaircaseComponent> two_reversed(two.rbegin(), two.rend());
    compare_lists(report, "ORDER4 unique writing", o4.locator, disjointify(two_reversed),
                  component_list("LEMMA4", o4.variables.size(), fixtures));
    return report;
}

SyzygyReport groebner_suite(const Catalog& catalog, const FixtureStore& fixtures, const GroebnerOptions& options) {
    SyzygyReport report;
    report.suite = "groebner";
    AbstractIdeal syz = load_ideal("SYZ15", fixtures);
    AbstractIdeal r21 = load_ideal("RESTRICTED21", fixtures);
    AbstractIdeal f26 = load_ideal("FULL26", fixtures);

    for (const AbstractIdeal* ideal : {&r21, &f26}) {
        GroebnerCertificate cert = is_groebner(ideal->generators, ideal->order);
        std::string detail = std::to_string(cert.pairs) + " S-pairs reduced, " + std::to_string(cert.coprime_pairs) +
                             " with coprime heads, at most " + std::to_string(cert.max_s_terms) + " terms";
        Polynomial rem;
        if (cert.failure) {
            detail += "; pair (" + std::to_string(cert.failure->first + 1) + ", " +
                      std::to_string(cert.failure->second + 1) + ") leaves a remainder";
            rem = cert.failure->remainder;
        }
        report.outcomes.push_back(
            outcome(IdentityFamily::groebner, ideal->name + " certify", ideal->locator, cert.pass(), detail, rem));
    }
    {
        GroebnerCertificate cert = is_groebner(r21.generators, r21.order);
        bool binomial = cert.pairs == 210 && cert.max_s_terms <= 2;
        report.outcomes.push_back(outcome(IdentityFamily::groebner, "RESTRICTED21 pair count", r21.locator, binomial,
                                          std::to_string(cert.pairs) + " pairs, S-polynomials of at most " +
                                              std::to_string(cert.max_s_terms) + " terms"));
        Polynomial s = s_polynomial(r21.generators[19], r21.generators[20], r21.order);
        Polynomial l5 = parse_abstract("Lambda5_1");
        bool worked = normal_form(s, r21.generators, r21.order).is_zero() &&
                      (s * 3 == l5 * r21.generators[14] || s * -3 == l5 * r21.generators[14]);
        report.outcomes.push_back(outcome(IdentityFamily::groebner, "RESTRICTED21 pair (20, 21)", r21.locator, worked,
                                          "S-polynomial " + to_string(s, r21.order) + " is Lambda5_1 times eq 15"));
    }
    report.append(ideal_equality_suite(syz, r21, options));
    {
        AbstractIdeal sat = saturate(syz, abstract_var("Lambda3"), options);
        bool same = sat.generators == reduce_basis(r21.generators, r21.order);
        report.outcomes.push_back(outcome(IdentityFamily::groebner, "SYZ15 saturation", r21.locator, same,
                                          "SYZ15 : Lambda3^inf has a reduced basis of " +
                                              std::to_string(sat.generators.size()) + " elements " +
                                              (same ? "equal to" : "different from") + " RESTRICTED21"));
    }
    for (const AbstractIdeal* ideal : {&syz, &r21, &f26}) report.append(bridge_suite(catalog, *ideal));
    FixtureRecord full = fixtures.find(groebner_file, "FULL26");
    for (const auto& [key, text] : full.fields) {
        if (key.rfind("printed_", 0) != 0) continue;
        AbstractIdeal printed = f26;
        printed.generators = {parse_abstract(text)};
        auto r = bridge_suite(catalog, printed);
        report.notes.push_back("FULL26:" + key.substr(8) + ": the printed text " +
                               (r.all_passed() ? "vanishes" : "does not vanish, " + to_string(r.outcomes[0].residual)));
    }

    for (const char* toy : {"TOY_CHAIN", "TOY_UNIT"}) {
        FixtureRecord rec = fixtures.find(groebner_file, toy);
        AbstractIdeal ideal = ideal_from_record(rec);
        auto basis = buchberger(ideal, options);
        auto expected = reduce_basis(parse_abstract_list(rec.get("expected")), ideal.order);
        std::string shown;
        for (const auto& g : basis) shown += (shown.empty() ? "" : " ; ") + to_string(g, ideal.order);
        report.outcomes.push_back(
            outcome(IdentityFamily::groebner, ideal.name, ideal.locator, basis == expected, "basis " + shown));
    }
    return report;
}

}  // namespace jb
