#include "jetbrackets/syzygy.hpp"

#include <boost/algorithm/string/split.hpp>
#include <boost/algorithm/string/trim.hpp>

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <sstream>

namespace jb {

std::string to_string(IdentityFamily family) {
    switch (family) {
        case IdentityFamily::jacobi: return "Jac";
        case IdentityFamily::plck1: return "Plck1";
        case IdentityFamily::plck2: return "Plck2";
        case IdentityFamily::curated: return "Curated";
        case IdentityFamily::restricted: return "Restricted";
        case IdentityFamily::rank: return "Rank";
        case IdentityFamily::reconstruction: return "Reconstruction";
        case IdentityFamily::nonmembership: return "Nonmembership";
        case IdentityFamily::staircase: return "Staircase";
        case IdentityFamily::groebner: return "Groebner";
        case IdentityFamily::bridge: return "Bridge";
        case IdentityFamily::euler: return "Euler";
        case IdentityFamily::construction: return "Construction";
        case IdentityFamily::invariance: return "Invariance";
        case IdentityFamily::bi_invariance: return "BiInvariance";
        case IdentityFamily::ghost: return "Ghost";
        case IdentityFamily::oracle: return "Oracle";
    }
    return "?";
}

ResidualSummary summarize(const Polynomial& residual) {
    ResidualSummary s;
    s.terms = residual.size();
    const auto& terms = residual.terms();
    auto show = [](const Term& t) { return to_string(t.coeff) + "*" + to_string(t.mono); };
    if (terms.size() <= 6) {
        for (const auto& t : terms) s.extremal.push_back(show(t));
    } else {
        for (std::size_t k = 0; k < 3; ++k) s.extremal.push_back(show(terms[terms.size() - 1 - k]));
        for (std::size_t k = 3; k-- > 0;) s.extremal.push_back(show(terms[k]));
    }
    return s;
}

std::string to_string(const ResidualSummary& summary) {
    std::ostringstream out;
    out << summary.terms << " terms";
    if (!summary.extremal.empty()) {
        out << ":";
        for (const auto& m : summary.extremal) out << " " << m;
    }
    return out.str();
}

std::size_t SyzygyReport::passed() const {
    return static_cast<std::size_t>(
        std::count_if(outcomes.begin(), outcomes.end(), [](const IdentityOutcome& o) { return o.pass; }));
}

std::vector<const IdentityOutcome*> SyzygyReport::failures() const {
    std::vector<const IdentityOutcome*> out;
    for (const auto& o : outcomes)
        if (!o.pass) out.push_back(&o);
    return out;
}

void SyzygyReport::append(const SyzygyReport& other) {
    outcomes.insert(outcomes.end(), other.outcomes.begin(), other.outcomes.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

Polynomial jacobi(const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    return bracket(bracket(p, q), r) + bracket(bracket(r, p), q) + bracket(bracket(q, r), p);
}

Polynomial plck1(const Polynomial& p, const Polynomial& q, const Polynomial& r) {
    int m = weight(p);
    int n = weight(q);
    int o = weight(r);
    return m * p * bracket(q, r) + o * r * bracket(p, q) + n * q * bracket(r, p);
}

Polynomial plck2(const Polynomial& p, const Polynomial& q, const Polynomial& r, const Polynomial& s) {
    return bracket(p, q) * bracket(r, s) + bracket(s, p) * bracket(r, q) + bracket(q, s) * bracket(r, p);
}

namespace {

std::string br(const std::string& a, const std::string& b) { return "[" + a + ", " + b + "]"; }

}  // namespace

std::string jacobi_text(const std::string& p, const std::string& q, const std::string& r) {
    return br(br(p, q), r) + " + " + br(br(r, p), q) + " + " + br(br(q, r), p);
}

std::string plck1_text(const std::string& p, int m, const std::string& q, int n, const std::string& r, int o) {
    return std::to_string(m) + "*" + p + "*" + br(q, r) + " + " + std::to_string(o) + "*" + r + "*" + br(p, q) +
           " + " + std::to_string(n) + "*" + q + "*" + br(r, p);
}

std::string plck2_text(const std::string& p, const std::string& q, const std::string& r, const std::string& s) {
    return br(p, q) + "*" + br(r, s) + " + " + br(s, p) + "*" + br(r, q) + " + " + br(q, s) + "*" + br(r, p);
}

namespace {

void collect_terms(const ExprPtr& e, std::vector<ExprPtr>& out) {
    if (e->kind == Expr::Kind::add || e->kind == Expr::Kind::sub) {
        collect_terms(e->args[0], out);
        collect_terms(e->args[1], out);
    } else if (e->kind == Expr::Kind::neg) {
        collect_terms(e->args[0], out);
    } else {
        out.push_back(e);
    }
}

std::vector<TermGrade> grade_terms_indexed(const Catalog& catalog, const std::string& text,
                                           const std::map<char, int>& indices) {
    ExprPtr e = parse_expression(text);
    if (!indices.empty()) e = instantiate(e, indices);
    std::vector<ExprPtr> terms;
    collect_terms(e, terms);
    CatalogResolver resolver(&catalog);
    std::vector<TermGrade> out;
    for (const auto& t : terms) {
        Polynomial p = evaluate(*t, resolver);
        out.push_back({to_string(*t), weight_of(p), bidegree_of(p)});
    }
    return out;
}

bool homogeneous(const std::vector<TermGrade>& grades) {
    const TermGrade* first = nullptr;
    for (const auto& g : grades) {
        if (!g.weight) continue;
        if (!first) {
            first = &g;
            continue;
        }
        if (g.weight != first->weight || g.bidegree != first->bidegree) return false;
    }
    return true;
}

}  // namespace

std::vector<TermGrade> grade_terms(const Catalog& catalog, const std::string& text) {
    return grade_terms_indexed(catalog, text, {});
}

bool is_homogeneous(const Catalog& catalog, const std::string& text) { return homogeneous(grade_terms(catalog, text)); }

// ---------------------------------------------------------------------------------------------
// Curated lists

std::vector<std::string> curated_list_ids(const SyzygyOptions& options) {
    std::vector<std::string> ids;
    for (const auto& r : options.fixtures.load("syzygies.fix")) {
        const std::string& list = r.get("list");
        if (std::find(ids.begin(), ids.end(), list) == ids.end()) ids.push_back(list);
    }
    return ids;
}

SyzygyReport verify_curated_records(const Catalog& catalog, const std::string& list_id,
                                    const std::vector<FixtureRecord>& records) {
    SyzygyReport report;
    report.suite = "curated:" + list_id;
    for (const auto& r : records) {
        if (r.get_or("list", "") != list_id) continue;
        IdentityOutcome out;
        out.identity = {IdentityFamily::curated, r.name, {}, r.get_or("locator", ""), r.get("expr")};
        auto instances = instances_of(r);
        std::size_t zero = 0;
        bool graded = true;
        Polynomial first_residual;
        for (const auto& inst : instances) {
            if (!homogeneous(grade_terms_indexed(catalog, r.get("expr"), inst.indices))) graded = false;
            Polynomial value = evaluate_in_catalog(catalog, r.get("expr"), inst.indices);
            if (value.is_zero())
                ++zero;
            else if (first_residual.is_zero())
                first_residual = value;
        }
        out.pass = graded && zero == instances.size();
        out.residual = summarize(first_residual);
        if (instances.size() > 1) out.detail = std::to_string(zero) + "/" + std::to_string(instances.size()) + " index instances vanish";
        if (!graded) out.detail += (out.detail.empty() ? "" : "; ") + std::string("terms differ in weight or bidegree");
        report.outcomes.push_back(std::move(out));
        if (r.has("printed")) {
            std::size_t printed_zero = 0;
            for (const auto& inst : instances)
                if (evaluate_in_catalog(catalog, r.get("printed"), inst.indices).is_zero()) ++printed_zero;
            report.notes.push_back(r.name + ": displayed text vanishes on " + std::to_string(printed_zero) + "/" +
                                   std::to_string(instances.size()) + " instances" +
                                   (r.has("note") ? " (" + r.get("note") + ")" : ""));
        }
    }
    if (report.outcomes.empty()) throw ParseError("unknown curated list " + list_id);
    return report;
}

SyzygyReport verify_curated(const Catalog& catalog, const std::string& list_id, const SyzygyOptions& options) {
    return verify_curated_records(catalog, list_id, options.fixtures.load("syzygies.fix"));
}

// ---------------------------------------------------------------------------------------------
// Generated families

std::vector<std::string> order4_invariants() {
    return {"f1'", "f2'", "Lambda3", "Lambda5_1", "Lambda5_2", "Lambda7_11", "Lambda7_12", "Lambda7_22", "M8"};
}

namespace {

struct BracketCache {
    const Catalog& catalog;
    std::vector<std::string> names;
    std::vector<Polynomial> polys;
    std::map<std::pair<std::size_t, std::size_t>, Polynomial> cache;

    BracketCache(const Catalog& c, std::vector<std::string> n) : catalog(c), names(std::move(n)) {
        for (const auto& name : names) polys.push_back(catalog.poly(name));
    }

    Polynomial get(std::size_t a, std::size_t b) {
        if (a == b) return Polynomial();
        if (a > b) return -get(b, a);
        auto key = std::make_pair(a, b);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        return cache[key] = bracket(polys[a], polys[b]);
    }
};

IdentityOutcome zero_outcome(IdentityInstance id, const Polynomial& value) {
    IdentityOutcome out;
    out.identity = std::move(id);
    out.pass = value.is_zero();
    out.residual = summarize(value);
    return out;
}

std::string joined(const std::vector<std::string>& names) {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : ", ") + n;
    return s;
}

}  // namespace

SyzygyReport order4_plucker_suite(const Catalog& catalog) {
    SyzygyReport report;
    report.suite = "plucker";
    BracketCache b(catalog, order4_invariants());
    const std::size_t n = b.names.size();
    std::vector<int> w;
    for (const auto& p : b.polys) w.push_back(weight(p));
    std::size_t counter = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            for (std::size_t r = q + 1; r < n; ++r) {
                Polynomial v = w[p] * b.polys[p] * b.get(q, r) + w[r] * b.polys[r] * b.get(p, q) +
                               w[q] * b.polys[q] * b.get(r, p);
                std::vector<std::string> ops{b.names[p], b.names[q], b.names[r]};
                report.outcomes.push_back(zero_outcome(
                    {IdentityFamily::plck1, "Plck1:" + std::to_string(++counter), ops,
                     "Plck1 over the nine order-4 invariants", "plck1(" + joined(ops) + ")"},
                    v));
            }
    counter = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            for (std::size_t r = q + 1; r < n; ++r)
                for (std::size_t s = r + 1; s < n; ++s) {
                    Polynomial v = b.get(p, q) * b.get(r, s) + b.get(s, p) * b.get(r, q) + b.get(q, s) * b.get(r, p);
                    std::vector<std::string> ops{b.names[p], b.names[q], b.names[r], b.names[s]};
                    report.outcomes.push_back(zero_outcome(
                        {IdentityFamily::plck2, "Plck2:" + std::to_string(++counter), ops,
                         "Plck2 over the nine order-4 invariants", "plck2(" + joined(ops) + ")"},
                        v));
                }
    report.notes.push_back(std::to_string(report.total()) +
                           " instances over the nine order-4 invariants; the reconstruction identifies some as "
                           "redundant (g, j, k, l, n, o), and the stated non-redundant count is 210");
    return report;
}

SyzygyReport order4_jacobi_suite(const Catalog& catalog) {
    SyzygyReport report;
    report.suite = "jacobi";
    BracketCache b(catalog, order4_invariants());
    const std::size_t n = b.names.size();
    std::size_t counter = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q)
            for (std::size_t r = q + 1; r < n; ++r) {
                Polynomial v = bracket(b.get(p, q), b.polys[r]) + bracket(b.get(r, p), b.polys[q]) +
                               bracket(b.get(q, r), b.polys[p]);
                std::vector<std::string> ops{b.names[p], b.names[q], b.names[r]};
                report.outcomes.push_back(zero_outcome({IdentityFamily::jacobi, "Jac:" + std::to_string(++counter),
                                                        ops, "Jacobi over the order-4 catalog",
                                                        jacobi_text(ops[0], ops[1], ops[2])},
                                                       v));
            }
    return report;
}

SyzygyReport jacobi_examples(const Catalog& catalog) {
    SyzygyReport report;
    report.suite = "jacobi-examples";
    auto add = [&](const std::string& id, const std::string& locator, const std::string& text) {
        report.outcomes.push_back(
            zero_outcome({IdentityFamily::jacobi, id, {}, locator, text}, evaluate_in_catalog(catalog, text)));
    };
    add("Jac:f1',f2',Lambda3", "Jacobi lemma, symmetry of Lambda7", jacobi_text("f1'", "f2'", "Lambda3"));
    add("Lambda7_12 = Lambda7_21", "Jacobi lemma, symmetry of Lambda7", "Lambda7_12 - Lambda7_21");
    for (int k = 1; k <= 2; ++k) {
        std::string l5 = "Lambda5_" + std::to_string(k);
        add("Jac:f1',f2'," + l5, "Jacobi relations for Lambda9", jacobi_text("f1'", "f2'", l5));
        add("Lambda9_12" + std::to_string(k) + " = Lambda9_21" + std::to_string(k), "Jacobi relations for Lambda9",
            "Lambda9_12" + std::to_string(k) + " - Lambda9_21" + std::to_string(k));
    }
    return report;
}

// ---------------------------------------------------------------------------------------------
// Reconstruction of the nine order-4 syzygies

namespace {

/// Catalog names as abstract symbols, with brackets read from a finite table.
class TableResolver : public Resolver {
public:
    std::map<std::pair<std::string, std::string>, Polynomial> table;

    Polynomial identifier(const std::string& token) override { return Polynomial::variable(abstract_var(token)); }

    Polynomial bracket(const Polynomial& p, const Polynomial& q) override {
        std::string a = symbol(p);
        std::string b = symbol(q);
        if (a == b) return Polynomial();
        auto it = table.find({a, b});
        if (it != table.end()) return it->second;
        it = table.find({b, a});
        if (it != table.end()) return -it->second;
        throw PreconditionError("no bracket table entry for [" + a + ", " + b + "]");
    }

private:
    static std::string symbol(const Polynomial& p) {
        if (p.size() == 1 && p.terms()[0].coeff == 1 && p.terms()[0].mono.size() == 1) {
            auto w = p.terms()[0].mono.words()[0];
            if (Monomial::exp_of(w) == 1) return var_info(Monomial::var_of(w)).name;
        }
        throw PreconditionError("bracket table operand is not a single symbol: " + to_string(p));
    }
};

Polynomial abstract_eval(TableResolver& resolver, const std::string& text,
                         const std::map<std::string, std::string>& renames = {}) {
    ExprPtr e = parse_expression(text);
    if (!renames.empty()) e = rename_identifiers(e, renames);
    return evaluate(*e, resolver);
}

/// A nonzero c with p = c q, when one exists.
std::optional<Rational> proportional(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero() || p.size() != q.size()) return std::nullopt;
    Rational c = p.terms()[0].coeff / q.terms()[0].coeff;
    if (p == q * c) return c;
    return std::nullopt;
}

int catalog_weight(const Catalog& catalog, const std::string& name) {
    if (catalog.has(name)) return catalog.at(name).meta.weight;
    const Polynomial* p = catalog.lookup(name);
    if (!p) throw PreconditionError("unknown operand " + name);
    return weight(*p);
}

}  // namespace

SyzygyReport reconstruction_suite(const Catalog& catalog, const SyzygyOptions& options) {
    SyzygyReport report;
    report.suite = "reconstruction";
    auto records = options.fixtures.load("reconstruction.fix");
    std::map<std::string, std::string> targets;
    for (const auto& r : options.fixtures.load("syzygies.fix"))
        if (r.get_or("list", "") == "ORDER4_NINE") targets[r.name] = r.get("expr");
    TableResolver table;
    for (const auto& r : records) {
        if (r.get_or("kind", "") != "bracket") continue;
        table.table[{r.get("left"), r.get("right")}] = abstract_eval(table, r.get("value"));
        Polynomial jets = evaluate_in_catalog(catalog, br(r.get("left"), r.get("right"))) -
                          evaluate_in_catalog(catalog, r.get("value"));
        report.outcomes.push_back(zero_outcome({IdentityFamily::reconstruction, r.name, {r.get("left"), r.get("right")},
                                                "bracket table of the order-3 generators",
                                                br(r.get("left"), r.get("right")) + " - (" + r.get("value") + ")"},
                                               jets));
    }
    for (const auto& r : records)
        if (r.get_or("kind", "") != "bracket") targets[r.name] = r.get("rewritten");

    const std::map<std::string, std::string> symmetric{{"Lambda7_21", "Lambda7_12"}};
    for (const auto& r : records) {
        std::string kind = r.get_or("kind", "");
        if (kind == "bracket") continue;
        auto ops = r.words("operands");
        std::string generated;
        if (kind == "plck1" && ops.size() == 3)
            generated = plck1_text(ops[0], catalog_weight(catalog, ops[0]), ops[1], catalog_weight(catalog, ops[1]),
                                   ops[2], catalog_weight(catalog, ops[2]));
        else if (kind == "plck2" && ops.size() == 4)
            generated = plck2_text(ops[0], ops[1], ops[2], ops[3]);
        else
            throw ParseError(r.where() + ": reconstruction record needs kind plck1 or plck2 with its operands");

        IdentityOutcome out;
        out.identity = {kind == "plck1" ? IdentityFamily::plck1 : IdentityFamily::plck2, r.name, ops,
                        r.get_or("locator", ""), generated};
        std::vector<std::string> problems;
        Polynomial g = abstract_eval(table, generated);
        if (abstract_eval(table, r.get("raw")) != g) problems.push_back("bracket form differs from the template");
        auto rewritten_scale = proportional(g, abstract_eval(table, r.get("rewritten")));
        if (!rewritten_scale)
            problems.push_back("rewritten form is not a multiple of the template");
        else if (*rewritten_scale != 1)
            report.notes.push_back(r.name + ": the template equals " + to_string(*rewritten_scale) +
                                   " times the displayed rewritten form");
        const std::string& target_id = r.get("target");
        if (!targets.count(target_id)) throw ParseError(r.where() + ": unknown target " + target_id);
        Polynomial target = abstract_eval(table, targets[target_id], symmetric);
        if (r.has("factor")) target *= abstract_eval(table, r.get("factor"));
        auto scale = proportional(abstract_eval(table, r.get("rewritten"), symmetric), target);
        if (!scale)
            problems.push_back("not a multiple of " + target_id);
        else
            out.detail = "yields " + target_id + (r.has("factor") ? " times " + r.get("factor") : "") + " with factor " +
                         to_string(*scale);
        Polynomial jets = evaluate_in_catalog(catalog, generated);
        out.residual = summarize(jets);
        if (!jets.is_zero()) problems.push_back("jet expansion is nonzero");
        out.pass = problems.empty();
        for (const auto& p : problems) out.detail += (out.detail.empty() ? "" : "; ") + p;
        report.outcomes.push_back(std::move(out));
        if (r.has("printed_raw"))
            report.notes.push_back(r.name + ": displayed bracket form " +
                                   (abstract_eval(table, r.get("printed_raw")) == g ? "matches" : "differs") +
                                   (r.has("note") ? " (" + r.get("note") + ")" : ""));
    }
    return report;
}

// ---------------------------------------------------------------------------------------------
// Restricted values

namespace {

/// num / Lambda3^den in the restricted ring.
struct Laurent {
    Polynomial num;
    int den = 0;
};

Laurent common(const Laurent& a, int den, const Polynomial& l3) {
    return {a.num * l3.pow(static_cast<unsigned>(den - a.den)), den};
}

Laurent laurent_eval(const Expr& e, const std::function<Polynomial(const std::string&)>& atom, const Polynomial& l3) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::number: return {Polynomial(e.number), 0};
        case K::identifier: return {atom(e.name), 0};
        case K::neg: {
            Laurent a = laurent_eval(*e.args[0], atom, l3);
            return {-a.num, a.den};
        }
        case K::add:
        case K::sub: {
            Laurent a = laurent_eval(*e.args[0], atom, l3);
            Laurent b = laurent_eval(*e.args[1], atom, l3);
            int d = std::max(a.den, b.den);
            a = common(a, d, l3);
            b = common(b, d, l3);
            return {e.kind == K::add ? a.num + b.num : a.num - b.num, d};
        }
        case K::mul: {
            Laurent a = laurent_eval(*e.args[0], atom, l3);
            Laurent b = laurent_eval(*e.args[1], atom, l3);
            return {a.num * b.num, a.den + b.den};
        }
        case K::pow: {
            Laurent a = laurent_eval(*e.args[0], atom, l3);
            return {a.num.pow(e.exponent), a.den * static_cast<int>(e.exponent)};
        }
        case K::div: {
            Laurent a = laurent_eval(*e.args[0], atom, l3);
            const Expr& d = *e.args[1];
            if (d.kind == K::number) return {a.num * (1 / d.number), a.den};
            if (d.kind == K::identifier && d.name == "Lambda3") return {a.num, a.den + 1};
            if (d.kind == K::pow && d.args[0]->kind == K::identifier && d.args[0]->name == "Lambda3")
                return {a.num, a.den + static_cast<int>(d.exponent)};
            throw ParseError("restricted values divide only by numbers and powers of Lambda3");
        }
        default: throw ParseError("unsupported construct in a restricted value: " + to_string(e));
    }
}

const std::vector<std::string> restricted_fundamentals{"Lambda3", "Lambda5_1", "M8", "N12"};

}  // namespace

SyzygyReport restricted_identities(const Catalog& catalog, const SyzygyOptions& options) {
    SyzygyReport report;
    report.suite = "restricted";
    std::map<std::string, Polynomial> fundamentals;
    for (const auto& name : restricted_fundamentals) fundamentals[name] = restrict_at_zero(catalog.poly(name));
    auto atom = [&](const std::string& name) {
        auto it = fundamentals.find(name);
        if (it == fundamentals.end()) throw ParseError("restricted values use Lambda3, Lambda5_1, M8 and N12, not " + name);
        return it->second;
    };
    const Polynomial& l3 = fundamentals["Lambda3"];
    for (const auto& r : options.fixtures.load("restricted.fix")) {
        if (r.get_or("fundamental", "no") == "yes") continue;
        Laurent v = laurent_eval(*parse_expression(r.get("value")), atom, l3);
        Polynomial lhs = restrict_at_zero(catalog.poly(r.name)) * l3.pow(static_cast<unsigned>(v.den));
        IdentityOutcome out = zero_outcome({IdentityFamily::restricted, r.name + "|0", {r.name}, r.get_or("locator", ""),
                                            r.name + "|0 = " + r.get("value")},
                                           lhs - v.num);
        out.detail = "cleared by Lambda3^" + std::to_string(v.den);
        report.outcomes.push_back(std::move(out));
        if (r.has("printed")) {
            Laurent p = laurent_eval(*parse_expression(r.get("printed")), atom, l3);
            Polynomial diff = restrict_at_zero(catalog.poly(r.name)) * l3.pow(static_cast<unsigned>(p.den)) - p.num;
            report.notes.push_back(r.name + "|0: displayed value " + (diff.is_zero() ? "holds" : "fails") +
                                   (r.has("note") ? " (" + r.get("note") + ")" : ""));
        }
    }
    return report;
}

std::vector<RestrictedValue> restricted_table(const SyzygyOptions& options) {
    std::map<std::string, Polynomial> symbols;
    for (const auto& name : restricted_fundamentals) symbols[name] = Polynomial::variable(abstract_var("|0" + name));
    auto atom = [&](const std::string& name) {
        auto it = symbols.find(name);
        if (it == symbols.end()) throw ParseError("unknown restricted fundamental " + name);
        return it->second;
    };
    std::vector<RestrictedValue> out;
    for (const auto& r : options.fixtures.load("restricted.fix")) {
        Laurent v = laurent_eval(*parse_expression(r.get("value")), atom, symbols["Lambda3"]);
        RestrictedValue rv;
        rv.name = r.name;
        rv.zero = v.num.is_zero();
        for (const auto& t : v.num.terms()) {
            RestrictedMonomial m;
            m.coefficient = t.coeff;
            for (const auto& name : restricted_fundamentals) {
                Var x = abstract_var("|0" + name);
                m.exponents.push_back(static_cast<int>(t.mono.degree(x)));
            }
            m.exponents[0] -= v.den;
            rv.terms.push_back(std::move(m));
        }
        out.push_back(std::move(rv));
    }
    return out;
}

// ---------------------------------------------------------------------------------------------
// Ranks

int jacobian_rank(const std::vector<Polynomial>& polys, std::uint64_t seed, int trials) {
    std::set<Var> vs;
    for (const auto& p : polys)
        for (Var v : p.variables()) vs.insert(v);
    std::vector<Var> vars(vs.begin(), vs.end());
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    int best = 0;
    for (int t = 0; t < trials; ++t) {
        Point pt;
        for (Var v : vars) pt[v] = Rational(num(rng), den(rng));
        for (auto& [v, q] : pt) q.canonicalize();
        best = std::max(best, jacobian_rank_at(polys, vars, pt));
    }
    return best;
}

SyzygyReport independence_rank_suite(const Catalog& catalog, const SyzygyOptions& options) {
    SyzygyReport report;
    report.suite = "ranks";
    auto probe = [&](const std::string& id, const std::string& locator, const std::vector<Polynomial>& polys, int target,
                     std::uint64_t salt) {
        int rank = jacobian_rank(polys, options.seed + salt, options.rank_trials);
        IdentityOutcome out;
        out.identity = {IdentityFamily::rank, id, {}, locator, "rank = " + std::to_string(target)};
        out.pass = rank == target;
        out.detail = "rank " + std::to_string(rank) + " of target " + std::to_string(target) + " over " +
                     std::to_string(options.rank_trials) + " trials";
        report.outcomes.push_back(std::move(out));
    };
    auto polys = [&](const std::vector<std::string>& names, bool restricted) {
        std::vector<Polynomial> out;
        for (const auto& n : names) out.push_back(restricted ? restrict_at_zero(catalog.poly(n)) : catalog.poly(n));
        return out;
    };
    probe("order4-bi-invariants", "transcendence degree of the order-4 bi-invariants",
          polys({"f1'", "Lambda3", "Lambda5_1", "Lambda7_11", "M8"}, false), 4, 1);
    probe("order4-nine", "transcendence degree of the nine order-4 invariants", polys(order4_invariants(), false), 5, 2);
    probe("restricted-fundamentals", "algebraic independence of the four restricted fundamentals",
          polys({"Lambda3", "Lambda5_1", "M8", "N12"}, true), 4, 3);
    Catalog order3 = build_catalog(JetContext{2, 3}, CatalogOptions{options.fixtures, false, false, true});
    probe("order3-generators", "algebraic independence of f1', f2', Lambda5_1, Lambda5_2 at order three",
          {order3.poly("f1'"), order3.poly("f2'"), order3.poly("Lambda5_1"), order3.poly("Lambda5_2")}, 4, 4);
    probe("dependent-pair", "a proportional pair", {jet(1, 1), 2 * jet(1, 1)}, 1, 5);
    return report;
}

// ---------------------------------------------------------------------------------------------
// Non-expressibility of the restricted ghosts

std::string to_string(const MembershipResult& result) {
    if (std::holds_alternative<Infeasible>(result)) return "Infeasible";
    if (const auto* u = std::get_if<Unsupported>(&result)) return "Unsupported: " + u->reason;
    const auto& f = std::get<Feasible>(result);
    std::string s = "Feasible(";
    for (std::size_t k = 0; k < f.exponents.size(); ++k) s += (k ? " " : "") + std::to_string(f.exponents[k]);
    return s + ")";
}

MembershipResult monomial_membership(const std::vector<int>& target, const std::vector<std::vector<int>>& generators) {
    const std::size_t dim = target.size();
    std::vector<std::size_t> bounded;
    std::vector<std::size_t> free;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const auto& v = generators[g];
        if (v.size() != dim) throw PreconditionError("exponent vectors of unequal length");
        bool any_positive = false;
        for (std::size_t k = 1; k < dim; ++k) {
            if (v[k] < 0) throw PreconditionError("only the first coordinate may be negative");
            any_positive = any_positive || v[k] > 0;
        }
        if (any_positive)
            bounded.push_back(g);
        else if (v[0] > 0)
            free.push_back(g);
        else if (v[0] < 0)
            throw PreconditionError("a generator that is a pure negative power is unsupported");
    }
    std::vector<int> e(generators.size(), 0);
    std::vector<int> rest = target;

    std::function<bool(std::size_t, int)> solve_free = [&](std::size_t k, int remaining) {
        if (k == free.size()) return remaining == 0;
        int c = generators[free[k]][0];
        for (int x = remaining / c; x >= 0; --x) {
            e[free[k]] = x;
            if (solve_free(k + 1, remaining - x * c)) return true;
        }
        e[free[k]] = 0;
        return false;
    };
    std::function<bool(std::size_t)> dfs = [&](std::size_t k) {
        if (k == bounded.size()) {
            for (std::size_t i = 1; i < dim; ++i)
                if (rest[i] != 0) return false;
            return rest[0] >= 0 && solve_free(0, rest[0]);
        }
        const auto& v = generators[bounded[k]];
        int cap = INT32_MAX;
        for (std::size_t i = 1; i < dim; ++i)
            if (v[i] > 0) cap = std::min(cap, rest[i] / v[i]);
        for (int x = 0; x <= cap; ++x) {
            for (std::size_t i = 0; i < dim; ++i) rest[i] -= x * v[i];
            e[bounded[k]] = x;
            bool ok = dfs(k + 1);
            for (std::size_t i = 0; i < dim; ++i) rest[i] += x * v[i];
            if (ok) return true;
        }
        e[bounded[k]] = 0;
        return false;
    };
    for (std::size_t i = 1; i < dim; ++i)
        if (target[i] < 0) return Infeasible{};
    if (dfs(0)) return Feasible{e};
    return Infeasible{};
}

std::vector<std::string> bracket_bi_invariants() {
    return {"f1'", "Lambda3", "Lambda5_1", "Lambda7_11", "M8", "Lambda9_111", "M10_1", "N12", "K12_11", "H14_1", "F16_11"};
}

MembershipResult ghost_nonmembership(const std::string& target, const std::vector<std::string>& generators,
                                     const SyzygyOptions& options) {
    auto table = restricted_table(options);
    auto find = [&](const std::string& name) -> const RestrictedValue& {
        for (const auto& v : table)
            if (v.name == name) return v;
        throw PreconditionError("no restricted value for " + name);
    };
    const RestrictedValue& t = find(target);
    if (t.zero) return Unsupported{target + " restricts to zero"};
    if (t.terms.size() != 1) return Unsupported{target + " restricts to a sum of " + std::to_string(t.terms.size()) + " monomials"};
    std::vector<std::vector<int>> vectors;
    std::vector<std::size_t> kept;
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const RestrictedValue& v = find(generators[g]);
        if (v.zero) continue;
        if (v.terms.size() != 1) return Unsupported{generators[g] + " restricts to a sum"};
        vectors.push_back(v.terms[0].exponents);
        kept.push_back(g);
    }
    MembershipResult r = monomial_membership(t.terms[0].exponents, vectors);
    if (auto* f = std::get_if<Feasible>(&r)) {
        std::vector<int> full(generators.size(), 0);
        for (std::size_t k = 0; k < kept.size(); ++k) full[kept[k]] = f->exponents[k];
        f->exponents = full;
    }
    return r;
}

// ---------------------------------------------------------------------------------------------
// Staircase families

namespace {

std::vector<int> int_words(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    int x;
    while (in >> x) out.push_back(x);
    return out;
}

/// Solves the square system m x = b exactly; nullopt when singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m, std::vector<Rational> b) {
    const std::size_t n = m.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m[pivot][c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[c]);
        std::swap(b[pivot], b[c]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = b[r] / m[r][r];
    return x;
}

std::vector<int> image(const ExponentFamily& f, const std::vector<int>& params) {
    std::vector<int> out = f.offset;
    for (std::size_t r = 0; r < out.size(); ++r)
        for (std::size_t c = 0; c < params.size(); ++c) out[r] += f.matrix[r][c] * params[c];
    return out;
}

bool next_tuple(std::vector<int>& t, int bound) {
    for (auto& x : t) {
        if (++x <= bound) return true;
        x = 0;
    }
    return false;
}

}  // namespace

std::vector<ExponentFamily> staircase_families(const SyzygyOptions& options) {
    std::vector<ExponentFamily> out;
    for (const auto& r : options.fixtures.load("staircase_families.fix")) {
        ExponentFamily f;
        f.name = r.name;
        f.offset = int_words(r.get("offset"));
        std::vector<std::string> rows;
        boost::split(rows, r.get("rows"), [](char c) { return c == ';'; });
        for (const auto& row : rows) f.matrix.push_back(int_words(row));
        if (f.matrix.size() != f.offset.size()) throw ParseError(r.where() + ": one row per coordinate expected");
        out.push_back(std::move(f));
    }
    return out;
}

DisjointnessResult families_disjoint(const ExponentFamily& a, const ExponentFamily& b) {
    const std::size_t dim = a.offset.size();
    const std::size_t pa = a.matrix[0].size();
    const std::size_t pb = b.matrix[0].size();
    std::vector<std::vector<Rational>> cols;
    for (std::size_t c = 0; c < pa; ++c) {
        std::vector<Rational> col;
        for (std::size_t r = 0; r < dim; ++r) col.push_back(a.matrix[r][c]);
        cols.push_back(col);
    }
    for (std::size_t c = 0; c < pb; ++c) {
        std::vector<Rational> col;
        for (std::size_t r = 0; r < dim; ++r) col.push_back(-b.matrix[r][c]);
        cols.push_back(col);
    }
    std::vector<Rational> rhs;
    for (std::size_t r = 0; r < dim; ++r) rhs.push_back(b.offset[r] - a.offset[r]);

    DisjointnessResult result;
    const std::size_t n = cols.size();
    std::vector<bool> pick(n, false);
    std::fill(pick.end() - static_cast<long>(dim - 1), pick.end(), true);
    do {
        std::vector<std::vector<Rational>> m;
        std::vector<Rational> v;
        for (std::size_t c = 0; c < n; ++c)
            if (pick[c]) {
                m.push_back(cols[c]);
                v.push_back(0);
            }
        m.push_back(rhs);
        v.push_back(-1);
        auto lambda = solve_square(m, v);
        if (!lambda) continue;
        bool ok = true;
        for (const auto& col : cols) {
            Rational s = 0;
            for (std::size_t r = 0; r < dim; ++r) s += (*lambda)[r] * col[r];
            if (s < 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            result.disjoint = true;
            result.certificate = *lambda;
            return result;
        }
    } while (std::next_permutation(pick.begin(), pick.end()));

    std::vector<int> x(pa, 0);
    do {
        std::vector<int> target = image(a, x);
        std::vector<int> y(pb, 0);
        do {
            if (image(b, y) == target) {
                std::vector<int> w = x;
                w.insert(w.end(), y.begin(), y.end());
                result.witness = w;
                return result;
            }
        } while (next_tuple(y, 5));
    } while (next_tuple(x, 5));
    return result;
}

SyzygyReport staircase_nonredundancy_check(const SyzygyOptions& options) {
    SyzygyReport report;
    report.suite = "staircase-nonredundancy";
    auto records = options.fixtures.load("staircase_families.fix");
    auto families = staircase_families(options);
    for (std::size_t k = 0; k < families.size(); ++k) {
        const auto& f = families[k];
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : f.matrix) rows.emplace_back(row.begin(), row.end());
        int rank = matrix_rank(rows);
        IdentityOutcome out;
        out.identity = {IdentityFamily::staircase, "(" + f.name + ") injective", {f.name}, records[k].get_or("locator", ""), ""};
        out.pass = rank == static_cast<int>(f.matrix[0].size());
        out.detail = "parameter matrix rank " + std::to_string(rank);
        report.outcomes.push_back(std::move(out));
    }
    for (std::size_t i = 0; i < families.size(); ++i)
        for (std::size_t j = i + 1; j < families.size(); ++j) {
            if (records[i].get_or("group", "") != records[j].get_or("group", "")) continue;
            DisjointnessResult d = families_disjoint(families[i], families[j]);
            IdentityOutcome out;
            out.identity = {IdentityFamily::staircase, "(" + families[i].name + ") & (" + families[j].name + ") empty",
                            {families[i].name, families[j].name}, records[j].get_or("locator", ""), ""};
            out.pass = d.disjoint;
            if (d.disjoint) {
                out.detail = "separating certificate";
                for (const auto& c : d.certificate) out.detail += " " + to_string(c);
            } else if (d.witness) {
                out.detail = "common point at parameters";
                for (int x : *d.witness) out.detail += " " + std::to_string(x);
            } else {
                out.detail = "no certificate and no common point in the search box";
            }
            report.outcomes.push_back(std::move(out));
        }
    return report;
}

// ---------------------------------------------------------------------------------------------
// Dimension three

SyzygyReport appendix3_suite(const Catalog& dim3, const SyzygyOptions& options) {
    SyzygyReport report;
    report.suite = "appendix3";
    FixtureRecord r = options.fixtures.find("catalog_nu3.fix", "D6_123");
    Polynomial w = wronskian3(dim3.ctx());
    Polynomial numerator = evaluate_in_catalog(dim3, r.get("numerator"));
    report.outcomes.push_back(zero_outcome({IdentityFamily::curated, "D6 quotient", {}, r.get_or("locator", ""),
                                            r.get("numerator") + " - f1'^2*D6_123"},
                                           numerator - jet(1, 1).pow(2) * w));
    report.outcomes.push_back(
        zero_outcome({IdentityFamily::curated, "D6 = wronskian", {}, r.get_or("locator", ""), "D6_123 - wronskian"},
                     dim3.poly("D6_123") - w));
    report.outcomes.push_back(zero_outcome({IdentityFamily::restricted, "D6|0 bordered", {}, r.get_or("locator", ""),
                                            "at0(D6_123) - (" + r.get("restricted") + ")"},
                                           restrict_at_zero(w) - evaluate_in_catalog(dim3, r.get("restricted"))));
    UnipotentAction three{3};
    for (const auto& e : dim3.entries()) {
        IdentityOutcome out;
        out.identity = {IdentityFamily::curated, e.name + " invariant", {e.name}, e.meta.locator, ""};
        auto inv = check_reparametrization_invariance(dim3.ctx(), e.poly);
        bool bi = is_bi_invariant(three, e.poly);
        out.pass = inv.invariant && inv.weight == e.meta.weight && bi == e.meta.bi_invariant;
        out.detail = "weight " + std::to_string(e.meta.weight) + (bi ? ", bi-invariant" : "");
        report.outcomes.push_back(std::move(out));
    }
    return report;
}

}  // namespace jb
