#include "jetbrackets/catalog.hpp"

#include <algorithm>
#include <boost/algorithm/string/trim.hpp>

#include <regex>

namespace jb {

std::string to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::base: return "base";
        case ConstructionKind::explicit_formula: return "explicit";
        case ConstructionKind::bracket: return "bracket";
        case ConstructionKind::ghost_quotient: return "ghost-quotient";
    }
    return "?";
}

void Catalog::add(NamedInvariant inv) {
    if (has(inv.name)) throw PreconditionError("duplicate catalog name " + inv.name);
    index_[inv.name] = entries_.size();
    entries_.push_back(std::move(inv));
}

const NamedInvariant& Catalog::at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw PreconditionError("unknown invariant " + name);
    return entries_[it->second];
}

const Polynomial* Catalog::lookup(const std::string& name) const {
    if (has(name)) return &poly(name);
    auto it = auxiliary.find(name);
    return it == auxiliary.end() ? nullptr : &it->second;
}

std::vector<std::string> Catalog::names() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) out.push_back(e.name);
    return out;
}

Polynomial bracket(const Polynomial& p, const Polynomial& q) {
    if (p.is_zero() || q.is_zero()) return Polynomial();
    int m = weight(p);
    int n = weight(q);
    return n * total_derivative(p) * q - m * p * total_derivative(q);
}

Polynomial bracket(const NamedInvariant& p, const NamedInvariant& q) { return bracket(p.poly, q.poly); }

Polynomial covariant(const Polynomial& p, int component) {
    if (p.is_zero()) return Polynomial();
    int m = weight(p);
    return jet(component, 1) * total_derivative(p) - m * jet(component, 2) * p;
}

Polynomial covariant(const NamedInvariant& p, int component) { return covariant(p.poly, component); }

Polynomial ghost_extract(const std::string& name, const Polynomial& numerator, int divisor_power) {
    if (divisor_power < 0) throw PreconditionError("negative divisor power for " + name);
    Polynomial divisor = jet(1, 1).pow(static_cast<unsigned>(divisor_power));
    return divide_or_throw(numerator, divisor, name + " numerator by f1'^" + std::to_string(divisor_power));
}

std::optional<Polynomial> minor_token(const std::string& token) {
    static const std::regex pattern("D([1-9])([1-9])(?:_([1-9])([1-9]))?");
    std::smatch m;
    if (!std::regex_match(token, m, pattern)) return std::nullopt;
    int a = std::stoi(m[1]);
    int b = std::stoi(m[2]);
    int i = m[3].matched ? std::stoi(m[3]) : 1;
    int j = m[4].matched ? std::stoi(m[4]) : 2;
    if (a == b || i == j) return Polynomial();
    Rational sign = 1;
    if (a > b) std::swap(a, b), sign = -sign;
    if (i > j) std::swap(i, j), sign = -sign;
    return delta(a, b, i, j) * sign;
}

Polynomial CatalogResolver::identifier(const std::string& token) {
    if (catalog_)
        if (const Polynomial* p = catalog_->lookup(token)) return *p;
    if (auto d = minor_token(token)) return *d;
    if (auto v = builtin_variable(token)) return Polynomial::variable(*v);
    throw ParseError("unknown identifier '" + token + "' in a catalog expression");
}

Polynomial CatalogResolver::call(const std::string& function, const std::vector<Polynomial>& args) {
    if (args.size() != 1) throw ParseError(function + " takes one argument");
    if (function == "D") return total_derivative(args[0]);
    if (function == "at0") return restrict_at_zero(args[0]);
    throw ParseError("unknown function '" + function + "'");
}

Polynomial CatalogResolver::bracket(const Polynomial& p, const Polynomial& q) { return jb::bracket(p, q); }

Polynomial evaluate_in_catalog(const Catalog& catalog, const std::string& text, const std::map<char, int>& indices) {
    ExprPtr e = parse_expression(text);
    if (!indices.empty()) e = instantiate(e, indices);
    CatalogResolver resolver(&catalog);
    return evaluate(*e, resolver);
}

namespace {

bool all_ones_suffix(const std::string& name) {
    auto underscore = name.find('_');
    if (underscore == std::string::npos) return true;
    for (std::size_t k = underscore + 1; k < name.size(); ++k)
        if (name[k] != '1') return false;
    return true;
}

class Builder {
public:
    Builder(const JetContext& ctx, const CatalogOptions& options) : cat_(ctx), options_(options) {}

    Catalog take() { return std::move(cat_); }
    Catalog& catalog() { return cat_; }

    const Polynomial& operator()(const std::string& name) const { return cat_.poly(name); }

    void add(const std::string& name, Polynomial poly, ConstructionKind kind, const std::string& recipe,
             std::vector<std::string> parents = {}, int divisor_power = 0, bool ghost = false) {
        NamedInvariant inv;
        inv.name = name;
        inv.ctx = cat_.ctx();
        inv.meta.weight = weight(poly);
        inv.meta.bidegree = bidegree_of(poly);
        inv.meta.ghost = ghost;
        inv.meta.bi_invariant = bi_invariant_name(name) || ghost;
        inv.construction = Construction{kind, recipe, std::move(parents), divisor_power};
        inv.poly = std::move(poly);
        cat_.add(std::move(inv));
    }

    Polynomial divide(const Polynomial& p, int component, const std::string& what) {
        return divide_or_throw(p, jet(component, 1), what);
    }

    void relation(const std::string& name, const std::string& locator, const Polynomial& lhs, const Polynomial& rhs,
                  const std::string& note = {}) {
        ConstructionCheck c{name, locator, false, lhs - rhs, note};
        c.agree = c.residual.is_zero();
        record(std::move(c));
    }

    void record(ConstructionCheck c) {
        bool bad = !c.agree;
        std::string what = c.name;
        Polynomial residual = c.residual;
        cat_.checks.push_back(std::move(c));
        if (bad && options_.strict)
            throw ConstructionMismatch("construction mismatch for " + what + " (residual with " +
                                           std::to_string(residual.size()) + " terms)",
                                       residual);
    }

    void set_locator(const std::string& name, const std::string& locator) {
        const_cast<NamedInvariant&>(cat_.at(name)).meta.locator = locator;
    }

    void compare_explicit(const std::string& file) {
        for (const FixtureRecord& r : options_.fixtures.load(file)) {
            for (const FixtureInstance& inst : instances_of(r)) {
                const Polynomial* built = cat_.lookup(inst.name);
                if (!built) continue;
                if (cat_.has(inst.name)) set_locator(inst.name, r.get_or("locator", ""));
                if (!r.has("expr")) continue;
                Polynomial explicit_form = evaluate_in_catalog(Catalog(cat_.ctx()), r.get("expr"), inst.indices);
                ConstructionCheck c{inst.name, r.get_or("locator", ""), false, explicit_form - *built, {}};
                c.agree = c.residual.is_zero();
                if (r.has("weight") && r.get_int("weight") != weight(*built)) {
                    c.agree = false;
                    c.note = "fixture weight " + r.get("weight") + " differs";
                }
                if (r.has("printed")) {
                    Polynomial printed = evaluate_in_catalog(Catalog(cat_.ctx()), r.get("printed"), inst.indices);
                    bool printed_ok = printed == *built;
                    c.note += std::string(c.note.empty() ? "" : "; ") + "displayed variant " +
                              (printed_ok ? "also agrees" : "does not agree") +
                              (r.has("note") ? " (" + r.get("note") + ")" : "");
                }
                record(std::move(c));
            }
        }
    }

private:
    bool bi_invariant_name(const std::string& name) const {
        if (cat_.ctx().nu == 3)
            return name == "f1'" || name == "Lambda3_12" || name == "Lambda5_12_1" || name == "D6_123";
        if (name == "f2'") return false;
        return all_ones_suffix(name);
    }

    Catalog cat_;
    const CatalogOptions& options_;
};

std::string idx(int i) { return std::to_string(i); }

std::string fp(int i) { return "f" + idx(i) + "'"; }

void build_nu2(Builder& b, int kappa, bool ghosts, const CatalogOptions& options) {
    using K = ConstructionKind;
    for (int i = 1; i <= 2; ++i) b.add(fp(i), jet(i, 1), K::base, "first derivative");
    if (kappa < 2) return;
    b.add("Lambda3", bracket(b("f2'"), b("f1'")), K::bracket, "[f2', f1']", {"f2'", "f1'"});
    b.relation("[f1', f2'] = -Lambda3", "bracket of the first derivatives", bracket(b("f1'"), b("f2'")), -b("Lambda3"));
    if (kappa < 3) return;
    for (int i = 1; i <= 2; ++i)
        b.add("Lambda5_" + idx(i), bracket(b("Lambda3"), b(fp(i))), K::bracket, "[Lambda3, " + fp(i) + "]",
              {"Lambda3", fp(i)});
    if (kappa < 4) return;
    std::map<std::string, Polynomial> l7;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            l7[idx(i) + idx(j)] = bracket(b("Lambda5_" + idx(i)), b(fp(j)));
    b.relation("Lambda7_12 = Lambda7_21", "index symmetry of Lambda7", l7["12"], l7["21"]);
    b.catalog().auxiliary["Lambda7_21"] = l7["21"];
    for (const char* ij : {"11", "12", "22"})
        b.add(std::string("Lambda7_") + ij, l7[ij], K::bracket,
              std::string("[Lambda5_") + ij[0] + ", f" + ij[1] + "']", {std::string("Lambda5_") + ij[0], fp(ij[1] - '0')});
    Polynomial m8 = b.divide(bracket(b("Lambda5_1"), b("Lambda3")), 1, "[Lambda5_1, Lambda3] by f1'");
    Polynomial m8_alt = b.divide(bracket(b("Lambda5_2"), b("Lambda3")), 2, "[Lambda5_2, Lambda3] by f2'");
    b.relation("[Lambda5_2, Lambda3] / f2' = M8", "second weight-8 bracket", m8_alt, m8);
    b.add("M8", m8, K::bracket, "[Lambda5_1, Lambda3] / f1'", {"Lambda5_1", "Lambda3"}, 1);
    if (kappa < 5) return;

    std::map<std::string, Polynomial> l9;
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                l9[idx(i) + idx(j) + idx(k)] = bracket(l7[idx(i) + idx(j)], b(fp(k)));
    for (const char* ijk : {"111", "121", "212", "222"})
        b.add(std::string("Lambda9_") + ijk, l9[ijk], K::bracket,
              std::string("[Lambda7_") + ijk[0] + ijk[1] + ", f" + ijk[2] + "']");
    for (const char* ijk : {"112", "122", "211", "221"}) b.catalog().auxiliary[std::string("Lambda9_") + ijk] = l9[ijk];
    b.relation("Lambda9_112 = Lambda9_121 - f1' M8", "four index relations of Lambda9", l9["112"],
               l9["121"] - b("f1'") * b("M8"));
    b.relation("Lambda9_121 = Lambda9_211", "four index relations of Lambda9", l9["121"], l9["211"]);
    b.relation("Lambda9_122 = Lambda9_212", "four index relations of Lambda9", l9["122"], l9["212"]);
    b.relation("Lambda9_221 = Lambda9_212 + f2' M8", "four index relations of Lambda9", l9["221"],
               l9["212"] + b("f2'") * b("M8"));
    for (int i = 1; i <= 2; ++i)
        b.add("M10_" + idx(i), bracket(b("M8"), b(fp(i))), K::bracket, "[M8, " + fp(i) + "]", {"M8", fp(i)});
    b.add("N12", bracket(b("M8"), b("Lambda3")), K::bracket, "[M8, Lambda3]", {"M8", "Lambda3"});

    Polynomial k111 = bracket(b("Lambda7_11"), b("Lambda5_1"));
    Polynomial k112 = bracket(b("Lambda7_11"), b("Lambda5_2"));
    Polynomial k221 = bracket(b("Lambda7_22"), b("Lambda5_1"));
    Polynomial k222 = bracket(b("Lambda7_22"), b("Lambda5_2"));
    Rational five_halves(5, 2);
    Polynomial k12_11 = b.divide(k111, 1, "K13_111 by f1'");
    Polynomial k12_12 = b.divide(k112 + five_halves * b("Lambda3") * b("M10_1") + 5 * b("Lambda5_1") * b("M8"), 1,
                                 "K13_112 + (5/2) Lambda3 M10_1 + 5 Lambda5_1 M8 by f1'");
    Polynomial k12_21 = b.divide(k221 - five_halves * b("Lambda3") * b("M10_2") - 5 * b("Lambda5_2") * b("M8"), 2,
                                 "K13_221 - (5/2) Lambda3 M10_2 - 5 Lambda5_2 M8 by f2'");
    Polynomial k12_22 = b.divide(k222, 2, "K13_222 by f2'");
    b.relation("K12_12 = K12_21", "polarizations of K12", k12_12, k12_21);
    b.relation("[Lambda7_12, Lambda5_1] = [Lambda7_11, Lambda5_2] + 5 M8 Lambda5_1 + 5 Lambda3 M10_1",
               "fifth bracket family reduction", bracket(b("Lambda7_12"), b("Lambda5_1")),
               k112 + 5 * b("M8") * b("Lambda5_1") + 5 * b("Lambda3") * b("M10_1"));
    b.relation("[Lambda7_12, Lambda5_2] = [Lambda7_22, Lambda5_1] - 5 M8 Lambda5_2 - 5 Lambda3 M10_2",
               "fifth bracket family reduction", bracket(b("Lambda7_12"), b("Lambda5_2")),
               k221 - 5 * b("M8") * b("Lambda5_2") - 5 * b("Lambda3") * b("M10_2"));
    b.add("K12_11", k12_11, K::bracket, "[Lambda7_11, Lambda5_1] / f1'", {"Lambda7_11", "Lambda5_1"}, 1);
    b.add("K12_12", k12_12, K::bracket, "([Lambda7_11, Lambda5_2] + (5/2) Lambda3 M10_1 + 5 Lambda5_1 M8) / f1'",
          {"Lambda7_11", "Lambda5_2", "Lambda3", "M10_1", "Lambda5_1", "M8"}, 1);
    b.add("K12_21", k12_21, K::bracket, "([Lambda7_22, Lambda5_1] - (5/2) Lambda3 M10_2 - 5 Lambda5_2 M8) / f2'",
          {"Lambda7_22", "Lambda5_1", "Lambda3", "M10_2", "Lambda5_2", "M8"}, 1);
    b.add("K12_22", k12_22, K::bracket, "[Lambda7_22, Lambda5_2] / f2'", {"Lambda7_22", "Lambda5_2"}, 1);
    for (int i = 1; i <= 2; ++i)
        b.add("H14_" + idx(i), bracket(b("M8"), b("Lambda5_" + idx(i))), K::bracket, "[M8, Lambda5_" + idx(i) + "]",
              {"M8", "Lambda5_" + idx(i)});
    for (const char* ij : {"11", "12", "22"})
        b.add(std::string("F16_") + ij, bracket(b("M8"), l7[ij]), K::bracket, std::string("[M8, Lambda7_") + ij + "]",
              {"M8", std::string("Lambda7_") + ij});
    b.catalog().auxiliary["F16_21"] = bracket(b("M8"), l7["21"]);

    if (!ghosts) return;
    auto records = options.fixtures.load("ghosts.fix");
    for (const FixtureRecord& r : records) {
        if (r.has("equals")) continue;
        Polynomial num = evaluate_in_catalog(b.catalog(), r.get("numerator"));
        int power = r.get_int("divisor_power");
        b.add(r.name, ghost_extract(r.name, num, power), K::ghost_quotient, "(" + r.get("numerator") + ") / f1'", {},
              power, true);
        b.set_locator(r.name, r.get("locator"));
    }
    for (const FixtureRecord& r : records) {
        if (!r.has("equals")) continue;
        Polynomial num = evaluate_in_catalog(b.catalog(), r.get("numerator"));
        Polynomial q = ghost_extract(r.name, num, r.get_int("divisor_power"));
        if (r.get_or("listed", "yes") == "no") {
            b.catalog().auxiliary[r.name] = q;
        } else {
            b.add(r.name, q, K::ghost_quotient, "(" + r.get("numerator") + ") / f1'", {}, r.get_int("divisor_power"),
                  true);
            b.set_locator(r.name, r.get("locator"));
        }
        b.relation(r.name + " = " + r.get("equals"), r.get("locator"), q, evaluate_in_catalog(b.catalog(), r.get("equals")));
    }
}

void build_nu3(Builder& b, const CatalogOptions& options) {
    using K = ConstructionKind;
    for (int i = 1; i <= 3; ++i) b.add(fp(i), jet(i, 1), K::base, "first derivative");
    const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (auto& p : pairs) {
        std::string ij = idx(p[0]) + idx(p[1]);
        b.add("Lambda3_" + ij, bracket(b(fp(p[1])), b(fp(p[0]))), K::bracket, "[" + fp(p[1]) + ", " + fp(p[0]) + "]");
    }
    for (auto& p : pairs)
        for (int k = 1; k <= 3; ++k) {
            std::string ij = idx(p[0]) + idx(p[1]);
            b.add("Lambda5_" + ij + "_" + idx(k), covariant(b("Lambda3_" + ij), k), K::bracket,
                  "(Lambda3_" + ij + ")_{;" + idx(k) + "}");
        }
    FixtureRecord r = options.fixtures.find("catalog_nu3.fix", "D6_123");
    Polynomial num = evaluate_in_catalog(b.catalog(), r.get("numerator"));
    b.add("D6_123", ghost_extract("D6_123", num, r.get_int("divisor_power")), K::ghost_quotient,
          "(" + r.get("numerator") + ") / f1'^2", {}, r.get_int("divisor_power"));
    b.relation("D6_123 = wronskian", r.get("locator"), b("D6_123"), wronskian3(b.catalog().ctx()));
}

}  // namespace

Catalog build_catalog(const JetContext& ctx, const CatalogOptions& options) {
    require_supported(ctx);
    Builder b(ctx, options);
    if (ctx.nu == 2) {
        build_nu2(b, ctx.kappa, options.include_ghosts && ctx.kappa == 5, options);
        if (options.compare_explicit) b.compare_explicit("catalog_nu2.fix");
    } else {
        build_nu3(b, options);
        if (options.compare_explicit) b.compare_explicit("catalog_nu3.fix");
    }
    return b.take();
}

std::vector<std::string> fundamental_names(const JetContext& ctx) {
    if (ctx.nu == 3)
        return {"f1'",          "f2'",          "f3'",          "Lambda3_12",   "Lambda3_13",   "Lambda3_23",
                "Lambda5_12_1", "Lambda5_12_2", "Lambda5_12_3", "Lambda5_13_1", "Lambda5_13_2", "Lambda5_13_3",
                "Lambda5_23_1", "Lambda5_23_2", "Lambda5_23_3", "D6_123"};
    std::vector<std::string> out{"f1'", "f2'"};
    if (ctx.kappa >= 2) out.push_back("Lambda3");
    if (ctx.kappa >= 3) out.insert(out.end(), {"Lambda5_1", "Lambda5_2"});
    if (ctx.kappa >= 4) out.insert(out.end(), {"Lambda7_11", "Lambda7_12", "Lambda7_22", "M8"});
    if (ctx.kappa >= 5)
        out.insert(out.end(), {"Lambda9_111", "Lambda9_121", "Lambda9_212", "Lambda9_222", "M10_1", "M10_2", "N12",
                               "K12_11", "K12_12", "K12_21", "K12_22", "H14_1", "H14_2", "F16_11", "F16_12", "F16_22"});
    return out;
}

std::vector<std::string> bi_invariant_names(const Catalog& catalog) {
    std::vector<std::string> out;
    for (const auto& e : catalog.entries())
        if (e.meta.bi_invariant) out.push_back(e.name);
    return out;
}

namespace {

const FixtureRecord* find_record(const std::vector<FixtureRecord>& records, const std::string& name,
                                 std::map<char, int>& indices) {
    for (const auto& r : records)
        for (const auto& inst : instances_of(r))
            if (inst.name == name) {
                indices = inst.indices;
                return &r;
            }
    return nullptr;
}

DisplayCheck check_instance(const Catalog& catalog, const FixtureRecord& r, const FixtureInstance& inst) {
    DisplayCheck c;
    c.name = inst.name;
    c.locator = r.get_or("locator", "");
    Polynomial target = evaluate_in_catalog(catalog, r.get("target"), inst.indices);
    Polynomial shown = evaluate_in_catalog(catalog, r.get("expr"), inst.indices);
    c.residual = shown - target;
    c.pass = c.residual.is_zero();
    if (r.has("printed")) {
        c.printed_pass = evaluate_in_catalog(catalog, r.get("printed"), inst.indices) == target;
        c.note = std::string("displayed variant ") + (*c.printed_pass ? "agrees" : "does not agree") +
                 (r.has("note") ? " (" + r.get("note") + ")" : "");
    }
    return c;
}

DisplayCheck check_display(const Catalog& catalog, const FixtureRecord& r, const FixtureInstance& inst) {
    DisplayCheck c;
    c.name = inst.name;
    c.locator = r.get_or("locator", "");
    const Polynomial& target = catalog.poly(inst.name);
    c.residual = evaluate_in_catalog(catalog, r.get("display"), inst.indices) - target;
    c.pass = c.residual.is_zero();
    if (!c.pass) c.note = "displayed form differs from the constructed value";
    if (r.has("printed")) {
        c.printed_pass = evaluate_in_catalog(catalog, r.get("printed"), inst.indices) == target;
        c.note = std::string("displayed variant ") + (*c.printed_pass ? "agrees" : "does not agree") +
                 (r.has("note") ? " (" + r.get("note") + ")" : "");
    }
    return c;
}

}  // namespace

std::vector<DisplayCheck> verify_display_forms(const Catalog& catalog, const std::vector<FixtureRecord>& records) {
    std::vector<DisplayCheck> out;
    for (const auto& r : records) {
        if (!r.has("target") && !r.has("display")) continue;
        for (const auto& inst : instances_of(r)) {
            if (r.has("target")) {
                out.push_back(check_instance(catalog, r, inst));
                continue;
            }
            if (catalog.has(inst.name)) out.push_back(check_display(catalog, r, inst));
        }
    }
    return out;
}

DisplayCheck verify_display_form(const Catalog& catalog, const std::string& name,
                                 const std::vector<FixtureRecord>& records) {
    std::map<char, int> indices;
    const FixtureRecord* r = find_record(records, name, indices);
    if (!r || (!r->has("target") && !r->has("display"))) throw PreconditionError("no displayed form named " + name);
    FixtureInstance inst{name, indices};
    if (r->has("target")) return check_instance(catalog, *r, inst);
    return check_display(catalog, *r, inst);
}

std::vector<SpotCheck> spot_checks(const std::vector<FixtureRecord>& records) {
    std::vector<SpotCheck> out;
    for (const auto& r : records) {
        if (!r.has("spot")) continue;
        const std::string& spec = r.get("spot");
        auto eq = spec.find('=');
        if (eq == std::string::npos) throw ParseError(r.where() + ": spot needs 'monomial = value'");
        SpotCheck s;
        s.name = r.name;
        s.monomial = spec.substr(0, eq);
        s.monomial = boost::algorithm::trim_copy(s.monomial);
        s.expected = parse_rational(boost::algorithm::trim_copy(spec.substr(eq + 1)));
        Polynomial shown = parse_polynomial(r.has("printed") ? r.get("printed") : r.get("display"));
        Polynomial mono = parse_polynomial(s.monomial);
        if (mono.size() != 1) throw ParseError(r.where() + ": spot monomial must be a single term");
        s.displayed = shown.coefficient(mono.terms().front().mono);
        s.pass = s.displayed == s.expected;
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace jb
