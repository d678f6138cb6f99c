#include "jetbrackets/polynomial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace jb {

// ---------------------------------------------------------------- variables

struct VariableTable::Impl {
    mutable std::mutex mutex;
    std::vector<VariableId> ids;
    std::map<std::tuple<int, int, int, std::string>, Var> index;
    VariableCaps caps;
};

namespace {

std::tuple<int, int, int, std::string> key_of(const VariableId& id) {
    return {static_cast<int>(id.kind), id.component, id.order, id.name};
}

}  // namespace

VariableTable& VariableTable::instance() {
    static VariableTable table;
    return table;
}

VariableTable::VariableTable() : impl_(new Impl) {
    for (int lambda = 1; lambda <= impl_->caps.max_order; ++lambda)
        for (int i = 1; i <= impl_->caps.max_component; ++i)
            intern(VariableId{VarKind::jet, i, lambda, {}});
    for (int mu = 1; mu <= impl_->caps.max_order; ++mu) intern(VariableId{VarKind::reparam, 0, mu, {}});
}

Var VariableTable::intern(const VariableId& id) {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    auto key = key_of(id);
    auto it = impl_->index.find(key);
    if (it != impl_->index.end()) return it->second;
    if (impl_->ids.size() >= 0xffffu) throw BudgetExceeded("variable table is full");
    Var v = static_cast<Var>(impl_->ids.size());
    impl_->ids.push_back(id);
    impl_->index.emplace(std::move(key), v);
    return v;
}

Var VariableTable::jet(int component, int order) {
    VariableCaps c = caps();
    if (component < 1 || component > c.max_component || order < 1 || order > c.max_order)
        throw OrderCapExceeded("jet variable f" + std::to_string(component) + "^(" + std::to_string(order) +
                               ") exceeds the caps (components <= " + std::to_string(c.max_component) +
                               ", orders <= " + std::to_string(c.max_order) + ")");
    return intern(VariableId{VarKind::jet, component, order, {}});
}

Var VariableTable::reparam(int order) {
    VariableCaps c = caps();
    if (order < 1 || order > c.max_order)
        throw OrderCapExceeded("reparametrization derivative of order " + std::to_string(order) +
                               " exceeds the cap " + std::to_string(c.max_order));
    return intern(VariableId{VarKind::reparam, 0, order, {}});
}

Var VariableTable::abstract(const std::string& name) {
    if (name.empty()) throw PreconditionError("abstract variable needs a name");
    return intern(VariableId{VarKind::abstract, 0, 0, name});
}

Var VariableTable::integration(const std::string& name) {
    if (name.empty()) throw PreconditionError("integration variable needs a name");
    return intern(VariableId{VarKind::integration, 0, 0, name});
}

const VariableId& VariableTable::info(Var v) const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    if (v >= impl_->ids.size()) throw PreconditionError("unknown variable index " + std::to_string(v));
    return impl_->ids[v];
}

std::string VariableTable::name(Var v) const {
    const VariableId& id = info(v);
    switch (id.kind) {
        case VarKind::jet: return "f" + std::to_string(id.component) + std::string(id.order, '\'');
        case VarKind::reparam: return "phi" + std::string(id.order, '\'');
        case VarKind::abstract: return id.name;
        case VarKind::integration: return "@" + id.name;
    }
    return "?";
}

std::size_t VariableTable::size() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->ids.size();
}

VariableCaps VariableTable::caps() const {
    std::lock_guard<std::mutex> lock(impl_->mutex);
    return impl_->caps;
}

void VariableTable::set_caps(VariableCaps caps) {
    if (caps.max_component < 1 || caps.max_order < 1) throw PreconditionError("variable caps must be positive");
    std::lock_guard<std::mutex> lock(impl_->mutex);
    impl_->caps = caps;
}

Var jet_var(int component, int order) { return VariableTable::instance().jet(component, order); }
Var phi_var(int order) { return VariableTable::instance().reparam(order); }
Var abstract_var(const std::string& name) { return VariableTable::instance().abstract(name); }
Var integration_var(const std::string& name) { return VariableTable::instance().integration(name); }
std::string var_name(Var v) { return VariableTable::instance().name(v); }
const VariableId& var_info(Var v) { return VariableTable::instance().info(v); }

// ---------------------------------------------------------------- monomials

Monomial Monomial::variable(Var v, unsigned exp) {
    Monomial m;
    if (exp > 0) m.words_.push_back(pack(v, exp));
    return m;
}

Monomial Monomial::from_pairs(std::vector<std::pair<Var, unsigned>> pairs) {
    std::sort(pairs.begin(), pairs.end());
    Monomial m;
    for (const auto& [v, e] : pairs) {
        if (e == 0) continue;
        if (!m.words_.empty() && var_of(m.words_.back()) == v) {
            unsigned total = exp_of(m.words_.back()) + e;
            if (total > 0xffffu) throw BudgetExceeded("exponent overflow");
            m.words_.back() = pack(v, total);
        } else {
            m.words_.push_back(pack(v, e));
        }
    }
    return m;
}

unsigned Monomial::degree(Var v) const {
    for (Word w : words_)
        if (var_of(w) == v) return exp_of(w);
    return 0;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (Word w : words_) d += exp_of(w);
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    std::size_t j = 0;
    for (Word w : words_) {
        Var v = var_of(w);
        while (j < other.words_.size() && var_of(other.words_[j]) < v) ++j;
        if (j == other.words_.size() || var_of(other.words_[j]) != v || exp_of(other.words_[j]) < exp_of(w))
            return false;
        ++j;
    }
    return true;
}

Monomial Monomial::quotient(const Monomial& other) const {
    Monomial r;
    std::size_t j = 0;
    for (Word w : words_) {
        Var v = var_of(w);
        unsigned e = exp_of(w);
        if (j < other.words_.size() && var_of(other.words_[j]) == v) {
            unsigned d = exp_of(other.words_[j]);
            if (d > e) throw PreconditionError("monomial quotient is not a monomial");
            e -= d;
            ++j;
        }
        if (e > 0) r.words_.push_back(pack(v, e));
    }
    if (j != other.words_.size()) throw PreconditionError("monomial quotient is not a monomial");
    return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial r;
    std::size_t i = 0, j = 0;
    const auto& a = words_;
    const auto& b = other.words_;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && var_of(a[i]) < var_of(b[j]))) {
            r.words_.push_back(a[i++]);
        } else if (i == a.size() || var_of(b[j]) < var_of(a[i])) {
            r.words_.push_back(b[j++]);
        } else {
            r.words_.push_back(pack(var_of(a[i]), std::max(exp_of(a[i]), exp_of(b[j]))));
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::coprime(const Monomial& other) const {
    std::size_t i = 0, j = 0;
    while (i < words_.size() && j < other.words_.size()) {
        Var a = var_of(words_[i]);
        Var b = var_of(other.words_[j]);
        if (a == b) return false;
        if (a < b) ++i; else ++j;
    }
    return true;
}

Monomial Monomial::without(Var v) const {
    Monomial r;
    for (Word w : words_)
        if (var_of(w) != v) r.words_.push_back(w);
    return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    const auto& x = a.words_;
    const auto& y = b.words_;
    r.words_.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        Var u = Monomial::var_of(x[i]);
        Var v = Monomial::var_of(y[j]);
        if (u < v) {
            r.words_.push_back(x[i++]);
        } else if (v < u) {
            r.words_.push_back(y[j++]);
        } else {
            unsigned e = Monomial::exp_of(x[i]) + Monomial::exp_of(y[j]);
            if (e > 0xffffu) throw BudgetExceeded("exponent overflow");
            r.words_.push_back(Monomial::pack(u, e));
            ++i;
            ++j;
        }
    }
    r.words_.insert(r.words_.end(), x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
    r.words_.insert(r.words_.end(), y.begin() + static_cast<std::ptrdiff_t>(j), y.end());
    return r;
}

std::size_t Monomial::hash() const {
    std::uint64_t h = 1469598103934665603ull;
    for (Word w : words_) {
        h ^= w;
        h *= 1099511628211ull;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- orders

MonomialOrder::MonomialOrder(std::vector<Var> priority) : priority_(std::move(priority)) {
    for (std::size_t k = 0; k < priority_.size(); ++k) {
        Var v = priority_[k];
        if (rank_.size() <= v) rank_.resize(static_cast<std::size_t>(v) + 1, -1);
        if (rank_[v] >= 0) throw PreconditionError("variable " + var_name(v) + " listed twice in a monomial order");
        rank_[v] = static_cast<int>(k);
    }
}

bool MonomialOrder::lists(Var v) const { return v < rank_.size() && rank_[v] >= 0; }

int MonomialOrder::rank(Var v) const {
    if (lists(v)) return rank_[v];
    return static_cast<int>(priority_.size()) + static_cast<int>(v);
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    auto ranked = [this](const Monomial& m) {
        boost::container::small_vector<std::pair<int, unsigned>, 8> out;
        for (Monomial::Word w : m.words()) out.emplace_back(rank(Monomial::var_of(w)), Monomial::exp_of(w));
        std::sort(out.begin(), out.end());
        return out;
    };
    auto x = ranked(a);
    auto y = ranked(b);
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t k = 0; k < n; ++k) {
        if (x[k].first != y[k].first) return x[k].first < y[k].first ? 1 : -1;
        if (x[k].second != y[k].second) return x[k].second > y[k].second ? 1 : -1;
    }
    if (x.size() == y.size()) return 0;
    return x.size() > y.size() ? 1 : -1;
}

// ---------------------------------------------------------------- polynomials

namespace {

bool term_less(const Term& a, const Term& b) { return a.mono < b.mono; }

using Accumulator = std::unordered_map<Monomial, Rational, MonomialHash>;

std::vector<Term> drain(Accumulator& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (sgn(c) != 0) out.push_back(Term{m, std::move(c)});
    std::sort(out.begin(), out.end(), term_less);
    return out;
}

}  // namespace

Polynomial::Polynomial(const Rational& c) {
    if (sgn(c) != 0) terms_.push_back(Term{Monomial(), c});
    if (!terms_.empty()) terms_[0].coeff.canonicalize();
}

Polynomial Polynomial::variable(Var v, unsigned exp) { return monomial(Monomial::variable(v, exp), Rational(1)); }

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
    Polynomial p;
    if (sgn(c) != 0) p.terms_.push_back(Term{m, c});
    if (!p.terms_.empty()) p.terms_[0].coeff.canonicalize();
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    for (auto& t : terms) t.coeff.canonicalize();
    std::sort(terms.begin(), terms.end(), term_less);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
        } else {
            if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
    return Polynomial(std::move(out), true);
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

Rational Polynomial::constant_term() const {
    if (!terms_.empty() && terms_[0].mono.is_one()) return terms_[0].coeff;
    return Rational(0);
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& x) { return t.mono < x; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational(0);
}

std::vector<Var> Polynomial::variables() const {
    std::vector<Var> vs;
    for (const auto& t : terms_)
        for (auto w : t.mono.words()) vs.push_back(Monomial::var_of(w));
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
    return vs;
}

bool Polynomial::contains(Var v) const {
    for (const auto& t : terms_)
        if (t.mono.degree(v) > 0) return true;
    return false;
}

unsigned Polynomial::degree(Var v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree(v));
    return d;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono < b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono < a[i].mono) {
            out.push_back(Term{b[j].mono, subtract ? Rational(-b[j].coeff) : b[j].coeff});
            ++j;
        } else {
            Rational c = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (sgn(c) != 0) out.push_back(Term{a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& q) {
    if (q.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, q.terms_, false);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& q) {
    if (q.terms_.empty()) return *this;
    terms_ = merge_terms(terms_, q.terms_, true);
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& q) {
    *this = *this * q;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
    if (p.terms_.empty() || q.terms_.empty()) return Polynomial();
    if (p.terms_.size() == 1) return q.times_term(p.terms_[0].mono, p.terms_[0].coeff);
    if (q.terms_.size() == 1) return p.times_term(q.terms_[0].mono, q.terms_[0].coeff);
    Accumulator acc;
    acc.reserve(std::min<std::size_t>(p.terms_.size() * q.terms_.size(), 1u << 22));
    Rational prod;
    for (const auto& s : p.terms_) {
        for (const auto& t : q.terms_) {
            prod = s.coeff * t.coeff;
            auto [it, inserted] = acc.try_emplace(s.mono * t.mono, prod);
            if (!inserted) it->second += prod;
        }
    }
    return Polynomial(drain(acc), true);
}

bool operator==(const Polynomial& p, const Polynomial& q) {
    if (p.terms_.size() != q.terms_.size()) return false;
    for (std::size_t k = 0; k < p.terms_.size(); ++k)
        if (!(p.terms_[k].mono == q.terms_[k].mono) || p.terms_[k].coeff != q.terms_[k].coeff) return false;
    return true;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
    if (sgn(c) == 0) return Polynomial();
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{t.mono * m, t.coeff * c});
    // Multiplying by a monomial can reorder terms under the packed-word order.
    std::sort(out.begin(), out.end(), term_less);
    return Polynomial(std::move(out), true);
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw PreconditionError("leading term of the zero polynomial");
    const Term* best = &terms_[0];
    for (const auto& t : terms_)
        if (order.compare(t.mono, best->mono) > 0) best = &t;
    return *best;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& order) const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return order.compare(a.mono, b.mono) > 0; });
    return out;
}

std::size_t Polynomial::hash() const {
    std::size_t h = terms_.size();
    for (const auto& t : terms_) {
        h = h * 1000003u ^ t.mono.hash();
        h = h * 1000003u ^ std::hash<std::string>()(t.coeff.get_str());
    }
    return h;
}

// ---------------------------------------------------------------- operations

Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op) {
    switch (op) {
        case ArithOp::add: return p + q;
        case ArithOp::sub: return p - q;
        case ArithOp::mul: return p * q;
    }
    return Polynomial();
}

Polynomial partial_derivative(const Polynomial& p, Var v) {
    std::vector<Term> out;
    for (const auto& t : p.terms()) {
        unsigned e = t.mono.degree(v);
        if (e == 0) continue;
        Monomial rest = t.mono.without(v);
        out.push_back(Term{rest * Monomial::variable(v, e - 1), t.coeff * e});
    }
    return Polynomial::from_terms(std::move(out));
}

namespace {

/// Cache of powers of one polynomial, grown on demand.
class PowerCache {
public:
    explicit PowerCache(const Polynomial* base) : base_(base) { powers_.emplace_back(1); }
    const Polynomial& get(unsigned e) {
        while (powers_.size() <= e) powers_.push_back(powers_.back() * *base_);
        return powers_[e];
    }

private:
    const Polynomial* base_;
    std::vector<Polynomial> powers_;
};

void accumulate(Accumulator& acc, const Polynomial& p, const Monomial& m, const Rational& c) {
    Rational prod;
    for (const auto& t : p.terms()) {
        prod = t.coeff * c;
        auto [it, inserted] = acc.try_emplace(t.mono * m, prod);
        if (!inserted) it->second += prod;
    }
}

}  // namespace

Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
    if (bindings.empty() || p.is_zero()) return p;
    std::map<Var, PowerCache> caches;
    for (const auto& [v, poly] : bindings) caches.emplace(v, PowerCache(&poly));

    Accumulator acc;
    // Partial products over the bound part of consecutive terms are reused along shared prefixes.
    std::vector<Monomial::Word> prev_bound;
    std::vector<Polynomial> prefix_products{Polynomial(1)};
    for (const auto& t : p.terms()) {
        std::vector<Monomial::Word> bound;
        std::vector<std::pair<Var, unsigned>> free;
        for (auto w : t.mono.words()) {
            Var v = Monomial::var_of(w);
            if (caches.count(v)) bound.push_back(w);
            else free.emplace_back(v, Monomial::exp_of(w));
        }
        std::size_t common = 0;
        while (common < bound.size() && common < prev_bound.size() && bound[common] == prev_bound[common]) ++common;
        prefix_products.resize(common + 1);
        for (std::size_t k = common; k < bound.size(); ++k) {
            const Polynomial& factor = caches.at(Monomial::var_of(bound[k])).get(Monomial::exp_of(bound[k]));
            prefix_products.push_back(prefix_products.back() * factor);
        }
        prev_bound = std::move(bound);
        accumulate(acc, prefix_products.back(), Monomial::from_pairs(std::move(free)), t.coeff);
    }
    return Polynomial::from_terms(drain(acc));
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q) {
    return divide_exact(p, q, MonomialOrder());
}

std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q, const MonomialOrder& order) {
    if (q.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (p.is_zero()) return Polynomial();
    if (q.size() == 1) {
        const Term& d = q.terms()[0];
        std::vector<Term> out;
        out.reserve(p.size());
        for (const auto& t : p.terms()) {
            if (!d.mono.divides(t.mono)) return std::nullopt;
            out.push_back(Term{t.mono.quotient(d.mono), t.coeff / d.coeff});
        }
        return Polynomial::from_terms(std::move(out));
    }
    auto cmp = [&order](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; };
    std::map<Monomial, Rational, decltype(cmp)> rem(cmp);
    for (const auto& t : p.terms()) rem.emplace(t.mono, t.coeff);
    const Term lead = q.leading_term(order);
    std::vector<Term> quotient;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!lead.mono.divides(it->first)) return std::nullopt;
        Monomial m = it->first.quotient(lead.mono);
        Rational c = it->second / lead.coeff;
        for (const auto& t : q.terms()) {
            Monomial prod = t.mono * m;
            auto [pos, inserted] = rem.try_emplace(prod, Rational(0));
            pos->second -= t.coeff * c;
            if (sgn(pos->second) == 0) rem.erase(pos);
        }
        quotient.push_back(Term{std::move(m), std::move(c)});
    }
    return Polynomial::from_terms(std::move(quotient));
}

Polynomial divide_or_throw(const Polynomial& p, const Polynomial& q, const std::string& what) {
    auto r = divide_exact(p, q);
    if (!r) throw NotDivisible(what + ": numerator is not divisible by " + to_string(q));
    return *r;
}

std::vector<Polynomial> coefficients_in(const Polynomial& p, Var v) {
    std::vector<std::vector<Term>> buckets(p.degree(v) + 1);
    for (const auto& t : p.terms()) {
        unsigned e = t.mono.degree(v);
        buckets[e].push_back(Term{t.mono.without(v), t.coeff});
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Polynomial::from_terms(std::move(b)));
    return out;
}

Polynomial integrate_poly(const Polynomial& p, Var v, const Polynomial& lower, const Polynomial& upper) {
    if (lower.contains(v) || upper.contains(v))
        throw PreconditionError("integration bound contains the integration variable " + var_name(v));
    std::vector<Polynomial> coeffs = coefficients_in(p, v);
    Polynomial result;
    PowerCache up(&upper);
    PowerCache lo(&lower);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].is_zero()) continue;
        auto e = static_cast<unsigned>(k + 1);
        Polynomial diff = up.get(e) - lo.get(e);
        result += coeffs[k] * diff * Rational(1, e);
    }
    return result;
}

Rational evaluate(const Polynomial& p, const Point& point) {
    Rational sum = 0;
    Rational term;
    Rational power;
    for (const auto& t : p.terms()) {
        term = t.coeff;
        for (auto w : t.mono.words()) {
            Var v = Monomial::var_of(w);
            auto it = point.find(v);
            if (it == point.end()) throw PreconditionError("evaluation point is missing " + var_name(v));
            mpq_class base = it->second;
            power = 1;
            for (unsigned k = 0; k < Monomial::exp_of(w); ++k) power *= base;
            term *= power;
        }
        sum += term;
    }
    return sum;
}

int matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    std::size_t ncols = rows[0].size();
    int rank = 0;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < rows.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < rows.size() && sgn(rows[pivot][col]) == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[r]);
        for (std::size_t k = r + 1; k < rows.size(); ++k) {
            if (sgn(rows[k][col]) == 0) continue;
            Rational f = rows[k][col] / rows[r][col];
            for (std::size_t c = col; c < ncols; ++c) rows[k][c] -= f * rows[r][c];
        }
        ++r;
        ++rank;
    }
    return rank;
}

int jacobian_rank_at(const std::vector<Polynomial>& ps, const std::vector<Var>& vars, const Point& point) {
    std::vector<std::vector<Rational>> rows;
    rows.reserve(ps.size());
    for (const auto& p : ps) {
        std::vector<Rational> row;
        row.reserve(vars.size());
        for (Var v : vars) row.push_back(evaluate(partial_derivative(p, v), point));
        rows.push_back(std::move(row));
    }
    return matrix_rank(std::move(rows));
}

// ---------------------------------------------------------------- printing

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::string s;
    for (auto w : m.words()) {
        if (!s.empty()) s += "*";
        s += var_name(Monomial::var_of(w));
        if (Monomial::exp_of(w) > 1) s += "^" + std::to_string(Monomial::exp_of(w));
    }
    return s;
}

std::string to_string(const Polynomial& p, const MonomialOrder& order) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : p.sorted_terms(order)) {
        Rational c = t.coeff;
        bool negative = sgn(c) < 0;
        if (negative) c = -c;
        if (first) out << (negative ? "-" : "");
        else out << (negative ? " - " : " + ");
        first = false;
        if (t.mono.is_one()) {
            out << c.get_str();
        } else if (c == 1) {
            out << to_string(t.mono);
        } else {
            out << c.get_str() << "*" << to_string(t.mono);
        }
    }
    return out.str();
}

std::string to_string(const Polynomial& p) { return to_string(p, MonomialOrder()); }

}  // namespace jb
