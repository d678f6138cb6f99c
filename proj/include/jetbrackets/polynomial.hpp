#pragma once

#include "jetbrackets/error.hpp"
#include "jetbrackets/rational.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace jb {

/// Dense index of an interned variable. Index order is the fixed total order of the ring.
using Var = std::uint16_t;

enum class VarKind { jet, reparam, abstract, integration };

/// Description of an interned variable.
struct VariableId {
    VarKind kind = VarKind::abstract;
    int component = 0;  // jet: i in 1..nu
    int order = 0;      // jet: lambda; reparam: mu
    std::string name;   // abstract and integration tokens

    bool operator==(const VariableId&) const = default;
};

/// Caps on jet variables. Raising them later interns new variables after the existing ones.
struct VariableCaps {
    int max_component = 3;
    int max_order = 8;
};

/// Process-wide variable registry. Interning is thread-safe; indices never change.
class VariableTable {
public:
    static VariableTable& instance();

    Var jet(int component, int order);
    Var reparam(int order);
    Var abstract(const std::string& name);
    Var integration(const std::string& name);

    const VariableId& info(Var v) const;
    std::string name(Var v) const;
    std::size_t size() const;

    VariableCaps caps() const;
    void set_caps(VariableCaps caps);

private:
    VariableTable();
    Var intern(const VariableId& id);

    struct Impl;
    Impl* impl_;
};

Var jet_var(int component, int order);
Var phi_var(int order);
Var abstract_var(const std::string& name);
Var integration_var(const std::string& name);
std::string var_name(Var v);
const VariableId& var_info(Var v);

/// Sorted list of (variable, exponent) pairs packed as (var << 16) | exp; no zero exponents.
class Monomial {
public:
    using Word = std::uint32_t;
    using Storage = boost::container::small_vector<Word, 6>;

    Monomial() = default;
    static Monomial variable(Var v, unsigned exp = 1);

    static Var var_of(Word w) { return static_cast<Var>(w >> 16); }
    static unsigned exp_of(Word w) { return w & 0xffffu; }
    static Word pack(Var v, unsigned e) { return (static_cast<Word>(v) << 16) | e; }

    const Storage& words() const { return words_; }
    bool is_one() const { return words_.empty(); }
    std::size_t size() const { return words_.size(); }
    unsigned degree(Var v) const;
    unsigned total_degree() const;

    bool divides(const Monomial& other) const;
    /// this / other; requires other.divides(*this).
    Monomial quotient(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    bool coprime(const Monomial& other) const;
    Monomial without(Var v) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.words_ == b.words_; }
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.words_ < b.words_; }

    std::size_t hash() const;

    /// Builds from unsorted pairs; merges repeats and drops zero exponents.
    static Monomial from_pairs(std::vector<std::pair<Var, unsigned>> pairs);

private:
    Storage words_;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Pure lexicographic order given by an explicit priority, highest first.
/// Variables missing from the priority compare below every listed one, by index.
class MonomialOrder {
public:
    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<Var> priority);

    const std::vector<Var>& priority() const { return priority_; }
    /// Negative, zero or positive as a is below, equal to or above b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool lists(Var v) const;

private:
    int rank(Var v) const;
    std::vector<Var> priority_;
    std::vector<int> rank_;
};

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept sorted by Monomial::operator< with no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
    Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT
    static Polynomial variable(Var v, unsigned exp = 1);
    static Polynomial monomial(const Monomial& m, const Rational& c);
    /// Canonicalizes arbitrary terms: sorts, merges repeats, drops zeros.
    static Polynomial from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;
    std::vector<Var> variables() const;
    bool contains(Var v) const;
    unsigned degree(Var v) const;
    unsigned total_degree() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& q);
    Polynomial& operator-=(const Polynomial& q);
    Polynomial& operator*=(const Polynomial& q);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
    friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
    friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
    friend Polynomial operator*(Polynomial p, const Rational& c) { return p *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(Polynomial p, long c) { return p *= Rational(c); }
    friend Polynomial operator*(long c, Polynomial p) { return p *= Rational(c); }
    friend Polynomial operator*(Polynomial p, int c) { return p *= Rational(c); }
    friend Polynomial operator*(int c, Polynomial p) { return p *= Rational(c); }
    friend bool operator==(const Polynomial& p, const Polynomial& q);
    friend bool operator!=(const Polynomial& p, const Polynomial& q) { return !(p == q); }

    Polynomial pow(unsigned e) const;
    /// Multiplies every term by the monomial m and the scalar c.
    Polynomial times_term(const Monomial& m, const Rational& c) const;

    /// Leading term under a lexicographic order; requires a nonzero polynomial.
    const Term& leading_term(const MonomialOrder& order) const;
    /// Terms listed from the highest to the lowest under the order.
    std::vector<Term> sorted_terms(const MonomialOrder& order) const;

    std::size_t hash() const;

private:
    explicit Polynomial(std::vector<Term> sorted_terms, bool) : terms_(std::move(sorted_terms)) {}
    std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

Polynomial arith(const Polynomial& p, const Polynomial& q, ArithOp op);

Polynomial partial_derivative(const Polynomial& p, Var v);

using Bindings = std::map<Var, Polynomial>;

/// Simultaneous substitution of every bound variable.
Polynomial substitute(const Polynomial& p, const Bindings& bindings);

/// Returns r with p = q r, or nullopt when q does not divide p.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q);

/// Exact division under a caller-chosen lexicographic order.
std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& q, const MonomialOrder& order);

/// Thrown by divide_or_throw when the divisor does not divide.
class NotDivisible : public Error {
public:
    using Error::Error;
};

Polynomial divide_or_throw(const Polynomial& p, const Polynomial& q, const std::string& what);

/// Definite integral of p in v between polynomial bounds that do not involve v.
Polynomial integrate_poly(const Polynomial& p, Var v, const Polynomial& lower, const Polynomial& upper);

using Point = std::map<Var, Rational>;

Rational evaluate(const Polynomial& p, const Point& point);

/// Rank over the rationals of the Jacobian of ps with respect to vars, at the point.
int jacobian_rank_at(const std::vector<Polynomial>& ps, const std::vector<Var>& vars, const Point& point);

/// Exact rank of a dense rational matrix by Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> rows);

/// Collects p as a polynomial in v: result[k] is the coefficient of v^k.
std::vector<Polynomial> coefficients_in(const Polynomial& p, Var v);

std::string to_string(const Monomial& m);
/// Textual serialization; terms printed from the highest to the lowest under the order.
std::string to_string(const Polynomial& p, const MonomialOrder& order);
std::string to_string(const Polynomial& p);

/// Parses the textual serialization: sums of coeff * var ^ exp products with parentheses.
Polynomial parse_polynomial(const std::string& text);

}  // namespace jb

template <>
struct std::hash<jb::Monomial> {
    std::size_t operator()(const jb::Monomial& m) const { return m.hash(); }
};
