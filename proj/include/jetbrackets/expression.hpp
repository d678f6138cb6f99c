#pragma once

#include "jetbrackets/polynomial.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace jb {

/// Syntax tree of the textual polynomial language shared by fixtures and the CLI.
/// Grammar: sums and differences of products and quotients of powers of atoms, where an atom is
/// a rational literal, an identifier, a parenthesized expression, a bracket [A, B] or a call name(args).
struct Expr {
    enum class Kind { number, identifier, add, sub, neg, mul, div, pow, bracket, call };

    Kind kind = Kind::number;
    Rational number;
    std::string name;  // identifier token or called function
    unsigned exponent = 0;
    std::vector<std::shared_ptr<const Expr>> args;
};

using ExprPtr = std::shared_ptr<const Expr>;

ExprPtr parse_expression(const std::string& text);

std::string to_string(const Expr& e);

/// Replaces index placeholders inside identifiers: "fi''" becomes "f1''" and "L7_ij" becomes "L7_12"
/// under {i:1, j:2}. Only the component letter of jet tokens and the suffix after '_' are rewritten.
ExprPtr instantiate(const ExprPtr& e, const std::map<char, int>& indices);
std::string instantiate_identifier(const std::string& token, const std::map<char, int>& indices);

/// Rewrites identifier tokens through a renaming table.
ExprPtr rename_identifiers(const ExprPtr& e, const std::map<std::string, std::string>& names);

/// Collects every identifier token in the expression.
std::vector<std::string> identifiers(const Expr& e);

/// Recognizes the built-in variable tokens: f<i> followed by primes, phi followed by primes,
/// and @name for integration variables. Returns nullopt for other tokens.
std::optional<Var> builtin_variable(const std::string& token);

/// Turns syntax into polynomials. Identifiers default to built-in variables and then abstract
/// variables; calls and brackets are rejected unless a subclass provides them.
class Resolver {
public:
    virtual ~Resolver() = default;
    virtual Polynomial identifier(const std::string& token);
    virtual Polynomial call(const std::string& function, const std::vector<Polynomial>& args);
    virtual Polynomial bracket(const Polynomial& p, const Polynomial& q);
};

Polynomial evaluate(const Expr& e, Resolver& resolver);

}  // namespace jb
