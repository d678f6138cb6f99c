#include "jetbrackets/expression.hpp"

#include <cctype>
#include <sstream>

namespace jb {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    ExprPtr parse() {
        ExprPtr e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    static ExprPtr node(Expr::Kind kind, std::vector<ExprPtr> args) {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->args = std::move(args);
        return e;
    }

    ExprPtr expr() {
        ExprPtr left = term();
        for (;;) {
            if (accept('+')) left = node(Expr::Kind::add, {left, term()});
            else if (accept('-')) left = node(Expr::Kind::sub, {left, term()});
            else return left;
        }
    }

    ExprPtr term() {
        ExprPtr left = unary();
        for (;;) {
            if (accept('*')) left = node(Expr::Kind::mul, {left, unary()});
            else if (accept('/')) left = node(Expr::Kind::div, {left, unary()});
            else return left;
        }
    }

    ExprPtr unary() {
        if (accept('-')) return node(Expr::Kind::neg, {unary()});
        if (accept('+')) return unary();
        return power();
    }

    ExprPtr power() {
        ExprPtr base = atom();
        if (accept('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::pow;
            e->exponent = static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start)));
            e->args = {base};
            return e;
        }
        return base;
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '@'; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

    ExprPtr atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprPtr e = expr();
            expect(')');
            return e;
        }
        if (c == '[') {
            ++pos_;
            ExprPtr a = expr();
            expect(',');
            ExprPtr b = expr();
            expect(']');
            return node(Expr::Kind::bracket, {a, b});
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::number;
            e->number = parse_rational(s_.substr(start, pos_ - start));
            return e;
        }
        if (ident_start(c)) {
            std::size_t start = pos_++;
            while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
            while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            if (accept('(')) {
                auto e = std::make_shared<Expr>();
                e->kind = Expr::Kind::call;
                e->name = name;
                if (!accept(')')) {
                    do {
                        e->args.push_back(expr());
                    } while (accept(','));
                    expect(')');
                }
                return e;
            }
            auto e = std::make_shared<Expr>();
            e->kind = Expr::Kind::identifier;
            e->name = name;
            return e;
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

void print(const Expr& e, std::ostringstream& out) {
    auto arg = [&](std::size_t k) { print(*e.args[k], out); };
    switch (e.kind) {
        case Expr::Kind::number: out << e.number.get_str(); break;
        case Expr::Kind::identifier: out << e.name; break;
        case Expr::Kind::add: out << "("; arg(0); out << " + "; arg(1); out << ")"; break;
        case Expr::Kind::sub: out << "("; arg(0); out << " - "; arg(1); out << ")"; break;
        case Expr::Kind::neg: out << "(-"; arg(0); out << ")"; break;
        case Expr::Kind::mul: arg(0); out << "*"; arg(1); break;
        case Expr::Kind::div: arg(0); out << "/"; arg(1); break;
        case Expr::Kind::pow: arg(0); out << "^" << e.exponent; break;
        case Expr::Kind::bracket: out << "["; arg(0); out << ", "; arg(1); out << "]"; break;
        case Expr::Kind::call:
            out << e.name << "(";
            for (std::size_t k = 0; k < e.args.size(); ++k) {
                if (k) out << ", ";
                arg(k);
            }
            out << ")";
            break;
    }
}

}  // namespace

std::string instantiate_identifier(const std::string& token, const std::map<char, int>& indices) {
    auto digit_for = [&](char c) -> std::string {
        auto it = indices.find(c);
        return it == indices.end() ? std::string(1, c) : std::to_string(it->second);
    };
    if (token.size() >= 2 && token[0] == 'f' && std::isalpha(static_cast<unsigned char>(token[1]))) {
        std::size_t k = 2;
        while (k < token.size() && token[k] == '\'') ++k;
        if (k == token.size() && k > 2 && indices.count(token[1])) return "f" + digit_for(token[1]) + token.substr(2);
    }
    auto underscore = token.find('_');
    if (underscore == std::string::npos) return token;
    std::string out = token.substr(0, underscore + 1);
    for (std::size_t k = underscore + 1; k < token.size(); ++k) {
        char c = token[k];
        out += (std::islower(static_cast<unsigned char>(c)) && indices.count(c)) ? digit_for(c) : std::string(1, c);
    }
    return out;
}

namespace {

template <typename F>
ExprPtr map_identifiers(const ExprPtr& e, const F& f) {
    if (e->kind == Expr::Kind::identifier) {
        std::string renamed = f(e->name);
        if (renamed == e->name) return e;
        auto copy = std::make_shared<Expr>(*e);
        copy->name = renamed;
        return copy;
    }
    if (e->args.empty()) return e;
    auto copy = std::make_shared<Expr>(*e);
    for (auto& a : copy->args) a = map_identifiers(a, f);
    return copy;
}

void collect(const Expr& e, std::vector<std::string>& out) {
    if (e.kind == Expr::Kind::identifier) out.push_back(e.name);
    for (const auto& a : e.args) collect(*a, out);
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string to_string(const Expr& e) {
    std::ostringstream out;
    print(e, out);
    return out.str();
}

ExprPtr instantiate(const ExprPtr& e, const std::map<char, int>& indices) {
    return map_identifiers(e, [&](const std::string& t) { return instantiate_identifier(t, indices); });
}

ExprPtr rename_identifiers(const ExprPtr& e, const std::map<std::string, std::string>& names) {
    return map_identifiers(e, [&](const std::string& t) {
        auto it = names.find(t);
        return it == names.end() ? t : it->second;
    });
}

std::vector<std::string> identifiers(const Expr& e) {
    std::vector<std::string> out;
    collect(e, out);
    return out;
}

std::optional<Var> builtin_variable(const std::string& token) {
    auto primes_from = [&](std::size_t start) -> int {
        if (start >= token.size()) return 0;
        for (std::size_t k = start; k < token.size(); ++k)
            if (token[k] != '\'') return -1;
        return static_cast<int>(token.size() - start);
    };
    if (token.size() >= 3 && token[0] == 'f' && std::isdigit(static_cast<unsigned char>(token[1]))) {
        std::size_t k = 1;
        while (k < token.size() && std::isdigit(static_cast<unsigned char>(token[k]))) ++k;
        int order = primes_from(k);
        if (order > 0) return jet_var(std::stoi(token.substr(1, k - 1)), order);
    }
    if (token.rfind("phi", 0) == 0) {
        int order = primes_from(3);
        if (order > 0) return phi_var(order);
    }
    if (token.size() >= 2 && token[0] == '@') return integration_var(token.substr(1));
    return std::nullopt;
}

Polynomial Resolver::identifier(const std::string& token) {
    if (auto v = builtin_variable(token)) return Polynomial::variable(*v);
    if (token.find('\'') != std::string::npos) throw ParseError("malformed variable token '" + token + "'");
    return Polynomial::variable(abstract_var(token));
}

Polynomial Resolver::call(const std::string& function, const std::vector<Polynomial>&) {
    throw ParseError("unknown function '" + function + "'");
}

Polynomial Resolver::bracket(const Polynomial&, const Polynomial&) {
    throw ParseError("brackets are not available in this context");
}

Polynomial evaluate(const Expr& e, Resolver& resolver) {
    auto arg = [&](std::size_t k) { return evaluate(*e.args[k], resolver); };
    switch (e.kind) {
        case Expr::Kind::number: return Polynomial(e.number);
        case Expr::Kind::identifier: return resolver.identifier(e.name);
        case Expr::Kind::add: return arg(0) + arg(1);
        case Expr::Kind::sub: return arg(0) - arg(1);
        case Expr::Kind::neg: return -arg(0);
        case Expr::Kind::mul: return arg(0) * arg(1);
        case Expr::Kind::div: {
            Polynomial num = arg(0);
            Polynomial den = arg(1);
            if (den.is_zero()) throw PreconditionError("division by zero in '" + to_string(e) + "'");
            if (den.is_constant()) return num * Rational(1 / den.constant_term());
            return divide_or_throw(num, den, to_string(e));
        }
        case Expr::Kind::pow: return arg(0).pow(e.exponent);
        case Expr::Kind::bracket: return resolver.bracket(arg(0), arg(1));
        case Expr::Kind::call: {
            std::vector<Polynomial> args;
            args.reserve(e.args.size());
            for (std::size_t k = 0; k < e.args.size(); ++k) args.push_back(arg(k));
            return resolver.call(e.name, args);
        }
    }
    return Polynomial();
}

Polynomial parse_polynomial(const std::string& text) {
    Resolver plain;
    return evaluate(*parse_expression(text), plain);
}

}  // namespace jb
