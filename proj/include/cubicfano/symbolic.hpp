#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubicfano/numeric.hpp"

namespace cubicfano::symbolic {

/// Shared list of variable names; polynomials refer to variables by index.
class VarSet {
public:
    explicit VarSet(std::vector<std::string> names) : names_(std::move(names)) {}
    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<int> index_of(const std::string& n) const {
        for (size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == n) return static_cast<int>(i);
        return std::nullopt;
    }
    friend bool operator==(const VarSet& a, const VarSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Monomials are exponent vectors keyed in a map, so representation is
/// canonical and equality is structural.
class Polynomial {
public:
    using Monomial = std::vector<unsigned>;

    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Rat& c) {
        Polynomial p(nvars);
        if (c != 0) p.terms_[Monomial(static_cast<size_t>(nvars), 0u)] = c;
        return p;
    }
    static Polynomial variable(int nvars, int i) {
        Polynomial p(nvars);
        Monomial m(static_cast<size_t>(nvars), 0u);
        m.at(static_cast<size_t>(i)) = 1;
        p.terms_[std::move(m)] = 1;
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r(a.nvars_);
        for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma);
                for (size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                r.add_term(m, ca * cb);
            }
        return r;
    }
    friend Polynomial operator*(const Rat& s, const Polynomial& a) {
        Polynomial r(a.nvars_);
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = s * c;
        return r;
    }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    std::string str(const VarSet& vars) const {
        if (terms_.empty()) return "0";
        std::string out;
        // Highest exponent vectors first reads more naturally.
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string term;
            bool first_factor = true;
            Rat ac = c < 0 ? Rat(-c) : c;
            for (size_t i = 0; i < m.size(); ++i) {
                if (m[i] == 0) continue;
                if (!first_factor) term += "*";
                term += vars.name(static_cast<int>(i));
                if (m[i] > 1) term += "^" + std::to_string(m[i]);
                first_factor = false;
            }
            std::string coeff = rat_string(ac);
            if (first_factor) term = coeff;
            else if (ac != 1) term = coeff + "*" + term;
            if (out.empty()) out = (c < 0 ? "-" : "") + term;
            else out += (c < 0 ? " - " : " + ") + term;
        }
        return out;
    }

private:
    void check(const Polynomial& other) const {
        if (nvars_ != other.nvars_) throw std::invalid_argument("Polynomial: variable-set mismatch");
    }
    void add_term(const Monomial& m, const Rat& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (c != 0) terms_[m] = c;
            return;
        }
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    int nvars_;
    std::map<Monomial, Rat> terms_;
};

/// Quotient of polynomials.  Fractions are kept unreduced (multivariate
/// gcd is not needed for exactness); equality is decided by
/// cross-multiplication.
class RationalFunction {
public:
    explicit RationalFunction(int nvars)
        : num_(Polynomial::constant(nvars, 0)), den_(Polynomial::constant(nvars, 1)) {}
    /*implicit*/ RationalFunction(Polynomial num)
        : num_(std::move(num)), den_(Polynomial::constant(num_.nvars(), 1)) {}
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        normalise();
    }

    static RationalFunction constant(int nvars, const Rat& c) {
        return RationalFunction(Polynomial::constant(nvars, c));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a) { return RationalFunction(-a.num_, a.den_); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.num_.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RationalFunction operator*(const Rat& s, const RationalFunction& a) {
        return RationalFunction(s * a.num_, a.den_);
    }
    /// Exact equality via cross-multiplication.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str(const VarSet& vars) const {
        if (den_ == Polynomial::constant(num_.nvars(), 1)) return num_.str(vars);
        return "(" + num_.str(vars) + ") / (" + den_.str(vars) + ")";
    }

private:
    void normalise() {
        // Keep sizes in check: strip the common integer content of
        // denominator into the numerator's coefficients.
        if (num_.is_zero()) {
            den_ = Polynomial::constant(num_.nvars(), 1);
            return;
        }
        const auto& dt = den_.terms();
        if (dt.size() == 1 && std::all_of(dt.begin()->first.begin(), dt.begin()->first.end(),
                                          [](unsigned e) { return e == 0; })) {
            Rat c = dt.begin()->second;
            num_ = (Rat(1) / c) * num_;
            den_ = Polynomial::constant(num_.nvars(), 1);
        }
    }

    Polynomial num_, den_;
};

// ---------------------------------------------------------------------------
// Expression parser: +, -, *, /, ^, parentheses, integers and variables.
// Used by the CLI to read conic-bundle data.
// ---------------------------------------------------------------------------

class ExprParser {
public:
    ExprParser(const VarSet& vars, std::string text) : vars_(vars), s_(std::move(text)) {}

    RationalFunction parse() {
        RationalFunction r = parse_sum();
        skip_ws();
        if (pos_ != s_.size()) throw std::invalid_argument("parse error at '" + s_.substr(pos_) + "'");
        return r;
    }

private:
    RationalFunction parse_sum() {
        RationalFunction r = parse_product();
        for (;;) {
            skip_ws();
            if (peek() == '+') {
                ++pos_;
                r = r + parse_product();
            } else if (peek() == '-') {
                ++pos_;
                r = r - parse_product();
            } else {
                return r;
            }
        }
    }
    RationalFunction parse_product() {
        RationalFunction r = parse_factor();
        for (;;) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                r = r * parse_factor();
            } else if (peek() == '/') {
                ++pos_;
                r = r / parse_factor();
            } else {
                return r;
            }
        }
    }
    RationalFunction parse_factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -parse_factor();
        }
        if (peek() == '+') {
            ++pos_;
            return parse_factor();
        }
        RationalFunction base = parse_atom();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::string digits = read_digits();
            if (digits.empty()) throw std::invalid_argument("parse error: exponent expected");
            unsigned e = static_cast<unsigned>(std::stoul(digits));
            RationalFunction r = RationalFunction::constant(vars_.size(), 1);
            for (unsigned i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }
    RationalFunction parse_atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            RationalFunction r = parse_sum();
            skip_ws();
            if (peek() != ')') throw std::invalid_argument("parse error: ')' expected");
            ++pos_;
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits = read_digits();
            return RationalFunction::constant(vars_.size(), Rat(Int(digits)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            auto idx = vars_.index_of(name);
            if (!idx) throw std::invalid_argument("unknown variable '" + name + "'");
            return RationalFunction(Polynomial::variable(vars_.size(), *idx));
        }
        throw std::invalid_argument("parse error: unexpected character");
    }

    std::string read_digits() {
        std::string d;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) d += s_[pos_++];
        return d;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    const VarSet& vars_;
    std::string s_;
    size_t pos_ = 0;
};

inline RationalFunction parse_expression(const VarSet& vars, const std::string& text) {
    return ExprParser(vars, text).parse();
}

}  // namespace cubicfano::symbolic
