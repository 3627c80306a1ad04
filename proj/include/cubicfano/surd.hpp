#pragma once

#include <ostream>
#include <stdexcept>
#include <string>

#include "cubicfano/numeric.hpp"

namespace cubicfano {

/// Exact real number of the form a + b*sqrt(D) with a, b rational and D a
/// squarefree nonnegative integer.  All arithmetic and comparisons are
/// exact; D is normalised on construction (square factors are pulled into
/// b, and D in {0,1} collapses to a rational).
class QuadraticSurd {
public:
    QuadraticSurd() : a_(0), b_(0), d_(0) {}
    /*implicit*/ QuadraticSurd(const Rat& a) : a_(a), b_(0), d_(0) {}
    /*implicit*/ QuadraticSurd(const Int& a) : a_(Rat(a)), b_(0), d_(0) {}
    /*implicit*/ QuadraticSurd(long a) : a_(Rat(a)), b_(0), d_(0) {}

    QuadraticSurd(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
        if (d_ < 0) throw std::domain_error("QuadraticSurd: negative radicand");
        auto sf = squarefree_decompose(d_);
        if (!sf) throw std::domain_error("QuadraticSurd: cannot certify squarefree radicand");
        b_ *= Rat(sf->first);
        d_ = sf->second;
        if (d_ == 1) {
            a_ += b_;
            b_ = 0;
            d_ = 0;
        }
        if (b_ == 0) d_ = 0;
    }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Int& radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }

    QuadraticSurd conjugate() const { return make(a_, -b_, d_); }

    friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
        Int d = common_radicand(x, y);
        return make(x.a_ + y.a_, x.b_ + y.b_, d);
    }
    friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
        Int d = common_radicand(x, y);
        return make(x.a_ - y.a_, x.b_ - y.b_, d);
    }
    friend QuadraticSurd operator-(const QuadraticSurd& x) { return make(-x.a_, -x.b_, x.d_); }
    friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
        Int d = common_radicand(x, y);
        return make(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
    }
    friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
        if (y.sign() == 0) throw std::domain_error("QuadraticSurd: division by zero");
        Int d = common_radicand(x, y);
        Rat n = y.a_ * y.a_ - y.b_ * y.b_ * Rat(d);  // y * conj(y), nonzero since sqrt(d) irrational
        QuadraticSurd num = x * make(y.a_, -y.b_, d);
        return make(num.a_ / n, num.b_ / n, d);
    }

    /// Exact sign of a + b*sqrt(D).
    int sign() const {
        int sa = cubicfano::sign(a_), sb = cubicfano::sign(b_);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: compare a^2 with b^2 D.
        Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(d_);
        if (lhs == rhs) return 0;  // only possible if sqrt(D) rational, excluded by normalisation
        return lhs > rhs ? sa : sb;
    }

    QuadraticSurd abs() const { return sign() < 0 ? -*this : *this; }

    friend bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.d_ == y.d_;
    }
    friend bool operator!=(const QuadraticSurd& x, const QuadraticSurd& y) { return !(x == y); }
    friend bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() < 0; }
    friend bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() > 0; }
    friend bool operator<=(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() <= 0; }
    friend bool operator>=(const QuadraticSurd& x, const QuadraticSurd& y) { return (x - y).sign() >= 0; }

    /// Largest integer <= value, computed exactly.
    Int floor() const {
        if (b_ == 0) return floor_rat(a_);
        // Common denominator: (p + q*sqrt(D)) / r with r > 0.
        Int r = boost::multiprecision::lcm(rat_den(a_), rat_den(b_));
        Int p = rat_num(a_) * (r / rat_den(a_));
        Int q = rat_num(b_) * (r / rat_den(b_));
        Int s = isqrt(q * q * d_);
        Int n = floor_div(p + (q > 0 ? s : -s - 1), r);  // first estimate
        while (compare_to_int(n + 1) >= 0) ++n;
        while (compare_to_int(n) < 0) --n;
        return n;
    }

    /// Decimal expansion truncated toward minus infinity; every printed
    /// digit is exact.
    std::string decimal(unsigned digits) const {
        QuadraticSurd scaled = *this * QuadraticSurd(Rat(pow10(digits)));
        return scaled_decimal_string(scaled.floor(), digits);
    }

    std::string str() const {
        if (is_rational()) return rat_string(a_);
        std::string out = rat_string(a_);
        if (cubicfano::sign(b_) >= 0) out += " + " + rat_string(b_);
        else out += " - " + rat_string(-b_);
        out += "*sqrt(" + d_.str() + ")";
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadraticSurd& s) { return os << s.str(); }

private:
    // Trusted constructor: d already squarefree (or 0) and consistent.
    static QuadraticSurd make(Rat a, Rat b, Int d) {
        QuadraticSurd s;
        s.a_ = std::move(a);
        s.b_ = std::move(b);
        s.d_ = (s.b_ == 0) ? Int(0) : std::move(d);
        return s;
    }

    static Int common_radicand(const QuadraticSurd& x, const QuadraticSurd& y) {
        if (x.d_ == 0) return y.d_;
        if (y.d_ == 0) return x.d_;
        if (x.d_ != y.d_) throw std::domain_error("QuadraticSurd: mixed radicands");
        return x.d_;
    }

    int compare_to_int(const Int& n) const { return (*this - QuadraticSurd(Rat(n))).sign(); }

    Rat a_, b_;
    Int d_;
};

}  // namespace cubicfano
