#pragma once

#include <algorithm>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cubicfano/numeric.hpp"

namespace cubicfano::lattice {

/// Ordered list of symbolic generator names for a free Z-module.
/// Identity is by label-list equality, not by object identity, so values
/// survive JSON round trips.
class Basis {
public:
    explicit Basis(std::vector<std::string> labels) : labels_(std::move(labels)) {
        if (labels_.empty()) throw std::invalid_argument("Basis: empty label list");
        std::set<std::string> seen(labels_.begin(), labels_.end());
        if (seen.size() != labels_.size()) throw std::invalid_argument("Basis: duplicate labels");
    }
    Basis(std::initializer_list<std::string> labels) : Basis(std::vector<std::string>(labels)) {}

    int rank() const { return static_cast<int>(labels_.size()); }
    const std::vector<std::string>& labels() const { return labels_; }

    friend bool operator==(const Basis& x, const Basis& y) { return x.labels_ == y.labels_; }
    friend bool operator!=(const Basis& x, const Basis& y) { return !(x == y); }

private:
    std::vector<std::string> labels_;
};

inline void require_same_basis(const Basis& x, const Basis& y, const char* what) {
    if (x != y) throw std::invalid_argument(std::string(what) + ": basis mismatch");
}

/// Dense square matrix of big integers, row-major.
class IntMatrix {
public:
    IntMatrix() : n_(0) {}
    explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Int(0)) {
        if (n <= 0) throw std::invalid_argument("IntMatrix: nonpositive size");
    }
    IntMatrix(int n, std::vector<Int> entries) : n_(n), a_(std::move(entries)) {
        if (n <= 0 || a_.size() != static_cast<size_t>(n) * n)
            throw std::invalid_argument("IntMatrix: bad entry count");
    }
    /// Rows given as nested initializer lists of long.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        n_ = static_cast<int>(rows.size());
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != n_) throw std::invalid_argument("IntMatrix: ragged rows");
            for (long v : r) a_.emplace_back(v);
        }
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int size() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<Int>& entries() const { return a_; }

    bool is_symmetric() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (at(i, j) != at(j, i)) return false;
        return true;
    }

    Int trace() const {
        Int t = 0;
        for (int i = 0; i < n_; ++i) t += at(i, i);
        return t;
    }

    IntMatrix transpose() const {
        IntMatrix m(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
        if (x.n_ != y.n_) throw std::invalid_argument("IntMatrix: size mismatch");
        IntMatrix r(x.n_);
        for (int i = 0; i < x.n_; ++i)
            for (int k = 0; k < x.n_; ++k) {
                const Int& xik = x.at(i, k);
                if (xik == 0) continue;
                for (int j = 0; j < x.n_; ++j) r.at(i, j) += xik * y.at(k, j);
            }
        return r;
    }

    std::vector<Int> apply(const std::vector<Int>& v) const {
        if (static_cast<int>(v.size()) != n_) throw std::invalid_argument("IntMatrix: vector size mismatch");
        std::vector<Int> r(n_, Int(0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    friend bool operator==(const IntMatrix& x, const IntMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }
    friend bool operator!=(const IntMatrix& x, const IntMatrix& y) { return !(x == y); }

    /// Fraction-free determinant (Bareiss).
    Int det() const {
        int n = n_;
        std::vector<Int> m = a_;
        auto e = [&](int i, int j) -> Int& { return m[static_cast<size_t>(i) * n + j]; };
        Int prev = 1;
        int swaps = 0;
        for (int k = 0; k < n - 1; ++k) {
            if (e(k, k) == 0) {
                int p = k + 1;
                while (p < n && e(p, k) == 0) ++p;
                if (p == n) return 0;
                for (int j = 0; j < n; ++j) std::swap(e(k, j), e(p, j));
                ++swaps;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    e(i, j) = (e(i, j) * e(k, k) - e(i, k) * e(k, j)) / prev;
            prev = e(k, k);
        }
        Int d = e(n - 1, n - 1);
        return (swaps % 2) ? -d : d;
    }

private:
    int n_ = 0;
    std::vector<Int> a_;
};

/// Integer coefficient vector in a named Picard-type basis.
class DivisorClass {
public:
    DivisorClass(Basis basis, std::vector<Int> coeffs)
        : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != basis_.rank())
            throw std::invalid_argument("DivisorClass: coefficient count does not match rank");
    }
    DivisorClass(Basis basis, std::initializer_list<long> coeffs)
        : DivisorClass(std::move(basis), std::vector<Int>(coeffs.begin(), coeffs.end())) {}

    const Basis& basis() const { return basis_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    friend DivisorClass operator+(const DivisorClass& x, const DivisorClass& y) {
        require_same_basis(x.basis_, y.basis_, "DivisorClass::operator+");
        std::vector<Int> c(x.coeffs_);
        for (size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs_[i];
        return DivisorClass(x.basis_, std::move(c));
    }
    friend DivisorClass operator-(const DivisorClass& x, const DivisorClass& y) {
        require_same_basis(x.basis_, y.basis_, "DivisorClass::operator-");
        std::vector<Int> c(x.coeffs_);
        for (size_t i = 0; i < c.size(); ++i) c[i] -= y.coeffs_[i];
        return DivisorClass(x.basis_, std::move(c));
    }
    friend DivisorClass operator*(const Int& s, const DivisorClass& x) {
        std::vector<Int> c(x.coeffs_);
        for (auto& v : c) v *= s;
        return DivisorClass(x.basis_, std::move(c));
    }
    friend bool operator==(const DivisorClass& x, const DivisorClass& y) {
        return x.basis_ == y.basis_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const DivisorClass& x, const DivisorClass& y) { return !(x == y); }

private:
    Basis basis_;
    std::vector<Int> coeffs_;
};

/// Integer vector in a dual (curve-class) basis; used as a covector
/// against divisor classes.
class CurveClass {
public:
    CurveClass(Basis basis, std::vector<Int> coeffs)
        : basis_(std::move(basis)), coeffs_(std::move(coeffs)) {
        if (static_cast<int>(coeffs_.size()) != basis_.rank())
            throw std::invalid_argument("CurveClass: coefficient count does not match rank");
    }
    CurveClass(Basis basis, std::initializer_list<long> coeffs)
        : CurveClass(std::move(basis), std::vector<Int>(coeffs.begin(), coeffs.end())) {}

    const Basis& basis() const { return basis_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& coeff(int i) const { return coeffs_.at(static_cast<size_t>(i)); }

    friend bool operator==(const CurveClass& x, const CurveClass& y) {
        return x.basis_ == y.basis_ && x.coeffs_ == y.coeffs_;
    }
    friend bool operator!=(const CurveClass& x, const CurveClass& y) { return !(x == y); }

private:
    Basis basis_;
    std::vector<Int> coeffs_;
};

/// Symmetric integer bilinear form on a named basis.
class IntersectionForm {
public:
    IntersectionForm(Basis basis, IntMatrix m) : basis_(std::move(basis)), m_(std::move(m)) {
        if (m_.size() != basis_.rank())
            throw std::invalid_argument("IntersectionForm: matrix size does not match rank");
        if (!m_.is_symmetric()) throw std::invalid_argument("IntersectionForm: matrix not symmetric");
    }

    /// Diagonal form; the standard blow-up lattice is diag(1,-1,...,-1).
    static IntersectionForm diagonal(Basis basis, const std::vector<long>& diag) {
        IntMatrix m(basis.rank());
        for (int i = 0; i < basis.rank(); ++i) m.at(i, i) = diag.at(static_cast<size_t>(i));
        return IntersectionForm(std::move(basis), std::move(m));
    }

    const Basis& basis() const { return basis_; }
    const IntMatrix& matrix() const { return m_; }

private:
    Basis basis_;
    IntMatrix m_;
};

/// Evaluates the bilinear form: A^T * M * B.
inline Int pair(const IntersectionForm& form, const DivisorClass& a, const DivisorClass& b) {
    require_same_basis(form.basis(), a.basis(), "pair");
    require_same_basis(form.basis(), b.basis(), "pair");
    std::vector<Int> mb = form.matrix().apply(b.coeffs());
    Int r = 0;
    for (size_t i = 0; i < mb.size(); ++i) r += a.coeffs()[i] * mb[i];
    return r;
}

/// Push-forward action of a birational map on a Picard-type lattice.
/// Column convention: column j is the image of the j-th basis element,
/// so the displayed matrices read off as images of generators.
class LatticeAction {
public:
    LatticeAction(Basis basis, IntMatrix m) : basis_(std::move(basis)), m_(std::move(m)) {
        if (m_.size() != basis_.rank())
            throw std::invalid_argument("LatticeAction: matrix size does not match rank");
    }

    const Basis& basis() const { return basis_; }
    const IntMatrix& matrix() const { return m_; }
    int rank() const { return basis_.rank(); }

    static LatticeAction identity(Basis basis) {
        int n = basis.rank();
        return LatticeAction(std::move(basis), IntMatrix::identity(n));
    }

    DivisorClass apply(const DivisorClass& v) const {
        require_same_basis(basis_, v.basis(), "LatticeAction::apply");
        return DivisorClass(basis_, m_.apply(v.coeffs()));
    }

    Int det() const { return m_.det(); }

    friend bool operator==(const LatticeAction& x, const LatticeAction& y) {
        return x.basis_ == y.basis_ && x.m_ == y.m_;
    }
    friend bool operator!=(const LatticeAction& x, const LatticeAction& y) { return !(x == y); }

private:
    Basis basis_;
    IntMatrix m_;
};

/// Matrix product A*B: apply B first, then A.
inline LatticeAction compose(const LatticeAction& a, const LatticeAction& b) {
    require_same_basis(a.basis(), b.basis(), "compose");
    return LatticeAction(a.basis(), a.matrix() * b.matrix());
}

/// Inverse of an action with determinant +-1 (results stay integral).
inline LatticeAction inverse(const LatticeAction& a) {
    int n = a.rank();
    Int d = a.det();
    if (d != 1 && d != -1)
        throw std::domain_error("inverse: determinant not a unit, inverse not integral");
    // Rational Gauss-Jordan; entries land back in Z because |det| = 1.
    std::vector<Rat> m(static_cast<size_t>(n) * 2 * n, Rat(0));
    auto e = [&](int i, int j) -> Rat& { return m[static_cast<size_t>(i) * 2 * n + j]; };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) e(i, j) = Rat(a.matrix().at(i, j));
        e(i, n + i) = 1;
    }
    for (int c = 0; c < n; ++c) {
        int p = c;
        while (p < n && e(p, c) == 0) ++p;
        if (p == n) throw std::domain_error("inverse: singular matrix");
        if (p != c)
            for (int j = 0; j < 2 * n; ++j) std::swap(e(c, j), e(p, j));
        Rat piv = e(c, c);
        for (int j = 0; j < 2 * n; ++j) e(c, j) /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == c || e(i, c) == 0) continue;
            Rat f = e(i, c);
            for (int j = 0; j < 2 * n; ++j) e(i, j) -= f * e(c, j);
        }
    }
    IntMatrix inv(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Rat& v = e(i, n + j);
            if (rat_den(v) != 1) throw std::logic_error("inverse: non-integral entry");
            inv.at(i, j) = rat_num(v);
        }
    return LatticeAction(a.basis(), std::move(inv));
}

/// <functional, A^k * start> for k = 1..m; the degree sequence of the
/// iterates of a map against a fixed degree covector.
inline std::vector<Int> degree_sequence(const LatticeAction& a, const CurveClass& functional,
                                        const DivisorClass& start, int m) {
    if (m < 1) throw std::invalid_argument("degree_sequence: m must be >= 1");
    // The functional lives in the dual basis, so only ranks must agree.
    if (functional.basis().rank() != a.rank())
        throw std::invalid_argument("degree_sequence: covector rank mismatch");
    require_same_basis(a.basis(), start.basis(), "degree_sequence");
    std::vector<Int> out;
    out.reserve(static_cast<size_t>(m));
    std::vector<Int> v = start.coeffs();
    for (int k = 0; k < m; ++k) {
        v = a.matrix().apply(v);
        Int s = 0;
        for (size_t i = 0; i < v.size(); ++i) s += functional.coeffs()[i] * v[i];
        out.push_back(s);
    }
    return out;
}

}  // namespace cubicfano::lattice
