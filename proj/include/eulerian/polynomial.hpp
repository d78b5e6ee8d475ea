#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eulerian/numeric.hpp"

namespace eulerian {

// Dense univariate polynomial over arbitrary-precision integers.
// Canonical form: no trailing zero coefficients; the zero polynomial stores
// nothing and reports degree() == -1. All arithmetic is exact.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Int> coeffs) : coeffs_(coeffs) { trim(); }
    explicit Polynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }

    static Polynomial constant(Int c) {
        Polynomial p;
        p.coeffs_.push_back(std::move(c));
        p.trim();
        return p;
    }

    static Polynomial monomial(int degree, Int coeff = Int(1)) {
        if (degree < 0) throw std::invalid_argument("monomial: negative degree");
        std::vector<Int> c(static_cast<std::size_t>(degree) + 1);
        c.back() = std::move(coeff);
        return Polynomial(std::move(c));
    }

    // Distribution counts by statistic value -> polynomial in x.
    static Polynomial from_counts(const std::vector<unsigned long long>& counts) {
        std::vector<Int> c;
        c.reserve(counts.size());
        for (unsigned long long v : counts)
            c.emplace_back(static_cast<unsigned long>(v));
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int coeff(int k) const {
        if (k < 0 || k > degree()) return Int(0);
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const Int& leading() const {
        if (is_zero()) throw std::domain_error("leading: zero polynomial");
        return coeffs_.back();
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) c[i] -= b.coeffs_[i];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Int& s, const Polynomial& p) {
        std::vector<Int> c = p.coeffs_;
        for (Int& v : c) v *= s;
        return Polynomial(std::move(c));
    }

    Polynomial operator-() const {
        std::vector<Int> c = coeffs_;
        for (Int& v : c) v = -v;
        return Polynomial(std::move(c));
    }

    bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // Exact evaluation (Horner).
    Int operator()(const Int& v) const {
        Int acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
        return acc;
    }

    Rat operator()(const Rat& v) const {
        Rat acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
        return acc;
    }

    Polynomial derivative() const {
        if (coeffs_.size() <= 1) return Polynomial();
        std::vector<Int> c(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            c[i - 1] = Int(static_cast<long>(i)) * coeffs_[i];
        return Polynomial(std::move(c));
    }

    // Coefficients low degree first, as decimal strings (JSON-safe at any size).
    std::vector<std::string> coeff_strings() const {
        std::vector<std::string> out;
        out.reserve(coeffs_.size());
        for (const Int& c : coeffs_) out.push_back(c.get_str());
        return out;
    }

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
        os << '[';
        for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
            if (i) os << ", ";
            os << p.coeffs_[i].get_str();
        }
        return os << ']';
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

}  // namespace eulerian
