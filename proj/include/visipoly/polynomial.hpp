#pragma once

#include <string>
#include <utility>
#include <vector>

#include "visipoly/bigint.hpp"
#include "visipoly/errors.hpp"

namespace visipoly {

// Dense univariate polynomial with exact BigInt coefficients; index k holds
// the coefficient of x^k. A set-counting polynomial has non-negative
// coefficients, but signed intermediates are allowed so inclusion-exclusion
// sums can be formed before the final result is checked.
//
// Canonical form: no trailing zero coefficients; the zero polynomial is the
// single coefficient [0].
class Polynomial {
public:
    Polynomial() : coeffs_{BigInt{0}} {}

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial one() { return constant(1); }

    static Polynomial constant(BigInt c) {
        Polynomial p;
        p.coeffs_ = {std::move(c)};
        p.canonicalize();
        return p;
    }

    // c * x^k
    static Polynomial monomial(BigInt c, int k) {
        if (k < 0) throw validity_error("Polynomial::monomial: negative exponent");
        Polynomial p;
        p.coeffs_.assign(static_cast<std::size_t>(k) + 1, BigInt{0});
        p.coeffs_.back() = std::move(c);
        p.canonicalize();
        return p;
    }

    static Polynomial from_coeffs(std::vector<BigInt> cs) {
        Polynomial p;
        p.coeffs_ = std::move(cs);
        if (p.coeffs_.empty()) p.coeffs_.push_back(BigInt{0});
        p.canonicalize();
        return p;
    }

    // degree of the zero polynomial is 0 here (it never occurs as a
    // visibility polynomial; those always have constant coefficient 1)
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    const BigInt& coeff(int k) const {
        static const BigInt kZero{0};
        if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
        return coeffs_[static_cast<std::size_t>(k)];
    }

    const std::vector<BigInt>& coeffs() const { return coeffs_; }

    bool all_nonnegative() const {
        for (const auto& c : coeffs_)
            if (c.negative()) return false;
        return true;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt{0});
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) r.coeffs_[i] += b.coeffs_[i];
        }
        r.canonicalize();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        Polynomial r;
        r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt{0});
        for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
            if (i < a.coeffs_.size()) r.coeffs_[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) r.coeffs_[i] -= b.coeffs_[i];
        }
        r.canonicalize();
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        Polynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt{0});
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        r.canonicalize();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    // exact Horner evaluation at a non-negative integer point
    BigInt evaluate(const BigInt& t) const {
        if (t.negative()) throw validity_error("Polynomial::evaluate: t must be >= 0");
        BigInt acc{0};
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
        return acc;
    }

    // "1 + 8x + 28x^2 + ...": zero terms skipped, unit coefficients implicit
    std::string to_human() const { return render("^", ""); }

    // "1 + 8x + 28x^{2} + ..."
    std::string to_latex() const { return render("^{", "}"); }

private:
    std::string render(const char* caret, const char* close) const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const BigInt& c = coeffs_[k];
            if (c.is_zero()) continue;
            if (!out.empty()) out += c.negative() ? " - " : " + ";
            else if (c.negative()) out += "-";
            BigInt mag = c.negative() ? -c : c;
            bool unit = mag == BigInt{1};
            if (k == 0 || !unit) out += mag.to_string();
            if (k >= 1) out += "x";
            if (k >= 2) out += std::string(caret) + std::to_string(k) + close;
        }
        return out;
    }

    void canonicalize() {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<BigInt> coeffs_;
};

// (1+x)^k expanded by repeated multiplication; coefficients are the exact
// binomials C(k, i).
inline Polynomial binomial_expand(int k) {
    if (k < 0) throw validity_error("binomial_expand: k must be >= 0");
    Polynomial one_plus_x = Polynomial::from_coeffs({BigInt{1}, BigInt{1}});
    Polynomial p = Polynomial::one();
    for (int i = 0; i < k; ++i) p *= one_plus_x;
    return p;
}

}  // namespace visipoly
