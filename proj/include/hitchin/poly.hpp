#pragma once

#include "hitchin/rational.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace hitchin {

// Dense univariate polynomial over Q(i), coefficient of z^k at index k.
// The zero polynomial has an empty coefficient vector and degree -1.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly constant(GaussianRational v) { return Poly({std::move(v)}); }
    // c0 + c1 z + c2 z^2 + ...
    static Poly from(std::initializer_list<GaussianRational> coeffs) {
        return Poly(std::vector<GaussianRational>(coeffs));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const GaussianRational& operator[](size_t k) const { return c_[k]; }
    const std::vector<GaussianRational>& coeffs() const { return c_; }
    const GaussianRational& leading() const { return c_.back(); }

    GaussianRational eval(const GaussianRational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    Poly derivative() const;
    Poly monic() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussianRational& s, const Poly& p);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Euclidean division; remainder has degree < deg(divisor).
    static std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
    // Exact quotient; throws if the division leaves a remainder.
    static Poly exact_div(const Poly& num, const Poly& den);

    std::vector<std::complex<double>> complex_coeffs() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<GaussianRational> c_;
};

// Monic gcd over Q(i)[z].
Poly poly_gcd(Poly a, Poly b);

// Yun decomposition: p = lc * prod f_i^{m_i} with the f_i monic, square-free
// and pairwise coprime. Pairs are (factor, multiplicity), multiplicity ascending.
std::vector<std::pair<Poly, int>> square_free_factorization(const Poly& p);

}  // namespace hitchin
