#include "hitchin/poly.hpp"

#include <algorithm>
#include <sstream>

namespace hitchin {

std::string to_string(const GaussianRational& g) {
    std::ostringstream os;
    if (g.im == 0) {
        os << g.re;
    } else {
        os << "(" << g.re << (g.im < 0 ? "-" : "+") << boost::multiprecision::abs(g.im) << "i)";
    }
    return os.str();
}

GaussianRational Poly::eval(const GaussianRational& x) const {
    GaussianRational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::eval(const std::complex<double>& x) const {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_complex();
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GaussianRational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = GaussianRational(long(k)) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return (GaussianRational(1) / leading()) * (*this);
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] += b.c_[k];
    }
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<GaussianRational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < c.size(); ++k) {
        if (k < a.c_.size()) c[k] += a.c_[k];
        if (k < b.c_.size()) c[k] -= b.c_[k];
    }
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GaussianRational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
}

Poly operator*(const GaussianRational& s, const Poly& p) {
    std::vector<GaussianRational> c(p.c_.size());
    for (size_t k = 0; k < c.size(); ++k) c[k] = s * p.c_[k];
    return Poly(std::move(c));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<GaussianRational> r = num.c_;
    int dn = num.degree(), dd = den.degree();
    if (dn < dd) return {Poly(), num};
    std::vector<GaussianRational> q(dn - dd + 1);
    GaussianRational inv_lead = GaussianRational(1) / den.leading();
    for (int k = dn - dd; k >= 0; --k) {
        GaussianRational f = r[k + dd] * inv_lead;
        q[k] = f;
        if (f.is_zero()) continue;
        for (int j = 0; j <= dd; ++j) r[k + j] -= f * den.c_[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly Poly::exact_div(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

std::vector<std::complex<double>> Poly::complex_coeffs() const {
    std::vector<std::complex<double>> v(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) v[k] = c_[k].to_complex();
    return v;
}

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = a.monic();
    b = b.monic();
    while (!b.is_zero()) {
        Poly r = Poly::divmod(a, b).second;
        a = std::move(b);
        b = r.is_zero() ? Poly() : r.monic();
    }
    return a;
}

std::vector<std::pair<Poly, int>> square_free_factorization(const Poly& p) {
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() < 1) return out;
    Poly a = p.monic();
    Poly d = a.derivative();
    Poly g = poly_gcd(a, d);
    Poly b = Poly::exact_div(a, g);
    Poly c = Poly::exact_div(d, g) - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly f = poly_gcd(b, c);
        if (f.degree() > 0) out.emplace_back(f, i);
        b = Poly::exact_div(b, f);
        c = Poly::exact_div(c, f) - b.derivative();
        ++i;
    }
    return out;
}

}  // namespace hitchin
