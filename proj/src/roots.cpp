#include "hitchin/roots.hpp"

#include <algorithm>
#include <cmath>

namespace hitchin {

namespace {

std::complex<double> horner(const std::vector<std::complex<double>>& c,
                            std::complex<double> x) {
    std::complex<double> acc(0.0, 0.0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::vector<std::complex<double>> derivative(const std::vector<std::complex<double>>& c) {
    std::vector<std::complex<double>> d;
    for (size_t k = 1; k < c.size(); ++k) d.push_back(double(k) * c[k]);
    return d;
}

}  // namespace

std::vector<std::complex<double>> solve_simple_roots(std::vector<std::complex<double>> c) {
    while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
    if (c.size() <= 1) return {};
    const int n = static_cast<int>(c.size()) - 1;
    if (n == 1) return {-c[0] / c[1]};

    // Scale to unit leading coefficient for conditioning.
    for (auto& v : c) v /= c.back();
    auto d = derivative(c);

    double radius = 0.0;
    for (int k = 0; k < n; ++k) radius = std::max(radius, std::abs(c[k]));
    radius = 1.0 + radius;

    std::vector<std::complex<double>> z(n);
    for (int k = 0; k < n; ++k) {
        double theta = 2.0 * M_PI * k / n + 0.41;
        z[k] = radius * std::polar(0.7, theta) + std::complex<double>(0.1, 0.05);
    }

    for (int iter = 0; iter < 400; ++iter) {
        double moved = 0.0;
        for (int k = 0; k < n; ++k) {
            std::complex<double> pv = horner(c, z[k]);
            if (std::abs(pv) == 0.0) continue;
            std::complex<double> dv = horner(d, z[k]);
            std::complex<double> ratio = (std::abs(dv) == 0.0)
                                             ? std::complex<double>(0.5, 0.5)
                                             : pv / dv;
            std::complex<double> sum(0.0, 0.0);
            for (int j = 0; j < n; ++j) {
                if (j == k) continue;
                std::complex<double> diff = z[k] - z[j];
                if (std::abs(diff) < 1e-300) diff = std::complex<double>(1e-300, 0);
                sum += 1.0 / diff;
            }
            std::complex<double> denom = 1.0 - ratio * sum;
            std::complex<double> step = (std::abs(denom) < 1e-300) ? ratio : ratio / denom;
            z[k] -= step;
            moved = std::max(moved, std::abs(step));
        }
        if (moved < 1e-14 * (1.0 + radius)) break;
    }

    // Newton polish, helps once Aberth has separated the roots.
    for (int k = 0; k < n; ++k) {
        for (int it = 0; it < 8; ++it) {
            std::complex<double> pv = horner(c, z[k]);
            std::complex<double> dv = horner(d, z[k]);
            if (std::abs(dv) == 0.0) break;
            std::complex<double> step = pv / dv;
            z[k] -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(z[k]))) break;
        }
    }

    std::sort(z.begin(), z.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    return z;
}

std::vector<std::pair<int, int>> square_free_multiplicity(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    std::vector<std::pair<int, int>> out;
    for (const auto& [f, m] : square_free_factorization(p)) out.emplace_back(f.degree(), m);
    return out;
}

std::vector<RootCluster> roots_with_multiplicity(const Poly& p, double tol) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (!(tol > 0.0) || !(tol < 1.0)) throw ToleranceOutOfRange(tol);
    std::vector<RootCluster> out;
    if (p.degree() < 1) return out;

    // Accept r when |p(r)| is small against the evaluation scale
    // sum_k |c_k| |r|^k, i.e. when r is an exact root of a polynomial whose
    // coefficients differ relatively by at most tol.  A bound that ignores
    // the root magnitude rejects well-conditioned roots far from the origin.
    auto pc = p.complex_coeffs();
    auto eval_scale = [&pc](std::complex<double> r) {
        double s = 0.0, rk = 1.0;
        const double ar = std::abs(r);
        for (const auto& c : pc) {
            s += std::abs(c) * rk;
            rk *= ar;
        }
        return s;
    };
    for (const auto& [factor, mult] : square_free_factorization(p)) {
        auto fc = factor.complex_coeffs();
        auto dc = derivative(fc);
        auto roots = solve_simple_roots(fc);
        for (auto r : roots) {
            double res = std::abs(p.eval(r));
            double bound = tol * (1.0 + eval_scale(r));
            for (int retry = 0; retry < 20 && res >= bound; ++retry) {
                std::complex<double> dv = horner(dc, r);
                if (std::abs(dv) == 0.0) break;
                r -= horner(fc, r) / dv;
                res = std::abs(p.eval(r));
                bound = tol * (1.0 + eval_scale(r));
            }
            if (res >= bound)
                throw std::runtime_error("root refinement failed to meet tolerance");
            out.push_back(RootCluster{r, mult, res});
        }
    }

    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.location.real() != b.location.real())
            return a.location.real() < b.location.real();
        return a.location.imag() < b.location.imag();
    });
    return out;
}

}  // namespace hitchin
