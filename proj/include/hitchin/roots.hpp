#pragma once

#include "hitchin/poly.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace hitchin {

struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("root finding on the zero polynomial") {}
};

struct ToleranceOutOfRange : std::runtime_error {
    explicit ToleranceOutOfRange(double t)
        : std::runtime_error("tolerance out of range: " + std::to_string(t)) {}
};

struct RootCluster {
    std::complex<double> location;
    int multiplicity;
    // |p(location)| on the input polynomial, before scaling.
    double residual;
};

// All complex roots with multiplicities. Multiplicities come from the exact
// square-free structure of the coefficients; floating point only places the
// roots. Results are sorted by (re, im). Constant nonzero polynomials yield
// an empty list; the zero polynomial and tol outside (0,1) are errors.
std::vector<RootCluster> roots_with_multiplicity(const Poly& p, double tol = 1e-9);

// (degree, multiplicity) of each square-free factor, multiplicity ascending.
std::vector<std::pair<int, int>> square_free_multiplicity(const Poly& p);

// Simple roots of a polynomial given by complex coefficients (ascending
// degree). Aberth-Ehrlich with Newton polish; intended for square-free input.
std::vector<std::complex<double>> solve_simple_roots(std::vector<std::complex<double>> coeffs);

}  // namespace hitchin
