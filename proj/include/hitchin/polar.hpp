#pragma once

#include "hitchin/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hitchin {

// Pole pattern and residue shape at (q1, q2). Upper case = order-2 resp.
// order-3 pole, lower case = order-1 pole; S/s semisimple, N/n not.
enum class CaseTag { D22_Ss, D22_Sn, D22_Ns, D22_Nn, D31_Ss, D31_Sn, D31_Ns, D31_Nn };

std::string to_string(CaseTag tag);
CaseTag parse_case_tag(const std::string& name);

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

struct ResidueViolation : std::runtime_error {
    explicit ResidueViolation(const std::string& what) : std::runtime_error(what) {}
};

struct NotElliptic : std::runtime_error {
    explicit NotElliptic(std::string r)
        : std::runtime_error("pencil is not elliptic: " + r), reason(std::move(r)) {}
    std::string reason;
};

// Local expansion coefficients of the Higgs field at the two poles. The D22_Ns
// shape is accepted and stored swapped onto D22_Sn (the pole exchange is a
// symmetry of the (2,2) pattern); input_tag remembers what the caller wrote.
struct PolarData {
    CaseTag tag = CaseTag::D22_Ss;
    CaseTag input_tag = CaseTag::D22_Ss;
    std::map<std::string, GaussianRational> params;

    const GaussianRational& at(const std::string& name) const;
};

// Exchange the two poles of a (2,2) datum: a <-> b, lambda <-> mu.
PolarData swap_poles(const PolarData& d);

enum class SectionParity { None, Plus, Minus, Both };

struct DerivedInvariants {
    CaseTag tag = CaseTag::D22_Ss;

    std::optional<GaussianRational> A, B, L, M, Q, R;
    std::optional<GaussianRational> delta, delta0, delta1;

    bool has_section = false;
    SectionParity parity = SectionParity::None;

    // Exceptional-locus data for the two families whose pencil meets the
    // blown-up points (D31_Sn, D31_Nn): the singular points on the u-axis of
    // the blow-up chart are the roots of blow_a u^2 + blow_b u + blow_c, all
    // sharing the fiber value blow_t. blow_disc decides coincidence exactly.
    bool has_blowup = false;
    GaussianRational blow_a, blow_b, blow_c, blow_disc, blow_t;

    // Sums that enter the pencil and the blow-up formulas.
    GaussianRational b_sum, lambda_sum;
};

// Checks the residue relation and regularity, then derives the invariants.
DerivedInvariants validate(const PolarData& d);

// Coefficients of the base locus data (p's) and pencil (q's) in the standard
// trivializations; t_slot tells which q carries the pencil parameter t
// (index 2 for the (2,2) pattern in chart 1, index 3 for (3,1) in chart 2).
struct PencilCoeffs {
    GaussianRational p0, p1, p2;
    GaussianRational q0, q1, q2, q3, q4;
    int t_slot = 2;
};

PencilCoeffs pencil_coefficients(const PolarData& d, const GaussianRational& t);

// Characteristic-polynomial data chi = w^2 + f w + (g0 - t z^k) in the
// analysis chart of the case; k = 2 for (2,2), k = 1 for (3,1).
struct CurveData {
    std::vector<GaussianRational> f;   // coefficients, ascending
    std::vector<GaussianRational> g0;  // pencil-independent part, ascending
    int t_power = 2;
};

CurveData curve_data(const PolarData& d);

// Parameter names required for each case, in canonical order.
const std::vector<std::string>& case_param_names(CaseTag tag);

}  // namespace hitchin
