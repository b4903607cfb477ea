#include "hitchin/polar.hpp"

#include <algorithm>

namespace hitchin {

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::D22_Ss: return "d22-ss";
        case CaseTag::D22_Sn: return "d22-sn";
        case CaseTag::D22_Ns: return "d22-ns";
        case CaseTag::D22_Nn: return "d22-nn";
        case CaseTag::D31_Ss: return "d31-ss";
        case CaseTag::D31_Sn: return "d31-sn";
        case CaseTag::D31_Ns: return "d31-ns";
        case CaseTag::D31_Nn: return "d31-nn";
    }
    return "?";
}

CaseTag parse_case_tag(const std::string& name) {
    if (name == "d22-ss") return CaseTag::D22_Ss;
    if (name == "d22-sn") return CaseTag::D22_Sn;
    if (name == "d22-ns") return CaseTag::D22_Ns;
    if (name == "d22-nn") return CaseTag::D22_Nn;
    if (name == "d31-ss") return CaseTag::D31_Ss;
    if (name == "d31-sn") return CaseTag::D31_Sn;
    if (name == "d31-ns") return CaseTag::D31_Ns;
    if (name == "d31-nn") return CaseTag::D31_Nn;
    throw SchemaError("unknown case: " + name);
}

const std::vector<std::string>& case_param_names(CaseTag tag) {
    static const std::vector<std::string> d22_ss = {
        "a_plus", "a_minus", "lambda_plus", "lambda_minus",
        "b_plus", "b_minus", "mu_plus",     "mu_minus"};
    static const std::vector<std::string> d22_sn = {
        "a_plus", "a_minus", "lambda_plus", "lambda_minus", "b_m4", "b_m3", "b_m2"};
    static const std::vector<std::string> d22_ns = {
        "a_m4", "a_m3", "a_m2", "b_plus", "b_minus", "mu_plus", "mu_minus"};
    static const std::vector<std::string> d22_nn = {
        "a_m4", "a_m3", "a_m2", "b_m4", "b_m3", "b_m2"};
    static const std::vector<std::string> d31_ss = {
        "a_plus",      "a_minus",      "b_plus",  "b_minus",
        "lambda_plus", "lambda_minus", "mu_plus", "mu_minus"};
    static const std::vector<std::string> d31_sn = {
        "a_plus", "a_minus", "b_plus", "b_minus", "lambda_plus", "lambda_minus", "b_m1"};
    static const std::vector<std::string> d31_ns = {
        "b_m6", "b_m5", "b_m4", "b_m3", "b_m2", "mu_plus", "mu_minus"};
    static const std::vector<std::string> d31_nn = {
        "b_m6", "b_m5", "b_m4", "b_m3", "b_m2", "b_m1"};
    switch (tag) {
        case CaseTag::D22_Ss: return d22_ss;
        case CaseTag::D22_Sn: return d22_sn;
        case CaseTag::D22_Ns: return d22_ns;
        case CaseTag::D22_Nn: return d22_nn;
        case CaseTag::D31_Ss: return d31_ss;
        case CaseTag::D31_Sn: return d31_sn;
        case CaseTag::D31_Ns: return d31_ns;
        case CaseTag::D31_Nn: return d31_nn;
    }
    return d22_ss;
}

const GaussianRational& PolarData::at(const std::string& name) const {
    auto it = params.find(name);
    if (it == params.end()) throw SchemaError("missing parameter: " + name);
    return it->second;
}

namespace {

std::string swapped_name(const std::string& n) {
    if (n.rfind("a_", 0) == 0) return "b_" + n.substr(2);
    if (n.rfind("b_", 0) == 0) return "a_" + n.substr(2);
    if (n.rfind("lambda_", 0) == 0) return "mu_" + n.substr(7);
    if (n.rfind("mu_", 0) == 0) return "lambda_" + n.substr(3);
    return n;
}

CaseTag swapped_tag(CaseTag t) {
    switch (t) {
        case CaseTag::D22_Ss: return CaseTag::D22_Ss;
        case CaseTag::D22_Sn: return CaseTag::D22_Ns;
        case CaseTag::D22_Ns: return CaseTag::D22_Sn;
        case CaseTag::D22_Nn: return CaseTag::D22_Nn;
        default: throw std::logic_error("pole swap is a (2,2) operation");
    }
}

// Error reasons refer to the caller's labels even when the datum was stored
// in the swapped orientation.
std::string unswap_reason(const PolarData& d, std::string reason) {
    if (d.input_tag != CaseTag::D22_Ns) return reason;
    if (reason == "A=0") return "B=0";
    if (reason == "b_m3=0") return "a_m3=0";
    return reason;
}

}  // namespace

PolarData swap_poles(const PolarData& d) {
    PolarData out;
    out.tag = swapped_tag(d.tag);
    out.input_tag = d.input_tag;
    for (const auto& [k, v] : d.params) out.params[swapped_name(k)] = v;
    return out;
}

DerivedInvariants validate(const PolarData& d) {
    DerivedInvariants inv;
    inv.tag = d.tag;
    const auto p = [&](const char* n) { return d.at(n); };
    const GaussianRational zero(0), two(2);

    auto require_residue = [&](const GaussianRational& lhs, const std::string& text) {
        if (!lhs.is_zero()) {
            std::string msg = "residue relation violated: " + text + " must vanish";
            if (d.input_tag == CaseTag::D22_Ns)
                msg = "residue relation violated: mu_plus+mu_minus+a_m2 must vanish";
            throw ResidueViolation(msg);
        }
    };
    auto reject = [&](const std::string& reason) {
        throw NotElliptic(unswap_reason(d, reason));
    };

    switch (d.tag) {
        case CaseTag::D22_Ss: {
            require_residue(p("lambda_plus") + p("lambda_minus") + p("mu_plus") + p("mu_minus"),
                            "lambda_plus+lambda_minus+mu_plus+mu_minus");
            GaussianRational A = p("a_minus") - p("a_plus");
            GaussianRational B = p("b_minus") - p("b_plus");
            GaussianRational L = p("lambda_minus") - p("lambda_plus");
            GaussianRational M = p("mu_minus") - p("mu_plus");
            if (A.is_zero()) reject("A=0");
            if (B.is_zero()) reject("B=0");
            inv.A = A; inv.B = B; inv.L = L; inv.M = M;
            GaussianRational L2 = L * L, M2 = M * M;
            inv.delta = gr(-256) * pow(A, 3) * pow(B, 3) + gr(192) * A * A * B * B * L * M -
                        gr(3) * A * B * (gr(9) * L2 * L2 - two * L2 * M2 + gr(9) * M2 * M2) +
                        gr(4) * L2 * L * M2 * M;
            inv.delta0 = gr(3) * A * B * (L * M - gr(4) * A * B);
            inv.delta1 = pow(B, 4) * (gr(16) * A * B * L * M - gr(64) * A * A * B * B -
                                      gr(3) * M2 * M2);
            bool plus = (L == M), minus = (L == -M);
            inv.parity = plus && minus ? SectionParity::Both
                        : plus          ? SectionParity::Plus
                        : minus         ? SectionParity::Minus
                                        : SectionParity::None;
            inv.has_section = inv.parity != SectionParity::None;
            break;
        }
        case CaseTag::D22_Sn: {
            require_residue(p("lambda_plus") + p("lambda_minus") + p("b_m2"),
                            "lambda_plus+lambda_minus+b_m2");
            GaussianRational A = p("a_minus") - p("a_plus");
            GaussianRational L = p("lambda_minus") - p("lambda_plus");
            GaussianRational b3 = p("b_m3");
            if (A.is_zero()) reject("A=0");
            if (b3.is_zero()) reject("b_m3=0");
            inv.A = A; inv.L = L;
            inv.delta = gr(4) * pow(A, 3) * b3 * (two * pow(L, 3) - gr(27) * A * b3);
            inv.delta0 = gr(6) * A * b3 * L;
            break;
        }
        case CaseTag::D22_Nn: {
            require_residue(p("a_m2") + p("b_m2"), "a_m2+b_m2");
            GaussianRational a3 = p("a_m3"), b3 = p("b_m3");
            if ((a3 * b3).is_zero()) reject("a_m3*b_m3=0");
            inv.delta = gr(4) * a3 * b3;
            break;
        }
        case CaseTag::D31_Ss: {
            require_residue(p("lambda_plus") + p("lambda_minus") + p("mu_plus") + p("mu_minus"),
                            "lambda_plus+lambda_minus+mu_plus+mu_minus");
            GaussianRational A = p("a_minus") - p("a_plus");
            GaussianRational B = p("b_minus") - p("b_plus");
            GaussianRational L = p("lambda_minus") - p("lambda_plus");
            GaussianRational M = p("mu_minus") - p("mu_plus");
            if (A.is_zero()) reject("A=0");
            if (M.is_zero()) reject("M=0");
            inv.A = A; inv.B = B; inv.L = L; inv.M = M;
            GaussianRational L2 = L * L, M2 = M * M, B2 = B * B;
            GaussianRational u = L2 + gr(3) * M2;
            inv.delta = gr(48) * pow(A, 4) * u * u +
                        gr(64) * pow(A, 3) * B2 * L * (L2 - gr(9) * M2) +
                        gr(24) * A * A * pow(B2, 2) * u - pow(B2, 4);
            GaussianRational v = two * A * L + B2;
            inv.delta0 = v * v - gr(36) * A * A * M2;
            bool plus = (L == M), minus = (L == -M);
            inv.parity = plus && minus ? SectionParity::Both
                        : plus          ? SectionParity::Plus
                        : minus         ? SectionParity::Minus
                                        : SectionParity::None;
            inv.has_section = inv.parity != SectionParity::None;
            break;
        }
        case CaseTag::D31_Sn: {
            require_residue(p("lambda_plus") + p("lambda_minus") + two * p("b_m1"),
                            "lambda_plus+lambda_minus+2*b_m1");
            GaussianRational A = p("a_minus") - p("a_plus");
            GaussianRational B = p("b_minus") - p("b_plus");
            GaussianRational L = p("lambda_minus") - p("lambda_plus");
            if (A.is_zero()) reject("A=0");
            inv.A = A; inv.B = B; inv.L = L;
            inv.delta = gr(4) * A * A * (B * B - gr(6) * A * L);
            inv.has_section = L.is_zero();
            inv.b_sum = p("b_minus") + p("b_plus");
            inv.lambda_sum = p("lambda_minus") + p("lambda_plus");
            inv.has_blowup = true;
            inv.blow_a = p("b_minus") * p("b_plus") - A * L / two;
            inv.blow_b = inv.b_sum;
            inv.blow_c = GaussianRational(1);
            inv.blow_disc = inv.blow_b * inv.blow_b - gr(4) * inv.blow_a * inv.blow_c;
            inv.blow_t = inv.b_sum * p("b_m1");
            break;
        }
        case CaseTag::D31_Ns: {
            require_residue(p("b_m2") + p("mu_plus") + p("mu_minus"),
                            "b_m2+mu_plus+mu_minus");
            GaussianRational M = p("mu_minus") - p("mu_plus");
            GaussianRational Q = gr(8) * p("b_m5");
            GaussianRational R = p("b_m4") * p("b_m4") + gr(4) * p("b_m3");
            if (Q.is_zero()) reject("Q=0");
            if (M.is_zero()) reject("M=0");
            inv.M = M; inv.Q = Q; inv.R = R;
            inv.delta = M * M * (gr(27) * M * M * Q * Q - gr(4) * pow(R, 3));
            inv.delta0 = R * R;
            break;
        }
        case CaseTag::D31_Nn: {
            require_residue(p("b_m2") + two * p("b_m1"), "b_m2+2*b_m1");
            GaussianRational Q = gr(8) * p("b_m5");
            GaussianRational R = p("b_m4") * p("b_m4") + gr(4) * p("b_m3");
            if (Q.is_zero()) reject("Q=0");
            inv.Q = Q; inv.R = R;
            inv.has_blowup = true;
            inv.blow_a = p("b_m3");
            inv.blow_b = -p("b_m4");
            inv.blow_c = GaussianRational(-1);
            inv.blow_disc = inv.blow_b * inv.blow_b - gr(4) * inv.blow_a * inv.blow_c;
            inv.blow_t = p("b_m4") * p("b_m1");
            break;
        }
        case CaseTag::D22_Ns:
            // Stored data is always canonical; reaching here means the caller
            // built a PolarData by hand without the parser. Honor it anyway.
            return validate(swap_poles(d));
    }
    (void)zero;
    return inv;
}

CurveData curve_data(const PolarData& d) {
    const auto p = [&](const char* n) { return d.at(n); };
    CurveData c;
    switch (d.tag) {
        case CaseTag::D22_Ss: {
            c.f = {-(p("a_minus") + p("a_plus")), -(p("lambda_minus") + p("lambda_plus")),
                   p("b_minus") + p("b_plus")};
            c.g0 = {p("a_minus") * p("a_plus"),
                    p("a_plus") * p("lambda_minus") + p("a_minus") * p("lambda_plus"),
                    GaussianRational(0),
                    p("b_plus") * p("mu_minus") + p("b_minus") * p("mu_plus"),
                    p("b_minus") * p("b_plus")};
            c.t_power = 2;
            break;
        }
        case CaseTag::D22_Sn: {
            c.f = {-(p("a_minus") + p("a_plus")), p("b_m2"), gr(2) * p("b_m4")};
            c.g0 = {p("a_minus") * p("a_plus"),
                    p("a_plus") * p("lambda_minus") + p("a_minus") * p("lambda_plus"),
                    GaussianRational(0),
                    p("b_m4") * p("b_m2") - p("b_m3"),
                    p("b_m4") * p("b_m4")};
            c.t_power = 2;
            break;
        }
        case CaseTag::D22_Nn: {
            c.f = {gr(-2) * p("a_m4"), -p("a_m2"), gr(2) * p("b_m4")};
            c.g0 = {p("a_m4") * p("a_m4"),
                    p("a_m4") * p("a_m2") - p("a_m3"),
                    GaussianRational(0),
                    p("b_m4") * p("b_m2") - p("b_m3"),
                    p("b_m4") * p("b_m4")};
            c.t_power = 2;
            break;
        }
        case CaseTag::D31_Ss:
        case CaseTag::D31_Sn: {
            c.f = {p("lambda_minus") + p("lambda_plus"), p("b_minus") + p("b_plus"),
                   p("a_minus") + p("a_plus")};
            GaussianRational tail = (d.tag == CaseTag::D31_Ss)
                                        ? p("mu_minus") * p("mu_plus")
                                        : p("b_m1") * p("b_m1");
            c.g0 = {tail,
                    GaussianRational(0),
                    p("a_plus") * p("lambda_minus") + p("a_minus") * p("lambda_plus") +
                        p("b_minus") * p("b_plus"),
                    p("a_plus") * p("b_minus") + p("a_minus") * p("b_plus"),
                    p("a_minus") * p("a_plus")};
            c.t_power = 1;
            break;
        }
        case CaseTag::D31_Ns:
        case CaseTag::D31_Nn: {
            c.f = {p("b_m2"), p("b_m4"), gr(2) * p("b_m6")};
            GaussianRational tail = (d.tag == CaseTag::D31_Ns)
                                        ? p("mu_minus") * p("mu_plus")
                                        : p("b_m1") * p("b_m1");
            c.g0 = {tail,
                    GaussianRational(0),
                    p("b_m6") * p("b_m2") - p("b_m3"),
                    p("b_m6") * p("b_m4") - p("b_m5"),
                    p("b_m6") * p("b_m6")};
            c.t_power = 1;
            break;
        }
        case CaseTag::D22_Ns:
            return curve_data(swap_poles(d));
    }
    return c;
}

PencilCoeffs pencil_coefficients(const PolarData& d, const GaussianRational& t) {
    CurveData c = curve_data(d);
    PencilCoeffs pc;
    if (c.t_power == 2) {
        pc.p0 = -c.f[0];
        pc.p1 = -c.f[1];
        pc.p2 = -c.f[2];
        pc.q0 = -c.g0[0];
        pc.q1 = -c.g0[1];
        pc.q2 = t - c.g0[2];
        pc.q3 = -c.g0[3];
        pc.q4 = -c.g0[4];
        pc.t_slot = 2;
    } else {
        pc.p0 = c.f[2];
        pc.p1 = c.f[1];
        pc.p2 = c.f[0];
        pc.q0 = -c.g0[4];
        pc.q1 = -c.g0[3];
        pc.q2 = -c.g0[2];
        pc.q3 = t - c.g0[1];
        pc.q4 = -c.g0[0];
        pc.t_slot = 3;
    }
    return pc;
}

}  // namespace hitchin
