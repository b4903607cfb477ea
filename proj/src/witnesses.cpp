#include "hitchin/witnesses.hpp"

#include <stdexcept>
#include <utility>

namespace hitchin {

namespace {

PolarData make_data(CaseTag tag,
                    std::initializer_list<std::pair<const char*, GaussianRational>> kv) {
    PolarData d;
    d.tag = tag;
    d.input_tag = tag;
    for (const auto& [name, value] : kv) d.params[name] = value;
    return d;
}

PolarData quad_diff(CaseTag tag, const GaussianRational& A, const GaussianRational& B,
                    const GaussianRational& L, const GaussianRational& M) {
    const GaussianRational half = gr(1, 2);
    return make_data(tag, {{"a_plus", gr(0)},
                           {"a_minus", A},
                           {"b_plus", gr(0)},
                           {"b_minus", B},
                           {"lambda_plus", -half * L},
                           {"lambda_minus", half * L},
                           {"mu_plus", -half * M},
                           {"mu_minus", half * M}});
}

PolarData d22_sn(const GaussianRational& A, const GaussianRational& L,
                 const GaussianRational& b4, const GaussianRational& b3) {
    const GaussianRational half = gr(1, 2);
    return make_data(CaseTag::D22_Sn, {{"a_plus", gr(0)},
                                       {"a_minus", A},
                                       {"lambda_plus", -half * L},
                                       {"lambda_minus", half * L},
                                       {"b_m4", b4},
                                       {"b_m3", b3},
                                       {"b_m2", gr(0)}});
}

PolarData d22_ns(const GaussianRational& B, const GaussianRational& M,
                 const GaussianRational& a4, const GaussianRational& a3) {
    const GaussianRational half = gr(1, 2);
    return make_data(CaseTag::D22_Ns, {{"a_m4", a4},
                                       {"a_m3", a3},
                                       {"a_m2", gr(0)},
                                       {"b_plus", gr(0)},
                                       {"b_minus", B},
                                       {"mu_plus", -half * M},
                                       {"mu_minus", half * M}});
}

PolarData d31_sn(const GaussianRational& a_minus, const GaussianRational& b_plus,
                 const GaussianRational& b_minus, const GaussianRational& lambda_minus) {
    return make_data(CaseTag::D31_Sn, {{"a_plus", gr(0)},
                                       {"a_minus", a_minus},
                                       {"b_plus", b_plus},
                                       {"b_minus", b_minus},
                                       {"lambda_plus", gr(0)},
                                       {"lambda_minus", lambda_minus},
                                       {"b_m1", gr(-1, 2) * lambda_minus}});
}

PolarData d31_ns(const GaussianRational& b6, const GaussianRational& b5,
                 const GaussianRational& b4, const GaussianRational& b3,
                 const GaussianRational& M) {
    const GaussianRational half = gr(1, 2);
    return make_data(CaseTag::D31_Ns, {{"b_m6", b6},
                                       {"b_m5", b5},
                                       {"b_m4", b4},
                                       {"b_m3", b3},
                                       {"b_m2", gr(0)},
                                       {"mu_plus", -half * M},
                                       {"mu_minus", half * M}});
}

PolarData d31_nn(const GaussianRational& b6, const GaussianRational& b5,
                 const GaussianRational& b4, const GaussianRational& b3,
                 const GaussianRational& b1) {
    return make_data(CaseTag::D31_Nn, {{"b_m6", b6},
                                       {"b_m5", b5},
                                       {"b_m4", b4},
                                       {"b_m3", b3},
                                       {"b_m2", gr(-2) * b1},
                                       {"b_m1", b1}});
}

const GaussianRational I(Rational(0), Rational(1));

}  // namespace

PolarData semisimple_params(CaseTag tag, const GaussianRational& A,
                            const GaussianRational& B, const GaussianRational& L,
                            const GaussianRational& M) {
    if (tag != CaseTag::D22_Ss && tag != CaseTag::D31_Ss)
        throw std::invalid_argument("semisimple_params: case has fewer than four base points");
    return quad_diff(tag, A, B, L, M);
}

const std::vector<BranchWitness>& branch_witnesses(CaseTag tag) {
    using C = CaseTag;
    static const std::vector<BranchWitness> w22_ss = {
        {"4i1", quad_diff(C::D22_Ss, gr(1), gr(1), gr(2), gr(1))},
        {"2i2", quad_diff(C::D22_Ss, gr(1), gr(1), gr(0), gr(0))},
        {"i2+2i1", quad_diff(C::D22_Ss, gr(1), gr(1), gr(1), gr(1))},
        {"iii+i1", quad_diff(C::D22_Ss, gr(1), gr(1, 4), gr(1), gr(1))},
        {"ii+2i1", quad_diff(C::D22_Ss, gr(3), gr(1), gr(14, 3), gr(6))},
        {"2ii", quad_diff(C::D22_Ss, gr(1), gr(-1, 8) * I, I, gr(1))},
        {"ii+2i1(L2=-M2)", quad_diff(C::D22_Ss, gr(1), I, I, gr(1))},
    };
    static const std::vector<BranchWitness> w22_sn = {
        {"3i1", d22_sn(gr(1), gr(1), gr(1), gr(1))},
        {"ii+i1", d22_sn(gr(1), gr(3), gr(1), gr(2))},
    };
    static const std::vector<BranchWitness> w22_ns = {
        {"3i1", d22_ns(gr(1), gr(1), gr(1), gr(1))},
        {"ii+i1", d22_ns(gr(1), gr(3), gr(1), gr(2))},
    };
    static const std::vector<BranchWitness> w22_nn = {
        {"2i1", make_data(C::D22_Nn, {{"a_m4", gr(1)},
                                      {"a_m3", gr(1)},
                                      {"a_m2", gr(0)},
                                      {"b_m4", gr(1)},
                                      {"b_m3", gr(1)},
                                      {"b_m2", gr(0)}})},
    };
    static const std::vector<BranchWitness> w31_ss = {
        {"4i1", quad_diff(C::D31_Ss, gr(1), gr(1), gr(2), gr(1))},
        {"i2+2i1", quad_diff(C::D31_Ss, gr(1), gr(1), gr(1), gr(1))},
        {"iii+i1", quad_diff(C::D31_Ss, gr(1), gr(2), gr(1), gr(1))},
        {"ii+i2", quad_diff(C::D31_Ss, gr(1), gr(6), gr(-3), gr(-3))},
        {"ii+2i1", quad_diff(C::D31_Ss, gr(1), gr(14), gr(-59), gr(5))},
    };
    static const std::vector<BranchWitness> w31_sn = {
        {"iv", d31_sn(gr(1), gr(1), gr(1), gr(0))},
        {"ii+i2", d31_sn(gr(1), gr(0), gr(6), gr(6))},
        {"i3+i1", d31_sn(gr(1), gr(1), gr(4), gr(0))},
        {"iii+i1", d31_sn(gr(1), gr(0), gr(2), gr(-2))},
        {"i2+2i1", d31_sn(gr(1), gr(1), gr(1), gr(1))},
    };
    static const std::vector<BranchWitness> w31_ns = {
        {"3i1", d31_ns(gr(1), gr(1), gr(0), gr(0), gr(1))},
        {"ii+i1", d31_ns(gr(1), gr(1, 4), gr(1), gr(1, 2), gr(1))},
    };
    static const std::vector<BranchWitness> w31_nn = {
        {"iii", d31_nn(gr(1), gr(1), gr(2), gr(-1), gr(1))},
        {"i2+i1", d31_nn(gr(0), gr(1), gr(0), gr(1), gr(0))},
    };
    switch (tag) {
        case C::D22_Ss: return w22_ss;
        case C::D22_Sn: return w22_sn;
        case C::D22_Ns: return w22_ns;
        case C::D22_Nn: return w22_nn;
        case C::D31_Ss: return w31_ss;
        case C::D31_Sn: return w31_sn;
        case C::D31_Ns: return w31_ns;
        case C::D31_Nn: return w31_nn;
    }
    throw std::logic_error("branch_witnesses: bad tag");
}

}  // namespace hitchin
