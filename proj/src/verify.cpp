#include "hitchin/verify.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <sstream>

#include "hitchin/classifier.hpp"
#include "hitchin/kodaira.hpp"
#include "hitchin/oracle.hpp"

namespace hitchin {

namespace {

// Counter-mode generator: the stream for (seed, index) is a pure function of
// both, so samples are reproducible under any loop schedule.
struct SplitMix {
    std::uint64_t s;
    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    long range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

Rational draw_rational(SplitMix& g) { return Rational(g.range(-20, 20), g.range(1, 20)); }

GaussianRational draw_param(SplitMix& g) {
    Rational re = draw_rational(g);
    // A quarter of the draws get an imaginary part so non-real strata and
    // non-conjugate root patterns are exercised too.
    Rational im = (g.range(0, 3) == 0) ? draw_rational(g) : Rational(0);
    return GaussianRational(re, im);
}

// The last parameter in each case's list is determined by the residue
// condition at infinity; solve for it instead of rejection-sampling it.
void solve_residue(PolarData& d) {
    auto& p = d.params;
    switch (d.tag) {
        case CaseTag::D22_Ss:
        case CaseTag::D31_Ss:
            p["mu_minus"] = -(p["lambda_plus"] + p["lambda_minus"] + p["mu_plus"]);
            break;
        case CaseTag::D22_Sn:
            p["b_m2"] = -(p["lambda_plus"] + p["lambda_minus"]);
            break;
        case CaseTag::D22_Ns:
            p["mu_minus"] = -(p["a_m2"] + p["mu_plus"]);
            break;
        case CaseTag::D22_Nn:
            p["b_m2"] = -p["a_m2"];
            break;
        case CaseTag::D31_Sn:
            p["b_m1"] = gr(-1, 2) * (p["lambda_plus"] + p["lambda_minus"]);
            break;
        case CaseTag::D31_Ns:
            p["mu_minus"] = -(p["b_m2"] + p["mu_plus"]);
            break;
        case CaseTag::D31_Nn:
            p["b_m1"] = gr(-1, 2) * p["b_m2"];
            break;
    }
}

}  // namespace

PolarData sample_polar_data(CaseTag tag, std::uint64_t seed, long index, long* rejected) {
    SplitMix g{seed ^ (0x9E3779B97F4A7C15ULL *
                       (static_cast<std::uint64_t>(index) + 0x632BE59BD9B4E019ULL))};
    g.next();
    const auto& names = case_param_names(tag);
    for (;;) {
        PolarData d;
        d.tag = tag;
        d.input_tag = tag;
        for (const auto& name : names) d.params[name] = draw_param(g);
        solve_residue(d);
        try {
            validate(d);
            return d;
        } catch (const NotElliptic&) {
            if (rejected) ++*rejected;
        }
    }
}

SampleOutcome check_sample(const PolarData& data, double tol, double cluster_tol) {
    SampleOutcome out;
    try {
        DerivedInvariants inv = validate(data);
        FiberReport rep = classify(inv, data.tag);
        out.branch = rep.branch;

        std::vector<std::string> expected;
        for (const auto& f : rep.fibers)
            if (f.kodaira) expected.push_back(to_string(*f.kodaira));
        std::sort(expected.begin(), expected.end());

        auto points = singular_locus(data, tol);
        // Draws near a degenerate stratum can leave two spectral values a
        // hair apart (e.g. the base/blow-up gap in the (3,1) nn case is
        // exactly R^2/8Q, quadratically small near the R = 0 wall).  When
        // clustering reports instability, retighten and retry; a genuine
        // collision stays merged at every tolerance and still surfaces.
        OracleReport oracle;
        for (double ct = cluster_tol;; ct /= 100.0) {
            try {
                oracle = infer_configuration(points, data, ct);
                break;
            } catch (const AmbiguousCluster&) {
                if (ct < cluster_tol * 1e-5) throw;
            }
        }
        std::vector<std::string> got;
        for (const auto& k : oracle.inferred) got.push_back(to_string(k));
        std::sort(got.begin(), got.end());

        auto join = [](const std::vector<std::string>& v) {
            std::ostringstream os;
            for (size_t i = 0; i < v.size(); ++i) os << (i ? "+" : "") << v[i];
            return os.str();
        };
        if (!oracle.unresolved.empty()) {
            std::ostringstream os;
            os << "unresolved cluster(s): ";
            for (size_t i = 0; i < oracle.unresolved.size(); ++i)
                os << (i ? "; " : "") << oracle.unresolved[i];
            out.disagreement = os.str();
        } else if (got != expected) {
            out.disagreement =
                "classifier " + join(expected) + " vs numeric " + join(got);
        }
    } catch (const std::exception& e) {
        out.disagreement = std::string("exception: ") + e.what();
    }
    return out;
}

namespace {

VerifySummary run_impl(const VerifyOptions& opt, bool parallel) {
    const long n = std::max<long>(opt.samples, 0);
    std::vector<SampleOutcome> outs(static_cast<size_t>(n));
    std::vector<long> rejects(static_cast<size_t>(n), 0);

    auto work = [&](long i) {
        long rej = 0;
        PolarData d = sample_polar_data(opt.tag, opt.seed, i, &rej);
        outs[static_cast<size_t>(i)] = check_sample(d, opt.tol, opt.cluster_tol);
        rejects[static_cast<size_t>(i)] = rej;
    };

    auto start = std::chrono::steady_clock::now();
    if (parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long i = 0; i < n; ++i) work(i);
    } else {
        for (long i = 0; i < n; ++i) work(i);
    }
    auto stop = std::chrono::steady_clock::now();

    VerifySummary s;
    s.total = n;
    s.records.reserve(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        const auto& o = outs[static_cast<size_t>(i)];
        bool ok = o.disagreement.empty();
        s.records.push_back({i, o.branch, ok});
        if (ok)
            ++s.agree;
        else
            s.disagreements.push_back({i, o.branch, o.disagreement});
        s.rejected += rejects[static_cast<size_t>(i)];
    }
    s.seconds = std::chrono::duration<double>(stop - start).count();
    return s;
}

}  // namespace

VerifySummary run_verification(const VerifyOptions& opt) { return run_impl(opt, true); }

VerifySummary run_verification_serial(const VerifyOptions& opt) {
    return run_impl(opt, false);
}

}  // namespace hitchin
