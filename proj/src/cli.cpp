#include "hitchin/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "hitchin/classifier.hpp"
#include "hitchin/json_io.hpp"
#include "hitchin/kodaira.hpp"
#include "hitchin/oracle.hpp"
#include "hitchin/verify.hpp"
#include "hitchin/witnesses.hpp"

namespace hitchin {

namespace {

Json load_json(const std::string& input, const char* what) {
    std::string text;
    if (!input.empty() && input.front() == '{') {
        text = input;
    } else {
        std::ifstream in(input);
        if (!in) throw SchemaError(std::string(what) + ": cannot read file " + input);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string(what) + ": " + e.what());
    }
}

std::vector<std::string> fiber_names(const FiberReport& rep) {
    std::vector<std::string> names;
    for (const auto& f : rep.fibers)
        if (f.kodaira) names.push_back(to_string(*f.kodaira));
    std::sort(names.begin(), names.end());
    return names;
}

int emit(const Json& doc, const RunConfig& cfg, std::ostream& out, std::ostream& err,
         int code) {
    std::string text = doc.dump(2) + "\n";
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            err << "cannot write " << cfg.out_path << "\n";
            return 2;
        }
        f << text;
    }
    return code;
}

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.params_input.empty()) throw SchemaError("classify: --params is required");
    PolarData data = polar_from_json(load_json(cfg.params_input, "params"));
    if (!cfg.case_name.empty() && parse_case_tag(cfg.case_name) != data.tag)
        throw SchemaError("classify: --case disagrees with the params document");
    DerivedInvariants inv = validate(data);
    FiberReport rep;
    if (!cfg.weights_input.empty()) {
        ParabolicWeights w = weights_from_json(load_json(cfg.weights_input, "weights"));
        rep = classify_with_weights(inv, data.tag, w);
    } else {
        rep = classify(inv, data.tag);
    }
    return emit(to_json(rep), cfg, out, err, 0);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.case_name.empty()) throw SchemaError("verify: --case is required");
    VerifyOptions opt;
    opt.tag = parse_case_tag(cfg.case_name);
    opt.samples = cfg.samples;
    opt.seed = cfg.seed;
    opt.tol = cfg.tol;
    opt.cluster_tol = cfg.cluster_tol;
    VerifySummary summary = run_verification(opt);
    int code = summary.disagreements.empty() ? 0 : 4;
    return emit(to_json(summary, opt), cfg, out, err, code);
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.case_name.empty()) throw SchemaError("sweep: --case is required");
    CaseTag tag = parse_case_tag(cfg.case_name);
    Json rows = Json::array();
    for (const auto& w : branch_witnesses(tag)) {
        DerivedInvariants inv = validate(w.data);
        FiberReport rep = classify(inv, w.data.tag);
        if (!cfg.branch.empty() && rep.branch != cfg.branch) continue;
        rows.push_back(Json{{"source", "constructed"},
                            {"expected_branch", w.branch},
                            {"branch", rep.branch},
                            {"fibers", fiber_names(rep)},
                            {"params", to_json(w.data)}});
    }
    for (long i = 0; i < cfg.samples; ++i) {
        PolarData data = sample_polar_data(tag, cfg.seed, i);
        FiberReport rep = classify(validate(data), data.tag);
        if (!cfg.branch.empty() && rep.branch != cfg.branch) continue;
        rows.push_back(Json{{"source", "random"},
                            {"index", i},
                            {"branch", rep.branch},
                            {"fibers", fiber_names(rep)},
                            {"params", to_json(data)}});
    }
    Json doc{{"case", to_string(tag)},
             {"samples", cfg.samples},
             {"seed", cfg.seed},
             {"rows", rows}};
    if (tag == CaseTag::D31_Ss)
        doc["notes"] = Json::array(
            {"branch 2ii (B = 0, L^2 = -3 M^2) has no Gaussian-rational parameter "
             "point and cannot appear in sampled or constructed rows"});
    return emit(doc, cfg, out, err, 0);
}

int cmd_wallcross(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.params_input.empty()) throw SchemaError("wallcross: --params is required");
    PolarData data = polar_from_json(load_json(cfg.params_input, "params"));
    DerivedInvariants inv = validate(data);
    ParabolicWeights base = default_generic_weights();
    if (!cfg.weights_input.empty())
        base = weights_from_json(load_json(cfg.weights_input, "weights"));

    // Sample grid: endpoints, every integer wall inside the range, and the
    // two flanking points one tenth either side of each wall.  Endpoints are
    // snapped to tenths so the whole grid is exact.
    auto snap = [](double x) { return Rational(std::llround(x * 10.0), 10); };
    Rational lo = snap(cfg.wall_from), hi = snap(cfg.wall_to);
    if (lo > hi) std::swap(lo, hi);
    std::vector<Rational> grid = {lo, hi};
    std::vector<long> walls;
    const Rational tenth(1, 10);
    for (Integer n = rational_ceil(lo); Rational(n) <= hi; ++n) {
        walls.push_back(static_cast<long>(n));
        for (const Rational& x : {Rational(n) - tenth, Rational(n), Rational(n) + tenth})
            if (lo <= x && x <= hi) grid.push_back(x);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    Json points = Json::array();
    for (const Rational& x : grid) {
        ParabolicWeights w = base;
        w.extended_alpha_plus = x;
        FiberReport rep = classify_with_weights(inv, data.tag, w);
        points.push_back(Json{{"alpha_plus", to_json(x)}, {"report", to_json(rep)}});
    }
    Json doc{{"case", to_string(data.tag)}, {"walls", walls}, {"points", points}};
    return emit(doc, cfg, out, err, 0);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "classify") return cmd_classify(cfg, out, err);
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        if (cfg.command == "sweep") return cmd_sweep(cfg, out, err);
        if (cfg.command == "wallcross") return cmd_wallcross(cfg, out, err);
        err << "unknown command \"" << cfg.command << "\"\n";
        return 2;
    } catch (const NotElliptic& e) {
        Json doc{{"error", "not_elliptic"}, {"reason", e.reason}};
        int rc = emit(doc, cfg, out, err, 3);
        return rc == 2 ? 2 : 3;
    } catch (const SchemaError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const ResidueViolation& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const InvalidWeights& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace hitchin
