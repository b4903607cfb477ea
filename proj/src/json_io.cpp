#include "hitchin/json_io.hpp"

#include <set>

#include "hitchin/kodaira.hpp"

namespace hitchin {

namespace {

long long to_ll(const Integer& n) { return n.convert_to<long long>(); }

Json num_den(const Rational& r) {
    return Json::array({to_ll(numerator(r)), to_ll(denominator(r))});
}

long long int_at(const Json& j, size_t k, const char* what) {
    if (!j[k].is_number_integer())
        throw SchemaError(std::string(what) + ": entries must be integers");
    return j[k].get<long long>();
}

Rational ratio(long long num, long long den, const char* what) {
    if (den == 0) throw SchemaError(std::string(what) + ": zero denominator");
    return Rational(num, den);
}

Json complex_pair(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

}  // namespace

Json to_json(const Rational& r) { return num_den(r); }

Json to_json(const GaussianRational& v) {
    Json j = num_den(v.re);
    Json im = num_den(v.im);
    j.push_back(im[0]);
    j.push_back(im[1]);
    return j;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw SchemaError("rational: expected [num, den]");
    return ratio(int_at(j, 0, "rational"), int_at(j, 1, "rational"), "rational");
}

GaussianRational gaussian_from_json(const Json& j) {
    if (!j.is_array() || (j.size() != 2 && j.size() != 4))
        throw SchemaError("parameter: expected [num, den] or [num_re, den_re, num_im, den_im]");
    Rational re = ratio(int_at(j, 0, "parameter"), int_at(j, 1, "parameter"), "parameter");
    Rational im(0);
    if (j.size() == 4)
        im = ratio(int_at(j, 2, "parameter"), int_at(j, 3, "parameter"), "parameter");
    return GaussianRational(re, im);
}

Json to_json(const PolarData& d) {
    Json params = Json::object();
    for (const auto& name : case_param_names(d.tag)) params[name] = to_json(d.at(name));
    return Json{{"case", to_string(d.tag)}, {"params", params}};
}

PolarData polar_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("case") || !j.contains("params"))
        throw SchemaError("input: expected {\"case\": ..., \"params\": {...}}");
    if (!j["case"].is_string()) throw SchemaError("input: \"case\" must be a string");
    PolarData d;
    d.tag = parse_case_tag(j["case"].get<std::string>());
    d.input_tag = d.tag;
    const Json& params = j["params"];
    if (!params.is_object()) throw SchemaError("input: \"params\" must be an object");
    const auto& names = case_param_names(d.tag);
    std::set<std::string> expected(names.begin(), names.end());
    for (const auto& [key, value] : params.items()) {
        if (!expected.count(key))
            throw SchemaError("input: unknown parameter \"" + key + "\" for case " +
                              to_string(d.tag));
        d.params[key] = gaussian_from_json(value);
    }
    for (const auto& name : names)
        if (!d.params.count(name))
            throw SchemaError("input: missing parameter \"" + name + "\"");
    return d;
}

Json to_json(const ParabolicWeights& w) {
    Json j{{"alpha", Json{{"p1", num_den(w.p1)},
                          {"m1", num_den(w.m1)},
                          {"p2", num_den(w.p2)},
                          {"m2", num_den(w.m2)}}}};
    if (w.extended_alpha_plus) j["extended_alpha_plus"] = num_den(*w.extended_alpha_plus);
    return j;
}

ParabolicWeights weights_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("alpha"))
        throw SchemaError("weights: expected {\"alpha\": {...}}");
    const Json& a = j["alpha"];
    for (const char* key : {"p1", "m1", "p2", "m2"})
        if (!a.contains(key))
            throw SchemaError(std::string("weights: missing alpha component \"") + key +
                              "\"");
    ParabolicWeights w;
    w.p1 = rational_from_json(a["p1"]);
    w.m1 = rational_from_json(a["m1"]);
    w.p2 = rational_from_json(a["p2"]);
    w.m2 = rational_from_json(a["m2"]);
    if (j.contains("extended_alpha_plus"))
        w.extended_alpha_plus = rational_from_json(j["extended_alpha_plus"]);
    return w;
}

Json to_json(const GrothClass& c) { return Json::array({c.l, c.pt}); }

Json to_json(const SingularFiberEntry& e) {
    Json j = Json::object();
    if (e.kodaira) j["kodaira"] = to_string(*e.kodaira);
    j["ss"] = to_json(e.ss);
    j["s"] = to_json(e.s);
    Json comps = Json::array();
    for (const auto& c : e.components) {
        Json jc{{"class", to_json(c.cls)}};
        if (c.bidegree) jc["bidegree"] = Json::array({c.bidegree->dp, c.bidegree->dm});
        comps.push_back(jc);
    }
    j["components"] = comps;
    j["compact"] = e.compact;
    return j;
}

Json to_json(const FiberReport& r) {
    Json fibers = Json::array();
    for (const auto& f : r.fibers) fibers.push_back(to_json(f));
    Json j{{"infinity", to_string(r.infinity)}, {"branch", r.branch}, {"fibers", fibers}};
    if (r.walls_crossed) j["walls_crossed"] = *r.walls_crossed;
    return j;
}

Json to_json(const OracleReport& r, double tol) {
    auto chart_name = [](SingularPoint::Chart c) {
        switch (c) {
            case SingularPoint::Chart::Base: return "base";
            case SingularPoint::Chart::BlowupU: return "blowup_u";
            case SingularPoint::Chart::BlowupV: return "blowup_v";
        }
        return "base";
    };
    Json points = Json::array();
    for (const auto& p : r.points)
        points.push_back(Json{{"chart", chart_name(p.chart)},
                              {"z", complex_pair(p.z)},
                              {"w_or_v", complex_pair(p.w_or_v)},
                              {"t", complex_pair(p.t)},
                              {"multiplicity", p.root_multiplicity}});
    Json clusters = Json::array();
    for (const auto& c : r.t_clusters) {
        Json members = Json::array();
        for (size_t m : c.members) members.push_back(m);
        clusters.push_back(Json{{"t", complex_pair(c.t)}, {"members", members}});
    }
    Json inferred = Json::array();
    for (const auto& k : r.inferred) inferred.push_back(to_string(k));
    return Json{{"tol", tol},
                {"points", points},
                {"clusters", clusters},
                {"inferred", inferred},
                {"unresolved", r.unresolved},
                {"section_detected", r.section_detected}};
}

Json to_json(const VerifySummary& s, const VerifyOptions& opt) {
    Json records = Json::array();
    for (const auto& rec : s.records)
        records.push_back(Json{{"index", rec.index}, {"branch", rec.branch},
                               {"agree", rec.agree}});
    Json disagreements = Json::array();
    for (const auto& d : s.disagreements)
        disagreements.push_back(
            Json{{"index", d.index}, {"branch", d.branch}, {"detail", d.detail}});
    return Json{{"case", to_string(opt.tag)},
                {"samples", opt.samples},
                {"seed", opt.seed},
                {"tol", opt.tol},
                {"cluster_tol", opt.cluster_tol},
                {"total", s.total},
                {"agree", s.agree},
                {"rejected", s.rejected},
                {"rejection_rate",
                 s.total > 0 ? static_cast<double>(s.rejected) /
                                   static_cast<double>(s.total + s.rejected)
                             : 0.0},
                {"records", records},
                {"disagreements", disagreements}};
}

}  // namespace hitchin
