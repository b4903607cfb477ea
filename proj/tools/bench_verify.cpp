// Times the OpenMP verification kernel against the serial reference and
// checks that both produce the same records.

#include <CLI11.hpp>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "hitchin/verify.hpp"

namespace {

bool same_summary(const hitchin::VerifySummary& a, const hitchin::VerifySummary& b) {
    if (a.total != b.total || a.agree != b.agree || a.rejected != b.rejected) return false;
    if (a.records.size() != b.records.size()) return false;
    for (size_t i = 0; i < a.records.size(); ++i) {
        if (a.records[i].index != b.records[i].index ||
            a.records[i].branch != b.records[i].branch ||
            a.records[i].agree != b.records[i].agree)
            return false;
    }
    if (a.disagreements.size() != b.disagreements.size()) return false;
    for (size_t i = 0; i < a.disagreements.size(); ++i)
        if (a.disagreements[i].detail != b.disagreements[i].detail) return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Benchmark: serial vs OpenMP verification kernel"};
    long samples = 2000;
    std::uint64_t seed = 1;
    std::vector<std::string> cases = {"d22-ss", "d22-sn", "d22-ns", "d22-nn",
                                      "d31-ss", "d31-sn", "d31-ns", "d31-nn"};
    app.add_option("--samples", samples, "draws per case");
    app.add_option("--seed", seed, "sampling seed");
    app.add_option("--case", cases, "case tags to benchmark (default: all)");
    CLI11_PARSE(app, argc, argv);

    std::cout << std::left << std::setw(8) << "case" << std::right << std::setw(9)
              << "samples" << std::setw(12) << "serial[s]" << std::setw(12)
              << "openmp[s]" << std::setw(9) << "speedup" << std::setw(12)
              << "agree" << "\n";

    bool all_match = true;
    for (const auto& name : cases) {
        hitchin::VerifyOptions opt;
        opt.tag = hitchin::parse_case_tag(name);
        opt.samples = samples;
        opt.seed = seed;

        auto serial = hitchin::run_verification_serial(opt);
        auto parallel = hitchin::run_verification(opt);
        bool match = same_summary(serial, parallel);
        all_match = all_match && match;

        std::cout << std::left << std::setw(8) << name << std::right << std::setw(9)
                  << samples << std::setw(12) << std::fixed << std::setprecision(3)
                  << serial.seconds << std::setw(12) << parallel.seconds << std::setw(9)
                  << std::setprecision(2)
                  << (parallel.seconds > 0 ? serial.seconds / parallel.seconds : 0.0)
                  << std::setw(7) << parallel.agree << "/" << parallel.total
                  << (match ? "" : "  MISMATCH") << "\n";
    }
    if (!all_match) {
        std::cerr << "serial and parallel kernels disagree\n";
        return 1;
    }
    return 0;
}
