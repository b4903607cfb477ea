#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hitchin/verify.hpp"
#include "hitchin/witnesses.hpp"

using namespace hitchin;

namespace {

const std::vector<CaseTag> kAllTags = {
    CaseTag::D22_Ss, CaseTag::D22_Sn, CaseTag::D22_Ns, CaseTag::D22_Nn,
    CaseTag::D31_Ss, CaseTag::D31_Sn, CaseTag::D31_Ns, CaseTag::D31_Nn};

}  // namespace

TEST_CASE("sampling is a pure function of seed and index") {
  for (CaseTag tag : {CaseTag::D22_Ss, CaseTag::D31_Sn, CaseTag::D31_Nn}) {
    PolarData a = sample_polar_data(tag, 42, 17);
    PolarData b = sample_polar_data(tag, 42, 17);
    CHECK(a.params == b.params);
    CHECK(a.tag == b.tag);

    // Independent of whether other indices were drawn in between.
    sample_polar_data(tag, 42, 16);
    sample_polar_data(tag, 42, 18);
    PolarData c = sample_polar_data(tag, 42, 17);
    CHECK(a.params == c.params);

    PolarData other_seed = sample_polar_data(tag, 43, 17);
    PolarData other_index = sample_polar_data(tag, 42, 23);
    CHECK(a.params != other_seed.params);
    CHECK(a.params != other_index.params);
  }
}

TEST_CASE("samples satisfy the residue condition and are elliptic") {
  for (CaseTag tag : kAllTags) {
    for (long i = 0; i < 25; ++i) {
      PolarData d = sample_polar_data(tag, 7, i);
      CHECK_NOTHROW(validate(d));  // would throw on residue or degeneracy
    }
  }
}

TEST_CASE("check_sample agrees on every constructed witness") {
  for (CaseTag tag : kAllTags) {
    for (const BranchWitness& w : branch_witnesses(tag)) {
      CAPTURE(to_string(tag));
      CAPTURE(w.branch);
      SampleOutcome out = check_sample(w.data, 1e-9, 1e-7);
      CHECK(out.branch == w.branch);
      CHECK(out.disagreement.empty());
    }
  }
}

TEST_CASE("serial and parallel runs produce identical summaries") {
  for (CaseTag tag : {CaseTag::D22_Ss, CaseTag::D31_Nn}) {
    VerifyOptions opt;
    opt.tag = tag;
    opt.samples = 300;
    opt.seed = 9;
    VerifySummary par = run_verification(opt);
    VerifySummary ser = run_verification_serial(opt);

    CHECK(par.total == ser.total);
    CHECK(par.agree == ser.agree);
    CHECK(par.rejected == ser.rejected);
    REQUIRE(par.records.size() == ser.records.size());
    for (size_t i = 0; i < par.records.size(); ++i) {
      CHECK(par.records[i].index == ser.records[i].index);
      CHECK(par.records[i].branch == ser.records[i].branch);
      CHECK(par.records[i].agree == ser.records[i].agree);
    }
    REQUIRE(par.disagreements.size() == ser.disagreements.size());
  }
}

TEST_CASE("random verification agrees across all cases") {
  for (CaseTag tag : kAllTags) {
    VerifyOptions opt;
    opt.tag = tag;
    opt.samples = 250;
    opt.seed = 5;
    VerifySummary s = run_verification(opt);
    CAPTURE(to_string(tag));
    CHECK(s.total == 250);
    CHECK(s.agree == 250);
    CHECK(s.disagreements.empty());
    REQUIRE(s.records.size() == 250);
    long agreed = 0;
    for (const SampleRecord& r : s.records) {
      if (r.agree) ++agreed;
    }
    CHECK(agreed == s.agree);
    CHECK(s.rejected >= 0);
  }
}

TEST_CASE("records are indexed in order regardless of scheduling") {
  VerifyOptions opt;
  opt.tag = CaseTag::D22_Sn;
  opt.samples = 64;
  opt.seed = 123;
  VerifySummary s = run_verification(opt);
  REQUIRE(s.records.size() == 64);
  for (long i = 0; i < 64; ++i) {
    CHECK(s.records[static_cast<size_t>(i)].index == i);
  }
}
