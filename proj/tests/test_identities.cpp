#include <set>
#include <string>

#include "gtest/gtest.h"

#include "dstir/identities.hpp"
#include "dstir/report_json.hpp"

namespace dstir {
namespace {

const LambdaPoly lam = LambdaPoly::lambda();

TEST(Identities, TagsAreUniqueAndParse) {
  std::set<std::string_view> tags;
  for (const auto& i : kIdentities) {
    EXPECT_TRUE(tags.insert(i.tag).second) << i.tag;
    EXPECT_EQ(parse_identity(i.tag), i.id);
    EXPECT_FALSE(i.statement.empty());
    EXPECT_FALSE(i.range.empty());
  }
  EXPECT_EQ(tags.size(), 29u);
  EXPECT_FALSE(parse_identity("T11").has_value());
  EXPECT_FALSE(parse_identity("t1").has_value());
  EXPECT_EQ(info(IdentityId::T7).default_mode, ModeKind::Sampled);
  EXPECT_EQ(info(IdentityId::T12).default_mode, ModeKind::Sampled);
  EXPECT_TRUE(info(IdentityId::T13probe).probe);
  EXPECT_TRUE(info(IdentityId::E53probe).probe);
}

TEST(Identities, T1SmallRange) {
  auto r = check(IdentityId::T1, 1, CheckMode::symbolic());
  EXPECT_TRUE(r.passed());
  EXPECT_FALSE(r.counterexample.has_value());
  EXPECT_EQ(r.cases, 3u);
  // Witness n=1,k=0: LHS S2(0,0)(1)_{1,λ} + S2(1,0) = 1; RHS S2(2,1) + λ S2(1,1) = (1−λ) + λ.
  EXPECT_EQ(s2_lambda(2, 1) + lam * s2_lambda(1, 1), LambdaPoly(1));
}

TEST(Identities, T15SmallRange) {
  auto r = check(IdentityId::T15, 2, CheckMode::symbolic());
  EXPECT_TRUE(r.passed());
  // n=2,p=1: [2 1]_{-λ} = 1 + λ, and S1(1,1)L(2,1) + S1(2,1)L(2,2) = 2 + (λ − 1).
  EXPECT_EQ(unsigned_s1_lambda(2, 1).flip_lambda(), (LambdaPoly{1, 1}));
  EXPECT_EQ(s1_lambda(1, 1) * lah(2, 1) + s1_lambda(2, 1) * lah(2, 2), (LambdaPoly{1, 1}));
}

TEST(Identities, T13ProbeVariantFails) {
  auto r = check(IdentityId::T13probe, 2, CheckMode::symbolic());
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(r.as_expected());
  ASSERT_TRUE(r.counterexample.has_value());
  // Lexicographically first failure: n=1, p=0 (LHS 0, RHS −S2(1,1)L(1,1)).
  EXPECT_EQ(r.counterexample->params, (std::vector<Param>{{"n", 1}, {"p", 0}}));
  EXPECT_EQ(r.counterexample->lhs, "0");
  EXPECT_EQ(r.counterexample->rhs, "-1");

  // The documented tuple (2,1).
  LambdaPoly lhs = s2_lambda(2, 1).flip_lambda();
  LambdaPoly rhs;
  for (long k = 1; k <= 2; ++k) rhs += s2_lambda(2, k) * (lah(2, k) * (k % 2 == 0 ? 1 : -1));
  EXPECT_EQ(lhs.to_string(), "1 + λ");
  EXPECT_EQ(rhs.to_string(), "-1 + 2*λ");
}

TEST(Identities, T13CorrectedFormPasses) {
  EXPECT_TRUE(check(IdentityId::T13, 12, CheckMode::symbolic()).passed());
  EXPECT_TRUE(check(IdentityId::E57, 12, CheckMode::symbolic()).passed());
}

TEST(Identities, E53ProbeIsMinimalCounterexample) {
  auto r = check(IdentityId::E53probe, 6, CheckMode::symbolic());
  EXPECT_TRUE(r.as_expected());
  ASSERT_TRUE(r.counterexample.has_value());
  // Scan independently for the first (n,l) where Σ_k [n k]_λ S2λ(k,l) differs from L(n,l).
  long fn = -1, fl = -1;
  for (long n = 0; n <= 6 && fn < 0; ++n)
    for (long l = 0; l <= n && fn < 0; ++l) {
      LambdaPoly rhs;
      for (long k = l; k <= n; ++k) rhs += unsigned_s1_lambda(n, k) * s2_lambda(k, l);
      if (rhs != LambdaPoly(lah(n, l))) fn = n, fl = l;
    }
  EXPECT_EQ(r.counterexample->params, (std::vector<Param>{{"n", fn}, {"l", fl}}));
  EXPECT_EQ(r.counterexample->lhs, "2");
  EXPECT_EQ(r.counterexample->rhs, "2 - 2*λ");
}

TEST(Identities, E53RightSideIsLambdaFree) {
  EXPECT_TRUE(check(IdentityId::E53, 12, CheckMode::symbolic()).passed());
  for (long n = 0; n <= 12; ++n)
    for (long l = 0; l <= n; ++l) {
      LambdaPoly rhs;
      for (long k = l; k <= n; ++k) rhs += unsigned_s1_lambda(n, k) * s2_lambda(k, l).flip_lambda();
      EXPECT_LE(rhs.degree(), 0);
    }
}

TEST(Identities, AllPassAtTwelve) {
  for (const auto& r : check_all(12)) {
    EXPECT_TRUE(r.as_expected()) << to_string(r.id);
    EXPECT_EQ(r.passed(), !r.counterexample.has_value());
    EXPECT_GT(r.cases, 0u) << to_string(r.id);
  }
}

TEST(Identities, SmallRanges) {
  for (std::size_t n : {0u, 1u, 2u}) {
    auto reports = check_all(n);
    EXPECT_EQ(reports.size(), kIdentities.size());
    for (const auto& r : reports) {
      if (r.probe && n < 2) continue;
      EXPECT_TRUE(r.as_expected()) << to_string(r.id) << " n_max=" << n;
    }
  }
}

TEST(Identities, ReportsComeBackInRequestOrder) {
  std::vector<IdentityId> ids = {IdentityId::T15, IdentityId::T1, IdentityId::E53probe, IdentityId::T7};
  auto reports = check_many(ids, 4, ModeRequest::Defaults, 1);
  ASSERT_EQ(reports.size(), ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) EXPECT_EQ(reports[i].id, ids[i]);
}

TEST(Identities, Deterministic) {
  auto a = check_all(6, ModeRequest::Sampled, 77);
  auto b = check_all(6, ModeRequest::Sampled, 77);
  EXPECT_EQ(a, b);
  auto c = check_all(6, ModeRequest::Symbolic);
  auto d = check_all(6, ModeRequest::Symbolic);
  EXPECT_EQ(c, d);
}

// Anything that passes symbolically must pass on every sampled grid.
TEST(Identities, SymbolicImpliesSampled) {
  for (std::uint64_t seed : {1ULL, 20240611ULL, 987654321ULL}) {
    auto sym = check_all(7, ModeRequest::Symbolic);
    auto smp = check_all(7, ModeRequest::Sampled, seed);
    for (std::size_t i = 0; i < sym.size(); ++i)
      if (sym[i].passed()) EXPECT_TRUE(smp[i].passed()) << to_string(sym[i].id) << " seed " << seed;
  }
}

TEST(Identities, SampledModeRecordsLambda) {
  auto r = check(IdentityId::E53probe, 3, CheckMode::sampled());
  EXPECT_EQ(r.mode, ModeKind::Sampled);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(r.counterexample->params.back().name, "lambda");
}

TEST(Identities, T12AlwaysSampled) {
  auto r = check(IdentityId::T12, 5, CheckMode::symbolic());
  EXPECT_EQ(r.mode, ModeKind::Sampled);
  EXPECT_TRUE(r.passed());
}

TEST(Identities, T7BothModes) {
  EXPECT_TRUE(check(IdentityId::T7, 10, CheckMode::symbolic()).passed());
  EXPECT_TRUE(check(IdentityId::T7, 10, CheckMode::sampled(5)).passed());
}

TEST(Identities, SampleGridsAvoidZeroAndAreSeeded) {
  auto m = CheckMode::sampled(42, 6);
  for (const auto& l : m.lambda_samples()) EXPECT_FALSE(l.is_zero());
  for (const auto& x : m.x_samples()) EXPECT_FALSE(x.is_zero());
  EXPECT_EQ(m.lambda_samples(), CheckMode::sampled(42, 6).lambda_samples());
  EXPECT_GE(m.lambda_samples().size(), m.lambda_grid.size());
}

TEST(Identities, BoundsRecorded) {
  EXPECT_EQ(check(IdentityId::T2a, 3, CheckMode::symbolic()).bounds.at("r_max"), 4);
  EXPECT_EQ(check(IdentityId::RT_exp_log, 14, CheckMode::symbolic()).bounds.at("order"), 16);
}

TEST(Identities, TablesTooSmallThrow) {
  Tables t(3);
  EXPECT_THROW(check(IdentityId::T1, t, 4, CheckMode::symbolic()), std::invalid_argument);
}

TEST(ReportJson, RoundTrip) {
  for (const auto& r : check_all(3, ModeRequest::Sampled, 9)) {
    auto j = to_json(r);
    EXPECT_EQ(j["status"] == "fail", j.contains("counterexample"));
    EXPECT_EQ(report_from_json(nlohmann::ordered_json::parse(j.dump())), r) << to_string(r.id);
  }
}

TEST(ReportJson, RejectsInconsistentStatus) {
  auto j = to_json(check(IdentityId::T1, 2, CheckMode::symbolic()));
  j["status"] = "fail";
  EXPECT_THROW(report_from_json(j), std::invalid_argument);
  j["id"] = "T99";
  EXPECT_THROW(report_from_json(j), std::invalid_argument);
}

TEST(ReportJson, RationalEncoding) {
  EXPECT_EQ(rational_to_json(BigRational(5)), nlohmann::ordered_json(5));
  EXPECT_EQ(rational_to_json(BigRational(-2, 7)), nlohmann::ordered_json("-2/7"));
  EXPECT_EQ(rational_from_json(nlohmann::ordered_json("-2/7")), BigRational(-2, 7));
  EXPECT_THROW(rational_from_json(nlohmann::ordered_json("0.5")), std::invalid_argument);
}

}  // namespace
}  // namespace dstir
