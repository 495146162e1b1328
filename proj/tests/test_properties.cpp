#include "tract_matroids/properties.hpp"

#include <gtest/gtest.h>

using namespace trm;

namespace {

std::vector<Tract> finite_fields() { return {Tract::gfp(2), Tract::gfp(3), Tract::gfp(5), Tract::gfp(7), Tract::gfp(11)}; }

}  // namespace

// In a field the hypotheses force z = xb - ay.
TEST(PatheticCancellation, HoldsInFields) {
    for (const auto& t : finite_fields()) EXPECT_TRUE(check_pathetic_cancellation(t, carrier(t)).holds) << t.p;
}

TEST(PatheticCancellation, HoldsForKrasnerAndSign) {
    EXPECT_TRUE(check_pathetic_cancellation(Tract::krasner(), carrier(Tract::krasner())).holds);
    auto v = check_pathetic_cancellation(Tract::sign(), carrier(Tract::sign()));
    EXPECT_TRUE(v.holds);
    EXPECT_GT(v.checked, 0u);
}

TEST(PatheticCancellation, FailsOnPhaseRoots) {
    Tract t = Tract::phase();
    auto v = check_pathetic_cancellation(t, roots_of_unity(24));
    ASSERT_FALSE(v.holds);
    ASSERT_EQ(v.witness.size(), 5u);
    // the witness satisfies every hypothesis and violates the conclusion
    const Value a = v.witness[0], b = v.witness[1], x = v.witness[2], y = v.witness[3], z = v.witness[4];
    EXPECT_TRUE(hypersum_contains(t, {one(t), a}, x));
    EXPECT_TRUE(hypersum_contains(t, {epsilon(t), b}, y));
    EXPECT_TRUE(hypersum_contains(t, {a, b}, z));
    EXPECT_TRUE(hypersum_contains(t, {x, y}, z));
    EXPECT_FALSE(hypersum_contains(t, {mul(t, x, b), neg(t, mul(t, a, y))}, z));
}

TEST(PatheticCancellation, ParallelRunIsDeterministic) {
    Tract t = Tract::phase();
    auto s = roots_of_unity(24);
    CheckOptions one_job, four;
    four.jobs = 4;
    auto v1 = check_pathetic_cancellation(t, s, one_job), v4 = check_pathetic_cancellation(t, s, four);
    EXPECT_EQ(v1.witness, v4.witness);
    EXPECT_EQ(v1.checked, v4.checked);
    one_job.collect_all = four.collect_all = true;
    auto a1 = check_pathetic_cancellation(t, s, one_job), a4 = check_pathetic_cancellation(t, s, four);
    EXPECT_EQ(a1.witnesses, a4.witnesses);
    EXPECT_EQ(a1.checked, a4.checked);
}

TEST(Stringent, FieldsSignKrasnerAndLayered) {
    for (const auto& t : finite_fields()) EXPECT_TRUE(check_stringent(t, carrier(t)).holds);
    EXPECT_TRUE(check_stringent(Tract::sign(), carrier(Tract::sign())).holds);
    EXPECT_TRUE(check_stringent(Tract::krasner(), carrier(Tract::krasner())).holds);
    Tract l = Tract::layered(Kind::gfp, 3);
    EXPECT_TRUE(check_stringent(l, layer_window(l, -2, 2)).holds);
}

TEST(Stringent, PhaseWitnessIsOneAndI) {
    auto v = check_stringent(Tract::phase(), roots_of_unity(4));
    ASSERT_FALSE(v.holds);
    EXPECT_EQ(v.witness, (std::vector<Value>{turn::make(0, 1), turn::make(1, 4)}));
    // on 24th roots the first non-singleton sum is 1 + e^(2 pi i/24)
    auto w = check_stringent(Tract::phase(), roots_of_unity(24));
    EXPECT_EQ(w.witness, (std::vector<Value>{turn::make(0, 1), turn::make(1, 24)}));
}

TEST(Stringent, D6SumsOfDistinctElementsAreLarge) {
    Tract t = Tract::d6();
    auto v = check_stringent(t, carrier(t));
    EXPECT_FALSE(v.holds);
    HyperSet s = binary_sum(t, Value::of(1, 0), Value::of(0, 1));
    EXPECT_FALSE(s.zero);
    EXPECT_EQ(s.points.size(), 6u);
}

TEST(StrongPc, LayeredWindowAndFields) {
    Tract l = Tract::layered(Kind::sign);
    CheckOptions opt;
    opt.jobs = 2;
    EXPECT_TRUE(check_strong_pc(l, layer_window(l, -1, 1), opt).holds);
    EXPECT_TRUE(check_strong_pc(Tract::gfp(5), carrier(Tract::gfp(5)), opt).holds);
    EXPECT_TRUE(check_strong_pc(Tract::sign(), carrier(Tract::sign()), opt).holds);
}

TEST(StrongPc, FailsOnPhaseRoots) {
    CheckOptions opt;
    opt.jobs = 4;
    EXPECT_FALSE(check_strong_pc(Tract::phase(), roots_of_unity(8), opt).holds);
}

TEST(PpMulti, IdentityOnEverySample) {
    Tract l = Tract::layered(Kind::sign);
    for (const auto& [t, s] : std::vector<std::pair<Tract, std::vector<Value>>>{
             {Tract::sign(), carrier(Tract::sign())},
             {Tract::krasner(), carrier(Tract::krasner())},
             {Tract::gfp(3), carrier(Tract::gfp(3))},
             {Tract::phase(), roots_of_unity(24)},
             {l, layer_window(l, -3, 3)}}) {
        auto v = check_pp_multi(t, s);
        EXPECT_TRUE(v.holds);
        EXPECT_GT(v.checked, 0u);
    }
}

TEST(DoublyDistributive, ClassicalCases) {
    EXPECT_TRUE(check_doubly_distributive(Tract::sign(), carrier(Tract::sign())).holds);
    EXPECT_TRUE(check_doubly_distributive(Tract::krasner(), carrier(Tract::krasner())).holds);
    EXPECT_TRUE(check_doubly_distributive(Tract::gfp(5), carrier(Tract::gfp(5))).holds);
}

TEST(DoublyDistributive, PhaseWitnessReproduces) {
    Tract t = Tract::phase();
    auto v = check_doubly_distributive(t, roots_of_unity(8));
    ASSERT_FALSE(v.holds);
    ASSERT_EQ(v.witness.size(), 5u);
    const Value a = v.witness[0], b = v.witness[1], c = v.witness[2], d = v.witness[3], z = v.witness[4];
    HyperSet lhs = product(t, binary_sum(t, a, b), binary_sum(t, c, d));
    bool rhs = hypersum_contains(t, {mul(t, a, c), mul(t, a, d), mul(t, b, c), mul(t, b, d)}, z);
    EXPECT_NE(lhs.contains(z), rhs);
}

TEST(Samples, CandidatePointsCoverAntipodesAndGaps) {
    Tract t = Tract::phase();
    auto pts = candidate_points(t, {}, {turn::make(0, 1), turn::make(1, 4)});
    auto has = [&](const Value& v) { return std::find(pts.begin(), pts.end(), v) != pts.end(); };
    EXPECT_TRUE(has(Value::nil()));
    EXPECT_TRUE(has(turn::make(1, 2)));
    EXPECT_TRUE(has(turn::make(3, 4)));
    EXPECT_TRUE(has(turn::make(1, 8)));
    EXPECT_TRUE(has(turn::make(5, 8)));
    EXPECT_EQ(pts.size(), 9u);
}
