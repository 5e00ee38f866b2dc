// Closed-form code predictions vs. enumeration, the minimality ratio test,
// and Griesmer bound arithmetic.

#include <gtest/gtest.h>

#include <cstdint>
#include <map>

#include "tracecodes/code.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/theory.hpp"

namespace tc = tracecodes;

using WeightMap = std::map<std::uint64_t, std::uint64_t>;

TEST(Predict, GoldenTables) {
    const auto f35 = tc::predict_code(3, 5, false);
    EXPECT_EQ(f35.n, 80u);
    EXPECT_EQ(f35.k, 5u);
    EXPECT_EQ(f35.counts, (WeightMap{{48, 90}, {54, 80}, {60, 72}}));
    EXPECT_FALSE(f35.degenerate);
    EXPECT_EQ(f35.source, tc::CodeTheorem::FullOdd);

    const auto p35 = tc::predict_code(3, 5, true);
    EXPECT_EQ(p35.n, 40u);
    EXPECT_EQ(p35.counts, (WeightMap{{24, 90}, {27, 80}, {30, 72}}));
    EXPECT_EQ(p35.source, tc::CodeTheorem::PuncturedOdd);

    const auto f54 = tc::predict_code(5, 4, false);
    EXPECT_EQ(f54.n, 104u);
    EXPECT_EQ(f54.counts, (WeightMap{{80, 520}, {100, 104}}));
    EXPECT_EQ(f54.source, tc::CodeTheorem::FullEven);

    const auto p54 = tc::predict_code(5, 4, true);
    EXPECT_EQ(p54.n, 26u);
    EXPECT_EQ(p54.counts, (WeightMap{{20, 520}, {25, 104}}));
    EXPECT_EQ(p54.source, tc::CodeTheorem::PuncturedEven);
}

TEST(Predict, CountsSumToAllNonzeroCodewords) {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (std::uint32_t m = 2; m <= 5; ++m) {
            for (bool punct : {false, true}) {
                const auto pred = tc::predict_code(p, m, punct);
                if (pred.degenerate) continue;
                std::uint64_t q = 1, total = 0;
                for (std::uint32_t i = 0; i < m; ++i) q *= p;
                for (auto& [w, a] : pred.counts) total += a;
                EXPECT_EQ(total, q - 1) << "p=" << p << " m=" << m << " punct=" << punct;
            }
        }
    }
}

TEST(Predict, DegenerateCellIsFlagged) {
    const auto cell = tc::predict_code(5, 2, false);
    EXPECT_TRUE(cell.degenerate);
    EXPECT_EQ(cell.n, 0u);
    EXPECT_FALSE(tc::predict_code(3, 2, false).degenerate);  // n = 4 here
    EXPECT_FALSE(tc::predict_code(5, 3, false).degenerate);
}

TEST(Predict, RejectsBadParameters) {
    EXPECT_THROW(tc::predict_code(2, 3, false), std::invalid_argument);
    EXPECT_THROW(tc::predict_code(9, 3, false), std::invalid_argument);
    EXPECT_THROW(tc::predict_code(3, 1, false), std::invalid_argument);
}

TEST(Verify, RepresentativeCellsPass) {
    struct Cell {
        std::uint32_t p, m;
        bool punctured;
    };
    for (auto c : {Cell{3, 2, false}, Cell{3, 3, true}, Cell{3, 5, false}, Cell{3, 6, true},
                   Cell{5, 3, false}, Cell{5, 4, true}, Cell{7, 2, false}, Cell{7, 3, true}}) {
        const auto rep = tc::verify_code_theorem(c.p, c.m, c.punctured);
        EXPECT_TRUE(rep.pass) << "p=" << c.p << " m=" << c.m << " punct=" << c.punctured;
        EXPECT_FALSE(rep.degenerate);
        EXPECT_EQ(rep.predicted_n, rep.observed_n);
        EXPECT_EQ(rep.predicted_k, rep.observed_k);
        for (const auto& row : rep.rows) EXPECT_EQ(row.predicted, row.observed);
    }
}

TEST(Verify, DegenerateCellPassesByRaising) {
    const auto rep = tc::verify_code_theorem(5, 2, false);
    EXPECT_TRUE(rep.degenerate);
    EXPECT_TRUE(rep.pass);
    EXPECT_EQ(rep.observed_n, 0u);
    const auto reppunct = tc::verify_code_theorem(5, 2, true);
    EXPECT_TRUE(reppunct.degenerate);
    EXPECT_TRUE(reppunct.pass);
}

TEST(Verify, TheoremNames) {
    EXPECT_EQ(tc::theorem_name(tc::CodeTheorem::FullOdd), "full_odd_m");
    EXPECT_EQ(tc::theorem_name(tc::CodeTheorem::FullEven), "full_even_m");
    EXPECT_EQ(tc::theorem_name(tc::CodeTheorem::PuncturedOdd), "punctured_odd_m");
    EXPECT_EQ(tc::theorem_name(tc::CodeTheorem::PuncturedEven), "punctured_even_m");
}

TEST(MinimalityRatio, HoldsForPunctured35FailsForFull33) {
    tc::FieldCtx F35(3, 5);
    tc::DefiningSet d = tc::puncture_representatives(F35, tc::build_defining_set(F35));
    const auto wd35 = tc::weight_distribution(tc::build_code(F35, std::move(d)).linear());
    const auto r35 = tc::minimality_ratio_check(wd35, 3);
    EXPECT_TRUE(r35.holds);  // 24*3 > 30*2
    EXPECT_EQ(r35.w_min, 24u);
    EXPECT_EQ(r35.w_max, 30u);

    tc::FieldCtx F33(3, 3);
    const auto wd33 =
        tc::weight_distribution(tc::build_code(F33, tc::build_defining_set(F33)).linear());
    const auto r33 = tc::minimality_ratio_check(wd33, 3);
    EXPECT_FALSE(r33.holds);  // 4*3 < 8*2
}

TEST(Griesmer, KnownValues) {
    EXPECT_EQ(tc::griesmer_min_length(5, 4, 20), 26u);  // 20+4+1+1
    EXPECT_EQ(tc::griesmer_min_length(3, 5, 24), 37u);  // 24+8+3+1+1
    EXPECT_EQ(tc::griesmer_min_length(3, 1, 7), 7u);
    EXPECT_EQ(tc::griesmer_min_length(7, 2, 7), 8u);
    EXPECT_TRUE(tc::meets_griesmer_with_equality(26, 5, 4, 20));
    EXPECT_FALSE(tc::meets_griesmer_with_equality(40, 3, 5, 24));
}

TEST(Griesmer, EveryEnumeratedCodeRespectsTheBound) {
    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 4}, {5, 3}, {7, 2}}) {
        tc::FieldCtx F(p, m);
        for (bool punct : {false, true}) {
            tc::DefiningSet d = tc::build_defining_set(F);
            if (punct) d = tc::puncture_representatives(F, d);
            const auto wd = tc::weight_distribution(tc::build_code(F, std::move(d)).linear());
            EXPECT_GE(wd.n, tc::griesmer_min_length(p, wd.k, tc::minimum_distance(wd)))
                << "p=" << p << " m=" << m << " punct=" << punct;
        }
    }
}

TEST(Griesmer, RejectsDegenerateInput) {
    EXPECT_THROW(tc::griesmer_min_length(3, 0, 5), std::invalid_argument);
    EXPECT_THROW(tc::griesmer_min_length(3, 2, 0), std::invalid_argument);
}
