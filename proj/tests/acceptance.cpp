// Acceptance harness: twelve criteria, each printed as a single pass/fail
// line with its measured runtime.  Tolerances and time budgets are pinned
// here in code.  The binary exits nonzero if any criterion fails.  Criteria
// that legitimately branch (a gated sub-check whose precondition does not
// hold) say so in their detail text rather than silently passing.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "tracecodes/char_sums.hpp"
#include "tracecodes/code.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/planar.hpp"
#include "tracecodes/rng.hpp"
#include "tracecodes/secret_sharing.hpp"
#include "tracecodes/theory.hpp"

namespace tc = tracecodes;

namespace {

using WeightMap = std::map<std::uint64_t, std::uint64_t>;

struct Outcome {
    bool pass = false;
    std::string detail;
};

WeightMap nonzero_weights(const tc::WeightDistribution& wd) {
    WeightMap m = wd.counts;
    m.erase(0);
    return m;
}

tc::TraceCode make_code(const tc::FieldCtx& F, bool punctured) {
    tc::DefiningSet d = tc::build_defining_set(F);
    if (punctured) d = tc::puncture_representatives(F, d);
    return tc::build_code(F, std::move(d));
}

std::string map_string(const WeightMap& m) {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (auto& [w, a] : m) {
        if (!first) os << ", ";
        first = false;
        os << w << ":" << a;
    }
    os << "}";
    return os.str();
}

Outcome golden_example(std::uint32_t p, std::uint32_t m, bool punctured, std::uint64_t want_n,
                       std::uint64_t want_k, std::uint64_t want_d, const WeightMap& want) {
    tc::FieldCtx F(p, m);
    const auto wd = tc::weight_distribution(make_code(F, punctured).linear());
    const WeightMap got = nonzero_weights(wd);
    Outcome out;
    out.pass = wd.n == want_n && wd.k == want_k && tc::minimum_distance(wd) == want_d &&
               got == want;
    std::ostringstream os;
    os << "[" << wd.n << ", " << wd.k << ", " << tc::minimum_distance(wd) << "] "
       << map_string(got);
    if (!out.pass) os << " expected [" << want_n << ", " << want_k << ", " << want_d << "] "
                      << map_string(want);
    out.detail = os.str();
    return out;
}

Outcome criterion1() {
    return golden_example(3, 5, false, 80, 5, 48, {{48, 90}, {54, 80}, {60, 72}});
}

Outcome criterion2() {
    return golden_example(5, 4, false, 104, 4, 80, {{80, 520}, {100, 104}});
}

Outcome criterion3() {
    return golden_example(3, 5, true, 40, 5, 24, {{24, 90}, {27, 80}, {30, 72}});
}

Outcome criterion4() {
    Outcome out = golden_example(5, 4, true, 26, 4, 20, {{20, 520}, {25, 104}});
    const std::uint64_t g = tc::griesmer_min_length(5, 4, 20);
    const bool optimal = tc::meets_griesmer_with_equality(26, 5, 4, 20);
    out.pass = out.pass && g == 26 && optimal;
    out.detail += "; griesmer=" + std::to_string(g) + (optimal ? " met with equality" : " NOT met");
    return out;
}

Outcome criterion5() {
    Outcome out;
    out.pass = true;
    std::uint64_t cells = 0;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (std::uint32_t m = 2; m <= 6; ++m) {
            std::uint64_t q = 1;
            for (std::uint32_t i = 0; i < m; ++i) q *= p;
            if (q > 1000000) continue;
            for (bool punct : {false, true}) {
                const auto rep = tc::verify_code_theorem(p, m, punct);
                ++cells;
                if (!rep.pass) {
                    out.pass = false;
                    out.detail += " MISMATCH at p=" + std::to_string(p) +
                                  " m=" + std::to_string(m) +
                                  (punct ? " punctured" : " full") + ";";
                }
            }
        }
    }
    out.detail = std::to_string(cells) + " grid cells exact" + out.detail;
    return out;
}

Outcome criterion6() {
    Outcome out;
    out.pass = true;
    std::uint64_t count_checks = 0;
    for (std::uint32_t p : {3u, 5u}) {
        for (std::uint32_t m = 2; m <= 5; ++m) {
            tc::FieldCtx F(p, m);
            for (std::uint32_t a = 0; a < p; ++a) {
                if (!tc::check_square_trace_fiber(F, a).pass()) {
                    out.pass = false;
                    out.detail += " n_a fail p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                  " a=" + std::to_string(a) + ";";
                }
                ++count_checks;
            }
            for (std::uint64_t b = 1; b < F.q(); ++b) {
                if (!tc::check_joint_trace_kernel(F, b).pass()) {
                    out.pass = false;
                    out.detail += " N(b) fail p=" + std::to_string(p) + " m=" + std::to_string(m) +
                                  " b=" + std::to_string(b) + ";";
                }
                ++count_checks;
            }
        }
    }
    out.detail = std::to_string(count_checks) + " exact counts" + out.detail;
    return out;
}

Outcome criterion7() {
    Outcome out;
    out.pass = true;
    std::uint64_t complex_checks = 0;
    for (std::uint32_t p : {3u, 5u}) {
        for (std::uint32_t m = 2; m <= 5; ++m) {
            tc::FieldCtx F(p, m);
            if (!tc::check_gauss_sum(F).pass()) {
                out.pass = false;
                out.detail += " gauss fail at (" + std::to_string(p) + "," + std::to_string(m) + ");";
            }
            ++complex_checks;
            if (!tc::check_scaled_square_sum(F).pass()) {
                out.pass = false;
                out.detail += " square-sum fail at (" + std::to_string(p) + "," +
                              std::to_string(m) + ");";
            }
            ++complex_checks;
            tc::SplitMix64 rng(0xACCE55ull * p + m);
            for (int i = 0; i < 100; ++i) {
                const std::uint64_t a2 = 1 + rng.below(F.q() - 1);
                const std::uint64_t a1 = rng.below(F.q());
                const std::uint64_t a0 = rng.below(F.q());
                if (!tc::check_weil_quadratic(F, a2, a1, a0).pass()) {
                    out.pass = false;
                    out.detail += " weil fail at (" + std::to_string(p) + "," + std::to_string(m) +
                                  ") a2=" + std::to_string(a2) + ";";
                }
                ++complex_checks;
            }
            for (std::uint64_t b = 1; b < F.q(); ++b) {
                if (!tc::check_quadratic_linear_sum(F, b).pass()) {
                    out.pass = false;
                    out.detail += " double-sum fail at (" + std::to_string(p) + "," +
                                  std::to_string(m) + ") b=" + std::to_string(b) + ";";
                }
                ++complex_checks;
            }
        }
    }
    out.detail = std::to_string(complex_checks) +
                 " complex-sum checks within 1e-6*sqrt(q)" + out.detail;
    return out;
}

Outcome criterion8() {
    Outcome out;
    out.pass = true;
    std::uint64_t admissible = 0;
    struct Size {
        std::uint32_t p, m;
    };
    for (auto sz : {Size{3, 3}, Size{3, 5}, Size{5, 3}}) {
        tc::FieldCtx F(sz.p, sz.m);
        const auto cd = tc::weight_distribution(
            tc::build_code(F, tc::build_defining_set(F)).linear());
        for (auto fam : {tc::PlanarFamily::Square, tc::PlanarFamily::DembowskiOstrom,
                         tc::PlanarFamily::CoulterMatthews, tc::PlanarFamily::DingYuan}) {
            tc::PlanarSpec spec;
            spec.family = fam;
            if (!tc::is_admissible(spec, F)) continue;
            ++admissible;
            const auto measure = tc::nonlinearity_measure(spec, F);
            if (measure.max_count != 1) {
                out.pass = false;
                out.detail += " P_f=" + measure.ratio_string() + " for " + tc::family_name(fam) +
                              " at (" + std::to_string(sz.p) + "," + std::to_string(sz.m) + ");";
            }
            const auto cdf = tc::weight_distribution(
                tc::build_code(F, tc::build_planar_set(spec, F)).linear());
            if (cdf.n != cd.n || cdf.k != cd.k ||
                nonzero_weights(cdf) != nonzero_weights(cd)) {
                out.pass = false;
                out.detail += " code mismatch for " + tc::family_name(fam) + " at (" +
                              std::to_string(sz.p) + "," + std::to_string(sz.m) + ");";
            }
        }
    }
    out.detail = std::to_string(admissible) + " admissible specs: P_f = 1/q and C_Df = C_D" +
                 out.detail;
    return out;
}

Outcome criterion9() {
    Outcome out;
    out.pass = true;
    tc::FieldCtx F(3, 5);
    const auto C = make_code(F, true).linear();
    const tc::MasseyScheme scheme(C);
    const auto access = tc::access_structure(C);

    if (access.minimal_sets.size() != 81) {
        out.pass = false;
        out.detail += " sets=" + std::to_string(access.minimal_sets.size()) + " (wanted 81);";
    }
    for (auto& [participant, count] : access.per_participant) {
        if (count != 54) {
            out.pass = false;
            out.detail += " participant " + std::to_string(participant) + " in " +
                          std::to_string(count) + " sets (wanted 54);";
            break;
        }
    }

    const auto dd = tc::dual_minimum_distance(C);
    std::string pair_note;
    if (dd.exact && dd.value >= 4) {
        std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> pair_counts;
        for (const auto& set : access.minimal_sets)
            for (std::size_t i = 0; i < set.size(); ++i)
                for (std::size_t j = i + 1; j < set.size(); ++j)
                    ++pair_counts[{set[i], set[j]}];
        for (auto& [pr, c] : pair_counts)
            if (c != 36) {
                out.pass = false;
                out.detail += " pair count " + std::to_string(c) + " != 36;";
                break;
            }
        pair_note = "t=2 pair counts = 36";
    } else {
        pair_note = "t=2 check gated off (d_dual = " + std::to_string(dd.value) +
                    (dd.exact ? "" : " lower bound") + " < 4)";
    }

    std::uint64_t round_trips = 0, failures = 0;
    for (std::size_t i = 0; i < access.minimal_sets.size(); ++i) {
        const auto& set = access.minimal_sets[i];
        for (tc::PrimeElement secret : {0u, 1u, 2u}) {
            for (std::uint64_t seed : {11ull, 22ull, 33ull}) {
                const auto sd = tc::deal(scheme, secret, seed * 1000 + i);
                std::vector<std::uint16_t> shares;
                for (auto idx : set) shares.push_back(sd.shares[idx - 1]);
                const auto rec = tc::recover(scheme, set, shares);
                ++round_trips;
                if (!rec.is_access_set || rec.secret != secret) ++failures;
            }
        }
    }
    if (failures != 0) {
        out.pass = false;
        out.detail += " " + std::to_string(failures) + " round-trip failures;";
    }
    out.detail = "81 minimal sets, membership 54 each, " + pair_note + ", " +
                 std::to_string(round_trips) + " round trips" + out.detail;
    return out;
}

Outcome criterion10() {
    Outcome out;
    tc::FieldCtx F(3, 5);
    const auto C = make_code(F, false).linear();
    const auto dd = tc::dual_minimum_distance(C);
    const auto access = tc::access_structure(C);

    // Column characterization: participant i is in every minimal set
    // exactly when column g_i is a nonzero scalar multiple of g_0.
    std::vector<std::uint64_t> parallel;
    const auto& G = C.rows();
    for (std::uint64_t i = 1; i < C.n(); ++i) {
        for (std::uint32_t lambda = 1; lambda < 3; ++lambda) {
            bool all = true;
            for (std::size_t r = 0; r < G.size(); ++r)
                all = all && G[r][i] == (lambda * G[r][0]) % 3;
            if (all) {
                parallel.push_back(i);
                break;
            }
        }
    }
    const bool ok = dd.exact && dd.value == 2 && !access.dictators.empty() &&
                    access.dictators == parallel;
    out.pass = ok;
    std::ostringstream os;
    os << "d_dual=" << dd.value << (dd.exact ? " exact" : " bound") << ", dictators={";
    for (std::size_t i = 0; i < access.dictators.size(); ++i)
        os << (i ? "," : "") << access.dictators[i];
    os << "} matches the parallel-column set of size " << parallel.size();
    out.detail = os.str();
    return out;
}

Outcome criterion11() {
    Outcome out;
    out.pass = true;

    // Modulus independence: the criterion-1 table under the second modulus.
    {
        tc::FieldCtx F1(3, 5, tc::find_irreducible(3, 5, 1));
        const auto wd = tc::weight_distribution(make_code(F1, false).linear());
        const WeightMap want{{48, 90}, {54, 80}, {60, 72}};
        if (nonzero_weights(wd) != want) {
            out.pass = false;
            out.detail += " alternate modulus gave " + map_string(nonzero_weights(wd)) + ";";
        }
    }

    // Puncturing weight-division law at (3,5) and (5,4).
    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 5}, {5, 4}}) {
        tc::FieldCtx F(p, m);
        const auto full = tc::weight_distribution(make_code(F, false).linear());
        const auto punct = tc::weight_distribution(make_code(F, true).linear());
        WeightMap divided;
        for (auto& [w, a] : nonzero_weights(full)) divided[w / (p - 1)] += a;
        if (divided != nonzero_weights(punct)) {
            out.pass = false;
            out.detail += " division law fails at (" + std::to_string(p) + "," +
                          std::to_string(m) + ");";
        }
    }

    // wt(c_b) = n_0 - N(b) for every b != 0, at (3,4) and (5,3).
    std::uint64_t identity_checks = 0;
    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 4}, {5, 3}}) {
        tc::FieldCtx F(p, m);
        const auto code = make_code(F, false);
        const std::uint64_t n0 = tc::check_square_trace_fiber(F, 0).enumerated;
        for (std::uint64_t b = 1; b < F.q(); ++b) {
            const auto cw = tc::codeword_for(code, b);
            std::uint64_t wt = 0;
            for (auto v : cw) wt += v != 0;
            const std::uint64_t nb = tc::check_joint_trace_kernel(F, b).enumerated;
            ++identity_checks;
            if (wt != n0 - nb) {
                out.pass = false;
                out.detail += " weight identity fails at (" + std::to_string(p) + "," +
                              std::to_string(m) + ") b=" + std::to_string(b) + ";";
                break;
            }
        }
    }
    out.detail = "modulus invariance, division law, " + std::to_string(identity_checks) +
                 " weight identities" + out.detail;
    return out;
}

Outcome criterion12() {
    Outcome out;
    out.pass = true;

    // The [40,5,24] length-optimality claim is external literature; the
    // Griesmer sum gives only 37, so the workbench must report the bound
    // without asserting optimality.
    const std::uint64_t g = tc::griesmer_min_length(3, 5, 24);
    const bool equality = tc::meets_griesmer_with_equality(40, 3, 5, 24);
    if (g != 37 || equality) {
        out.pass = false;
        out.detail += " griesmer(3,5,24)=" + std::to_string(g) + ";";
    }

    // The participant-count discrepancy: the scheme on the (5,5) punctured
    // base has n-1 = 155 participants while the closing claim's p^(m-2)
    // would give 125.  Both numbers must be computable; neither is asserted
    // as the other.
    tc::FieldCtx F(5, 5);
    const auto C = make_code(F, true).linear();
    const tc::MasseyScheme scheme(C);
    const std::uint64_t enumerated = scheme.participants();
    std::uint64_t claimed = 1;
    for (std::uint32_t i = 0; i + 2 < 5; ++i) claimed *= 5;
    if (enumerated != 155 || claimed != 125) {
        out.pass = false;
        out.detail += " participant counts " + std::to_string(enumerated) + "/" +
                      std::to_string(claimed) + ";";
    }
    out.detail = "griesmer(3,5,24)=" + std::to_string(g) +
                 " (no equality; optimality left to the literature), participants reported as " +
                 std::to_string(enumerated) + " enumerated vs " + std::to_string(claimed) +
                 " claimed" + out.detail;
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        Outcome (*fn)();
        std::uint64_t budget_ms;  // 0 = no budget pinned
    };
    const std::vector<Criterion> criteria{
        {1, "golden three-weight code at (3,5) full", criterion1, 1000},
        {2, "golden two-weight code at (5,4) full", criterion2, 1000},
        {3, "golden punctured code at (3,5)", criterion3, 1000},
        {4, "golden punctured code at (5,4) + griesmer equality", criterion4, 1000},
        {5, "closed-form tables across the full (p, m) grid", criterion5, 300000},
        {6, "exact fiber and kernel counts across the grid", criterion6, 120000},
        {7, "complex character sums across the grid", criterion7, 120000},
        {8, "planar catalog measures and code equality", criterion8, 180000},
        {9, "access structure and round trips at (3,5) punctured", criterion9, 60000},
        {10, "dictator characterization at (3,5) full", criterion10, 0},
        {11, "invariance properties", criterion11, 0},
        {12, "non-reproducible claims stay gated out", criterion12, 0},
    };

    bool all = true;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        const auto ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - start)
                .count());
        if (c.budget_ms != 0 && ms > c.budget_ms) {
            out.pass = false;
            out.detail += " [over budget " + std::to_string(c.budget_ms) + " ms]";
        }
        all = all && out.pass;
        std::cout << "[" << (c.id < 10 ? " " : "") << c.id << "] "
                  << (out.pass ? "PASS" : "FAIL") << " (" << ms << " ms) " << c.label << ": "
                  << out.detail << "\n";
    }
    std::cout << (all ? "ACCEPTANCE: all 12 criteria pass" : "ACCEPTANCE: FAILURES PRESENT")
              << "\n";
    return all ? 0 : 1;
}
