// Field arithmetic: canonical moduli, ring axioms, Frobenius/trace behavior,
// the quadratic character, and the error contract.  Oracles here use routes
// that are independent of the library internals wherever feasible (trial
// division for irreducibility, conjugate sums for traces, explicit powers
// for the character).

#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tracecodes/errors.hpp"
#include "tracecodes/field.hpp"

namespace tc = tracecodes;

namespace {

// Trial-division irreducibility over GF(p): check no monic factor of degree
// 1..deg/2 divides f.  Completely independent of the library's test.
using Poly = std::vector<std::uint32_t>;  // coeffs low..high, monic implied at size()

Poly poly_mod_naive(Poly a, const Poly& b, std::uint32_t p) {
    // a mod b, b monic with leading coeff 1 at degree b.size()-1.
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i < b.size(); ++i) {
                const std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool irreducible_naive(const std::vector<tc::PrimeElement>& low_coeffs, std::uint32_t p) {
    const std::size_t m = low_coeffs.size();
    Poly f(low_coeffs.begin(), low_coeffs.end());
    f.push_back(1);  // monic
    // Enumerate every monic divisor candidate of degree 1..m/2.
    for (std::size_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < d; ++i) total *= p;
        for (std::uint64_t enc = 0; enc < total; ++enc) {
            Poly g(d + 1, 0);
            std::uint64_t e = enc;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = static_cast<std::uint32_t>(e % p);
                e /= p;
            }
            g[d] = 1;
            const Poly r = poly_mod_naive(f, g, p);
            bool zero = true;
            for (auto c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

std::uint64_t encoding_of(const std::vector<tc::PrimeElement>& coeffs, std::uint32_t p) {
    std::uint64_t enc = 0, scale = 1;
    for (auto c : coeffs) {
        enc += scale * c;
        scale *= p;
    }
    return enc;
}

}  // namespace

TEST(Modulus, CanonicalChoices) {
    EXPECT_EQ(tc::find_irreducible(3, 1), (std::vector<tc::PrimeElement>{0}));
    EXPECT_EQ(tc::find_irreducible(3, 2), (std::vector<tc::PrimeElement>{1, 0}));
    EXPECT_EQ(tc::find_irreducible(3, 3), (std::vector<tc::PrimeElement>{1, 2, 0}));
    EXPECT_EQ(tc::find_irreducible(3, 5), (std::vector<tc::PrimeElement>{1, 2, 0, 0, 0}));
    EXPECT_EQ(tc::find_irreducible(3, 5, 1), (std::vector<tc::PrimeElement>{2, 2, 0, 0, 0}));
    EXPECT_EQ(tc::find_irreducible(5, 4), (std::vector<tc::PrimeElement>{2, 0, 0, 0}));
    EXPECT_EQ(tc::find_irreducible(5, 5), (std::vector<tc::PrimeElement>{1, 4, 0, 0, 0}));
    EXPECT_EQ(tc::find_irreducible(7, 6), (std::vector<tc::PrimeElement>{2, 0, 0, 0, 0, 0}));
}

TEST(Modulus, AgreesWithTrialDivision) {
    for (auto [p, m] : {std::pair<std::uint32_t, std::uint32_t>{3, 3},
                        {3, 5},
                        {5, 4},
                        {7, 3}}) {
        const auto f = tc::find_irreducible(p, m);
        EXPECT_TRUE(irreducible_naive(f, p)) << "p=" << p << " m=" << m;
    }
}

TEST(Modulus, SmallestEncodingWins) {
    // Every polynomial with a smaller encoding than the canonical (3,3)
    // modulus must be reducible (verified by trial division).
    const auto canonical = tc::find_irreducible(3, 3);
    const std::uint64_t canon_enc = encoding_of(canonical, 3);
    for (std::uint64_t enc = 0; enc < canon_enc; ++enc) {
        std::vector<tc::PrimeElement> coeffs(3);
        std::uint64_t e = enc;
        for (auto& c : coeffs) {
            c = static_cast<tc::PrimeElement>(e % 3);
            e /= 3;
        }
        EXPECT_FALSE(irreducible_naive(coeffs, 3)) << "encoding " << enc;
    }
}

TEST(Modulus, SecondIndexSkipsTheFirst) {
    const auto first = tc::find_irreducible(3, 5, 0);
    const auto second = tc::find_irreducible(3, 5, 1);
    EXPECT_NE(first, second);
    EXPECT_LT(encoding_of(first, 3), encoding_of(second, 3));
    EXPECT_TRUE(irreducible_naive(second, 3));
}

TEST(FieldCtx, ConstructionErrors) {
    EXPECT_THROW(tc::FieldCtx(2, 3), std::invalid_argument);   // even prime
    EXPECT_THROW(tc::FieldCtx(4, 2), std::invalid_argument);   // composite
    EXPECT_THROW(tc::FieldCtx(9, 1), std::invalid_argument);   // composite
    EXPECT_THROW(tc::FieldCtx(3, 0), std::invalid_argument);   // degree 0
    EXPECT_THROW(tc::FieldCtx(3, 65), std::invalid_argument);  // degree too large
    EXPECT_THROW(tc::FieldCtx(3, 5, tc::FieldConfig{100}), tc::resource_limit_error);
    // A reducible modulus must be rejected: x^2 + 2 = (x+1)(x+2) mod 3.
    EXPECT_THROW(tc::FieldCtx(3, 2, {2, 0}), std::invalid_argument);
}

TEST(FieldCtx, NineElementFieldGoldenTable) {
    tc::FieldCtx F(3, 2);  // modulus x^2 + 1
    EXPECT_EQ(F.q(), 9u);
    const std::uint64_t alpha = 3;  // encoding of x
    EXPECT_EQ(F.mul_enc(alpha, alpha), 2u);  // x^2 = -1 = 2
    EXPECT_EQ(F.trace_enc(alpha), 0u);
    EXPECT_EQ(F.trace_enc(1), 2u);
    EXPECT_EQ(F.neg_one_enc(), 2u);
    // Conjugate-sum oracle: Tr(x) = x + x^3 for every element.
    for (std::uint64_t x = 0; x < 9; ++x) {
        const std::uint64_t conj = F.pow_enc(x, 3);
        const std::uint64_t sum = F.add_enc(x, conj);
        EXPECT_LT(sum, 3u) << "trace must land in the prime subfield";
        EXPECT_EQ(F.trace_enc(x), sum);
    }
}

TEST(FieldCtx, RingAxiomsExhaustiveOverTwentySeven) {
    tc::FieldCtx F(3, 3);
    for (std::uint64_t a = 0; a < 27; ++a) {
        for (std::uint64_t b = 0; b < 27; ++b) {
            EXPECT_EQ(F.mul_enc(a, b), F.mul_enc(b, a));
            EXPECT_EQ(F.add_enc(a, b), F.add_enc(b, a));
            for (std::uint64_t c = 0; c < 27; c += 5) {
                EXPECT_EQ(F.mul_enc(a, F.mul_enc(b, c)), F.mul_enc(F.mul_enc(a, b), c));
                EXPECT_EQ(F.mul_enc(a, F.add_enc(b, c)),
                          F.add_enc(F.mul_enc(a, b), F.mul_enc(a, c)));
            }
        }
    }
}

TEST(FieldCtx, InversesAndPowers) {
    tc::FieldCtx F(5, 3);
    for (std::uint64_t a = 1; a < F.q(); ++a) {
        EXPECT_EQ(F.mul_enc(a, F.inv_enc(a)), 1u);
        EXPECT_EQ(F.pow_enc(a, F.q() - 1), 1u);  // Lagrange
    }
    EXPECT_THROW(F.inv_enc(0), std::domain_error);
    EXPECT_EQ(F.pow_enc(0, 0), 1u);  // empty product convention
}

TEST(FieldCtx, FrobeniusIsAdditive) {
    tc::FieldCtx F(3, 4);
    for (std::uint64_t a = 0; a < F.q(); a += 7) {
        for (std::uint64_t b = 0; b < F.q(); b += 11) {
            EXPECT_EQ(F.pow_enc(F.add_enc(a, b), 3),
                      F.add_enc(F.pow_enc(a, 3), F.pow_enc(b, 3)));
        }
    }
}

TEST(FieldCtx, TraceIsLinearWithUniformFibers) {
    tc::FieldCtx F(5, 3);
    std::map<std::uint64_t, std::uint64_t> fiber;
    for (std::uint64_t x = 0; x < F.q(); ++x) {
        ++fiber[F.trace_enc(x)];
        const std::uint64_t y = F.mul_enc(x, 7);
        EXPECT_EQ(F.trace_enc(F.add_enc(x, y)),
                  (F.trace_enc(x) + F.trace_enc(y)) % 5);
    }
    ASSERT_EQ(fiber.size(), 5u);  // surjective
    for (auto& [t, count] : fiber) EXPECT_EQ(count, F.q() / 5) << "t=" << t;
    // GF(p)-linearity with prime scalars embedded via subfield_enc.
    for (std::uint32_t c = 0; c < 5; ++c) {
        const std::uint64_t ce = F.subfield_enc(c);
        for (std::uint64_t x = 0; x < F.q(); x += 13)
            EXPECT_EQ(F.trace_enc(F.mul_enc(ce, x)), c * F.trace_enc(x) % 5);
    }
}

TEST(FieldCtx, QuadraticCharacterMatchesEulerCriterion) {
    tc::FieldCtx F(3, 3);
    std::uint64_t plus = 0, minus = 0;
    for (std::uint64_t x = 1; x < F.q(); ++x) {
        const int chi = F.quadratic_character_enc(x);
        const std::uint64_t euler = F.pow_enc(x, (F.q() - 1) / 2);
        EXPECT_EQ(chi == 1 ? 1u : F.neg_one_enc(), euler) << "x=" << x;
        (chi == 1 ? plus : minus)++;
    }
    EXPECT_EQ(plus, (F.q() - 1) / 2);
    EXPECT_EQ(minus, (F.q() - 1) / 2);
    EXPECT_EQ(F.quadratic_character_enc(0), 0);
    // Multiplicativity, exhaustive.
    for (std::uint64_t a = 1; a < F.q(); ++a)
        for (std::uint64_t b = 1; b < F.q(); ++b)
            EXPECT_EQ(F.quadratic_character_enc(F.mul_enc(a, b)),
                      F.quadratic_character_enc(a) * F.quadratic_character_enc(b));
}

TEST(FieldElement, OperatorsAndCrossContextGuard) {
    tc::FieldCtx F(3, 2), G(3, 3);
    const tc::FieldElement a = F.element(3), b = F.element(5);
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(a * inv(b) * b, a);
    EXPECT_EQ(-(-a), a);
    EXPECT_EQ(trace(a), F.trace_enc(3));
    EXPECT_THROW(a + G.element(1), std::invalid_argument);
}

TEST(FieldCtx, EnumerationIsAscendingAndComplete) {
    tc::FieldCtx F(3, 3);
    std::uint64_t expect = 0;
    for (const auto& e : tc::enumerate_field(F)) {
        EXPECT_EQ(e.encoding(), expect);
        ++expect;
    }
    EXPECT_EQ(expect, F.q());
}

TEST(FieldCtx, PrimeFieldDegreeOneWorks) {
    tc::FieldCtx F(7, 1);
    EXPECT_EQ(F.q(), 7u);
    for (std::uint64_t x = 0; x < 7; ++x) EXPECT_EQ(F.trace_enc(x), x);
    EXPECT_EQ(F.mul_enc(3, 5), 1u);
}
