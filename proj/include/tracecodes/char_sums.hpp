#pragma once

// Character sums over GF(q), q = p^m, p an odd prime.
//
// Every quantity of interest comes in two independent routes: a brute-force
// enumeration over the field and a closed-form expression.  Each check_*
// function returns both values so callers (tests, the CLI verifier) can
// confirm they agree.  Counts must match exactly; complex sums must match to
// |delta| <= 1e-6 * sqrt(q), far above accumulated double rounding at
// enumerable sizes yet far below the q^(1/2) scale of the sums themselves.
//
// Notation used throughout:
//   eps      = exp(2*pi*i/p), the primitive p-th root of unity
//   chi_b(c) = eps^Tr(b*c), the additive characters of GF(q)
//   eta      = quadratic character of GF(q)*;  eta0 = the one on GF(p)*
//   G        = sum_{c in GF(q)*} eta(c) chi_1(c), the quadratic Gauss sum
//   sign s   = (-1)^(((p-1)/2)^2 * m/2)  (defined for even m)

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracecodes/field.hpp"

namespace tracecodes {

struct ComplexCheck {
    std::string name;
    std::complex<double> enumerated;
    std::complex<double> closed_form;
    double tolerance = 0.0;
    bool pass() const { return std::abs(enumerated - closed_form) <= tolerance; }
};

struct CountCheck {
    std::string name;
    std::uint64_t enumerated = 0;
    std::uint64_t closed_form = 0;
    bool pass() const { return enumerated == closed_form; }
};

inline double default_sum_tolerance(const FieldCtx& F) {
    return 1e-6 * std::sqrt(static_cast<double>(F.q()));
}

// The p complex p-th roots of unity, eps^k for k = 0..p-1.
inline std::vector<std::complex<double>> unity_roots(std::uint32_t p) {
    std::vector<std::complex<double>> roots(p);
    for (std::uint32_t k = 0; k < p; ++k)
        roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / p);
    return roots;
}

inline int neg_one_pow(std::uint64_t e) { return (e & 1) ? -1 : 1; }

// i^k for the closed-form Gauss sum.
inline std::complex<double> unit_i_pow(std::uint64_t k) {
    switch (k % 4) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

inline std::uint64_t half_p_squared(std::uint32_t p) {
    const std::uint64_t h = (p - 1) / 2;
    return h * h;
}

// s = (-1)^(((p-1)/2)^2 * m/2); only meaningful for even m.
inline int even_m_sign(std::uint32_t p, std::uint32_t m) {
    if (m % 2 != 0) throw std::invalid_argument("sign is defined for even m only");
    return neg_one_pow(half_p_squared(p) * (m / 2));
}

// chi_b(c) = eps^Tr(b*c).
inline std::complex<double> additive_character(const FieldCtx& F, std::uint64_t b_enc,
                                               std::uint64_t c_enc) {
    const auto roots = unity_roots(F.p());
    return roots[F.trace_enc(F.mul_enc(b_enc, c_enc))];
}

inline std::complex<double> additive_character(const FieldElement& b, const FieldElement& c) {
    return additive_character(b.context(), b.encoding(), c.encoding());
}

// eta over the whole field as a table: 0 at index 0, +1 at nonzero squares,
// -1 elsewhere.  Built by marking the squares in one pass, which is a
// different route from the per-element power in FieldCtx (the two are
// cross-checked in the tests).
inline std::vector<int> quadratic_character_table(const FieldCtx& F) {
    std::vector<int> table(F.q(), -1);
    table[0] = 0;
    for (std::uint64_t e = 1; e < F.q(); ++e) table[F.square_enc(e)] = 1;
    return table;
}

// --- Gauss sum -------------------------------------------------------------

inline std::complex<double> gauss_sum_numeric(const FieldCtx& F) {
    const auto roots = unity_roots(F.p());
    const auto eta = quadratic_character_table(F);
    std::complex<double> sum = 0.0;
    for (std::uint64_t c = 1; c < F.q(); ++c)
        sum += static_cast<double>(eta[c]) * roots[F.trace_enc(c)];
    return sum;
}

// G = (-1)^(m-1) * i^(((p-1)/2)^2 * m) * sqrt(q).
inline std::complex<double> gauss_sum_closed(const FieldCtx& F) {
    const double root_q = std::sqrt(static_cast<double>(F.q()));
    return static_cast<double>(neg_one_pow(F.m() - 1)) *
           unit_i_pow(half_p_squared(F.p()) * F.m()) * root_q;
}

inline ComplexCheck check_gauss_sum(const FieldCtx& F) {
    return {"gauss_sum", gauss_sum_numeric(F), gauss_sum_closed(F), default_sum_tolerance(F)};
}

// --- Quadratic Weil sum ----------------------------------------------------
//
// sum_{c in GF(q)} chi_1(a2 c^2 + a1 c + a0)
//   = chi_1(a0 - a1^2 (4 a2)^(-1)) * eta(a2) * G          for a2 != 0.

inline ComplexCheck check_weil_quadratic(const FieldCtx& F, std::uint64_t a2, std::uint64_t a1,
                                         std::uint64_t a0) {
    if (a2 == 0) throw std::domain_error("quadratic Weil sum requires a2 != 0");
    const auto roots = unity_roots(F.p());

    std::complex<double> enumerated = 0.0;
    for (std::uint64_t c = 0; c < F.q(); ++c) {
        const std::uint64_t v =
            F.add_enc(F.mul_enc(a2, F.square_enc(c)), F.add_enc(F.mul_enc(a1, c), a0));
        enumerated += roots[F.trace_enc(v)];
    }

    const std::uint64_t four_a2 = F.scalar_mul_enc(4 % F.p(), a2);
    const std::uint64_t shift = F.sub_enc(a0, F.mul_enc(F.square_enc(a1), F.inv_enc(four_a2)));
    const std::complex<double> closed = roots[F.trace_enc(shift)] *
                                        static_cast<double>(F.quadratic_character_enc(a2)) *
                                        gauss_sum_closed(F);

    return {"weil_quadratic", enumerated, closed, default_sum_tolerance(F)};
}

// --- Scaled square sum -----------------------------------------------------
//
// sum_{y in GF(p)*} sum_{x in GF(q)} eps^(y Tr(x^2))
//   = 0                                  for odd m,
//   = (-1)^(m-1) * s * (p-1) * sqrt(q)   for even m.

inline ComplexCheck check_scaled_square_sum(const FieldCtx& F) {
    const auto roots = unity_roots(F.p());

    std::vector<PrimeElement> tr_sq(F.q());
    for (std::uint64_t x = 0; x < F.q(); ++x) tr_sq[x] = F.trace_enc(F.square_enc(x));

    std::complex<double> enumerated = 0.0;
    for (std::uint32_t y = 1; y < F.p(); ++y)
        for (std::uint64_t x = 0; x < F.q(); ++x)
            enumerated += roots[static_cast<std::uint64_t>(y) * tr_sq[x] % F.p()];

    std::complex<double> closed = 0.0;
    if (F.m() % 2 == 0) {
        closed = static_cast<double>(neg_one_pow(F.m() - 1) * even_m_sign(F.p(), F.m()) *
                                     static_cast<double>(F.p() - 1)) *
                 std::sqrt(static_cast<double>(F.q()));
    }
    return {"scaled_square_sum", enumerated, closed, default_sum_tolerance(F)};
}

// --- Fibers of x -> Tr(x^2) ------------------------------------------------
//
// n_a = #{x in GF(q) : Tr(x^2) = a}:
//   m odd,  a  = 0 : p^(m-1)
//   m odd,  a != 0 : p^(m-1) + eta0(a) (-1)^((p-1)/2) (-1)^(((p-1)/2)^2 (m+1)/2) p^((m-1)/2)
//   m even, a  = 0 : p^(m-1) - s (p-1) p^((m-2)/2)
//   m even, a != 0 : p^(m-1) + s p^((m-2)/2)
//
// The odd-m deviation term is G * Gbar * eta0(-a) / p collapsed to a sign
// times a p-power; the eta0(-1) = (-1)^((p-1)/2) factor is what makes the
// sign come out positive here.

inline std::uint64_t square_trace_fiber_closed(const FieldCtx& F, PrimeElement a) {
    const std::uint32_t p = F.p(), m = F.m();
    a %= p;
    std::uint64_t p_pow = 1;  // will hold the p-power each branch needs
    std::int64_t value = 0;
    const std::int64_t p_m1 = [&] {
        std::int64_t v = 1;
        for (std::uint32_t i = 0; i + 1 < m; ++i) v *= p;
        return v;
    }();
    if (m % 2 == 1) {
        if (a == 0) return static_cast<std::uint64_t>(p_m1);
        for (std::uint32_t i = 0; i < (m - 1) / 2; ++i) p_pow *= p;
        const int sign = prime_quadratic_character(a, p) * neg_one_pow((p - 1) / 2) *
                         neg_one_pow(half_p_squared(p) * ((m + 1) / 2));
        value = p_m1 + sign * static_cast<std::int64_t>(p_pow);
    } else {
        for (std::uint32_t i = 0; i < (m - 2) / 2; ++i) p_pow *= p;
        const int s = even_m_sign(p, m);
        if (a == 0)
            value = p_m1 - static_cast<std::int64_t>(s) * (p - 1) * static_cast<std::int64_t>(p_pow);
        else
            value = p_m1 + static_cast<std::int64_t>(s) * static_cast<std::int64_t>(p_pow);
    }
    if (value < 0) throw std::logic_error("negative fiber count");
    return static_cast<std::uint64_t>(value);
}

inline CountCheck check_square_trace_fiber(const FieldCtx& F, PrimeElement a) {
    a %= F.p();
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < F.q(); ++x)
        if (F.trace_enc(F.square_enc(x)) == a) ++count;
    return {"square_trace_fiber", count, square_trace_fiber_closed(F, a)};
}

// --- Quadratic-plus-linear double sum --------------------------------------
//
// For b != 0:  T(b) = sum_{y,z in GF(p)*} sum_{x in GF(q)} eps^(Tr(y x^2 + z b x))
//   m odd,  Tr(b^2)  = 0 : 0
//   m odd,  Tr(b^2) != 0 : eta0(Tr(b^2)) (-1)^((p-1)/2) (-1)^(((p-1)/2)^2 (m+1)/2) (p-1) p^((m+1)/2)
//   m even, Tr(b^2)  = 0 : -s (p-1)^2 p^(m/2)
//   m even, Tr(b^2) != 0 :  s (p-1) p^(m/2)

inline ComplexCheck check_quadratic_linear_sum(const FieldCtx& F, std::uint64_t b) {
    if (b == 0) throw std::domain_error("the double sum requires b != 0");
    const std::uint32_t p = F.p(), m = F.m();
    const auto roots = unity_roots(p);

    std::vector<PrimeElement> tr_sq(F.q()), tr_b(F.q());
    for (std::uint64_t x = 0; x < F.q(); ++x) {
        tr_sq[x] = F.trace_enc(F.square_enc(x));
        tr_b[x] = F.trace_enc(F.mul_enc(b, x));
    }

    std::complex<double> enumerated = 0.0;
    for (std::uint32_t y = 1; y < p; ++y)
        for (std::uint32_t z = 1; z < p; ++z)
            for (std::uint64_t x = 0; x < F.q(); ++x)
                enumerated += roots[(static_cast<std::uint64_t>(y) * tr_sq[x] +
                                     static_cast<std::uint64_t>(z) * tr_b[x]) %
                                    p];

    const PrimeElement tb2 = F.trace_enc(F.square_enc(b));
    double closed = 0.0;
    if (m % 2 == 1) {
        if (tb2 != 0) {
            double p_pow = 1.0;
            for (std::uint32_t i = 0; i < (m + 1) / 2; ++i) p_pow *= p;
            closed = 1.0 * prime_quadratic_character(tb2, p) * neg_one_pow((p - 1) / 2) *
                     neg_one_pow(half_p_squared(p) * ((m + 1) / 2)) * (p - 1.0) * p_pow;
        }
    } else {
        double p_pow = 1.0;
        for (std::uint32_t i = 0; i < m / 2; ++i) p_pow *= p;
        const int s = even_m_sign(p, m);
        if (tb2 == 0)
            closed = -1.0 * s * (p - 1.0) * (p - 1.0) * p_pow;
        else
            closed = 1.0 * s * (p - 1.0) * p_pow;
    }
    return {"quadratic_linear_sum", enumerated, {closed, 0.0}, default_sum_tolerance(F)};
}

// --- Joint kernel count ----------------------------------------------------
//
// N(b) = #{x in GF(q) : Tr(x^2) = 0 and Tr(b x) = 0},  b != 0:
//   m odd,  Tr(b^2)  = 0 : p^(m-2)
//   m odd,  Tr(b^2) != 0 : p^(m-2) + eta0(Tr(b^2)) (-1)^((p-1)/2) (-1)^(((p-1)/2)^2 (m+1)/2) (p-1) p^((m-3)/2)
//   m even, Tr(b^2)  = 0 : p^(m-2) - s (p-1) p^((m-2)/2)
//   m even, Tr(b^2) != 0 : p^(m-2)
//
// (Defined for m >= 2; these are the codeword-weight counts.)

inline std::uint64_t joint_trace_kernel_closed(const FieldCtx& F, std::uint64_t b) {
    if (b == 0) throw std::domain_error("the joint kernel count requires b != 0");
    const std::uint32_t p = F.p(), m = F.m();
    if (m < 2) throw std::invalid_argument("joint kernel count requires m >= 2");
    std::int64_t p_m2 = 1;
    for (std::uint32_t i = 0; i + 2 < m; ++i) p_m2 *= p;

    const PrimeElement tb2 = F.trace_enc(F.square_enc(b));
    std::int64_t value = p_m2;
    if (m % 2 == 1) {
        if (tb2 != 0) {
            std::int64_t p_pow = 1;
            for (std::uint32_t i = 0; i < (m - 3) / 2; ++i) p_pow *= p;
            const int sign = prime_quadratic_character(tb2, p) * neg_one_pow((p - 1) / 2) *
                             neg_one_pow(half_p_squared(p) * ((m + 1) / 2));
            value = p_m2 + sign * static_cast<std::int64_t>(p - 1) * p_pow;
        }
    } else {
        if (tb2 == 0) {
            std::int64_t p_pow = 1;
            for (std::uint32_t i = 0; i < (m - 2) / 2; ++i) p_pow *= p;
            value = p_m2 - static_cast<std::int64_t>(even_m_sign(p, m)) *
                               static_cast<std::int64_t>(p - 1) * p_pow;
        }
    }
    if (value < 0) throw std::logic_error("negative kernel count");
    return static_cast<std::uint64_t>(value);
}

inline CountCheck check_joint_trace_kernel(const FieldCtx& F, std::uint64_t b) {
    if (b == 0) throw std::domain_error("the joint kernel count requires b != 0");
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < F.q(); ++x)
        if (F.trace_enc(F.square_enc(x)) == 0 && F.trace_enc(F.mul_enc(b, x)) == 0) ++count;
    return {"joint_trace_kernel", count, joint_trace_kernel_closed(F, b)};
}

}  // namespace tracecodes
