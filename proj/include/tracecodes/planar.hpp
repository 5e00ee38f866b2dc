#pragma once

// Catalog of planar functions on GF(p^m) and the codes they induce.
//
// A function f is planar when every difference map x -> f(x+a) - f(x)
// (a != 0) is a bijection.  The nonlinearity measure computed here is
//   P_f = max_{a != 0, b} #{x : f(x+a) - f(x) = b} / q,
// an exact rational with denominator q; planar functions attain the optimum
// 1/q.  Each catalog family also carries its admissibility conditions, and
// build_planar_set produces D_f = {x in GF(q)* : Tr(f(x)) = 0} so the
// resulting code can be compared against the standard construction.

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracecodes/code.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/field.hpp"

namespace tracecodes {

inline constexpr std::uint64_t kDefaultPlanarityCeiling = 59049;  // 3^10

enum class PlanarFamily { Square, DembowskiOstrom, CoulterMatthews, DingYuan };

struct PlanarSpec {
    PlanarFamily family = PlanarFamily::Square;
    std::uint32_t k = 1;       // exponent parameter (monomial families)
    std::uint64_t u_enc = 1;   // field coefficient (Ding-Yuan family)
};

inline std::string family_name(PlanarFamily f) {
    switch (f) {
        case PlanarFamily::Square: return "square";
        case PlanarFamily::DembowskiOstrom: return "dembowski_ostrom";
        case PlanarFamily::CoulterMatthews: return "coulter_matthews";
        case PlanarFamily::DingYuan: return "ding_yuan";
    }
    throw std::logic_error("unknown planar family");
}

// Accepts hyphen or underscore spellings ("ding-yuan" == "ding_yuan").
inline std::optional<PlanarFamily> family_from_name(std::string s) {
    for (auto& c : s)
        if (c == '-') c = '_';
    if (s == "square") return PlanarFamily::Square;
    if (s == "dembowski_ostrom") return PlanarFamily::DembowskiOstrom;
    if (s == "coulter_matthews") return PlanarFamily::CoulterMatthews;
    if (s == "ding_yuan") return PlanarFamily::DingYuan;
    return std::nullopt;
}

// Human-readable admissibility verdict; empty string means admissible.
inline std::string admissibility_failure(const PlanarSpec& spec, const FieldCtx& F) {
    switch (spec.family) {
        case PlanarFamily::Square:
            return "";
        case PlanarFamily::DembowskiOstrom: {
            const std::uint32_t g = std::gcd(F.m(), spec.k);
            if ((F.m() / g) % 2 == 0) return "m/gcd(m,k) must be odd";
            return "";
        }
        case PlanarFamily::CoulterMatthews: {
            if (F.p() != 3) return "requires p = 3";
            if (spec.k % 2 == 0) return "k must be odd";
            if (std::gcd(F.m(), spec.k) != 1) return "gcd(m,k) must be 1";
            return "";
        }
        case PlanarFamily::DingYuan: {
            if (F.p() != 3) return "requires p = 3";
            if (F.m() % 2 == 0) return "m must be odd";
            if (spec.u_enc == 0 || spec.u_enc >= F.q()) return "u must be a nonzero element";
            return "";
        }
    }
    throw std::logic_error("unknown planar family");
}

inline bool is_admissible(const PlanarSpec& spec, const FieldCtx& F) {
    return admissibility_failure(spec, F).empty();
}

namespace planardetail {

// e mod n for e = p^k + 1 or (3^k + 1)/2 without big-integer arithmetic.
inline std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 acc = 1, b = base % mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * b % mod;
        b = b * b % mod;
        exp >>= 1;
    }
    return static_cast<std::uint64_t>(acc);
}

// x^e for e taken mod q-1 (valid on GF(q)* and extended by f(0) = 0, which
// is correct for every catalog exponent since they are all >= 1).
inline std::uint64_t monomial_eval(const FieldCtx& F, std::uint64_t x, std::uint64_t e_mod) {
    if (x == 0) return 0;
    if (e_mod == 0) return 1;  // x^(q-1) on GF(q)*
    return F.pow_enc(x, e_mod);
}

}  // namespace planardetail

// Value of the catalog function at x.
inline std::uint64_t eval_planar(const PlanarSpec& spec, const FieldCtx& F, std::uint64_t x) {
    const std::uint64_t group = F.q() - 1;
    switch (spec.family) {
        case PlanarFamily::Square:
            return F.square_enc(x);
        case PlanarFamily::DembowskiOstrom: {
            const std::uint64_t e = (planardetail::pow_mod_u64(F.p(), spec.k, group) + 1) % group;
            return planardetail::monomial_eval(F, x, e);
        }
        case PlanarFamily::CoulterMatthews: {
            // (3^k + 1)/2 mod (q-1): 3^k is odd, so reduce mod 2(q-1) first.
            const std::uint64_t m2 = 2 * group;
            const std::uint64_t r = planardetail::pow_mod_u64(3, spec.k, m2);
            const std::uint64_t e = ((r + 1) / 2) % group;
            return planardetail::monomial_eval(F, x, e);
        }
        case PlanarFamily::DingYuan: {
            const std::uint64_t x2 = F.square_enc(x);
            const std::uint64_t x4 = F.square_enc(x2);
            const std::uint64_t x6 = F.mul_enc(x4, x2);
            const std::uint64_t x10 = F.mul_enc(x6, x4);
            const std::uint64_t u = spec.u_enc;
            const std::uint64_t u2 = F.square_enc(u);
            return F.sub_enc(F.sub_enc(x10, F.mul_enc(u, x6)), F.mul_enc(u2, x2));
        }
    }
    throw std::logic_error("unknown planar family");
}

inline std::vector<std::uint64_t> planar_value_table(const PlanarSpec& spec, const FieldCtx& F) {
    std::vector<std::uint64_t> table(F.q());
    for (std::uint64_t x = 0; x < F.q(); ++x) table[x] = eval_planar(spec, F, x);
    return table;
}

// Exact nonlinearity measure of an arbitrary value table (cost O(q^2)).
struct NonlinearityMeasure {
    std::uint64_t max_count = 0;  // P_f = max_count / q
    std::uint64_t q = 0;

    bool is_planar() const { return max_count == 1; }
    std::string ratio_string() const {
        return std::to_string(max_count) + "/" + std::to_string(q);
    }
};

inline NonlinearityMeasure nonlinearity_measure_table(
    const FieldCtx& F, const std::vector<std::uint64_t>& f_table,
    std::uint64_t planarity_ceiling = kDefaultPlanarityCeiling) {
    if (F.q() > planarity_ceiling)
        throw resource_limit_error("q exceeds the planarity ceiling (quadratic cost)");
    if (f_table.size() != F.q()) throw std::invalid_argument("value table has wrong size");

    NonlinearityMeasure out;
    out.q = F.q();
    std::vector<std::uint64_t> count(F.q());
    for (std::uint64_t a = 1; a < F.q(); ++a) {
        std::fill(count.begin(), count.end(), 0);
        for (std::uint64_t x = 0; x < F.q(); ++x) {
            const std::uint64_t d = F.sub_enc(f_table[F.add_enc(x, a)], f_table[x]);
            ++count[d];
        }
        for (std::uint64_t b = 0; b < F.q(); ++b) out.max_count = std::max(out.max_count, count[b]);
    }
    return out;
}

inline NonlinearityMeasure nonlinearity_measure(
    const PlanarSpec& spec, const FieldCtx& F,
    std::uint64_t planarity_ceiling = kDefaultPlanarityCeiling) {
    return nonlinearity_measure_table(F, planar_value_table(spec, F), planarity_ceiling);
}

// Structural conditions on f required for D_f to behave like the standard
// set: f vanishes at 0; f is even; f scales by a fixed power a^h under
// scalar multiplication from GF(p)*.  The reported exponent is the smallest
// h in [0, p-2] that works (exponents matter only mod p-1 on GF(p)*, so e.g.
// the square map reports h = 0 at p = 3 and h = 2 for p >= 5).
struct StructuralConditions {
    bool vanishes_at_zero = false;
    bool even = false;
    std::optional<std::uint32_t> homogeneity_exponent;

    bool all_hold() const { return vanishes_at_zero && even && homogeneity_exponent.has_value(); }
};

inline StructuralConditions check_structural_conditions(const PlanarSpec& spec,
                                                        const FieldCtx& F) {
    const auto table = planar_value_table(spec, F);
    StructuralConditions out;
    out.vanishes_at_zero = table[0] == 0;

    out.even = true;
    for (std::uint64_t x = 0; x < F.q() && out.even; ++x)
        out.even = table[F.neg_enc(x)] == table[x];

    const std::uint32_t span = F.p() >= 2 ? F.p() - 1 : 1;
    for (std::uint32_t h = 0; h < span; ++h) {
        bool works = true;
        for (std::uint32_t a = 2; a < F.p() && works; ++a) {
            // a^h within GF(p)
            const std::uint32_t ah = pow_mod_u32(a, h, F.p());
            for (std::uint64_t x = 0; x < F.q() && works; ++x)
                works = table[F.scalar_mul_enc(a, x)] == F.scalar_mul_enc(ah, table[x]);
        }
        if (works) {
            out.homogeneity_exponent = h;
            break;
        }
    }
    return out;
}

// D_f = {x in GF(q)* : Tr(f(x)) = 0}.
inline DefiningSet build_planar_set(const PlanarSpec& spec, const FieldCtx& F) {
    DefiningSet d;
    d.kind = SetKind::Planar;
    d.label = family_name(spec.family);
    for (std::uint64_t x = 1; x < F.q(); ++x)
        if (F.trace_enc(eval_planar(spec, F, x)) == 0) d.elements.push_back(x);
    if (d.elements.empty())
        throw empty_defining_set_error("planar defining set is empty");
    return d;
}

}  // namespace tracecodes
