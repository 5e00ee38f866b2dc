#pragma once

// Exact arithmetic in GF(p^m) for odd primes p.
//
// Elements are kept in the polynomial basis 1, a, a^2, ..., a^(m-1) where a
// is the class of x modulo a monic irreducible modulus f of degree m.  An
// element with coefficients c_0..c_(m-1) (each a residue mod p) has the
// integer encoding sum_i c_i * p^i; this bijection onto [0, q) is the
// canonical ordering used everywhere (enumeration, defining sets, JSON
// export, orbit representatives).
//
// Construction is fully deterministic: for a given (p, m) the canonical
// modulus is the irreducible monic polynomial whose non-leading coefficient
// vector has the smallest encoding.  No discrete-log or Zech tables are
// built; multiplication reduces by precomputed rows for x^m..x^(2m-2), which
// keeps construction O(m^2) and avoids generator searches.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tracecodes/errors.hpp"

namespace tracecodes {

// Residue mod p.  GF(p) values travel as plain integers of this type.
using PrimeElement = std::uint32_t;

inline constexpr std::uint64_t kDefaultEnumerationCeiling = 1ull << 20;

// Hard cap on the extension degree; far above anything enumerable.
inline constexpr std::uint32_t kMaxExtensionDegree = 64;

struct FieldConfig {
    std::uint64_t enumeration_ceiling = kDefaultEnumerationCeiling;
};

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint32_t pow_mod_u32(std::uint64_t base, std::uint64_t exp, std::uint32_t mod) {
    std::uint64_t acc = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

// Multiplicative inverse mod a prime p.
inline std::uint32_t inverse_mod_prime(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) throw std::domain_error("inverse of zero mod " + std::to_string(p));
    return pow_mod_u32(a, p - 2, p);
}

// Quadratic character of GF(p) itself: 0 at 0, +1 on squares, -1 otherwise.
inline int prime_quadratic_character(std::uint32_t a, std::uint32_t p) {
    a %= p;
    if (a == 0) return 0;
    return pow_mod_u32(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Dense polynomials over GF(p), used only for modulus search and validation.
// Coefficient vectors are low-degree-first and kept trimmed (no trailing
// zeros); the empty vector is the zero polynomial.
// ---------------------------------------------------------------------------
namespace polydetail {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>(
                (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
    trim(out);
    return out;
}

// Remainder of a by b; b need not be monic (its leading coefficient is
// inverted).  b must be nonzero.
inline Poly mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    const std::uint32_t lead_inv = inverse_mod_prime(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        if (factor != 0) {
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                const std::uint64_t sub = factor * b[i] % p;
                std::uint64_t v = a[shift + i] + p - sub;
                a[shift + i] = static_cast<std::uint32_t>(v % p);
            }
        }
        a.pop_back();
        trim(a);
    }
    return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
    return mod(mul(a, b, p), f, p);
}

inline Poly powmod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
    Poly acc{1};
    base = mod(std::move(base), f, p);
    while (e > 0) {
        if (e & 1) acc = mulmod(acc, base, f, p);
        base = mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        const std::uint32_t inv = inverse_mod_prime(a.back(), p);
        for (auto& c : a) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * inv % p);
    }
    return a;
}

inline std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin's test: monic f of degree m is irreducible over GF(p) iff
// x^(p^m) == x (mod f) and gcd(x^(p^(m/r)) - x, f) = 1 for every prime r | m.
inline bool is_irreducible_monic(const Poly& f, std::uint32_t p) {
    const int m = degree(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    const Poly x{0, 1};
    const auto factors = prime_factors(static_cast<std::uint32_t>(m));

    // frob[j] = x^(p^j) mod f, computed by iterated p-th powers.
    std::vector<Poly> frob(static_cast<std::size_t>(m) + 1);
    frob[0] = x;
    for (int j = 1; j <= m; ++j) frob[j] = powmod(frob[j - 1], p, f, p);

    auto minus_x = [&](Poly g) {
        if (g.size() < 2) g.resize(2, 0);
        g[1] = static_cast<std::uint32_t>((g[1] + p - 1) % p);
        trim(g);
        return g;
    };

    if (!minus_x(frob[static_cast<std::size_t>(m)]).empty()) return false;
    for (std::uint32_t r : factors) {
        Poly g = gcd(f, minus_x(frob[m / r]), p);
        if (degree(g) != 0) return false;
    }
    return true;
}

}  // namespace polydetail

// Returns the non-leading coefficients c_0..c_(m-1) of the `index`-th (by
// encoding order) monic irreducible polynomial of degree m over GF(p).
// index 0 is the canonical modulus.
inline std::vector<std::uint32_t> find_irreducible(std::uint32_t p, std::uint32_t m,
                                                   std::uint32_t index = 0) {
    if (!is_prime_u64(p) || p == 2) throw std::invalid_argument("p must be an odd prime");
    if (m == 0 || m > kMaxExtensionDegree) throw std::invalid_argument("m out of range");

    // Iterate candidate encodings of the non-leading coefficient vector.
    std::vector<std::uint32_t> digits(m, 0);
    std::uint32_t remaining = index;
    for (;;) {
        polydetail::Poly f(digits.begin(), digits.end());
        f.push_back(1);  // monic leading coefficient
        if (polydetail::is_irreducible_monic(f, p)) {
            if (remaining == 0) return digits;
            --remaining;
        }
        // Increment the base-p odometer; wrapping past the last vector means
        // the requested index exceeds the number of irreducibles.
        std::uint32_t i = 0;
        while (i < m && digits[i] == p - 1) digits[i++] = 0;
        if (i == m) throw std::invalid_argument("irreducible index out of range");
        ++digits[i];
    }
}

class FieldElement;

// Immutable context for one concrete field GF(p^m).  All arithmetic entry
// points are const and touch no global state, so a context can be shared
// freely across threads.
class FieldCtx {
public:
    FieldCtx(std::uint32_t p, std::uint32_t m, FieldConfig cfg = {})
        : FieldCtx(p, m, find_irreducible(p, m, 0), cfg) {}

    FieldCtx(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus,
             FieldConfig cfg = {})
        : p_(p), m_(m), modulus_(std::move(modulus)), cfg_(cfg) {
        if (!is_prime_u64(p_) || p_ == 2) throw std::invalid_argument("p must be an odd prime");
        if (m_ == 0 || m_ > kMaxExtensionDegree) throw std::invalid_argument("m out of range");

        // q = p^m, guarded against both uint64 overflow and the ceiling.
        q_ = 1;
        pow_p_.assign(m_ + 1, 0);
        pow_p_[0] = 1;
        for (std::uint32_t i = 1; i <= m_; ++i) {
            if (pow_p_[i - 1] > cfg_.enumeration_ceiling / p_)
                throw resource_limit_error("p^m exceeds the enumeration ceiling (" +
                                           std::to_string(cfg_.enumeration_ceiling) + ")");
            pow_p_[i] = pow_p_[i - 1] * p_;
        }
        q_ = pow_p_[m_];
        if (q_ > cfg_.enumeration_ceiling)
            throw resource_limit_error("p^m exceeds the enumeration ceiling (" +
                                       std::to_string(cfg_.enumeration_ceiling) + ")");

        if (modulus_.size() != m_) throw std::invalid_argument("modulus must list m coefficients");
        for (auto c : modulus_)
            if (c >= p_) throw std::invalid_argument("modulus coefficient out of range");
        {
            polydetail::Poly f(modulus_.begin(), modulus_.end());
            f.push_back(1);
            if (!polydetail::is_irreducible_monic(f, p_))
                throw std::invalid_argument("modulus is not irreducible over GF(p)");
        }

        build_reduction_rows();
        build_trace_table();
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint64_t q() const { return q_; }
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    const FieldConfig& config() const { return cfg_; }

    // --- encoding-level arithmetic (the hot path) --------------------------

    void decode(std::uint64_t enc, std::uint32_t* out) const {
        for (std::uint32_t i = 0; i < m_; ++i) {
            out[i] = static_cast<std::uint32_t>(enc % p_);
            enc /= p_;
        }
    }

    std::uint64_t encode(const std::uint32_t* digits) const {
        std::uint64_t enc = 0;
        for (std::uint32_t i = m_; i-- > 0;) enc = enc * p_ + digits[i];
        return enc;
    }

    std::uint64_t add_enc(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint64_t s = a % p_ + b % p_;
            if (s >= p_) s -= p_;
            out += s * scale;
            scale *= p_;
            a /= p_;
            b /= p_;
        }
        return out;
    }

    std::uint64_t neg_enc(std::uint64_t a) const {
        std::uint64_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint64_t d = a % p_;
            out += (d == 0 ? 0 : p_ - d) * scale;
            scale *= p_;
            a /= p_;
        }
        return out;
    }

    std::uint64_t sub_enc(std::uint64_t a, std::uint64_t b) const { return add_enc(a, neg_enc(b)); }

    std::uint64_t mul_enc(std::uint64_t a, std::uint64_t b) const {
        std::array<std::uint32_t, kMaxExtensionDegree> da{}, db{}, dout{};
        decode(a, da.data());
        decode(b, db.data());
        mul_digits(da.data(), db.data(), dout.data());
        return encode(dout.data());
    }

    std::uint64_t square_enc(std::uint64_t a) const { return mul_enc(a, a); }

    std::uint64_t pow_enc(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t acc = 1, base = a;
        while (e > 0) {
            if (e & 1) acc = mul_enc(acc, base);
            base = mul_enc(base, base);
            e >>= 1;
        }
        return acc;
    }

    std::uint64_t inv_enc(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero field element");
        return pow_enc(a, q_ - 2);
    }

    // Multiplication by a scalar from the prime subfield.
    std::uint64_t scalar_mul_enc(std::uint32_t s, std::uint64_t a) const {
        s %= p_;
        std::uint64_t out = 0, scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            out += (a % p_) * s % p_ * scale;
            scale *= p_;
            a /= p_;
        }
        return out;
    }

    // Absolute trace down to GF(p), via the precomputed table.
    PrimeElement trace_enc(std::uint64_t a) const { return trace_table_[a]; }

    // Quadratic character: 0 at zero, else a^((q-1)/2) giving +1 or -1.
    int quadratic_character_enc(std::uint64_t a) const {
        if (a == 0) return 0;
        const std::uint64_t v = pow_enc(a, (q_ - 1) / 2);
        if (v == 1) return 1;
        if (v == neg_one_enc()) return -1;
        throw std::logic_error("quadratic character power escaped {1,-1}");
    }

    std::uint64_t neg_one_enc() const { return p_ - 1; }

    // Encoding of the subfield element s (constant polynomial).
    std::uint64_t subfield_enc(std::uint32_t s) const { return s % p_; }

    // --- element factory ---------------------------------------------------

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(std::uint64_t encoding) const;
    FieldElement from_coeffs(std::vector<std::uint32_t> coeffs) const;

    bool same_context(const FieldCtx& other) const { return this == &other; }

private:
    // out = a * b reduced mod f; digit spans of length m.  Accumulates the
    // full convolution in 64-bit lanes, then folds degrees 2m-2..m down with
    // the precomputed reduction rows.  No intermediate overflows: products
    // are < 2^40 and at most 2m+1 of them are summed per lane.
    void mul_digits(const std::uint32_t* a, const std::uint32_t* b, std::uint32_t* out) const {
        std::array<std::uint64_t, 2 * kMaxExtensionDegree> acc{};
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (a[i] == 0) continue;
            const std::uint64_t ai = a[i];
            for (std::uint32_t j = 0; j < m_; ++j) acc[i + j] += ai * b[j];
        }
        for (std::uint32_t d = 2 * m_ - 2 + 1; d-- > m_;) {
            const std::uint64_t r = acc[d] % p_;
            if (r == 0) continue;
            const auto& row = reduction_rows_[d - m_];
            for (std::uint32_t i = 0; i < m_; ++i) acc[i] += r * row[i];
        }
        for (std::uint32_t i = 0; i < m_; ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p_);
    }

    void build_reduction_rows() {
        if (m_ == 1) return;  // products of constants never need reduction
        reduction_rows_.assign(m_ - 1, std::vector<std::uint32_t>(m_, 0));
        // x^m = -(c_0 + c_1 x + ... + c_(m-1) x^(m-1))
        for (std::uint32_t i = 0; i < m_; ++i)
            reduction_rows_[0][i] = (p_ - modulus_[i]) % p_;
        for (std::uint32_t j = 1; j + 1 < m_; ++j) {
            const auto& prev = reduction_rows_[j - 1];
            auto& row = reduction_rows_[j];
            const std::uint64_t wrap = prev[m_ - 1];  // coefficient that spills to x^m
            row[0] = static_cast<std::uint32_t>(wrap * reduction_rows_[0][0] % p_);
            for (std::uint32_t i = 1; i < m_; ++i)
                row[i] = static_cast<std::uint32_t>(
                    (prev[i - 1] + wrap * reduction_rows_[0][i]) % p_);
        }
    }

    void build_trace_table() {
        // Trace of each basis monomial, as the sum of its m Frobenius
        // conjugates; the result must be a constant polynomial.
        std::vector<std::uint32_t> basis_trace(m_, 0);
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint64_t conj = pow_p_[i];  // encoding of x^i
            std::uint64_t sum = 0;
            for (std::uint32_t j = 0; j < m_; ++j) {
                sum = add_enc(sum, conj);
                conj = pow_enc(conj, p_);
            }
            if (sum >= p_) throw std::logic_error("trace of basis element escaped GF(p)");
            basis_trace[i] = static_cast<std::uint32_t>(sum);
        }

        // Fill by linearity, walking encodings with a base-p odometer so the
        // running dot product is updated in O(1) amortized per element.
        trace_table_.assign(q_, 0);
        std::vector<std::uint32_t> digits(m_, 0);
        std::uint64_t dot = 0;
        for (std::uint64_t enc = 0;; ++enc) {
            trace_table_[enc] = static_cast<PrimeElement>(dot % p_);
            if (enc + 1 == q_) break;
            std::uint32_t i = 0;
            while (digits[i] == p_ - 1) {
                dot -= static_cast<std::uint64_t>(p_ - 1) * basis_trace[i];
                digits[i++] = 0;
            }
            ++digits[i];
            dot += basis_trace[i];
        }
    }

    std::uint32_t p_, m_;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    FieldConfig cfg_;
    std::vector<std::uint64_t> pow_p_;
    std::vector<std::vector<std::uint32_t>> reduction_rows_;
    std::vector<PrimeElement> trace_table_;
};

// Value-semantic field element: a coefficient vector plus a pointer to its
// context.  Operators verify that both operands came from the same context.
class FieldElement {
public:
    FieldElement() = default;

    const std::vector<std::uint32_t>& coeffs() const { return c_; }
    const FieldCtx& context() const {
        require_ctx();
        return *ctx_;
    }

    std::uint64_t encoding() const {
        require_ctx();
        return ctx_->encode(c_.data());
    }

    bool is_zero() const {
        for (auto d : c_)
            if (d != 0) return false;
        return true;
    }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return a.ctx_->element(a.ctx_->add_enc(a.encoding(), b.encoding()));
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return a.ctx_->element(a.ctx_->sub_enc(a.encoding(), b.encoding()));
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return a.ctx_->element(a.ctx_->mul_enc(a.encoding(), b.encoding()));
    }
    FieldElement operator-() const {
        require_ctx();
        return ctx_->element(ctx_->neg_enc(encoding()));
    }
    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        a.require_same(b);
        return a.c_ == b.c_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    friend FieldElement inv(const FieldElement& a) {
        a.require_ctx();
        return a.ctx_->element(a.ctx_->inv_enc(a.encoding()));
    }
    friend FieldElement pow(const FieldElement& a, std::uint64_t e) {
        a.require_ctx();
        return a.ctx_->element(a.ctx_->pow_enc(a.encoding(), e));
    }
    friend PrimeElement trace(const FieldElement& a) {
        a.require_ctx();
        return a.ctx_->trace_enc(a.encoding());
    }
    friend int quadratic_character(const FieldElement& a) {
        a.require_ctx();
        return a.ctx_->quadratic_character_enc(a.encoding());
    }

private:
    friend class FieldCtx;
    FieldElement(const FieldCtx* ctx, std::vector<std::uint32_t> c) : ctx_(ctx), c_(std::move(c)) {}

    void require_ctx() const {
        if (ctx_ == nullptr) throw std::invalid_argument("uninitialized field element");
    }
    void require_same(const FieldElement& other) const {
        require_ctx();
        other.require_ctx();
        if (ctx_ != other.ctx_)
            throw std::invalid_argument("field elements belong to different contexts");
    }

    const FieldCtx* ctx_ = nullptr;
    std::vector<std::uint32_t> c_;
};

inline FieldElement FieldCtx::zero() const { return element(0); }
inline FieldElement FieldCtx::one() const { return element(1); }

inline FieldElement FieldCtx::element(std::uint64_t encoding) const {
    if (encoding >= q_) throw std::invalid_argument("encoding out of range");
    std::vector<std::uint32_t> c(m_);
    decode(encoding, c.data());
    return FieldElement(this, std::move(c));
}

inline FieldElement FieldCtx::from_coeffs(std::vector<std::uint32_t> coeffs) const {
    if (coeffs.size() != m_) throw std::invalid_argument("coefficient vector must have length m");
    for (auto& d : coeffs)
        if (d >= p_) throw std::invalid_argument("coefficient out of range");
    return FieldElement(this, std::move(coeffs));
}

// Ascending-encoding iteration over the whole field (0 first, then 1, ...).
class ElementRange {
public:
    explicit ElementRange(const FieldCtx& ctx) : ctx_(&ctx) {}

    class iterator {
    public:
        iterator(const FieldCtx* ctx, std::uint64_t enc) : ctx_(ctx), enc_(enc) {}
        FieldElement operator*() const { return ctx_->element(enc_); }
        iterator& operator++() {
            ++enc_;
            return *this;
        }
        bool operator!=(const iterator& other) const { return enc_ != other.enc_; }

    private:
        const FieldCtx* ctx_;
        std::uint64_t enc_;
    };

    iterator begin() const { return iterator(ctx_, 0); }
    iterator end() const { return iterator(ctx_, ctx_->q()); }

private:
    const FieldCtx* ctx_;
};

inline ElementRange enumerate_field(const FieldCtx& ctx) { return ElementRange(ctx); }

}  // namespace tracecodes
