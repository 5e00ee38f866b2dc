#pragma once

// Linear codes over GF(p) obtained from defining sets in GF(p^m).
//
// A defining set D = {d_1 < d_2 < ... < d_n} (ascending encodings, zero
// excluded) induces the code {c_x : x in GF(p^m)} with
// c_x = (Tr(x d_1), ..., Tr(x d_n)).  The standard set is
// D = {x in GF(q)* : Tr(x^2) = 0}; its punctured variant keeps the smallest
// encoding from each GF(p)*-orbit.
//
// Weight distributions come from exhaustive codeword enumeration.  The
// enumerator walks messages in base-p odometer order and updates the current
// codeword incrementally: stepping the message by one adds a single basis
// row to the codeword for each wrapped digit plus one more (because
// -(p-1) = 1 mod p), so the amortized cost is about p/(p-1) row additions
// per codeword and the hot loop does no field multiplications at all.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "tracecodes/errors.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/linalg.hpp"

namespace tracecodes {

enum class SetKind { Full, Punctured, Planar };

struct DefiningSet {
    SetKind kind = SetKind::Full;
    std::string label;  // planar family tag; empty for the standard sets
    std::vector<std::uint64_t> elements;

    std::uint64_t size() const { return elements.size(); }
};

inline std::string kind_string(const DefiningSet& d) {
    switch (d.kind) {
        case SetKind::Full: return "full";
        case SetKind::Punctured: return "punctured";
        case SetKind::Planar: return "planar:" + d.label;
    }
    throw std::logic_error("unknown set kind");
}

// D = {x in GF(q)* : Tr(x^2) = 0}, ascending encodings.
inline DefiningSet build_defining_set(const FieldCtx& F) {
    DefiningSet d;
    d.kind = SetKind::Full;
    for (std::uint64_t x = 1; x < F.q(); ++x)
        if (F.trace_enc(F.square_enc(x)) == 0) d.elements.push_back(x);
    if (d.elements.empty())
        throw empty_defining_set_error("defining set is empty at p=" + std::to_string(F.p()) +
                                       ", m=" + std::to_string(F.m()));
    return d;
}

// One representative per GF(p)*-orbit: the member with the smallest
// encoding.  The input must be closed under GF(p)* scaling (true for the
// standard set and for homogeneous planar sets); violations raise an
// integrity error.
inline DefiningSet puncture_representatives(const FieldCtx& F, const DefiningSet& full) {
    std::vector<bool> seen(F.q(), false);
    DefiningSet out;
    out.kind = SetKind::Punctured;
    out.label = full.label;

    std::vector<bool> member(F.q(), false);
    for (auto x : full.elements) {
        if (x == 0 || x >= F.q() || member[x])
            throw std::invalid_argument("defining set elements must be distinct nonzero encodings");
        member[x] = true;
    }

    for (auto x : full.elements) {
        if (seen[x]) continue;
        out.elements.push_back(x);  // ascending input => first hit is orbit minimum
        for (std::uint32_t s = 1; s < F.p(); ++s) {
            const std::uint64_t y = F.scalar_mul_enc(s, x);
            if (!member[y])
                throw integrity_error("defining set is not closed under GF(p)* scaling");
            seen[y] = true;
        }
    }
    return out;
}

// A linear code given by an independent generator basis over GF(p).
class LinearCode {
public:
    LinearCode(std::uint32_t p, std::uint64_t n, Mat16 basis_rows)
        : p_(p), n_(n), rows_(std::move(basis_rows)) {
        if (!is_prime_u64(p_) || p_ == 2) throw std::invalid_argument("p must be an odd prime");
        if (p_ >= (1u << 16)) throw std::invalid_argument("p too large for code symbols");
        for (const auto& r : rows_) {
            if (r.size() != n_) throw std::invalid_argument("basis row length differs from n");
            for (auto v : r)
                if (v >= p_) throw std::invalid_argument("basis entry out of range");
        }
        if (rank_of(rows_, p_) != rows_.size())
            throw std::invalid_argument("basis rows are not linearly independent");
    }

    std::uint32_t p() const { return p_; }
    std::uint64_t n() const { return n_; }
    std::uint64_t k() const { return rows_.size(); }
    const Mat16& rows() const { return rows_; }

    // Number of codewords p^k, guarded against overflow.
    std::uint64_t codeword_count() const {
        std::uint64_t total = 1;
        for (std::uint64_t i = 0; i < k(); ++i) {
            if (total > (~0ull) / p_) throw resource_limit_error("p^k overflows 64 bits");
            total *= p_;
        }
        return total;
    }

private:
    std::uint32_t p_;
    std::uint64_t n_;
    Mat16 rows_;
};

// Trace code plus its provenance (context, defining set, raw trace rows).
struct TraceCode {
    const FieldCtx* ctx = nullptr;
    DefiningSet defining_set;
    Mat16 trace_rows;  // m rows: images of the basis monomials
    std::optional<LinearCode> code;

    const LinearCode& linear() const {
        if (!code) throw std::logic_error("trace code not built");
        return *code;
    }
};

inline TraceCode build_code(const FieldCtx& F, DefiningSet d) {
    const std::uint64_t n = d.elements.size();
    if (n == 0) throw empty_defining_set_error("cannot build a code on an empty defining set");

    TraceCode tc;
    tc.ctx = &F;

    std::uint64_t beta = 1;  // encoding of x^i
    tc.trace_rows.assign(F.m(), Row16(n, 0));
    for (std::uint32_t i = 0; i < F.m(); ++i) {
        for (std::uint64_t j = 0; j < n; ++j)
            tc.trace_rows[i][j] =
                static_cast<std::uint16_t>(F.trace_enc(F.mul_enc(beta, d.elements[j])));
        beta *= F.p();
    }

    // Dimension is measured, never assumed.  When the trace rows are already
    // independent (the generic case) they are kept verbatim as the basis.
    Mat16 reduced = tc.trace_rows;
    const std::size_t rank = rref_in_place(reduced, F.p());
    tc.code.emplace(F.p(), n, rank == F.m() ? tc.trace_rows : reduced);
    tc.defining_set = std::move(d);
    return tc;
}

inline Row16 codeword_for(const TraceCode& tc, std::uint64_t x_enc) {
    const FieldCtx& F = *tc.ctx;
    Row16 cw(tc.defining_set.elements.size());
    for (std::uint64_t j = 0; j < cw.size(); ++j)
        cw[j] = static_cast<std::uint16_t>(F.trace_enc(F.mul_enc(x_enc, tc.defining_set.elements[j])));
    return cw;
}

inline Row16 codeword_for(const TraceCode& tc, const FieldElement& x) {
    return codeword_for(tc, x.encoding());
}

// --- exhaustive enumeration ------------------------------------------------

// Calls fn(codeword, weight) for every message index in [t_begin, t_end).
// Message t has base-p digits equal to the basis coefficients; messages are
// visited in ascending order starting from the zero word when t_begin = 0.
template <class Fn>
void enumerate_row_space(const LinearCode& C, std::uint64_t t_begin, std::uint64_t t_end, Fn&& fn) {
    const std::uint32_t p = C.p();
    const std::uint64_t n = C.n();
    const std::uint64_t k = C.k();
    if (t_begin >= t_end) return;

    // Flat row storage keeps the hot loop on one cache stream.
    std::vector<std::uint16_t> flat(k * n);
    for (std::uint64_t r = 0; r < k; ++r)
        for (std::uint64_t j = 0; j < n; ++j) flat[r * n + j] = C.rows()[r][j];

    std::vector<std::uint32_t> digits(k, 0);
    {
        std::uint64_t t = t_begin;
        for (std::uint64_t i = 0; i < k; ++i) {
            digits[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
    }

    Row16 cw(n, 0);
    std::uint64_t wt = 0;
    for (std::uint64_t r = 0; r < k; ++r) {
        if (digits[r] == 0) continue;
        const std::uint16_t* row = &flat[r * n];
        for (std::uint64_t j = 0; j < n; ++j)
            cw[j] = static_cast<std::uint16_t>((cw[j] + digits[r] * row[j]) % p);
    }
    for (std::uint64_t j = 0; j < n; ++j) wt += (cw[j] != 0);

    auto add_row = [&](std::uint64_t r) {
        const std::uint16_t* row = &flat[r * n];
        std::uint64_t delta = 0;
        for (std::uint64_t j = 0; j < n; ++j) {
            std::uint16_t v = static_cast<std::uint16_t>(cw[j] + row[j]);
            v = v >= p ? static_cast<std::uint16_t>(v - p) : v;
            delta += static_cast<std::uint64_t>(v != 0) - static_cast<std::uint64_t>(cw[j] != 0);
            cw[j] = v;
        }
        wt += delta;  // delta wraps mod 2^64 exactly right for negative sums
    };

    for (std::uint64_t t = t_begin;; ++t) {
        fn(static_cast<const Row16&>(cw), wt);
        if (t + 1 == t_end) break;
        std::uint64_t r = 0;
        while (digits[r] == p - 1) {
            digits[r] = 0;
            add_row(r);
            ++r;
        }
        ++digits[r];
        add_row(r);
    }
}

struct WeightDistribution {
    std::uint64_t n = 0;
    std::uint64_t k = 0;
    std::map<std::uint64_t, std::uint64_t> counts;  // weight -> multiplicity

    std::uint64_t codeword_total() const {
        std::uint64_t sum = 0;
        for (auto& [w, a] : counts) sum += a;
        return sum;
    }
    std::uint64_t min_nonzero_weight() const {
        for (auto& [w, a] : counts)
            if (w != 0) return w;
        throw std::domain_error("code has no nonzero codeword");
    }
    std::uint64_t max_weight() const {
        if (counts.empty()) throw std::domain_error("empty weight distribution");
        return counts.rbegin()->first;
    }
};

inline WeightDistribution weight_distribution(const LinearCode& C, unsigned threads = 1,
                                              std::uint64_t ceiling = kDefaultEnumerationCeiling) {
    const std::uint64_t total = C.codeword_count();
    if (total > ceiling)
        throw resource_limit_error("p^k = " + std::to_string(total) +
                                   " exceeds the enumeration ceiling");

    const std::uint64_t n = C.n();
    std::vector<std::vector<std::uint64_t>> hists;
    if (threads <= 1 || total < 4096) {
        hists.emplace_back(n + 1, 0);
        auto& h = hists[0];
        enumerate_row_space(C, 0, total, [&](const Row16&, std::uint64_t wt) { ++h[wt]; });
    } else {
        const unsigned nt = threads;
        hists.assign(nt, std::vector<std::uint64_t>(n + 1, 0));
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t) {
            const std::uint64_t lo = total / nt * t + std::min<std::uint64_t>(t, total % nt);
            const std::uint64_t hi =
                total / nt * (t + 1) + std::min<std::uint64_t>(t + 1, total % nt);
            pool.emplace_back([&C, lo, hi, &h = hists[t]] {
                enumerate_row_space(C, lo, hi, [&](const Row16&, std::uint64_t wt) { ++h[wt]; });
            });
        }
        for (auto& th : pool) th.join();
    }

    WeightDistribution wd;
    wd.n = n;
    wd.k = C.k();
    for (const auto& h : hists)
        for (std::uint64_t w = 0; w <= n; ++w)
            if (h[w] != 0) wd.counts[w] += h[w];
    return wd;
}

inline std::uint64_t minimum_distance(const WeightDistribution& wd) {
    return wd.min_nonzero_weight();
}

// Frequency of each GF(p) symbol per codeword, aggregated over the code:
// maps (count of 0s, count of 1s, ..., count of (p-1)s) -> multiplicity.
inline std::map<std::vector<std::uint64_t>, std::uint64_t> complete_weight_table(
    const LinearCode& C, std::uint64_t ceiling = kDefaultEnumerationCeiling) {
    const std::uint64_t total = C.codeword_count();
    if (total > ceiling)
        throw resource_limit_error("p^k = " + std::to_string(total) +
                                   " exceeds the enumeration ceiling");
    std::map<std::vector<std::uint64_t>, std::uint64_t> table;
    std::vector<std::uint64_t> freq(C.p());
    enumerate_row_space(C, 0, total, [&](const Row16& cw, std::uint64_t) {
        std::fill(freq.begin(), freq.end(), 0);
        for (auto v : cw) ++freq[v];
        ++table[freq];
    });
    return table;
}

// --- dual code -------------------------------------------------------------

inline Mat16 dual_basis(const LinearCode& C) {
    if (C.k() == 0) {
        Mat16 id(C.n(), Row16(C.n(), 0));
        for (std::uint64_t i = 0; i < C.n(); ++i) id[i][i] = 1;
        return id;
    }
    return null_space_basis(C.rows(), C.p());
}

inline LinearCode dual_code(const LinearCode& C) { return LinearCode(C.p(), C.n(), dual_basis(C)); }

struct DualDistance {
    std::uint64_t value = 0;
    bool exact = true;  // false => value is only a lower bound
};

// Minimum weight of the dual code.  When the dual is small enough it is
// enumerated exhaustively; otherwise the minimum number of linearly
// dependent generator columns is searched for increasing support size,
// within a fixed work budget (the honest fallback returns a lower bound).
inline DualDistance dual_minimum_distance(const LinearCode& C,
                                          std::uint64_t ceiling = kDefaultEnumerationCeiling) {
    const std::uint32_t p = C.p();
    const std::uint64_t n = C.n();
    const std::uint64_t k = C.k();

    // Route 1: exhaustive enumeration of the dual when p^(n-k) fits.
    {
        std::uint64_t dual_total = 1;
        bool fits = true;
        for (std::uint64_t i = 0; i < n - k; ++i) {
            if (dual_total > ceiling / p) {
                fits = false;
                break;
            }
            dual_total *= p;
        }
        if (fits && dual_total <= ceiling) {
            const LinearCode D = dual_code(C);
            if (D.k() == 0) throw std::domain_error("dual code is trivial");
            return {minimum_distance(weight_distribution(D, 1, ceiling)), true};
        }
    }

    // Route 2: search for the smallest dependent column set of the basis.
    std::vector<Row16> cols(n, Row16(k, 0));
    for (std::uint64_t j = 0; j < n; ++j)
        for (std::uint64_t r = 0; r < k; ++r) cols[j][r] = C.rows()[r][j];

    // s = 1: a zero column.
    for (std::uint64_t j = 0; j < n; ++j) {
        bool zero = true;
        for (auto v : cols[j]) zero = zero && v == 0;
        if (zero) return {1, true};
    }

    // s = 2: proportional columns, via canonical projective representatives.
    auto canonical = [&](Row16 v) {
        for (auto x : v) {
            if (x != 0) {
                const std::uint32_t inv = inverse_mod_prime(x, p);
                for (auto& y : v)
                    y = static_cast<std::uint16_t>(static_cast<std::uint64_t>(y) * inv % p);
                break;
            }
        }
        return v;
    };
    std::map<Row16, std::vector<std::uint64_t>> rep_index;
    for (std::uint64_t j = 0; j < n; ++j) {
        auto key = canonical(cols[j]);
        auto& bucket = rep_index[key];
        if (!bucket.empty()) return {2, true};
        bucket.push_back(j);
    }

    // s = 3: for each pair, each projective combination g_i + t g_j is
    // checked against the representative table.
    const std::uint64_t pair_budget = 50'000'000;
    if (n * (n - 1) / 2 * (p - 1) <= pair_budget) {
        Row16 v(k);
        for (std::uint64_t i = 0; i < n; ++i) {
            for (std::uint64_t j = i + 1; j < n; ++j) {
                for (std::uint32_t t = 1; t < p; ++t) {
                    for (std::uint64_t r = 0; r < k; ++r)
                        v[r] = static_cast<std::uint16_t>(
                            (cols[i][r] + static_cast<std::uint64_t>(t) * cols[j][r]) % p);
                    auto it = rep_index.find(canonical(v));
                    if (it == rep_index.end()) continue;
                    const std::uint64_t l = it->second.front();
                    if (l != i && l != j) return {3, true};
                }
            }
        }
    } else {
        return {3, false};
    }

    // s >= 4: subset search with a combinatorial budget; any k+1 columns of a
    // rank-k matrix are dependent, so the loop terminates at s = k+1.
    const std::uint64_t subset_budget = 5'000'000;
    for (std::uint64_t s = 4; s <= std::min<std::uint64_t>(n, k + 1); ++s) {
        // C(n, s) with early saturation.
        long double subsets = 1.0L;
        for (std::uint64_t i = 0; i < s; ++i) subsets = subsets * (n - i) / (i + 1);
        if (subsets > static_cast<long double>(subset_budget)) return {s, false};

        std::vector<std::uint64_t> idx(s);
        for (std::uint64_t i = 0; i < s; ++i) idx[i] = i;
        Mat16 sub(s, Row16(k, 0));
        for (;;) {
            for (std::uint64_t i = 0; i < s; ++i) sub[i] = cols[idx[i]];
            if (rank_of(sub, p) < s) return {s, true};
            // next combination
            std::uint64_t i = s;
            while (i > 0 && idx[i - 1] == n - s + (i - 1)) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::uint64_t j2 = i; j2 < s; ++j2) idx[j2] = idx[j2 - 1] + 1;
        }
    }
    throw std::logic_error("dependent column search failed to terminate");
}

}  // namespace tracecodes
