#pragma once

// Massey-style secret sharing on the dual of a linear code.
//
// Given a base code C of length n over GF(p) with generator basis G, the
// dealer works in the dual code: a dual codeword t = u H (H a basis of the
// null space of G) carries the secret in coordinate 0 and hands t_1..t_(n-1)
// to the n-1 participants.  A coalition {i_1..i_l} can recover the secret
// exactly when the column h_0 of H lies in the span of the columns h_(i_j);
// the recovery coefficients come from one Gaussian elimination and are
// combined with the submitted shares.
//
// The access structure is governed by the minimal codewords of C itself: a
// minimal codeword with c_0 != 0, scaled so c_0 = 1, contributes its support
// minus {0} as a minimal access set.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tracecodes/code.hpp"
#include "tracecodes/errors.hpp"
#include "tracecodes/field.hpp"
#include "tracecodes/linalg.hpp"
#include "tracecodes/rng.hpp"

namespace tracecodes {

class MasseyScheme {
public:
    explicit MasseyScheme(LinearCode base) : base_(std::move(base)), dual_(dual_basis(base_)) {
        const std::uint64_t n = base_.n();
        if (n < 2) throw degenerate_scheme_error("need at least one participant (n >= 2)");
        if (dual_.empty())
            throw degenerate_scheme_error("dual code is trivial; nothing can carry a secret");
        bool h0_nonzero = false;
        for (const auto& row : dual_) h0_nonzero = h0_nonzero || row[0] != 0;
        if (!h0_nonzero)
            throw degenerate_scheme_error("secret coordinate is identically zero on the dual");
    }

    const LinearCode& base() const { return base_; }
    const Mat16& dual() const { return dual_; }
    std::uint32_t p() const { return base_.p(); }
    std::uint64_t participants() const { return base_.n() - 1; }
    std::uint64_t dual_dimension() const { return dual_.size(); }

    // Column i of H (the dual basis), as a length-(n-k) vector.
    Row16 dual_column(std::uint64_t i) const {
        Row16 col(dual_.size());
        for (std::size_t r = 0; r < dual_.size(); ++r) col[r] = dual_[r][i];
        return col;
    }

private:
    LinearCode base_;
    Mat16 dual_;
};

struct ShareDeal {
    PrimeElement secret = 0;       // kept in memory only; never serialized
    std::uint64_t seed = 0;
    std::vector<std::uint16_t> shares;  // shares[i] belongs to participant i+1
};

// Draws a dual codeword t with t_0 = secret, uniformly over all candidates:
// the coefficient vector u must satisfy u . h_0 = secret, so every
// coordinate of u except the first one meeting a nonzero entry of h_0 is
// drawn uniformly and the remaining one is solved for.
inline ShareDeal deal(const MasseyScheme& scheme, PrimeElement secret, std::uint64_t seed) {
    const std::uint32_t p = scheme.p();
    secret %= p;

    const Row16 h0 = scheme.dual_column(0);
    std::size_t pivot = h0.size();
    for (std::size_t r = 0; r < h0.size(); ++r)
        if (h0[r] != 0) {
            pivot = r;
            break;
        }
    if (pivot == h0.size()) throw std::logic_error("scheme invariant violated: h_0 = 0");

    SplitMix64 rng(seed);
    std::vector<std::uint32_t> u(h0.size(), 0);
    std::uint64_t partial = 0;
    for (std::size_t r = 0; r < u.size(); ++r) {
        if (r == pivot) continue;
        u[r] = static_cast<std::uint32_t>(rng.below(p));
        partial = (partial + static_cast<std::uint64_t>(u[r]) * h0[r]) % p;
    }
    const std::uint64_t need = (secret + p - static_cast<std::uint32_t>(partial)) % p;
    u[pivot] = static_cast<std::uint32_t>(need * inverse_mod_prime(h0[pivot], p) % p);

    const Mat16& H = scheme.dual();
    const std::uint64_t n = scheme.base().n();
    std::vector<std::uint16_t> t(n, 0);
    for (std::size_t r = 0; r < H.size(); ++r) {
        if (u[r] == 0) continue;
        for (std::uint64_t j = 0; j < n; ++j)
            t[j] = static_cast<std::uint16_t>((t[j] + static_cast<std::uint64_t>(u[r]) * H[r][j]) % p);
    }
    if (t[0] != secret) throw std::logic_error("deal failed to place the secret");

    ShareDeal out;
    out.secret = secret;
    out.seed = seed;
    out.shares.assign(t.begin() + 1, t.end());
    return out;
}

struct RecoveryResult {
    bool is_access_set = false;
    PrimeElement secret = 0;  // valid only when is_access_set
};

// Attempts recovery from the coalition given by 1-based participant
// coordinates and their shares.  When every participant is present the
// shares are additionally checked for consistency with the dual code and an
// integrity error is raised on mismatch.
inline RecoveryResult recover(const MasseyScheme& scheme,
                              const std::vector<std::uint64_t>& coalition,
                              const std::vector<std::uint16_t>& shares) {
    const std::uint32_t p = scheme.p();
    const std::uint64_t n = scheme.base().n();
    if (coalition.size() != shares.size())
        throw std::invalid_argument("coalition and share list differ in length");
    std::vector<bool> used(n, false);
    for (auto i : coalition) {
        if (i == 0 || i >= n) throw std::invalid_argument("participant index out of range");
        if (used[i]) throw std::invalid_argument("duplicate participant index");
        used[i] = true;
    }
    for (auto s : shares)
        if (s >= p) throw std::invalid_argument("share value out of range");

    // Full-coalition integrity check: the share vector (with the secret
    // coordinate eliminated) must be consistent with every generator row.
    if (coalition.size() == n - 1) {
        std::vector<std::uint16_t> t(n, 0);
        for (std::size_t c = 0; c < coalition.size(); ++c) t[coalition[c]] = shares[c];
        const Mat16& G = scheme.base().rows();
        bool t0_known = false;
        std::uint32_t t0 = 0;
        for (const auto& g : G) {
            std::uint64_t rest = 0;
            for (std::uint64_t j = 1; j < n; ++j)
                rest = (rest + static_cast<std::uint64_t>(g[j]) * t[j]) % p;
            if (g[0] == 0) {
                if (rest != 0)
                    throw integrity_error("shares are inconsistent with the dual code");
            } else {
                const std::uint32_t cand = static_cast<std::uint32_t>(
                    (p - rest) % p * inverse_mod_prime(g[0], p) % p);
                if (t0_known && cand != t0)
                    throw integrity_error("shares are inconsistent with the dual code");
                t0_known = true;
                t0 = cand;
            }
        }
    }

    Mat16 a(scheme.dual_dimension(), Row16(coalition.size(), 0));
    for (std::size_t c = 0; c < coalition.size(); ++c) {
        const Row16 col = scheme.dual_column(coalition[c]);
        for (std::size_t r = 0; r < col.size(); ++r) a[r][c] = col[r];
    }
    const auto x = solve_linear_system(a, scheme.dual_column(0), p);
    if (!x) return {false, 0};

    std::uint64_t secret = 0;
    for (std::size_t c = 0; c < coalition.size(); ++c)
        secret = (secret + static_cast<std::uint64_t>((*x)[c]) * shares[c]) % p;
    return {true, static_cast<PrimeElement>(secret)};
}

// --- minimal codewords and the access structure ----------------------------

namespace ssdetail {

using SupportMask = std::vector<std::uint64_t>;

inline SupportMask support_of(const Row16& cw) {
    SupportMask mask((cw.size() + 63) / 64, 0);
    for (std::size_t j = 0; j < cw.size(); ++j)
        if (cw[j] != 0) mask[j / 64] |= 1ull << (j % 64);
    return mask;
}

inline bool proper_subset(const SupportMask& a, const SupportMask& b) {
    bool equal = true;
    for (std::size_t w = 0; w < a.size(); ++w) {
        if ((a[w] & ~b[w]) != 0) return false;
        equal = equal && a[w] == b[w];
    }
    return !equal;
}

}  // namespace ssdetail

// All minimal nonzero codewords of C (codewords whose support properly
// contains no other nonzero codeword's support), sorted by weight then
// lexicographically.
inline Mat16 minimal_codewords(const LinearCode& C,
                               std::uint64_t ceiling = kDefaultEnumerationCeiling) {
    const std::uint64_t total = C.codeword_count();
    if (total > ceiling)
        throw resource_limit_error("p^k exceeds the enumeration ceiling");

    struct Entry {
        ssdetail::SupportMask mask;
        std::uint64_t weight;
    };
    std::vector<Entry> supports;  // distinct supports
    std::map<ssdetail::SupportMask, std::size_t> index_of;
    std::vector<std::pair<Row16, std::size_t>> words;  // codeword -> support index
    words.reserve(total > 0 ? total - 1 : 0);

    enumerate_row_space(C, 0, total, [&](const Row16& cw, std::uint64_t wt) {
        if (wt == 0) return;
        auto mask = ssdetail::support_of(cw);
        auto [it, inserted] = index_of.try_emplace(std::move(mask), supports.size());
        if (inserted) supports.push_back({it->first, wt});
        words.emplace_back(cw, it->second);
    });

    // A support is minimal iff no lighter support is properly contained in it.
    std::vector<std::size_t> order(supports.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return supports[a].weight < supports[b].weight; });
    std::vector<bool> minimal(supports.size(), true);
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const auto& outer = supports[order[oi]];
        for (std::size_t oj = 0; oj < oi; ++oj) {
            if (supports[order[oj]].weight >= outer.weight) continue;
            if (ssdetail::proper_subset(supports[order[oj]].mask, outer.mask)) {
                minimal[order[oi]] = false;
                break;
            }
        }
    }

    Mat16 out;
    for (auto& [cw, si] : words)
        if (minimal[si]) out.push_back(std::move(cw));
    std::sort(out.begin(), out.end(), [](const Row16& a, const Row16& b) {
        std::uint64_t wa = 0, wb = 0;
        for (auto v : a) wa += v != 0;
        for (auto v : b) wb += v != 0;
        if (wa != wb) return wa < wb;
        return a < b;
    });
    return out;
}

struct AccessStructure {
    std::vector<std::vector<std::uint64_t>> minimal_sets;  // sorted participant indices
    std::map<std::uint64_t, std::uint64_t> per_participant;
    std::vector<std::uint64_t> dictators;  // participants present in every set
};

// Minimal access sets of the scheme on C's dual: one per minimal codeword of
// C with c_0 != 0, scaled to c_0 = 1 (distinct scaled words give distinct
// sets), contributing its support minus coordinate 0.
inline AccessStructure access_structure(const LinearCode& C,
                                        std::uint64_t ceiling = kDefaultEnumerationCeiling) {
    const Mat16 minimal = minimal_codewords(C, ceiling);
    const std::uint32_t p = C.p();

    std::vector<Row16> normalized;
    for (const auto& cw : minimal) {
        if (cw[0] == 0) continue;
        const std::uint32_t inv = inverse_mod_prime(cw[0], p);
        Row16 scaled(cw.size());
        for (std::size_t j = 0; j < cw.size(); ++j)
            scaled[j] = static_cast<std::uint16_t>(static_cast<std::uint64_t>(cw[j]) * inv % p);
        normalized.push_back(std::move(scaled));
    }
    std::sort(normalized.begin(), normalized.end());
    normalized.erase(std::unique(normalized.begin(), normalized.end()), normalized.end());

    AccessStructure out;
    for (const auto& cw : normalized) {
        std::vector<std::uint64_t> set;
        for (std::size_t j = 1; j < cw.size(); ++j)
            if (cw[j] != 0) set.push_back(j);
        out.minimal_sets.push_back(std::move(set));
    }
    std::sort(out.minimal_sets.begin(), out.minimal_sets.end(),
              [](const auto& a, const auto& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    for (const auto& set : out.minimal_sets)
        for (auto i : set) ++out.per_participant[i];
    for (std::uint64_t i = 1; i < C.n(); ++i) {
        auto it = out.per_participant.find(i);
        if (it != out.per_participant.end() && it->second == out.minimal_sets.size() &&
            !out.minimal_sets.empty())
            out.dictators.push_back(i);
    }
    return out;
}

// --- closed-form access statistics -----------------------------------------

// Total number of minimal access sets predicted when every nonzero codeword
// of the [n, k] base code is minimal and the secret coordinate is active.
inline std::uint64_t predicted_minimal_access_sets(std::uint32_t p, std::uint64_t k) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i + 1 < k; ++i) v *= p;
    return v;
}

// Number of minimal access sets containing a fixed group of t participants,
// valid for 1 <= t <= min(k-1, d_dual - 2) where d_dual is the minimum
// distance of the base code's dual: (p-1)^t * p^(k-(t+1)).
inline std::uint64_t predicted_sets_containing_group(std::uint32_t p, std::uint64_t k,
                                                     std::uint64_t d_dual, std::uint64_t t) {
    if (k == 0) throw std::invalid_argument("k must be positive");
    if (t < 1) throw std::invalid_argument("group size must be at least 1");
    if (d_dual < 2 || t > std::min<std::uint64_t>(k - 1, d_dual - 2))
        throw std::invalid_argument("group size outside the valid range t <= min(k-1, d_dual-2)");
    std::uint64_t v = 1;
    for (std::uint64_t i = 0; i < t; ++i) v *= p - 1;
    for (std::uint64_t i = 0; i + t + 1 < k; ++i) v *= p;
    return v;
}

}  // namespace tracecodes
