#pragma once

// Dense linear algebra over the prime field GF(p).  Matrices are vectors of
// rows; entries are residues mod p stored in 16 bits (codes with p >= 2^16
// are far beyond any enumerable size).  Everything is plain Gaussian
// elimination — at the scales this library enumerates, matrix work is never
// the bottleneck.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tracecodes/field.hpp"

namespace tracecodes {

using Row16 = std::vector<std::uint16_t>;
using Mat16 = std::vector<Row16>;

// Reduces `mat` in place to reduced row echelon form; returns the rank and,
// if requested, the pivot column of each nonzero row.
inline std::size_t rref_in_place(Mat16& mat, std::uint32_t p,
                                 std::vector<std::size_t>* pivot_cols = nullptr) {
    if (pivot_cols) pivot_cols->clear();
    if (mat.empty()) return 0;
    const std::size_t rows = mat.size();
    const std::size_t cols = mat[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && mat[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(mat[rank], mat[pivot]);

        const std::uint32_t inv = inverse_mod_prime(mat[rank][col], p);
        for (std::size_t j = col; j < cols; ++j)
            mat[rank][j] = static_cast<std::uint16_t>(
                static_cast<std::uint64_t>(mat[rank][j]) * inv % p);

        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || mat[r][col] == 0) continue;
            const std::uint64_t factor = mat[r][col];
            for (std::size_t j = col; j < cols; ++j) {
                const std::uint64_t sub = factor * mat[rank][j] % p;
                mat[r][j] = static_cast<std::uint16_t>((mat[r][j] + p - sub) % p);
            }
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    mat.resize(rank, Row16(cols, 0));
    return rank;
}

inline std::size_t rank_of(Mat16 mat, std::uint32_t p) { return rref_in_place(mat, p); }

// Basis of the right null space {x : M x = 0}, returned as rows in canonical
// reduced echelon form (unique for the space, so independent of the input
// basis of the row space).
inline Mat16 null_space_basis(const Mat16& mat, std::uint32_t p) {
    if (mat.empty()) return {};
    const std::size_t cols = mat[0].size();
    Mat16 work = mat;
    std::vector<std::size_t> pivots;
    const std::size_t rank = rref_in_place(work, p, &pivots);

    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    Mat16 basis;
    basis.reserve(cols - rank);
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Row16 v(cols, 0);
        v[free_col] = 1;
        for (std::size_t r = 0; r < rank; ++r) {
            const std::uint32_t coeff = work[r][free_col];
            if (coeff != 0) v[pivots[r]] = static_cast<std::uint16_t>(p - coeff);
        }
        basis.push_back(std::move(v));
    }
    rref_in_place(basis, p);
    return basis;
}

// Solves A x = t for any x, where A is given by rows (size r x c) and t has
// length r.  Returns std::nullopt when the system is inconsistent.
inline std::optional<Row16> solve_linear_system(const Mat16& a, const Row16& t, std::uint32_t p) {
    const std::size_t rows = a.size();
    if (t.size() != rows) throw std::invalid_argument("right-hand side has wrong length");
    const std::size_t cols = rows == 0 ? 0 : a[0].size();

    Mat16 aug(rows, Row16(cols + 1, 0));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) aug[r][c] = a[r][c];
        aug[r][cols] = t[r];
    }
    std::vector<std::size_t> pivots;
    const std::size_t rank = rref_in_place(aug, p, &pivots);

    Row16 x(cols, 0);
    for (std::size_t r = 0; r < rank; ++r) {
        if (pivots[r] == cols) return std::nullopt;  // row 0 ... 0 | nonzero
        x[pivots[r]] = aug[r][cols];
    }
    return x;
}

}  // namespace tracecodes
