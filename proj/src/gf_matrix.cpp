#include "strat/gf_matrix.hpp"

#include <algorithm>

namespace strat {

GfMatrix::GfMatrix(int modulus, int rows, int cols)
    : p_(modulus), rows_(rows), cols_(cols), words_((cols + 63) / 64) {
    if (modulus != 2 && modulus != 3)
        throw GraphError("GfMatrix: modulus must be 2 or 3");
    if (rows < 0 || cols < 0) throw GraphError("GfMatrix: negative dimension");
    if (p_ == 2)
        bits_.assign(rows_, std::vector<std::uint64_t>(words_, 0));
    else
        vals_.assign(rows_, std::vector<std::uint8_t>(cols_, 0));
}

int GfMatrix::at(int r, int c) const {
    if (p_ == 2) return static_cast<int>((bits_.at(r).at(c / 64) >> (c % 64)) & 1u);
    return vals_.at(r).at(c);
}

void GfMatrix::set(int r, int c, int value) {
    int v = ((value % p_) + p_) % p_;
    if (p_ == 2) {
        std::uint64_t mask = std::uint64_t(1) << (c % 64);
        auto& word = bits_.at(r).at(c / 64);
        word = v ? (word | mask) : (word & ~mask);
    } else {
        vals_.at(r).at(c) = static_cast<std::uint8_t>(v);
    }
}

void GfMatrix::add(int r, int c, int value) { set(r, c, at(r, c) + value); }

int GfMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (p_ == 2) {
        auto m = bits_;
        int rank = 0;
        for (int c = 0; c < cols_ && rank < rows_; ++c) {
            std::uint64_t mask = std::uint64_t(1) << (c % 64);
            int word = c / 64;
            int pivot = -1;
            for (int r = rank; r < rows_; ++r)
                if (m[r][word] & mask) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(m[rank], m[pivot]);
            for (int r = rank + 1; r < rows_; ++r)
                if (m[r][word] & mask)
                    for (int w = 0; w < words_; ++w) m[r][w] ^= m[rank][w];
            ++rank;
        }
        return rank;
    }
    auto m = vals_;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        // inverse of 1 is 1, of 2 is 2 (2*2 = 4 = 1 mod 3)
        int inv = m[rank][c] == 1 ? 1 : 2;
        for (int cc = 0; cc < cols_; ++cc)
            m[rank][cc] = static_cast<std::uint8_t>((m[rank][cc] * inv) % 3);
        for (int r = rank + 1; r < rows_; ++r) {
            if (m[r][c] == 0) continue;
            int factor = 3 - m[r][c];
            for (int cc = 0; cc < cols_; ++cc)
                m[r][cc] = static_cast<std::uint8_t>((m[r][cc] + factor * m[rank][cc]) % 3);
        }
        ++rank;
    }
    return rank;
}

std::optional<std::vector<std::uint8_t>> GfMatrix::kernel_vector() const {
    if (cols_ == 0) return std::nullopt;
    // Dense reduced row echelon form over GF(p).
    std::vector<std::vector<int>> m(rows_, std::vector<int>(cols_, 0));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) m[r][c] = at(r, c);

    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols_ && rank < rows_; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (m[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        int inv = m[rank][c] == 1 ? 1 : (p_ == 3 ? 2 : 1);
        for (int cc = 0; cc < cols_; ++cc) m[rank][cc] = m[rank][cc] * inv % p_;
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            int factor = p_ - m[r][c];
            for (int cc = 0; cc < cols_; ++cc)
                m[r][cc] = (m[r][cc] + factor * m[rank][cc]) % p_;
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank == cols_) return std::nullopt;

    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    std::vector<std::uint8_t> x(cols_, 0);
    x[free_col] = 1;
    for (int i = 0; i < rank; ++i) {
        // pivot row i: x[pivot_col[i]] + m[i][free_col] * x[free_col] = 0
        int v = (p_ - m[i][free_col] % p_) % p_;
        x[pivot_col[i]] = static_cast<std::uint8_t>(v);
    }
    return x;
}

}  // namespace strat
