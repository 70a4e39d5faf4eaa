#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "strat/graph.hpp"

namespace strat {

// Dense matrix over GF(p), p in {2, 3}. Rows are bit-packed for p = 2 and
// byte-valued for p = 3; instances are small (vertex-indexed), so no sparse
// storage.
class GfMatrix {
public:
    GfMatrix(int modulus, int rows, int cols);

    int modulus() const { return p_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    int at(int r, int c) const;
    void set(int r, int c, int value);
    void add(int r, int c, int value);

    // Row rank by Gaussian elimination.
    int rank() const;

    // A nonzero x with M x = 0, built from the first free column of the
    // reduced form; nullopt when the kernel is trivial.
    std::optional<std::vector<std::uint8_t>> kernel_vector() const;

private:
    int p_;
    int rows_;
    int cols_;
    int words_;
    std::vector<std::vector<std::uint64_t>> bits_;  // p == 2
    std::vector<std::vector<std::uint8_t>> vals_;   // p == 3
};

inline int gf_rank(const GfMatrix& m) { return m.rank(); }

}  // namespace strat
