#pragma once

#include <cstdint>
#include <vector>

#include "gtamforge/util.hpp"

namespace gtam {

// Dense 2-D bit grid, row-major, 64-bit words per row. Row 0 is the
// southernmost row, column 0 the westernmost column throughout.
class BitGrid {
public:
    BitGrid() : cols_(0), rows_(0), wpr_(0) {}
    BitGrid(int cols, int rows)
        : cols_(cols), rows_(rows), wpr_((cols + 63) / 64), words_(static_cast<size_t>(wpr_) * rows, 0) {
        if (cols < 0 || rows < 0) throw InputError("BitGrid: negative dimensions");
    }

    int cols() const { return cols_; }
    int rows() const { return rows_; }

    bool get(int c, int r) const {
        return (words_[static_cast<size_t>(r) * wpr_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(int c, int r, bool v = true) {
        uint64_t& w = words_[static_cast<size_t>(r) * wpr_ + c / 64];
        uint64_t m = 1ULL << (c % 64);
        if (v) w |= m; else w &= ~m;
    }
    bool in_bounds(int c, int r) const { return c >= 0 && c < cols_ && r >= 0 && r < rows_; }

    int count() const {
        int n = 0;
        for (uint64_t w : words_) n += __builtin_popcountll(w);
        return n;
    }
    bool empty() const {
        for (uint64_t w : words_) if (w) return false;
        return true;
    }

    // True iff the two grids share no set cell. Dimensions must match.
    bool disjoint(const BitGrid& o) const {
        if (cols_ != o.cols_ || rows_ != o.rows_) throw InputError("BitGrid::disjoint: dimension mismatch");
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return false;
        return true;
    }

    bool operator==(const BitGrid& o) const {
        return cols_ == o.cols_ && rows_ == o.rows_ && words_ == o.words_;
    }

    const std::vector<uint64_t>& words() const { return words_; }
    int words_per_row() const { return wpr_; }

    uint64_t hash() const {
        uint64_t h = 0x811c9dc5ULL ^ (static_cast<uint64_t>(cols_) << 32) ^ static_cast<uint64_t>(rows_);
        for (uint64_t w : words_) { h ^= w; h *= 0x100000001b3ULL; }
        return h;
    }

private:
    int cols_, rows_, wpr_;
    std::vector<uint64_t> words_;
};

} // namespace gtam
