#pragma once

#include "gtamforge/core.hpp"

namespace gtam {

// Two-digit base-r counter, temperature 2, assembling a 2-wide column that
// grows north by two rows per counted value. Column 0 carries the high digit,
// column 1 the low digit; rows alternate between display (A) and increment
// (B) rows, snaking east/west so that every attachment is north, east or west
// of the previous one. Exactly 5r+2 tile types. Counts seed_value..r^2-1 and
// halts on rollover, for a final height of 2*(r^2 - seed_value).
inline TileSystem gen_base_r_counter(int r, int seed_value) {
    if (r < 2) throw InputError("gen_base_r_counter: r >= 2 required");
    if (seed_value < 0 || seed_value >= r * r) throw InputError("gen_base_r_counter: seed_value out of range");
    int d1b = seed_value / r, d0b = seed_value % r;
    auto num = [](int v) { return std::to_string(v); };

    TileSystem sys;
    sys.temperature = 2;
    sys.w = 1;
    sys.l = 1;

    {
        auto t = build::tile("S1");
        build::glue(t, E, "seed", 2);
        build::glue(t, N, "d1:" + num(d1b), 1);
        sys.add(t);
    }
    {
        auto t = build::tile("S2");
        build::glue(t, W, "seed", 2);
        build::glue(t, N, "a0:" + num(d0b), 2);
        sys.add(t);
    }
    for (int d = 0; d < r; ++d) { // low-digit display tiles
        auto t = build::tile("A0:" + num(d));
        build::glue(t, W, "row", 1);
        build::glue(t, S, "b0n:" + num(d), 1);
        build::glue(t, N, "a0:" + num(d), 2);
        sys.add(t);
    }
    for (int d = 0; d < r; ++d) { // low-digit increment tiles
        auto t = build::tile("B0:" + num(d));
        build::glue(t, S, "a0:" + num(d), 2);
        build::glue(t, N, "b0n:" + num((d + 1) % r), 1);
        build::glue(t, W, d == r - 1 ? "c1" : "c0", 1);
        sys.add(t);
    }
    for (int d = 0; d < r; ++d) { // high-digit hold tiles
        auto t = build::tile("B1k:" + num(d));
        build::glue(t, E, "c0", 1);
        build::glue(t, S, "d1:" + num(d), 1);
        build::glue(t, N, "b1:" + num(d), 2);
        sys.add(t);
    }
    for (int d = 0; d < r; ++d) { // high-digit carry tiles; top value halts
        auto t = build::tile("B1i:" + num(d));
        build::glue(t, E, "c1", 1);
        build::glue(t, S, "d1:" + num(d), 1);
        if (d != r - 1) build::glue(t, N, "b1:" + num(d + 1), 2);
        sys.add(t);
    }
    for (int d = 0; d < r; ++d) { // high-digit display tiles
        auto t = build::tile("A1:" + num(d));
        build::glue(t, S, "b1:" + num(d), 2);
        build::glue(t, N, "d1:" + num(d), 1);
        build::glue(t, E, "row", 1);
        sys.add(t);
    }
    sys.seed = sys.index_of("S1");
    return sys;
}

// Binary counter, temperature 2, seeded with a hardcoded bottom row encoding
// B on `bits` bit columns between two wall columns (most significant bit
// west). Grows north by an increment row (built east to west, carry rippling
// from the least significant bit) and a copy row (west to east, accumulating
// an all-ones flag) per value, halting when the flag reaches the east wall.
// Grown height above the seed row: 2^(bits+1) - 2B - 2.
inline TileSystem gen_binary_counter(int bits, uint64_t B) {
    if (bits < 1 || bits > 62) throw InputError("gen_binary_counter: bits out of range");
    if (B >= (1ULL << bits)) throw InputError("gen_binary_counter: B out of range");
    auto num = [](int v) { return std::to_string(v); };
    TileSystem sys;
    sys.temperature = 2;
    sys.w = 1;
    sys.l = 1;

    bool maxed = (B == (1ULL << bits) - 1);
    {
        auto t = build::tile("SW");
        build::glue(t, E, "sd0", 2);
        build::glue(t, N, "ww", 1);
        sys.add(t);
    }
    for (int i = 1; i <= bits; ++i) {
        int bit = static_cast<int>((B >> (bits - i)) & 1); // col 1 = msb
        auto t = build::tile("SB" + num(i));
        build::glue(t, W, "sd" + num(i - 1), 2);
        build::glue(t, E, "sd" + num(i), 2);
        build::glue(t, N, "b" + num(bit), 1);
        sys.add(t);
    }
    {
        auto t = build::tile("SE");
        build::glue(t, W, "sd" + num(bits), 2);
        if (!maxed) build::glue(t, N, "we", 2);
        sys.add(t);
    }
    {
        auto t = build::tile("EI"); // east wall of an increment row; injects the +1
        build::glue(t, S, "we", 2);
        build::glue(t, W, "c1", 1);
        build::glue(t, N, "wei", 1);
        sys.add(t);
    }
    for (int b = 0; b < 2; ++b)
        for (int c = 0; c < 2; ++c) {
            auto t = build::tile("I" + num(b) + num(c));
            build::glue(t, S, "b" + num(b), 1);
            build::glue(t, E, "c" + num(c), 1);
            build::glue(t, W, "c" + num(b & c), 1);
            build::glue(t, N, "n" + num(b ^ c), 1);
            sys.add(t);
        }
    {
        auto t = build::tile("WI"); // west wall of an increment row
        build::glue(t, S, "ww", 1);
        build::glue(t, E, "c0", 1);
        build::glue(t, N, "wwi", 2);
        sys.add(t);
    }
    {
        auto t = build::tile("WC"); // west wall of a copy row; starts the flag
        build::glue(t, S, "wwi", 2);
        build::glue(t, E, "f1", 1);
        build::glue(t, N, "ww", 1);
        sys.add(t);
    }
    for (int b = 0; b < 2; ++b)
        for (int f = 0; f < 2; ++f) {
            auto t = build::tile("C" + num(b) + num(f));
            build::glue(t, S, "n" + num(b), 1);
            build::glue(t, W, "f" + num(f), 1);
            build::glue(t, E, "f" + num(f & b), 1);
            build::glue(t, N, "b" + num(b), 1);
            sys.add(t);
        }
    for (int f = 0; f < 2; ++f) {
        auto t = build::tile("EC" + num(f)); // east wall of a copy row; halts on flag
        build::glue(t, S, "wei", 1);
        build::glue(t, W, "f" + num(f), 1);
        if (f == 0) build::glue(t, N, "we", 2);
        sys.add(t);
    }
    sys.seed = sys.index_of("SW");
    return sys;
}

} // namespace gtam
