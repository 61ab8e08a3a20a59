#include <catch2/catch_amalgamated.hpp>

#include "gtamforge/gens/counters.hpp"
#include "gtamforge/seeded.hpp"

using namespace gtam;

namespace {

std::pair<int, int> extent(const Supertile& st) {
    auto [lo, hi] = st.bbox();
    return {hi.x - lo.x + 1, hi.y - lo.y + 1};
}

} // namespace

TEST_CASE("seed with no attachable types is its own terminal") {
    TileSystem sys;
    sys.temperature = 2;
    sys.add(build::tile("lone"));
    sys.seed = 0;
    auto res = assemble_seeded(sys);
    REQUIRE(res.complete);
    REQUIRE(res.directed);
    REQUIRE(res.terminals.size() == 1);
    REQUIRE(res.terminals[0].size() == 1);
}

TEST_CASE("binary counter reaches height 2^(bits+1) - 2B - 2") {
    // Hand-computed heights for ten (bits, B) pairs.
    const std::pair<int, uint64_t> cases[] = {{3, 5}, {3, 0}, {3, 7}, {4, 0}, {4, 5},
                                              {4, 11}, {4, 15}, {5, 9}, {5, 30}, {2, 1}};
    for (auto [bits, B] : cases) {
        auto sys = gen_binary_counter(bits, B);
        auto res = assemble_seeded(sys);
        REQUIRE(res.complete);
        REQUIRE(res.directed);
        auto [wd, ht] = extent(res.terminals[0]);
        int grown = ht - 1; // rows above the seed row
        REQUIRE(grown == (1 << (bits + 1)) - 2 * static_cast<int>(B) - 2);
        REQUIRE(wd == bits + 2);
    }
}

TEST_CASE("binary counter halts on an all-ones copy row") {
    auto sys = gen_binary_counter(3, 5);
    auto res = assemble_seeded(sys);
    const auto& st = res.terminals[0];
    auto [lo, hi] = st.bbox();
    int top = hi.y;
    for (int c = 1; c <= 3; ++c) {
        auto t = st.at(Pos{c, top});
        REQUIRE(t);
        REQUIRE(sys.tiles[*t].name == "C11"); // copy tile, bit 1, flag up
    }
}

TEST_CASE("base-r counter assembles a 2 x 2(r^2-b) column") {
    for (int r : {2, 3}) {
        for (int b : {0, 1, r * r - 1}) {
            auto sys = gen_base_r_counter(r, b);
            REQUIRE(static_cast<int>(sys.tiles.size()) == 5 * r + 2);
            auto res = assemble_seeded(sys);
            REQUIRE(res.complete);
            REQUIRE(res.directed);
            auto [wd, ht] = extent(res.terminals[0]);
            REQUIRE(wd == 2);
            REQUIRE(ht == 2 * (r * r - b));
        }
    }
    // r=3 seeded at 0 grows to 2 x 18.
    auto res = assemble_seeded(gen_base_r_counter(3, 0));
    auto [wd, ht] = extent(res.terminals[0]);
    REQUIRE(wd == 2);
    REQUIRE(ht == 18);
}

TEST_CASE("recorded sequence prefixes are producible and connected") {
    auto sys = gen_base_r_counter(2, 1);
    auto res = assemble_seeded(sys);
    REQUIRE(res.sequence.size() == res.terminals[0].size());
    std::map<Pos, int> placed;
    for (size_t i = 0; i < res.sequence.size(); ++i) {
        auto [p, t] = res.sequence[i];
        if (i == 0) {
            REQUIRE(t == *sys.seed);
        } else {
            auto occ = [&](Pos q) -> std::optional<int> {
                auto it = placed.find(q);
                if (it == placed.end()) return std::nullopt;
                return it->second;
            };
            REQUIRE(attachable_at(sys, occ, t, p, sys.temperature));
        }
        placed[p] = t;
        std::vector<std::pair<Pos, int>> cells(placed.begin(), placed.end());
        REQUIRE(Supertile(std::move(cells)).connected());
    }
}

TEST_CASE("max_tiles exhaustion reports a partial result with frontier") {
    auto sys = gen_binary_counter(3, 0);
    SeededOptions opt;
    opt.max_tiles = 10;
    auto res = assemble_seeded(sys, opt);
    REQUIRE_FALSE(res.complete);
    REQUIRE_FALSE(res.frontier.empty());
}

TEST_CASE("nondeterministic choice of tile type falls back to exhaustive search") {
    TileSystem sys;
    sys.temperature = 2;
    auto s = build::tile("seed");
    build::glue(s, E, "g", 2);
    sys.add(s);
    auto a = build::tile("A");
    build::glue(a, W, "g", 2);
    sys.add(a);
    auto b = build::tile("B");
    build::glue(b, W, "g", 2);
    sys.add(b);
    sys.seed = 0;
    auto res = assemble_seeded(sys);
    REQUIRE(res.complete);
    REQUIRE_FALSE(res.directed);
    REQUIRE(res.terminals.size() == 2);
}

TEST_CASE("order-dependent corner filling is detected as nondeterminism") {
    // The corner position (1,1) is reachable from A (north arm) with tile C1
    // and from B (east arm) with tile C2, so different orders disagree.
    TileSystem sys;
    sys.temperature = 2;
    auto s = build::tile("seed");
    build::glue(s, N, "a", 2);
    build::glue(s, E, "b", 2);
    sys.add(s);
    auto a = build::tile("A");
    build::glue(a, S, "a", 2);
    build::glue(a, E, "c", 2);
    sys.add(a);
    auto b = build::tile("B");
    build::glue(b, W, "b", 2);
    build::glue(b, N, "d", 2);
    sys.add(b);
    auto c1 = build::tile("C1");
    build::glue(c1, W, "c", 2);
    sys.add(c1);
    auto c2 = build::tile("C2");
    build::glue(c2, S, "d", 2);
    sys.add(c2);
    sys.seed = 0;
    auto res = assemble_seeded(sys);
    REQUIRE(res.complete);
    REQUIRE_FALSE(res.directed);
    REQUIRE(res.terminals.size() == 2);
}
