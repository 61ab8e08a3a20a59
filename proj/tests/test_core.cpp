#include <catch2/catch_amalgamated.hpp>

#include "gtamforge/attach.hpp"
#include "gtamforge/compat.hpp"
#include "gtamforge/core.hpp"
#include "gtamforge/io.hpp"
#include "gtamforge/stability.hpp"

using namespace gtam;

namespace {

FaceGeometry bump_row(std::initializer_list<int> bits) {
    FaceGeometry g(1, static_cast<int>(bits.size()));
    int r = 0;
    for (int b : bits) {
        if (b) g.fill(0, r);
        ++r;
    }
    return g;
}

TileSystem two_tile_system(int strength, int tau) {
    TileSystem sys;
    sys.temperature = tau;
    auto a = build::tile("A");
    build::glue(a, E, "g", strength);
    sys.add(a);
    auto b = build::tile("B");
    build::glue(b, W, "g", strength);
    sys.add(b);
    sys.seed = 0;
    return sys;
}

} // namespace

TEST_CASE("face_compatible basics") {
    FaceGeometry a(3, 2), b(3, 2);
    REQUIRE(face_compatible(a, b)); // both empty

    FaceGeometry fa(2, 2), fb(2, 2);
    fa.fill_rect(0, 0, 1, 1);
    fb.fill_rect(0, 0, 1, 1);
    REQUIRE_FALSE(face_compatible(fa, fb)); // both fully filled

    auto x = bump_row({1, 1, 0});
    auto y = bump_row({0, 0, 1});
    auto z = bump_row({0, 1, 0});
    REQUIRE(face_compatible(x, y));
    REQUIRE_FALSE(face_compatible(x, z));

    FaceGeometry wrong(2, 3);
    REQUIRE_THROWS_AS(face_compatible(x, wrong), InputError);
}

TEST_CASE("face_compatible is symmetric") {
    Rng rng(7);
    for (int iter = 0; iter < 200; ++iter) {
        FaceGeometry a(4, 5), b(4, 5);
        for (int c = 0; c < 4; ++c)
            for (int r = 0; r < 5; ++r) {
                if (rng.below(3) == 0) a.fill(c, r);
                if (rng.below(3) == 0) b.fill(c, r);
            }
        REQUIRE(face_compatible(a, b) == face_compatible(b, a));
    }
}

TEST_CASE("geometry class recognition") {
    FaceGeometry empty(1, 4);
    REQUIRE(classify_face(empty, E) == GeometryClass::Bump);

    FaceGeometry bump(1, 4);
    bump.fill(0, 2);
    REQUIRE(classify_face(bump, E) == GeometryClass::Bump);

    FaceGeometry bar(3, 4); // east face: runs from column 0
    bar.fill_rect(0, 1, 2, 1);
    bar.fill(0, 3);
    REQUIRE(classify_face(bar, E) == GeometryClass::Bar);

    FaceGeometry conn(3, 4);
    conn.fill(0, 1);
    conn.fill(1, 1);
    conn.fill(1, 2); // L-shape, attached via (0,1)
    REQUIRE(classify_face(conn, E) == GeometryClass::Connected);

    FaceGeometry disc(3, 4);
    disc.fill(2, 2); // floating cell
    REQUIRE(classify_face(disc, E) == GeometryClass::Unrestricted);
}

TEST_CASE("attachable: glue strength and hindrance") {
    SECTION("matching strength-2 glue, flat faces, tau 2") {
        auto sys = two_tile_system(2, 2);
        auto st = Supertile::singleton(0);
        REQUIRE(attachable(sys, st, 1, Pos{1, 0}, 2));
    }
    SECTION("strength-1 glue only fails at tau 2, passes at tau 1") {
        auto sys = two_tile_system(1, 2);
        auto st = Supertile::singleton(0);
        REQUIRE_FALSE(attachable(sys, st, 1, Pos{1, 0}, 2));
        REQUIRE(attachable(sys, st, 1, Pos{1, 0}, 1));
    }
    SECTION("overlapping face geometries block a strength-2 bond") {
        auto sys = two_tile_system(2, 2);
        sys.l = 3;
        sys.tiles[0].geom[E] = bump_row({0, 1, 0});
        sys.tiles[1].geom[W] = bump_row({0, 1, 0});
        auto st = Supertile::singleton(0);
        REQUIRE_FALSE(attachable(sys, st, 1, Pos{1, 0}, 2));
    }
    SECTION("occupied position is an error") {
        auto sys = two_tile_system(2, 2);
        auto st = Supertile::singleton(0);
        REQUIRE_THROWS_AS(attachable(sys, st, 1, Pos{0, 0}, 2), InputError);
    }
}

TEST_CASE("attachable monotone in inverse temperature") {
    Rng rng(11);
    for (int iter = 0; iter < 100; ++iter) {
        TileSystem sys;
        sys.temperature = 2;
        sys.l = 3;
        auto a = build::tile("A");
        build::glue(a, E, "g", 1 + static_cast<int>(rng.below(2)));
        auto b = build::tile("B");
        b.glue[W] = a.glue[E];
        if (rng.below(2)) {
            a.geom[E] = bump_row({static_cast<int>(rng.below(2)), 0, 1});
            b.geom[W] = bump_row({1, 0, static_cast<int>(rng.below(2))});
        }
        sys.add(a);
        sys.add(b);
        auto st = Supertile::singleton(0);
        if (attachable(sys, st, 1, Pos{1, 0}, 2)) REQUIRE(attachable(sys, st, 1, Pos{1, 0}, 1));
    }
}

TEST_CASE("is_tau_stable examples") {
    SECTION("two tiles, one strength-2 bond") {
        auto sys = two_tile_system(2, 2);
        Supertile st({{Pos{0, 0}, 0}, {Pos{1, 0}, 1}});
        REQUIRE(is_tau_stable(sys, st, 2));
    }
    SECTION("two tiles, one strength-1 bond") {
        auto sys = two_tile_system(1, 2);
        Supertile st({{Pos{0, 0}, 0}, {Pos{1, 0}, 1}});
        REQUIRE_FALSE(is_tau_stable(sys, st, 2));
        REQUIRE(is_tau_stable(sys, st, 1));
    }
    SECTION("2x2 ring of strength-1 bonds is 2-stable") {
        TileSystem sys;
        sys.temperature = 2;
        auto t = build::tile("R");
        for (auto s : kSides) build::glue(t, s, "r", 1);
        sys.add(t);
        Supertile st({{Pos{0, 0}, 0}, {Pos{1, 0}, 0}, {Pos{0, 1}, 0}, {Pos{1, 1}, 0}});
        REQUIRE(is_tau_stable(sys, st, 2));
        REQUIRE_FALSE(is_tau_stable(sys, st, 3)); // corner cut has weight 2
    }
}

TEST_CASE("stability agrees with exhaustive cut enumeration and fast path") {
    Rng rng(23);
    // Random tile soup: 4 types with random glues on a random connected blob.
    for (int iter = 0; iter < 200; ++iter) {
        TileSystem sys;
        sys.temperature = 2;
        for (int t = 0; t < 4; ++t) {
            auto tt = build::tile("T" + std::to_string(t));
            for (auto s : kSides) {
                int k = static_cast<int>(rng.below(4));
                if (k > 0) build::glue(tt, s, "g" + std::to_string(k % 2), (k % 2) + 1);
            }
            sys.add(tt);
        }
        int n = 2 + static_cast<int>(rng.below(11)); // up to 12 tiles
        std::vector<std::pair<Pos, int>> cells{{Pos{0, 0}, static_cast<int>(rng.below(4))}};
        std::set<Pos> used{Pos{0, 0}};
        while (static_cast<int>(cells.size()) < n) {
            auto& [bp, bt] = cells[rng.below(cells.size())];
            Pos q = bp + step(kSides[rng.below(4)]);
            if (used.insert(q).second) cells.push_back({q, static_cast<int>(rng.below(4))});
        }
        Supertile st(std::move(cells));
        auto edges = binding_edges(sys, st);
        // Brute force: minimum over all 2-partitions of the cut weight, with
        // connectivity of the binding graph handled by cut weight 0.
        int m = static_cast<int>(st.size());
        int best = std::numeric_limits<int>::max();
        for (uint32_t mask = 1; mask < (1u << m) - 1; ++mask) {
            int wsum = 0;
            for (auto& e : edges) {
                bool a = mask & (1u << e.a), b = mask & (1u << e.b);
                if (a != b) wsum += e.strength;
            }
            best = std::min(best, wsum);
        }
        for (int tau = 1; tau <= 2; ++tau) {
            bool expect = st.size() == 1 || best >= tau;
            REQUIRE(is_tau_stable(sys, st, tau) == expect);
            REQUIRE(is_tau_stable_fast(sys, st, tau) == expect);
        }
    }
}

TEST_CASE("compatibility matrix") {
    SECTION("all-empty geometries give the zero matrix") {
        auto sys = two_tile_system(2, 2);
        auto cm = compatibility_matrix(sys);
        for (int i = 0; i < cm.m.m; ++i)
            for (int j = 0; j < cm.m.n; ++j) REQUIRE(cm.m.at(i, j) == 0);
    }
    SECTION("self-intersecting east/west pair sets one entry") {
        TileSystem sys;
        sys.l = 3;
        auto t = build::tile("T");
        t.geom[E] = bump_row({0, 1, 0});
        t.geom[W] = bump_row({0, 1, 0});
        sys.add(t);
        auto cm = compatibility_matrix(sys);
        int e = CompatibilityMatrix::face_index(0, E), w = CompatibilityMatrix::face_index(0, W);
        int ones = 0;
        for (int i = 0; i < cm.m.m; ++i)
            for (int j = 0; j < cm.m.n; ++j) ones += cm.m.at(i, j);
        REQUIRE(cm.m.at(e, w) == 1);
        REQUIRE(ones == 1);
    }
    SECTION("entries only at east/west and north/south index pairs") {
        TileSystem sys;
        sys.l = 2;
        auto t = build::tile("T");
        FaceGeometry full(1, 2);
        full.fill_rect(0, 0, 0, 1);
        FaceGeometry fullns(2, 1);
        fullns.fill_rect(0, 0, 1, 0);
        t.geom[E] = full;
        t.geom[W] = full;
        t.geom[N] = fullns;
        t.geom[S] = fullns;
        sys.add(t);
        auto cm = compatibility_matrix(sys);
        for (int i = 0; i < cm.m.m; ++i)
            for (int j = 0; j < cm.m.n; ++j)
                if (cm.m.at(i, j)) {
                    Side si = static_cast<Side>(i % 4), sj = static_cast<Side>(j % 4);
                    bool ok = (si == E && sj == W) || (si == N && sj == S);
                    REQUIRE(ok);
                }
    }
}

TEST_CASE("tile system json round trip") {
    TileSystem sys;
    sys.w = 2;
    sys.l = 3;
    sys.temperature = 1;
    auto t = build::tile("X");
    build::glue(t, N, "a", 1);
    build::glue(t, S, "b", 2);
    FaceGeometry g(2, 3);
    g.fill(1, 0);
    g.fill(0, 2);
    t.geom[E] = g;
    sys.add(t);
    auto u = build::tile("Y");
    build::glue(u, W, "c", 1);
    sys.add(u);
    sys.seed = 1;

    auto j = system_to_json(sys);
    auto back = system_from_json(j);
    REQUIRE(back.tiles.size() == 2);
    REQUIRE(back.w == 2);
    REQUIRE(back.l == 3);
    REQUIRE(back.temperature == 1);
    REQUIRE(*back.seed == 1);
    REQUIRE(back.tiles[0].glue[N] == sys.tiles[0].glue[N]);
    REQUIRE(back.face(0, E) == sys.face(0, E));
    REQUIRE(back.face(0, W) == sys.face(0, W));
    REQUIRE(system_to_json(back) == j);
}

TEST_CASE("supertile canonical form") {
    Supertile a({{Pos{5, 7}, 0}, {Pos{6, 7}, 1}});
    Supertile b({{Pos{-2, 0}, 0}, {Pos{-1, 0}, 1}});
    REQUIRE(a == b);
    REQUIRE(a.hash() == b.hash());
    REQUIRE_THROWS_AS(Supertile({{Pos{0, 0}, 0}, {Pos{0, 0}, 1}}), InputError);
}
