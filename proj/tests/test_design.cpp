#include <catch2/catch_amalgamated.hpp>

#include "gtamforge/design.hpp"
#include "gtamforge/io.hpp"

using namespace gtam;

namespace {

BitMatrix random_matrix(int m, int n, Rng& rng) {
    BitMatrix M(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) M.at(i, j) = rng.below(2);
    return M;
}

} // namespace

TEST_CASE("verify_solution") {
    SECTION("all-ones matrix with length-1 all-ones vectors") {
        BitMatrix M(2, 3);
        for (auto& x : M.a) x = 1;
        CompatibilitySolution sol;
        sol.length = 1;
        sol.E.assign(2, BitVec{1});
        sol.W.assign(3, BitVec{1});
        REQUIRE(verify_solution(M, sol));
    }
    SECTION("diagonal-one 2x2 with unit vectors") {
        auto sol = solve_diagonal_one(2);
        REQUIRE(verify_solution(diagonal_one_matrix(2), sol));
    }
    SECTION("perturbing one bit invalidates a valid solution") {
        auto M = diagonal_zero_matrix(4);
        auto sol = solve_diagonal_zero(4);
        REQUIRE(verify_solution(M, sol));
        sol.E[2][1] ^= 1;
        REQUIRE_FALSE(verify_solution(M, sol));
    }
    SECTION("dimension mismatch is an error") {
        CompatibilitySolution sol;
        sol.length = 1;
        sol.E.assign(1, BitVec{1});
        sol.W.assign(1, BitVec{1});
        REQUIRE_THROWS_AS(verify_solution(BitMatrix(2, 2), sol), InputError);
    }
}

TEST_CASE("solve_trivial") {
    SECTION("3x3 identity-complement has length 3") {
        auto M = diagonal_zero_matrix(3);
        auto sol = solve_trivial(M);
        REQUIRE(sol.length == 3);
        REQUIRE(verify_solution(M, sol));
    }
    SECTION("random 5x8 has length 5") {
        Rng rng(5);
        auto M = random_matrix(5, 8, rng);
        auto sol = solve_trivial(M);
        REQUIRE(sol.length == 5);
        REQUIRE(verify_solution(M, sol));
    }
    SECTION("1x1 ones matrix") {
        BitMatrix M(1, 1);
        M.at(0, 0) = 1;
        auto sol = solve_trivial(M);
        REQUIRE(sol.E == std::vector<BitVec>{BitVec{1}});
        REQUIRE(sol.W == std::vector<BitVec>{BitVec{1}});
    }
}

TEST_CASE("solve_diagonal_one") {
    auto s1 = solve_diagonal_one(1);
    REQUIRE(s1.E == std::vector<BitVec>{BitVec{1}});
    REQUIRE(s1.W == std::vector<BitVec>{BitVec{1}});
    auto s3 = solve_diagonal_one(3);
    REQUIRE(s3.length == 3);
    REQUIRE(verify_solution(diagonal_one_matrix(3), s3));
    // The optimum for n=2 is confirmed by the exhaustive oracle.
    auto best = brute_force_optimal(diagonal_one_matrix(2));
    REQUIRE(best.length == 2);
}

TEST_CASE("solve_diagonal_zero lengths and verification") {
    SECTION("n=2 is the forced minimal solution") {
        auto s = solve_diagonal_zero(2);
        REQUIRE(s.length == 2);
        REQUIRE(s.E == std::vector<BitVec>{BitVec{0, 1}, BitVec{1, 0}});
        REQUIRE(s.W == std::vector<BitVec>{BitVec{1, 0}, BitVec{0, 1}});
    }
    SECTION("n=6 needs length 4") {
        auto s = solve_diagonal_zero(6);
        REQUIRE(s.length == 4);
        REQUIRE(verify_solution(diagonal_zero_matrix(6), s));
    }
    SECTION("n=4 solver gives 4; brute force oracle still verifies some optimum") {
        auto s = solve_diagonal_zero(4);
        REQUIRE(s.length == 4);
        auto best = brute_force_optimal(diagonal_zero_matrix(4));
        REQUIRE(best.length <= s.length);
        REQUIRE(best.length >= floor_log2(4) + 1);
    }
    SECTION("bounds over a range") {
        for (int n = 2; n <= 200; ++n) {
            auto s = solve_diagonal_zero(n);
            REQUIRE(s.length >= floor_log2(n) + 1);
            REQUIRE(s.length == smallest_l_choose_half_at_least(n));
            if (n >= 16) {
                int bound = static_cast<int>(std::ceil(std::log2(n))) +
                            static_cast<int>(std::ceil(std::log2(std::log2(n))));
                REQUIRE(s.length <= bound);
            }
        }
    }
}

TEST_CASE("compose_ones_submatrices") {
    SECTION("two diagonal-one blocks in a 4x4 zero background") {
        BitMatrix M(4, 4);
        M.at(0, 0) = M.at(1, 1) = 1; // block 1 on rows/cols {0,1}
        M.at(2, 2) = M.at(3, 3) = 1; // block 2 on rows/cols {2,3}
        SubmatrixPartition part;
        part.blocks = {{{0, 1}, {0, 1}}, {{2, 3}, {2, 3}}};
        auto sub = solve_diagonal_one(2);
        auto sol = compose_ones_submatrices(M, part, {sub, sub});
        REQUIRE(sol.length == 4);
        REQUIRE(verify_solution(M, sol));
    }
    SECTION("single block covering the whole matrix reproduces the subsolution") {
        auto M = diagonal_one_matrix(3);
        SubmatrixPartition part;
        part.blocks = {{{0, 1, 2}, {0, 1, 2}}};
        auto sub = solve_diagonal_one(3);
        auto sol = compose_ones_submatrices(M, part, {sub});
        REQUIRE(sol.length == sub.length);
        REQUIRE(sol.E == sub.E);
        REQUIRE(sol.W == sub.W);
    }
    SECTION("three random blocks inside 9x9") {
        Rng rng(17);
        BitMatrix M(9, 9);
        SubmatrixPartition part;
        part.blocks = {{{0, 1, 2}, {0, 1, 2}}, {{3, 4, 5}, {3, 4, 5}}, {{6, 7, 8}, {6, 7, 8}}};
        std::vector<CompatibilitySolution> subs;
        int total = 0;
        for (auto& [R, C] : part.blocks) {
            BitMatrix B(3, 3);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    B.at(i, j) = rng.below(2);
                    M.at(R[i], C[j]) = B.at(i, j);
                }
            subs.push_back(solve_trivial(B));
            total += subs.back().length;
        }
        auto sol = compose_ones_submatrices(M, part, subs);
        REQUIRE(sol.length == total);
        REQUIRE(verify_solution(M, sol));
    }
    SECTION("a 1 outside all blocks is an error") {
        BitMatrix M(2, 2);
        M.at(0, 0) = M.at(1, 1) = 1;
        SubmatrixPartition part;
        part.blocks = {{{0}, {0}}};
        REQUIRE_THROWS_AS(compose_ones_submatrices(M, part, {solve_diagonal_one(1)}), InputError);
    }
}

TEST_CASE("random_permutation") {
    Rng rng(99);
    REQUIRE(random_permutation(1, rng) == std::vector<int>{1});

    SECTION("n=2 frequencies") {
        Rng r2(1234);
        int first = 0;
        const int trials = 10000;
        for (int i = 0; i < trials; ++i)
            if (random_permutation(2, r2)[0] == 1) ++first;
        REQUIRE(std::abs(first - trials / 2) < trials / 20); // within 5%
    }
    SECTION("n=3 chi-square over 60000 draws at alpha=0.01") {
        Rng r3(4321);
        std::map<std::vector<int>, int> counts;
        const int trials = 60000;
        for (int i = 0; i < trials; ++i) ++counts[random_permutation(3, r3)];
        REQUIRE(counts.size() == 6);
        double expect = trials / 6.0, chi2 = 0;
        for (auto& [perm, c] : counts) chi2 += (c - expect) * (c - expect) / expect;
        REQUIRE(chi2 < 15.086); // chi-square 0.99 quantile, 5 dof
    }
}

TEST_CASE("randomized_zeros_submatrices") {
    SECTION("single block covering the whole matrix") {
        auto M = diagonal_zero_matrix(8);
        SubmatrixPartition part;
        part.blocks = {{{0, 1, 2, 3, 4, 5, 6, 7}, {0, 1, 2, 3, 4, 5, 6, 7}}};
        auto res = randomized_zeros_submatrices(M, part, 1.0, {solve_diagonal_zero(8)}, Rng(1));
        REQUIRE(verify_solution(M, res.sol));
    }
    SECTION("32x32 with two independent 16x16 diagonal-zero blocks") {
        BitMatrix M(32, 32);
        for (auto& x : M.a) x = 1;
        SubmatrixPartition part;
        std::vector<int> r1, r2;
        for (int i = 0; i < 16; ++i) { r1.push_back(i); r2.push_back(16 + i); }
        part.blocks = {{r1, r1}, {r2, r2}};
        for (int b = 0; b < 2; ++b)
            for (int i = 0; i < 16; ++i) M.at(16 * b + i, 16 * b + i) = 0;
        auto sub = solve_diagonal_zero(16);
        int first_attempt_success = 0;
        for (uint64_t seed = 0; seed < 100; ++seed) {
            auto res = randomized_zeros_submatrices(M, part, 1.0, {sub, sub}, Rng(seed));
            REQUIRE(verify_solution(M, res.sol));
            if (res.attempts == 1) ++first_attempt_success;
            REQUIRE(res.sol.length == 2 * res.k1 + sub.length);
        }
        REQUIRE(first_attempt_success >= 75);
    }
    SECTION("rows outside all blocks get all-ones vectors") {
        BitMatrix M(3, 3);
        for (auto& x : M.a) x = 1;
        M.at(0, 0) = 0;
        SubmatrixPartition part;
        part.blocks = {{{0}, {0}}};
        CompatibilitySolution sub;
        sub.length = 1;
        sub.E = {BitVec{0}};
        sub.W = {BitVec{0}};
        auto res = randomized_zeros_submatrices(M, part, 0.5, {sub}, Rng(3));
        REQUIRE(verify_solution(M, res.sol));
        for (int k = 0; k < res.sol.length; ++k) {
            REQUIRE(res.sol.E[1][k] == 1);
            REQUIRE(res.sol.E[2][k] == 1);
        }
    }
}

TEST_CASE("brute_force_optimal") {
    SECTION("all-zero matrix has length 0") {
        auto sol = brute_force_optimal(BitMatrix(2, 2));
        REQUIRE(sol.length == 0);
        REQUIRE(verify_solution(BitMatrix(2, 2), sol));
    }
    SECTION("all-ones 2x2 has length 1") {
        BitMatrix M(2, 2);
        for (auto& x : M.a) x = 1;
        REQUIRE(brute_force_optimal(M).length == 1);
    }
    SECTION("diagonal-zero 3x3 has optimum 3") {
        auto sol = brute_force_optimal(diagonal_zero_matrix(3));
        REQUIRE(sol.length == 3);
        REQUIRE(sol.length >= floor_log2(3) + 1);
    }
    SECTION("oracle dominates every solver on random small matrices") {
        Rng rng(31);
        for (int iter = 0; iter < 50; ++iter) {
            int m = 1 + static_cast<int>(rng.below(4));
            int n = 1 + static_cast<int>(rng.below(6));
            auto M = random_matrix(m, n, rng);
            auto best = brute_force_optimal(M);
            REQUIRE(verify_solution(M, best));
            REQUIRE(best.length <= solve_trivial(M).length);
        }
    }
    SECTION("guard triggers on oversized instances") {
        auto M = diagonal_zero_matrix(12);
        REQUIRE_THROWS_AS(brute_force_optimal(M, 1 << 10), BoundError);
    }
}

TEST_CASE("mean optimal length is non-decreasing from 3x3 to 4x4") {
    Rng rng(77);
    double mean3 = 0, mean4 = 0;
    const int trials = 20;
    for (int i = 0; i < trials; ++i) {
        auto M3 = random_matrix(3, 3, rng);
        mean3 += brute_force_optimal(M3).length;
        auto M4 = random_matrix(4, 4, rng);
        mean4 += brute_force_optimal(M4).length;
    }
    REQUIRE(mean4 / trials >= mean3 / trials);
}

TEST_CASE("two_function") {
    auto t3 = two_function(3);
    REQUIRE(t3.f[2] == BitVec{1, 1, 0});
    REQUIRE(t3.g[1] == BitVec{0, 0, 1});
    REQUIRE(dot_is_zero(t3.f[2], t3.g[1]));
    REQUIRE_FALSE(dot_is_zero(t3.f[2], t3.g[2]));
    auto t0 = two_function(0);
    REQUIRE(t0.f[0].empty());
    for (int l : {1, 2, 5, 16}) REQUIRE_NOTHROW(two_function(l));
}

TEST_CASE("vectors_to_bump_geometry") {
    SECTION("E=10 against W=01 gives compatible faces") {
        CompatibilitySolution sol;
        sol.length = 2;
        sol.E = {BitVec{1, 0}};
        sol.W = {BitVec{0, 1}};
        auto [east, west] = vectors_to_bump_geometry(sol, 3);
        REQUIRE(face_compatible(east[0], west[0]));
    }
    SECTION("diagonal-zero n=6: all 36 face pairs match the matrix") {
        auto M = diagonal_zero_matrix(6);
        auto sol = solve_diagonal_zero(6);
        auto [east, west] = vectors_to_bump_geometry(sol, sol.length);
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                REQUIRE(face_compatible(east[i], west[j]) == (M.at(i, j) == 0));
    }
    SECTION("all-ones vectors give mutually incompatible faces") {
        CompatibilitySolution sol;
        sol.length = 2;
        sol.E = {BitVec{1, 1}, BitVec{1, 1}};
        sol.W = {BitVec{1, 1}};
        auto [east, west] = vectors_to_bump_geometry(sol, 2);
        for (auto& e : east) REQUIRE_FALSE(face_compatible(e, west[0]));
    }
    SECTION("solution longer than the face is an error") {
        CompatibilitySolution sol;
        sol.length = 5;
        REQUIRE_THROWS_AS(vectors_to_bump_geometry(sol, 4), InputError);
    }
}

TEST_CASE("matrix csv and solution text round trips") {
    Rng rng(41);
    auto M = random_matrix(4, 7, rng);
    REQUIRE(matrix_from_csv(matrix_to_csv(M)) == M);
    auto sol = solve_trivial(M);
    auto back = solution_from_text(solution_to_text(sol));
    REQUIRE(back.length == sol.length);
    REQUIRE(back.E == sol.E);
    REQUIRE(back.W == sol.W);
}
