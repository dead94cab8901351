#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "effap/lattice.hpp"

using namespace effap;

namespace {

bool annihilates(const IntMat& mat, const IntVec& v) {
    for (const auto& row : mat) {
        BigInt s = 0;
        for (size_t j = 0; j < row.size(); ++j) s += row[j] * v[j];
        if (s != 0) return false;
    }
    return true;
}

IntMat rand_mat(std::mt19937_64& rng, size_t rows, size_t cols, long cmax) {
    std::uniform_int_distribution<long> c(-cmax, cmax);
    IntMat m(rows, IntVec(cols));
    for (auto& r : m)
        for (auto& x : r) x = c(rng);
    return m;
}

}  // namespace

TEST_CASE("kernel of a single form") {
    IntMat m{{BigInt(1), BigInt(2)}};
    auto basis = kernel_basis(m, 2);
    REQUIRE(basis.size() == 1);
    CHECK(annihilates(m, basis[0]));
    CHECK(max_norm(basis[0]) == 2);
    CHECK(basis[0][0] > 0);  // sign-normalized
}

TEST_CASE("kernel basis annihilates on random systems") {
    std::mt19937_64 rng(61);
    for (int rep = 0; rep < 30; ++rep) {
        size_t rows = 2 + rep % 3, cols = rows + 1 + rep % 4;
        IntMat m = rand_mat(rng, rows, cols, 20);
        auto basis = kernel_basis(m, cols);
        CHECK(basis.size() >= cols - rows);
        for (const auto& v : basis) {
            CHECK(annihilates(m, v));
            CHECK(max_norm(v) > 0);
        }
    }
}

TEST_CASE("LLL preserves the lattice and shortens") {
    std::mt19937_64 rng(67);
    for (int rep = 0; rep < 20; ++rep) {
        IntMat m = rand_mat(rng, 2, 5, 12);
        auto basis = kernel_basis(m, 5);
        if (basis.size() < 2) continue;
        IntMat before = basis;
        lll_reduce(basis);
        CHECK(basis.size() == before.size());
        for (const auto& v : basis) CHECK(annihilates(m, v));
    }
}

TEST_CASE("smallest vector within max-norm bound matches box oracle") {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 20; ++rep) {
        IntMat m = rand_mat(rng, 1, 3, 6);
        auto basis = kernel_basis(m, 3);
        if (basis.empty()) continue;
        lll_reduce(basis);
        auto lat = smallest_within_maxnorm(basis, Rat(25));
        auto box = box_search_annihilator(m, 3, 25);
        REQUIRE(lat.has_value() == box.has_value());
        if (lat) {
            CHECK(max_norm(*lat) == max_norm(*box));
            CHECK(*lat == *box);  // the (max-norm, lex) minimum is unique
        }
    }
}

TEST_CASE("enumeration proves absence outside the bound") {
    // kernel of [1, 100] is spanned by (100, -1); no vector with max-norm <= 50
    IntMat m{{BigInt(1), BigInt(100)}};
    auto basis = kernel_basis(m, 2);
    lll_reduce(basis);
    auto none = smallest_within_maxnorm(basis, Rat(50));
    CHECK(!none.has_value());
    auto some = smallest_within_maxnorm(basis, Rat(100));
    REQUIRE(some.has_value());
    CHECK(max_norm(*some) == 100);
}
