#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "srfr/fq_linalg.hpp"
#include "srfr/rng.hpp"

using namespace srfr;

namespace {

const FieldParams F7(7);

FqMatrix mat(size_t r, size_t c, std::initializer_list<uint64_t> vals,
             const FieldParams& fp = F7) {
    FqMatrix m(r, c, fp);
    size_t k = 0;
    for (uint64_t v : vals) {
        m.set_raw(k / c, k % c, v % fp.q);
        ++k;
    }
    return m;
}

std::vector<FieldElement> vec(std::initializer_list<uint64_t> vals, const FieldParams& fp = F7) {
    std::vector<FieldElement> v;
    for (uint64_t x : vals) v.emplace_back(x, fp);
    return v;
}

}  // namespace

TEST_CASE("rref of an invertible matrix is the identity") {
    FqMatrix m = mat(2, 2, {2, 4, 1, 3});
    std::vector<size_t> pivots;
    Elimination::rref(m, pivots);
    CHECK(pivots == std::vector<size_t>{0, 1});
    CHECK(m == mat(2, 2, {1, 0, 0, 1}));
    CHECK(rank(mat(2, 2, {2, 4, 1, 3})) == 2);
}

TEST_CASE("rref of a singular matrix exposes the dependency") {
    FqMatrix m = mat(2, 2, {1, 2, 2, 4});
    std::vector<size_t> pivots;
    Elimination::rref(m, pivots);
    CHECK(pivots == std::vector<size_t>{0});
    CHECK(m == mat(2, 2, {1, 2, 0, 0}));
    CHECK(rank(mat(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(rank(mat(2, 3, {0, 0, 0, 0, 0, 0})) == 0);
}

TEST_CASE("kernel basis is canonical: unit at own free column") {
    // x + 2y = 0 over F_7: kernel spanned by (-2, 1) = (5, 1)
    auto basis = right_kernel_basis(mat(2, 2, {1, 2, 2, 4}));
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == vec({5, 1}));

    // full-rank square matrix: trivial kernel
    CHECK(right_kernel_basis(mat(2, 2, {2, 4, 1, 3})).empty());

    // wide matrix [1 1 1]: two free columns, canonical pair
    auto wide = right_kernel_basis(mat(1, 3, {1, 1, 1}));
    REQUIRE(wide.size() == 2);
    CHECK(wide[0] == vec({6, 1, 0}));
    CHECK(wide[1] == vec({6, 0, 1}));
}

TEST_CASE("rank plus nullity equals the column count on random matrices") {
    FieldParams fp(101);
    Rng rng(11);
    for (int iter = 0; iter < 30; ++iter) {
        size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        FqMatrix m(r, c, fp);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < c; ++j) m.set_raw(i, j, rng.below(fp.q));
        auto basis = right_kernel_basis(m);
        CHECK(rank(m) + basis.size() == c);
        for (const auto& v : basis) {
            auto img = matvec(m, v);
            for (const auto& x : img) CHECK(x.value() == 0);
        }
    }
}

TEST_CASE("matvec against a hand product") {
    // [2 1; 1 3] (3, 4) = (10, 15) = (3, 1) over F_7
    auto y = matvec(mat(2, 2, {2, 1, 1, 3}), vec({3, 4}));
    CHECK(y == vec({3, 1}));
    CHECK_THROWS_AS(matvec(mat(2, 2, {1, 0, 0, 1}), vec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("solve_linear on a nonsingular system") {
    auto x = solve_linear(mat(2, 2, {2, 1, 1, 3}), vec({5, 5}));
    CHECK(x == vec({2, 1}));
    CHECK_THROWS_AS(solve_linear(mat(2, 2, {1, 2, 2, 4}), vec({1, 1})), std::domain_error);
}

TEST_CASE("span rank and membership") {
    std::vector<std::vector<FieldElement>> vs = {vec({1, 0, 1}), vec({0, 1, 1}), vec({1, 1, 2})};
    CHECK(span_rank(vs, F7) == 2);  // third = first + second
    CHECK(in_span(vs, vec({2, 1, 3}), F7));       // 2(1,0,1) + (0,1,1)
    CHECK_FALSE(in_span(vs, vec({0, 0, 1}), F7));
    CHECK(in_span(vs, vec({0, 0, 0}), F7));       // zero vector always inside
    CHECK(span_rank({}, F7) == 0);
}

TEST_CASE("from_rows round trips through row()") {
    std::vector<std::vector<FieldElement>> rows = {vec({1, 2}), vec({3, 4})};
    FqMatrix m = FqMatrix::from_rows(rows, F7);
    CHECK(m.rows() == 2);
    CHECK(m.cols() == 2);
    CHECK(m.row(0) == rows[0]);
    CHECK(m.row(1) == rows[1]);
    CHECK(m.at(1, 0).value() == 3);
}
