#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>
#include <vector>

#include "srfr/harness.hpp"
#include "srfr/srfr.hpp"

using namespace srfr;

TEST_CASE("floor and ceiling division round toward the correct infinity") {
    CHECK(floordiv(4, 2) == 2);
    CHECK(floordiv(5, 2) == 2);
    CHECK(floordiv(-1, 2) == -1);
    CHECK(floordiv(-4, 2) == -2);
    CHECK(floordiv(-5, 2) == -3);
    CHECK(ceildiv(5, 2) == 3);
    CHECK(ceildiv(4, 2) == 2);
    CHECK(ceildiv(-5, 2) == -2);
    CHECK(ceildiv(0, 3) == 0);
}

TEST_CASE("unique decoding radius") {
    CHECK(radius_bk(11, 2, 2) == 3);
    CHECK(radius_bk(40, 5, 5) == 14);
    CHECK(radius_bk(4, 2, 2) == -1);  // infeasible caps stay negative
    CHECK(radius_bk(3, 1, 1) == 0);
}

TEST_CASE("probabilistic radius grows with the number of functions") {
    CHECK(radius_glz(40, 5, 5, 4) == 23);
    CHECK(radius_glz(20, 2, 3, 2) == 9);
    for (int64_t n = 5; n <= 24; ++n)
        for (int64_t d = 0; d <= 3; ++d) {
            CHECK(radius_glz(n, d, d, 1) == radius_bk(n, d, d));
            if (n - 2 * d - 1 < 0) continue;  // monotonicity needs feasible caps
            for (int64_t l = 2; l <= 4; ++l)
                CHECK(radius_glz(n, d, d, l) >= radius_glz(n, d, d, l - 1));
        }
}

TEST_CASE("expected solution space shift count") {
    CHECK(d_fge(5, 5, 3, 2, 4, 2) == 4);     // min(2,3) + 4 - 2
    CHECK(d_fge(2, 2, 2, 2, 3, 3) == 0);     // tight caps, all errors genuine
    CHECK(d_fge(2, 2, 2, 2, 1, 2) == -1);    // more errors than slack
    // an all-zero numerator vector defers entirely to the denominator side
    CHECK(d_fge(5, 5, kZeroPolyDegree, 2, 1, 1) == 3);
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(SrfrParams(10, 2, 3, 3, 2));
    CHECK_THROWS_AS(SrfrParams(10, 0, 3, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(SrfrParams(10, 1, -1, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(SrfrParams(10, 1, 10, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(SrfrParams(10, 1, 3, 3, 10), std::invalid_argument);
    CHECK(SrfrParams(10, 2, 3, 4, 2).solver_bounds().Df == 5);
    CHECK(SrfrParams(10, 2, 3, 4, 2).solver_bounds().Dg == 6);
}

TEST_CASE("random reduced vectors have the advertised shape") {
    FieldParams fp(101);
    EvaluationGrid grid = default_grid(12, fp);
    Rng rng(3);
    for (int iter = 0; iter < 25; ++iter) {
        RationalVector rv = gen_random_rv(3, 4, 2, grid, rng);
        REQUIRE(rv.f.size() == 3);
        CHECK(rv.f[0].degree() == 4);          // first numerator hits the target exactly
        CHECK(rv.numerator_degree() == 4);
        CHECK(rv.g.degree() == 2);
        CHECK(rv.g.is_monic());
        for (size_t j = 0; j < grid.size(); ++j) CHECK_FALSE(rv.g.eval(grid.at(j)).is_zero());
        Polynomial common = rv.g;
        for (const auto& fi : rv.f) common = poly_gcd(common, fi);
        CHECK(common.degree() == 0);
    }
}

TEST_CASE("instances corrupt exactly the requested columns") {
    FieldParams fp(101);
    EvaluationGrid grid = default_grid(10, fp);
    Rng rng(17);
    RationalVector rv = gen_random_rv(2, 2, 2, grid, rng);
    SrfrParams params(10, 2, 2, 2, 3);
    std::vector<size_t> positions = {1, 4, 7};
    ErrorPattern pattern;
    ObservationMatrix obs = gen_random_instance(params, grid, rv, positions, rng, &pattern);

    CHECK(pattern.positions == positions);
    CHECK(pattern.columns.size() == positions.size() * 2);
    CHECK(genuine_error_positions(pattern, 2) == positions);  // zero columns resampled away

    for (size_t j = 0; j < 10; ++j) {
        bool corrupted = (j == 1 || j == 4 || j == 7);
        bool honest = true;
        for (size_t i = 0; i < 2; ++i) {
            FieldElement truth = rv.f[i].eval(grid.at(j)) / rv.g.eval(grid.at(j));
            honest = honest && (obs.at(i, j) == truth);
        }
        CHECK(honest == !corrupted);
    }
}

TEST_CASE("declared corruptions with a zero delta column are not genuine") {
    FieldParams fp(7);
    ErrorPattern pattern;
    pattern.positions = {2, 5};
    pattern.columns = {FieldElement(0, fp), FieldElement(0, fp),   // position 2: no change
                       FieldElement(3, fp), FieldElement(0, fp)};  // position 5: changed
    CHECK(genuine_error_positions(pattern, 2) == std::vector<size_t>{5});
}

TEST_CASE("decoding under the unique radius always recovers") {
    FieldParams fp(101);
    EvaluationGrid grid = default_grid(11, fp);
    SrfrParams params(11, 1, 2, 2, 3);  // radius_bk(11,2,2) = 3
    for (uint64_t trial = 0; trial < 40; ++trial) {
        Rng rng = Rng::derive(1001, trial);
        RationalVector rv = gen_random_rv(1, 2, 2, grid, rng);
        std::vector<size_t> positions = sample_error_positions(11, 3, rng);
        ObservationMatrix obs = gen_random_instance(params, grid, rv, positions, rng);
        SrfrDecodeResult res = decode_srfr(obs, params);
        REQUIRE(res.ok());
        CHECK(*res.value == rv);
    }
}

TEST_CASE("decoding beyond the unique radius still mostly recovers with more functions") {
    FieldParams fp(101);
    EvaluationGrid grid = default_grid(11, fp);
    // radius_glz(11, 2, 2, 2) = 4 > radius_bk = 3
    SrfrParams params(11, 2, 2, 2, 4);
    size_t recovered = 0;
    for (uint64_t trial = 0; trial < 60; ++trial) {
        Rng rng = Rng::derive(2002, trial);
        RationalVector rv = gen_random_rv(2, 2, 2, grid, rng);
        std::vector<size_t> positions = sample_error_positions(11, 4, rng);
        ObservationMatrix obs = gen_random_instance(params, grid, rv, positions, rng);
        SrfrDecodeResult res = decode_srfr(obs, params);
        if (res.ok() && *res.value == rv) ++recovered;
    }
    // failure probability is at most (d_g + eps)/q = 6/101 per trial
    CHECK(recovered >= 45);
}

TEST_CASE("an unreachable truth leaves the space empty") {
    FieldParams fp(101);
    EvaluationGrid grid = default_grid(11, fp);
    Rng rng(5005);
    RationalVector rv = gen_random_rv(1, 2, 2, grid, rng);
    ObservationMatrix obs = gen_random_instance(SrfrParams(11, 1, 2, 2, 0), grid, rv, {}, rng);
    // caps far below the true degrees: no nonzero tuple can satisfy the equations
    SrfrDecodeResult res = decode_srfr(obs, SrfrParams(11, 1, 0, 0, 0));
    CHECK(res.status == DecodeStatus::EmptySpace);
    CHECK_FALSE(res.ok());
}

TEST_CASE("caps so loose that the vanishing polynomial fits still decode honest data") {
    // Df >= n admits tuples whose denominator part is zero; the decoder must
    // prefer a usable denominator over those instead of dividing by zero.
    FieldParams fp(101);
    EvaluationGrid grid = default_grid(4, fp);
    Rng rng(6006);
    RationalVector rv = gen_random_rv(1, 2, 0, grid, rng);
    SrfrParams params(4, 1, 3, 0, 3);  // solver caps (6, 3), 6 >= n
    ObservationMatrix obs = gen_random_instance(params, grid, rv, {}, rng);
    SrfrDecodeResult res = decode_srfr(obs, params);
    REQUIRE(res.ok());
    CHECK(*res.value == rv);
}

TEST_CASE("solution space of an error-free instance is the shift span") {
    FieldParams fp(101);
    EvaluationGrid grid = default_grid(11, fp);
    Rng rng(7007);
    RationalVector rv = gen_random_rv(2, 1, 1, grid, rng);
    SrfrParams params(11, 2, 2, 2, 1);  // solver caps (3, 3)
    ObservationMatrix obs = gen_random_instance(params, grid, rv, {}, rng);

    KeyEquationSpace space;
    SrfrDecodeResult res = decode_srfr(obs, params, &space);
    REQUIRE(res.ok());
    // d_fge = min(2-1, 2-1) + 1 - 0 = 2, so three shifts
    Polynomial one = Polynomial::constant(1, fp);
    CHECK(verify_span_structure(space, rv, one, 3));
    CHECK_FALSE(verify_span_structure(space, rv, one, 2));
    // a wrong locator pushes the top shift outside the caps
    Polynomial wrong = error_locator(grid, {0});
    CHECK_FALSE(verify_span_structure(space, rv, wrong, 3));
}

TEST_CASE("solution space with genuine errors carries the locator factor") {
    FieldParams fp(101);
    EvaluationGrid grid = default_grid(12, fp);
    SrfrParams params(12, 2, 2, 2, 2);
    for (uint64_t trial = 0; trial < 10; ++trial) {
        Rng rng = Rng::derive(8008, trial);
        RationalVector rv = gen_random_rv(2, 2, 2, grid, rng);
        std::vector<size_t> positions = sample_error_positions(12, 2, rng);
        ErrorPattern pattern;
        ObservationMatrix obs = gen_random_instance(params, grid, rv, positions, rng, &pattern);
        KeyEquationSpace space;
        SrfrDecodeResult res = decode_srfr(obs, params, &space);
        if (!res.ok() || !(*res.value == rv)) continue;  // probabilistic regime
        std::vector<size_t> genuine = genuine_error_positions(pattern, 2);
        Polynomial loc = error_locator(grid, genuine);
        int64_t dim = d_fge(2, 2, rv.numerator_degree(), rv.g.degree(), 2,
                            static_cast<int64_t>(genuine.size())) + 1;
        CHECK(verify_span_structure(space, rv, loc, dim));
    }
}
