#pragma once

#include "srfr/srfr.hpp"

namespace srfr {

// Square polynomial system A(x) y(x) = b(x) with degree caps.  A is stored
// row-major.  Full rank over the rational functions is required by every
// consumer here.
struct LinearSystem {
    size_t l = 0;
    std::vector<Polynomial> A;  // l*l, row-major
    std::vector<Polynomial> b;  // l
    int64_t d_A = 0;
    int64_t d_b = 0;

    const Polynomial& a(size_t i, size_t j) const { return A[i * l + j]; }
    int64_t deg_A() const;
    int64_t deg_b() const;
};

struct PlsweParams {
    SrfrParams base;
    int64_t d_A = 0;
    int64_t d_b = 0;

    PlsweParams(const SrfrParams& base_, int64_t d_A_, int64_t d_b_);
};

// Deterministic polynomial-matrix determinant (fraction-free elimination
// with exact divisions).
Polynomial poly_determinant(const std::vector<Polynomial>& m, size_t l, const FieldParams& fp);

// Exact solution of A y = b as a reduced fraction vector (Cramer).  Throws
// when det A = 0.
RationalVector solve_system(const LinearSystem& sys);

// Random system with deg A = degA and deg b = degb exactly, det A != 0, and
// both det A and the reduced denominator nonvanishing on the grid.  Retries
// up to `budget` samples before giving up.  When solution degree targets are
// given, sampling also continues until the reduced solution has exactly
// those numerator / denominator degrees.
std::pair<LinearSystem, RationalVector> gen_system(size_t l, int64_t degA, int64_t degb,
                                                   const EvaluationGrid& grid, Rng& rng,
                                                   int budget = 1000,
                                                   std::optional<int64_t> want_deg_f = std::nullopt,
                                                   std::optional<int64_t> want_deg_g = std::nullopt);

// Evaluation oracle: solves A(alpha_j) y_j = b(alpha_j) pointwise, then
// replaces the columns in `positions` with uniform draws from F_q^l.
// A(alpha_j) must be invertible on the whole grid.
ObservationMatrix blackbox(const LinearSystem& sys, const EvaluationGrid& grid,
                           const std::vector<size_t>& positions, Rng& rng,
                           ErrorPattern* pattern_out = nullptr);

// floor((n - max(d_A + d_f, d_b + d_g) - 1) / 2)
int64_t radius_kps(int64_t n, int64_t d_A, int64_t d_f, int64_t d_b, int64_t d_g);

// floor(l (n - max(d_A + d_f, d_b + d_g) - 1) / (l + 1))
int64_t radius_glz2(int64_t n, int64_t d_A, int64_t d_f, int64_t d_b, int64_t d_g, int64_t l);

// Radii recomputed with the true solution degrees in place of the caps where
// the analysis allows it; these can only grow.
struct PrimedRadii {
    int64_t bk = 0;
    int64_t kps = 0;
    int64_t glz = 0;
    int64_t glz2 = 0;

    int64_t best() const { return std::max(glz, glz2); }
};

PrimedRadii primed_radii(int64_t n, int64_t l, int64_t eps, int64_t d_f, int64_t d_g,
                         int64_t d_A, int64_t d_b, int64_t deg_f, int64_t deg_g);

// Point counts above which the adversarial construction pins the solution
// space exactly (variant-specific).
int64_t n1_threshold(int64_t Df, int64_t Dg, int64_t deg_f, int64_t deg_g,
                     int64_t num_errors, int64_t l);
int64_t n2_threshold(int64_t Df, int64_t Dg, int64_t deg_A, int64_t deg_b,
                     int64_t num_errors, int64_t l);

// Expected rank of build_matrix when the solution space collapses to the
// shifted-solution span: full column count minus the span dimension.
int64_t rank_target(int64_t l, int64_t Df, int64_t Dg, int64_t dfge);

struct ObliviousOutcome {
    bool exceeded = false;                      // error cap judged too optimistic
    std::optional<CandidateSolution> candidate; // populated iff !exceeded
    int stage = 0;                              // 1: solution caps, 2: system caps
    size_t space_dim = 0;
};

DegreeBoundPair algorithm1_bounds(const PlsweParams& params, int stage);

// Parameter-oblivious solver: tries the degree caps derived from (d_f, d_g),
// then the caps derived from (d_A, d_b), and reports the minimal element of
// the first nonempty space; inputs carry caps only, never true degrees.
ObliviousOutcome algorithm1(const ObservationMatrix& obs, const PlsweParams& params);

enum class AdversarialVariant { N1, N2 };

struct AdversarialWitness {
    AdversarialVariant variant;
    std::vector<std::vector<size_t>> groups;  // error positions per function row
};

// Worst-case instance: every corrupted column is consistent with a unit
// vector assigned to its group, which forces the solution space to collapse
// to the shifted-solution span whenever n reaches the matching threshold.
// Deterministic; the N2 variant needs A(alpha_j) invertible on E.
std::pair<ObservationMatrix, AdversarialWitness> gen_adversarial_instance(
    const LinearSystem& sys, const RationalVector& rv, const EvaluationGrid& grid,
    const std::vector<size_t>& positions, AdversarialVariant variant);

}  // namespace srfr
