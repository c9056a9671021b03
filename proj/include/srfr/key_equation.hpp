#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srfr/fq_linalg.hpp"
#include "srfr/polynomial.hpp"

namespace srfr {

// Received words: l rows of n values, one value per grid point.
struct ObservationMatrix {
    size_t l = 0;
    size_t n = 0;
    EvaluationGrid grid;
    std::vector<FieldElement> y;  // row-major, y[i*n + j]

    ObservationMatrix(size_t l_, const EvaluationGrid& grid_, std::vector<FieldElement> y_);

    const FieldElement& at(size_t i, size_t j) const { return y[i * n + j]; }
    FieldElement& at(size_t i, size_t j) { return y[i * n + j]; }
};

// Degree caps (Df for every numerator, Dg for the denominator).  Negative
// values are legal and denote an infeasible cap: the solution space is then
// empty by convention.
struct DegreeBoundPair {
    int64_t Df = 0;
    int64_t Dg = 0;
};

// One element (phi_1, ..., phi_l, psi) of the solution space.
struct CandidateSolution {
    std::vector<Polynomial> phis;
    Polynomial psi;

    int64_t max_phi_degree() const;
    bool operator==(const CandidateSolution& o) const { return phis == o.phis && psi == o.psi; }
};

struct KeyEquationSpace {
    size_t l = 0;
    DegreeBoundPair bounds;
    FieldParams field;
    std::vector<CandidateSolution> basis;

    size_t dimension() const { return basis.size(); }
};

// Coefficient matrix of the homogeneous system
//   phi_i(alpha_j) - y_ij psi(alpha_j) = 0   for all i, j:
// l diagonal Vandermonde blocks of width Df+1 and a final block of width
// Dg+1 holding -diag(y_i) V.  Shape (l n) x (l (Df+1) + Dg + 1).
// Bounds must be nonnegative here; the caller guards the degenerate case.
FqMatrix build_matrix(const ObservationMatrix& obs, const DegreeBoundPair& bounds);

// Right kernel of build_matrix as candidate tuples.  Negative bounds give
// the empty space.
KeyEquationSpace solution_space(const ObservationMatrix& obs, const DegreeBoundPair& bounds);

// Nonzero space element minimizing deg psi, ties broken by max_i deg phi_i
// and then by echelon order; scaled so its leading pivot coefficient is one
// (psi monic whenever psi is nonzero).  Tuples with psi = 0 cannot be turned
// into fractions, so they are returned only when the space holds nothing
// else.  Empty space gives nullopt.
std::optional<CandidateSolution> minimal_solution(const KeyEquationSpace& space);

// Divides out the common factor; requires psi != 0.
RationalVector reconstruct_fraction(const CandidateSolution& cand);

// Coefficient vector in the column order of build_matrix; throws when a
// degree exceeds its cap.
std::vector<FieldElement> pack_candidate(const CandidateSolution& cand,
                                         const DegreeBoundPair& bounds, size_t l,
                                         const FieldParams& fp);

// Direct check of the evaluated equations plus the degree caps.
bool candidate_satisfies(const ObservationMatrix& obs, const DegreeBoundPair& bounds,
                         const CandidateSolution& cand);

}  // namespace srfr
