#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "srfr/key_equation.hpp"
#include "srfr/rng.hpp"

namespace srfr {

// Floor / ceiling quotients that also work for negative numerators; the
// radius formulas do go negative on infeasible parameter sets and plain
// integer division would round the wrong way there.
inline int64_t floordiv(int64_t a, int64_t b) {
    int64_t q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0)) --q;
    return q;
}

inline int64_t ceildiv(int64_t a, int64_t b) { return -floordiv(-a, b); }

// Problem shape: l functions sharing one denominator, evaluated at n points,
// with degree caps d_f, d_g and at most eps erroneous evaluation points.
struct SrfrParams {
    size_t n = 0;
    size_t l = 0;
    int64_t d_f = 0;
    int64_t d_g = 0;
    int64_t eps = 0;

    SrfrParams(size_t n_, size_t l_, int64_t d_f_, int64_t d_g_, int64_t eps_);

    DegreeBoundPair solver_bounds() const { return {d_f + eps, d_g + eps}; }
};

// Error support plus the injected column deltas, kept for bookkeeping.
struct ErrorPattern {
    std::vector<size_t> positions;           // 0-based grid indices, sorted
    std::vector<FieldElement> columns;       // l deltas per position, position-major
};

// Positions whose delta column is nonzero, i.e. the declared corruptions
// that actually changed the observation.
std::vector<size_t> genuine_error_positions(const ErrorPattern& pattern, size_t l);

// Largest shift exponent of the expected solution-space structure:
//   min(d_f - deg f, d_g - deg g) + eps - |E|.
// Negative means the expected space is trivial.
int64_t d_fge(int64_t d_f, int64_t d_g, int64_t deg_f, int64_t deg_g, int64_t eps,
              int64_t num_errors);

// Unique-decoding radius floor((n - d_f - d_g - 1) / 2).
int64_t radius_bk(int64_t n, int64_t d_f, int64_t d_g);

// Probabilistic radius floor(l (n - d_f - d_g - 1) / (l + 1)); collapses to
// radius_bk at l = 1.
int64_t radius_glz(int64_t n, int64_t d_f, int64_t d_g, int64_t l);

// All radii relevant to one parameter set.  The plain fields use only the
// declared caps; the primed ones also use the true degrees of a known
// solution and (when a linear system is in play) the caps d_A, d_b.
struct RadiusReport {
    int64_t eps_bk = 0;
    int64_t eps_glz = 0;
    int64_t dfge = 0;

    bool has_system = false;
    int64_t eps_kps = 0;
    int64_t eps_glz2 = 0;
    int64_t eps_bk_primed = 0;
    int64_t eps_kps_primed = 0;
    int64_t eps_glz_primed = 0;
    int64_t eps_glz2_primed = 0;
    int64_t n1 = 0;
    int64_t n2 = 0;
    int64_t rho = 0;
};

// Random reduced fraction vector with exact degrees (deg of the first
// numerator is forced to deg_f) and a denominator that is monic and
// nonvanishing on the grid.
RationalVector gen_random_rv(size_t l, int64_t deg_f, int64_t deg_g,
                             const EvaluationGrid& grid, Rng& rng);

// Evaluates rv on the grid and overwrites the columns listed in positions
// with uniform error columns.  With resample_zero_columns (the default) an
// all-zero error column is redrawn so the corrupted set is exactly
// `positions`; switching it off leaves the textbook uniform model.
ObservationMatrix gen_random_instance(const SrfrParams& params, const EvaluationGrid& grid,
                                      const RationalVector& rv,
                                      const std::vector<size_t>& positions, Rng& rng,
                                      ErrorPattern* pattern_out = nullptr,
                                      bool resample_zero_columns = true);

enum class DecodeStatus {
    Success,
    EmptySpace,          // no nonzero tuple satisfies the key equations
    VerificationFailed,  // a tuple was found but is not a valid decoding
};

struct SrfrDecodeResult {
    DecodeStatus status = DecodeStatus::EmptySpace;
    std::optional<RationalVector> value;
    size_t space_dim = 0;

    bool ok() const { return status == DecodeStatus::Success; }
};

// Full decoding pipeline: solution space at caps (d_f + eps, d_g + eps),
// minimal element, reconstruction, then an explicit check that the result
// respects the caps, has a denominator nonvanishing on the grid, and
// matches the observations on at least n - eps points.  space_out, when
// given, receives the computed solution space (for structure diagnostics).
SrfrDecodeResult decode_srfr(const ObservationMatrix& obs, const SrfrParams& params,
                             KeyEquationSpace* space_out = nullptr);

// True when the space has exactly expected_dim elements in a basis and they
// span { x^t (locator f, locator g) : 0 <= t < expected_dim }.
bool verify_span_structure(const KeyEquationSpace& space, const RationalVector& rv,
                           const Polynomial& locator, int64_t expected_dim);

}  // namespace srfr
