#pragma once

#include "srfr/srfr.hpp"

namespace srfr {

// Interleaved evaluation code: l message polynomials of degree < k evaluated
// on a shared grid of n points.  Errors hit whole columns (one grid point
// corrupts all l rows), which is the burst model this code targets.
struct IrsCode {
    size_t n;
    size_t k;
    size_t l;
    EvaluationGrid grid;

    IrsCode(size_t n_, size_t k_, size_t l_, EvaluationGrid grid_);
};

using CodewordMatrix = ObservationMatrix;

// Row i of the result carries f_i evaluated on the grid.
CodewordMatrix irs_encode(const IrsCode& code, const std::vector<Polynomial>& message);

struct IrsDecodeResult {
    DecodeStatus status = DecodeStatus::EmptySpace;
    std::optional<std::vector<Polynomial>> message;
    size_t space_dim = 0;

    bool ok() const { return status == DecodeStatus::Success; }
};

// Column-error decoding with up to eps corrupted columns.  Runs the shared
// rational-recovery pipeline with denominator cap zero; the locator ends up
// dividing every numerator exactly, so a successful decode always returns
// plain polynomials.
IrsDecodeResult irs_decode(const IrsCode& code, const CodewordMatrix& received, int64_t eps);

}  // namespace srfr
