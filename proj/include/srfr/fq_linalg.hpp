#pragma once

#include <cstdint>
#include <vector>

#include "srfr/prime_field.hpp"

namespace srfr {

// Dense matrix over F_q.  Entries are stored as raw residues with the field
// kept once per matrix; elimination kernels run on the raw values with the
// modulus hoisted out of the inner loops.
class FqMatrix {
public:
    FqMatrix(size_t rows, size_t cols, const FieldParams& fp)
        : fp_(fp), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const FieldParams& field() const { return fp_; }

    FieldElement at(size_t r, size_t c) const { return FieldElement(a_[r * cols_ + c], fp_); }
    void set(size_t r, size_t c, const FieldElement& v) {
        if (v.modulus() != fp_.q) throw std::invalid_argument("matrix entry field mismatch");
        a_[r * cols_ + c] = v.value();
    }

    uint64_t raw(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set_raw(size_t r, size_t c, uint64_t v) { a_[r * cols_ + c] = v; }

    static FqMatrix from_rows(const std::vector<std::vector<FieldElement>>& rows, const FieldParams& fp);

    std::vector<FieldElement> row(size_t r) const;

    bool operator==(const FqMatrix& o) const {
        return fp_ == o.fp_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    FieldParams fp_;
    size_t rows_, cols_;
    std::vector<uint64_t> a_;

    friend struct Elimination;
};

// Row echelon data computed once and shared by rank / kernel / solve.
struct Elimination {
    // Reduced row echelon form of m, with the pivot column of each pivot row.
    static void rref(FqMatrix& m, std::vector<size_t>& pivot_cols);
};

size_t rank(const FqMatrix& m);

// Basis of { v : m v = 0 }.  One vector per free column, in ascending free
// column order; vector k has a unit at its own free column and zeros at the
// other free columns, which makes the basis canonical for a given matrix.
std::vector<std::vector<FieldElement>> right_kernel_basis(const FqMatrix& m);

std::vector<FieldElement> matvec(const FqMatrix& m, const std::vector<FieldElement>& v);

// Unique solution of a square nonsingular system; throws if singular.
std::vector<FieldElement> solve_linear(const FqMatrix& m, const std::vector<FieldElement>& rhs);

// Rank of the row span of a list of equal-length vectors.
size_t span_rank(const std::vector<std::vector<FieldElement>>& vectors, const FieldParams& fp);

// True when v lies in the row span of basis.
bool in_span(const std::vector<std::vector<FieldElement>>& basis,
             const std::vector<FieldElement>& v, const FieldParams& fp);

}  // namespace srfr
