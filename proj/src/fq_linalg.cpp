#include "srfr/fq_linalg.hpp"

#include <algorithm>

namespace srfr {

namespace {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t q) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % q);
}

inline uint64_t submod(uint64_t a, uint64_t b, uint64_t q) {
    return a >= b ? a - b : a + q - b;
}

uint64_t invmod(uint64_t v, uint64_t q) {
    int64_t t = 0, nt = 1;
    uint64_t r = q, nr = v;
    while (nr != 0) {
        uint64_t quo = r / nr;
        int64_t tt = t - static_cast<int64_t>(quo) * nt;
        t = nt;
        nt = tt;
        uint64_t tr = r - quo * nr;
        r = nr;
        nr = tr;
    }
    return t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(q)) : static_cast<uint64_t>(t);
}

}  // namespace

FqMatrix FqMatrix::from_rows(const std::vector<std::vector<FieldElement>>& rows, const FieldParams& fp) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    FqMatrix m(r, c, fp);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged row list");
        for (size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::vector<FieldElement> FqMatrix::row(size_t r) const {
    std::vector<FieldElement> out;
    out.reserve(cols_);
    for (size_t c = 0; c < cols_; ++c) out.push_back(at(r, c));
    return out;
}

void Elimination::rref(FqMatrix& m, std::vector<size_t>& pivot_cols) {
    const uint64_t q = m.fp_.q;
    const size_t rows = m.rows_, cols = m.cols_;
    uint64_t* a = m.a_.data();
    pivot_cols.clear();

    size_t pr = 0;  // next pivot row
    for (size_t pc = 0; pc < cols && pr < rows; ++pc) {
        size_t sel = pr;
        while (sel < rows && a[sel * cols + pc] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != pr)
            std::swap_ranges(a + sel * cols, a + (sel + 1) * cols, a + pr * cols);

        uint64_t inv = invmod(a[pr * cols + pc], q);
        uint64_t* prow = a + pr * cols;
        for (size_t j = pc; j < cols; ++j) prow[j] = mulmod(prow[j], inv, q);

        for (size_t r = 0; r < rows; ++r) {
            if (r == pr) continue;
            uint64_t f = a[r * cols + pc];
            if (f == 0) continue;
            uint64_t* row = a + r * cols;
            for (size_t j = pc; j < cols; ++j)
                if (prow[j]) row[j] = submod(row[j], mulmod(f, prow[j], q), q);
        }
        pivot_cols.push_back(pc);
        ++pr;
    }
}

size_t rank(const FqMatrix& m) {
    FqMatrix work = m;
    std::vector<size_t> pivots;
    Elimination::rref(work, pivots);
    return pivots.size();
}

std::vector<std::vector<FieldElement>> right_kernel_basis(const FqMatrix& m) {
    FqMatrix work = m;
    std::vector<size_t> pivots;
    Elimination::rref(work, pivots);
    const FieldParams fp = m.field();
    const size_t cols = m.cols();

    std::vector<bool> is_pivot(cols, false);
    for (size_t pc : pivots) is_pivot[pc] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<FieldElement> v(cols, FieldElement(0, fp));
        v[fc] = FieldElement(1, fp);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -work.at(i, fc);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::vector<FieldElement> matvec(const FqMatrix& m, const std::vector<FieldElement>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matvec size mismatch");
    const FieldParams fp = m.field();
    std::vector<FieldElement> out(m.rows(), FieldElement(0, fp));
    for (size_t r = 0; r < m.rows(); ++r) {
        FieldElement acc(0, fp);
        for (size_t c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

std::vector<FieldElement> solve_linear(const FqMatrix& m, const std::vector<FieldElement>& rhs) {
    if (m.rows() != m.cols() || rhs.size() != m.rows())
        throw std::invalid_argument("solve_linear wants a square system");
    const FieldParams fp = m.field();
    const size_t n = m.rows();
    FqMatrix aug(n, n + 1, fp);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) aug.set(r, c, m.at(r, c));
        aug.set(r, n, rhs[r]);
    }
    std::vector<size_t> pivots;
    Elimination::rref(aug, pivots);
    if (pivots.size() != n || pivots.back() == n)
        throw std::domain_error("singular system");
    std::vector<FieldElement> x(n, FieldElement(0, fp));
    for (size_t i = 0; i < n; ++i) x[pivots[i]] = aug.at(i, n);
    return x;
}

size_t span_rank(const std::vector<std::vector<FieldElement>>& vectors, const FieldParams& fp) {
    if (vectors.empty()) return 0;
    return rank(FqMatrix::from_rows(vectors, fp));
}

bool in_span(const std::vector<std::vector<FieldElement>>& basis,
             const std::vector<FieldElement>& v, const FieldParams& fp) {
    bool all_zero = true;
    for (const auto& x : v)
        if (!x.is_zero()) all_zero = false;
    if (all_zero) return true;
    if (basis.empty()) return false;
    size_t r0 = span_rank(basis, fp);
    auto extended = basis;
    extended.push_back(v);
    return span_rank(extended, fp) == r0;
}

}  // namespace srfr
