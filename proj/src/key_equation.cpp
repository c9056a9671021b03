#include "srfr/key_equation.hpp"

#include <algorithm>

namespace srfr {

ObservationMatrix::ObservationMatrix(size_t l_, const EvaluationGrid& grid_,
                                     std::vector<FieldElement> y_)
    : l(l_), n(grid_.size()), grid(grid_), y(std::move(y_)) {
    if (l == 0) throw std::invalid_argument("observation matrix needs at least one row");
    if (y.size() != l * n) throw std::invalid_argument("observation size mismatch");
    for (const auto& v : y)
        if (v.modulus() != grid.field().q) throw std::invalid_argument("observation field mismatch");
}

int64_t CandidateSolution::max_phi_degree() const {
    int64_t d = kZeroPolyDegree;
    for (const auto& p : phis) d = std::max(d, p.degree());
    return d;
}

FqMatrix build_matrix(const ObservationMatrix& obs, const DegreeBoundPair& bounds) {
    if (bounds.Df < 0 || bounds.Dg < 0)
        throw std::invalid_argument("build_matrix wants nonnegative degree caps");
    const FieldParams fp = obs.grid.field();
    const size_t nf = static_cast<size_t>(bounds.Df) + 1;
    const size_t ng = static_cast<size_t>(bounds.Dg) + 1;
    const size_t cols = obs.l * nf + ng;
    FqMatrix m(obs.l * obs.n, cols, fp);

    for (size_t j = 0; j < obs.n; ++j) {
        // powers of alpha_j up to max(Df, Dg)
        std::vector<FieldElement> pw(std::max(nf, ng), FieldElement(1, fp));
        for (size_t t = 1; t < pw.size(); ++t) pw[t] = pw[t - 1] * obs.grid.at(j);
        for (size_t i = 0; i < obs.l; ++i) {
            const size_t r = i * obs.n + j;
            for (size_t t = 0; t < nf; ++t) m.set(r, i * nf + t, pw[t]);
            const FieldElement neg_y = -obs.at(i, j);
            for (size_t t = 0; t < ng; ++t) m.set(r, obs.l * nf + t, neg_y * pw[t]);
        }
    }
    return m;
}

namespace {

CandidateSolution unpack(const std::vector<FieldElement>& v, size_t l, size_t nf, size_t ng,
                         const FieldParams& fp) {
    CandidateSolution c;
    c.phis.reserve(l);
    for (size_t i = 0; i < l; ++i) {
        std::vector<FieldElement> cs(v.begin() + i * nf, v.begin() + (i + 1) * nf);
        c.phis.emplace_back(std::move(cs), fp);
    }
    std::vector<FieldElement> cs(v.begin() + l * nf, v.begin() + l * nf + ng);
    c.psi = Polynomial(std::move(cs), fp);
    return c;
}

}  // namespace

KeyEquationSpace solution_space(const ObservationMatrix& obs, const DegreeBoundPair& bounds) {
    KeyEquationSpace space;
    space.l = obs.l;
    space.bounds = bounds;
    space.field = obs.grid.field();
    if (bounds.Df < 0 || bounds.Dg < 0) return space;  // infeasible caps: empty space

    FqMatrix m = build_matrix(obs, bounds);
    const size_t nf = static_cast<size_t>(bounds.Df) + 1;
    const size_t ng = static_cast<size_t>(bounds.Dg) + 1;
    for (auto& v : right_kernel_basis(m))
        space.basis.push_back(unpack(v, obs.l, nf, ng, space.field));
    return space;
}

std::optional<CandidateSolution> minimal_solution(const KeyEquationSpace& space) {
    if (space.basis.empty()) return std::nullopt;
    const FieldParams fp = space.field;
    const size_t l = space.l;
    const size_t nf = static_cast<size_t>(space.bounds.Df) + 1;
    const size_t ng = static_cast<size_t>(space.bounds.Dg) + 1;
    const size_t cols = l * nf + ng;

    // Column order for the echelon pass: psi coefficients from high degree
    // to low, then phi coefficients from high degree to low with the phi
    // index as the inner key.  A row's pivot then reports deg psi directly
    // (or, for rows with psi = 0, the largest phi degree), which turns the
    // "least degrees first" selection into a scan over echelon rows.
    std::vector<size_t> perm(cols);
    size_t k = 0;
    for (size_t t = ng; t-- > 0;) perm[k++] = l * nf + t;
    for (size_t d = nf; d-- > 0;)
        for (size_t i = 0; i < l; ++i) perm[k++] = i * nf + d;

    FqMatrix m(space.basis.size(), cols, fp);
    for (size_t r = 0; r < space.basis.size(); ++r) {
        std::vector<FieldElement> packed =
            pack_candidate(space.basis[r], space.bounds, l, fp);
        for (size_t c = 0; c < cols; ++c) m.set(r, c, packed[perm[c]]);
    }
    std::vector<size_t> pivots;
    Elimination::rref(m, pivots);
    if (pivots.empty()) return std::nullopt;  // basis held only zero tuples

    size_t best = 0;
    int64_t best_psi = 0, best_phi = 0;
    for (size_t r = 0; r < pivots.size(); ++r) {
        std::vector<FieldElement> v(cols, FieldElement(0, fp));
        for (size_t c = 0; c < cols; ++c) v[perm[c]] = m.at(r, c);
        CandidateSolution cand = unpack(v, l, nf, ng, fp);
        // psi = 0 can never reconstruct a fraction, so those tuples rank
        // behind every tuple with a usable denominator
        int64_t dpsi = cand.psi.is_zero() ? std::numeric_limits<int64_t>::max() / 4
                                          : cand.psi.degree();
        int64_t dphi = cand.max_phi_degree();
        if (r == 0 || dpsi < best_psi || (dpsi == best_psi && dphi < best_phi)) {
            best = r;
            best_psi = dpsi;
            best_phi = dphi;
        }
    }

    std::vector<FieldElement> v(cols, FieldElement(0, fp));
    for (size_t c = 0; c < cols; ++c) v[perm[c]] = m.at(best, c);
    return unpack(v, l, nf, ng, fp);
}

RationalVector reconstruct_fraction(const CandidateSolution& cand) {
    if (cand.psi.is_zero())
        throw std::invalid_argument("candidate denominator is zero");
    return reduce_fraction_vector(cand.phis, cand.psi);
}

std::vector<FieldElement> pack_candidate(const CandidateSolution& cand,
                                         const DegreeBoundPair& bounds, size_t l,
                                         const FieldParams& fp) {
    if (cand.phis.size() != l) throw std::invalid_argument("candidate width mismatch");
    if (bounds.Df < 0 || bounds.Dg < 0) throw std::invalid_argument("negative degree cap");
    const size_t nf = static_cast<size_t>(bounds.Df) + 1;
    const size_t ng = static_cast<size_t>(bounds.Dg) + 1;
    std::vector<FieldElement> v;
    v.reserve(l * nf + ng);
    for (const auto& p : cand.phis) {
        if (p.degree() > bounds.Df) throw std::invalid_argument("phi degree exceeds cap");
        for (size_t t = 0; t < nf; ++t) v.push_back(p.coeff(t));
    }
    if (cand.psi.degree() > bounds.Dg) throw std::invalid_argument("psi degree exceeds cap");
    for (size_t t = 0; t < ng; ++t) v.push_back(cand.psi.coeff(t));
    return v;
}

bool candidate_satisfies(const ObservationMatrix& obs, const DegreeBoundPair& bounds,
                         const CandidateSolution& cand) {
    if (cand.phis.size() != obs.l) return false;
    for (const auto& p : cand.phis)
        if (p.degree() > bounds.Df) return false;
    if (cand.psi.degree() > bounds.Dg) return false;
    for (size_t j = 0; j < obs.n; ++j) {
        const FieldElement psi_val = cand.psi.eval(obs.grid.at(j));
        for (size_t i = 0; i < obs.l; ++i)
            if (cand.phis[i].eval(obs.grid.at(j)) != obs.at(i, j) * psi_val) return false;
    }
    return true;
}

}  // namespace srfr
