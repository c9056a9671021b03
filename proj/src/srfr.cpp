#include "srfr/srfr.hpp"

#include <algorithm>

namespace srfr {

SrfrParams::SrfrParams(size_t n_, size_t l_, int64_t d_f_, int64_t d_g_, int64_t eps_)
    : n(n_), l(l_), d_f(d_f_), d_g(d_g_), eps(eps_) {
    if (l == 0) throw std::invalid_argument("need at least one function row");
    if (d_f < 0 || d_g < 0 || eps < 0)
        throw std::invalid_argument("degree caps and error cap must be nonnegative");
    if (static_cast<uint64_t>(d_f) >= n || static_cast<uint64_t>(d_g) >= n ||
        static_cast<uint64_t>(eps) >= n)
        throw std::invalid_argument("caps must stay below the number of points");
}

int64_t d_fge(int64_t d_f, int64_t d_g, int64_t deg_f, int64_t deg_g, int64_t eps,
              int64_t num_errors) {
    return std::min(d_f - deg_f, d_g - deg_g) + eps - num_errors;
}

std::vector<size_t> genuine_error_positions(const ErrorPattern& pattern, size_t l) {
    std::vector<size_t> out;
    for (size_t idx = 0; idx < pattern.positions.size(); ++idx) {
        bool nonzero = false;
        for (size_t i = 0; i < l && !nonzero; ++i)
            if (!pattern.columns[idx * l + i].is_zero()) nonzero = true;
        if (nonzero) out.push_back(pattern.positions[idx]);
    }
    return out;
}

int64_t radius_bk(int64_t n, int64_t d_f, int64_t d_g) {
    return floordiv(n - d_f - d_g - 1, 2);
}

int64_t radius_glz(int64_t n, int64_t d_f, int64_t d_g, int64_t l) {
    return floordiv(l * (n - d_f - d_g - 1), l + 1);
}

RationalVector gen_random_rv(size_t l, int64_t deg_f, int64_t deg_g,
                             const EvaluationGrid& grid, Rng& rng) {
    if (deg_f < 0 || deg_g < 0) throw std::invalid_argument("negative target degree");
    const FieldParams fp = grid.field();
    for (int attempt = 0; attempt < 1000; ++attempt) {
        // denominator: monic of exact degree deg_g, nonvanishing on the grid
        std::vector<FieldElement> gc;
        for (int64_t t = 0; t < deg_g; ++t) gc.push_back(sample_uniform(fp, rng));
        gc.emplace_back(1, fp);
        Polynomial g(std::move(gc), fp);
        bool vanishes = false;
        for (size_t j = 0; j < grid.size() && !vanishes; ++j)
            if (g.eval(grid.at(j)).is_zero()) vanishes = true;
        if (vanishes) continue;

        std::vector<Polynomial> f;
        f.reserve(l);
        for (size_t i = 0; i < l; ++i) {
            std::vector<FieldElement> fc;
            for (int64_t t = 0; t <= deg_f; ++t) fc.push_back(sample_uniform(fp, rng));
            if (i == 0) {
                while (fc.back().is_zero()) fc.back() = sample_uniform(fp, rng);
            }
            f.emplace_back(std::move(fc), fp);
        }

        Polynomial common = g;
        for (const auto& fi : f) common = poly_gcd(common, fi);
        if (common.degree() != 0) continue;  // shared factor, resample

        RationalVector rv;
        rv.f = std::move(f);
        rv.g = std::move(g);
        return rv;
    }
    throw std::runtime_error("could not sample a reduced fraction vector");
}

ObservationMatrix gen_random_instance(const SrfrParams& params, const EvaluationGrid& grid,
                                      const RationalVector& rv,
                                      const std::vector<size_t>& positions, Rng& rng,
                                      ErrorPattern* pattern_out, bool resample_zero_columns) {
    if (grid.size() != params.n) throw std::invalid_argument("grid size mismatch");
    if (rv.f.size() != params.l) throw std::invalid_argument("function count mismatch");
    if (positions.size() > static_cast<size_t>(params.eps))
        throw std::invalid_argument("more error positions than the declared cap");
    const FieldParams fp = grid.field();

    std::vector<FieldElement> y(params.l * params.n, FieldElement(0, fp));
    for (size_t j = 0; j < params.n; ++j) {
        FieldElement ginv = rv.g.eval(grid.at(j)).inv();  // throws if rv vanishes on grid
        for (size_t i = 0; i < params.l; ++i)
            y[i * params.n + j] = rv.f[i].eval(grid.at(j)) * ginv;
    }

    ErrorPattern pattern;
    pattern.positions = positions;
    std::sort(pattern.positions.begin(), pattern.positions.end());
    for (size_t j : pattern.positions) {
        if (j >= params.n) throw std::out_of_range("error position outside grid");
        std::vector<FieldElement> col(params.l, FieldElement(0, fp));
        for (;;) {
            bool nonzero = false;
            for (size_t i = 0; i < params.l; ++i) {
                col[i] = sample_uniform(fp, rng);
                if (!col[i].is_zero()) nonzero = true;
            }
            if (nonzero || !resample_zero_columns) break;
        }
        for (size_t i = 0; i < params.l; ++i) {
            y[i * params.n + j] += col[i];
            pattern.columns.push_back(col[i]);
        }
    }
    if (pattern_out) *pattern_out = std::move(pattern);
    return ObservationMatrix(params.l, grid, std::move(y));
}

SrfrDecodeResult decode_srfr(const ObservationMatrix& obs, const SrfrParams& params,
                             KeyEquationSpace* space_out) {
    if (obs.n != params.n || obs.l != params.l)
        throw std::invalid_argument("observation shape differs from parameters");

    SrfrDecodeResult res;
    KeyEquationSpace space = solution_space(obs, params.solver_bounds());
    res.space_dim = space.dimension();
    auto cand = minimal_solution(space);
    if (space_out) *space_out = std::move(space);
    if (!cand) {
        res.status = DecodeStatus::EmptySpace;
        return res;
    }
    if (cand->psi.is_zero()) {
        res.status = DecodeStatus::VerificationFailed;
        return res;
    }

    RationalVector rv = reconstruct_fraction(*cand);
    if (rv.numerator_degree() > params.d_f || rv.g.degree() > params.d_g) {
        res.status = DecodeStatus::VerificationFailed;
        return res;
    }
    size_t agreements = 0;
    for (size_t j = 0; j < obs.n; ++j) {
        FieldElement gv = rv.g.eval(obs.grid.at(j));
        if (gv.is_zero()) {
            res.status = DecodeStatus::VerificationFailed;
            return res;
        }
        bool match = true;
        for (size_t i = 0; i < obs.l; ++i)
            if (rv.f[i].eval(obs.grid.at(j)) != obs.at(i, j) * gv) {
                match = false;
                break;
            }
        if (match) ++agreements;
    }
    if (agreements + static_cast<size_t>(params.eps) < obs.n) {
        res.status = DecodeStatus::VerificationFailed;
        return res;
    }
    res.status = DecodeStatus::Success;
    res.value = std::move(rv);
    return res;
}

bool verify_span_structure(const KeyEquationSpace& space, const RationalVector& rv,
                           const Polynomial& locator, int64_t expected_dim) {
    if (expected_dim < 0) expected_dim = 0;
    if (space.dimension() != static_cast<size_t>(expected_dim)) return false;
    if (expected_dim == 0) return true;

    const FieldParams fp = space.field;
    std::vector<std::vector<FieldElement>> basis_vecs;
    basis_vecs.reserve(space.basis.size());
    for (const auto& b : space.basis)
        basis_vecs.push_back(pack_candidate(b, space.bounds, space.l, fp));

    std::vector<std::vector<FieldElement>> shifts;
    for (int64_t t = 0; t < expected_dim; ++t) {
        CandidateSolution c;
        for (const auto& fi : rv.f) c.phis.push_back((locator * fi).shift(static_cast<size_t>(t)));
        c.psi = (locator * rv.g).shift(static_cast<size_t>(t));
        std::vector<FieldElement> v;
        try {
            v = pack_candidate(c, space.bounds, space.l, fp);
        } catch (const std::invalid_argument&) {
            return false;  // shifted tuple does not live within the caps
        }
        if (!in_span(basis_vecs, v, fp)) return false;
        shifts.push_back(std::move(v));
    }
    // dimensions match and every shift lies in the space, so equality holds
    // as soon as the shifts are independent
    return span_rank(shifts, fp) == static_cast<size_t>(expected_dim);
}

}  // namespace srfr
