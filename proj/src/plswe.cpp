#include "srfr/plswe.hpp"

#include <algorithm>

namespace srfr {

int64_t LinearSystem::deg_A() const {
    int64_t d = kZeroPolyDegree;
    for (const auto& p : A) d = std::max(d, p.degree());
    return d;
}

int64_t LinearSystem::deg_b() const {
    int64_t d = kZeroPolyDegree;
    for (const auto& p : b) d = std::max(d, p.degree());
    return d;
}

PlsweParams::PlsweParams(const SrfrParams& base_, int64_t d_A_, int64_t d_b_)
    : base(base_), d_A(d_A_), d_b(d_b_) {
    if (d_A < 0 || d_b < 0) throw std::invalid_argument("system degree caps must be nonnegative");
}

Polynomial poly_determinant(const std::vector<Polynomial>& m, size_t l, const FieldParams& fp) {
    if (m.size() != l * l) throw std::invalid_argument("determinant wants a square matrix");
    if (l == 0) return Polynomial::constant(1, fp);
    std::vector<Polynomial> w = m;
    bool negate = false;
    Polynomial prev = Polynomial::constant(1, fp);
    for (size_t k = 0; k + 1 < l; ++k) {
        size_t piv = k;
        while (piv < l && w[piv * l + k].is_zero()) ++piv;
        if (piv == l) return Polynomial::zero(fp);
        if (piv != k) {
            for (size_t j = k; j < l; ++j) std::swap(w[piv * l + j], w[k * l + j]);
            negate = !negate;
        }
        // one-step fraction-free update; division by the previous pivot is
        // exact, which divrem's zero remainder confirms
        for (size_t i = k + 1; i < l; ++i) {
            for (size_t j = k + 1; j < l; ++j) {
                Polynomial num = w[k * l + k] * w[i * l + j] - w[i * l + k] * w[k * l + j];
                DivRem dr = divrem(num, prev);
                if (!dr.rem.is_zero()) throw std::logic_error("inexact fraction-free division");
                w[i * l + j] = dr.quot;
            }
            w[i * l + k] = Polynomial::zero(fp);
        }
        prev = w[k * l + k];
    }
    Polynomial det = w[(l - 1) * l + (l - 1)];
    if (negate) det = -FieldElement(1, fp) * det;
    return det;
}

RationalVector solve_system(const LinearSystem& sys) {
    if (sys.A.empty() || sys.b.size() != sys.l) throw std::invalid_argument("malformed system");
    const FieldParams fp = sys.b[0].field();
    Polynomial det = poly_determinant(sys.A, sys.l, fp);
    if (det.is_zero()) throw std::domain_error("singular polynomial system");

    std::vector<Polynomial> nums;
    nums.reserve(sys.l);
    for (size_t i = 0; i < sys.l; ++i) {
        std::vector<Polynomial> replaced = sys.A;
        for (size_t r = 0; r < sys.l; ++r) replaced[r * sys.l + i] = sys.b[r];
        nums.push_back(poly_determinant(replaced, sys.l, fp));
    }
    return reduce_fraction_vector(nums, det);
}

namespace {

Polynomial sample_poly_below(int64_t deg, const FieldParams& fp, Rng& rng) {
    std::vector<FieldElement> cs;
    for (int64_t t = 0; t <= deg; ++t) cs.push_back(sample_uniform(fp, rng));
    return Polynomial(std::move(cs), fp);
}

int64_t max_degree(const std::vector<Polynomial>& ps) {
    int64_t d = kZeroPolyDegree;
    for (const auto& p : ps) d = std::max(d, p.degree());
    return d;
}

}  // namespace

std::pair<LinearSystem, RationalVector> gen_system(size_t l, int64_t degA, int64_t degb,
                                                   const EvaluationGrid& grid, Rng& rng,
                                                   int budget, std::optional<int64_t> want_deg_f,
                                                   std::optional<int64_t> want_deg_g) {
    if (l == 0 || degA < 0 || degb < 0) throw std::invalid_argument("bad system shape");
    const FieldParams fp = grid.field();
    for (int attempt = 0; attempt < budget; ++attempt) {
        LinearSystem sys;
        sys.l = l;
        sys.d_A = degA;
        sys.d_b = degb;
        sys.A.clear();
        sys.b.clear();
        for (size_t i = 0; i < l * l; ++i) sys.A.push_back(sample_poly_below(degA, fp, rng));
        for (size_t i = 0; i < l; ++i) sys.b.push_back(sample_poly_below(degb, fp, rng));
        if (max_degree(sys.A) != degA || max_degree(sys.b) != degb) continue;

        Polynomial det = poly_determinant(sys.A, l, fp);
        if (det.is_zero()) continue;
        bool ok = true;
        for (size_t j = 0; j < grid.size() && ok; ++j)
            if (det.eval(grid.at(j)).is_zero()) ok = false;
        if (!ok) continue;

        RationalVector rv = solve_system(sys);
        for (size_t j = 0; j < grid.size() && ok; ++j)
            if (rv.g.eval(grid.at(j)).is_zero()) ok = false;
        if (!ok) continue;
        if (want_deg_f && rv.numerator_degree() != *want_deg_f) continue;
        if (want_deg_g && rv.g.degree() != *want_deg_g) continue;

        return {std::move(sys), std::move(rv)};
    }
    throw std::runtime_error("gen_system: no admissible system within budget");
}

ObservationMatrix blackbox(const LinearSystem& sys, const EvaluationGrid& grid,
                           const std::vector<size_t>& positions, Rng& rng,
                           ErrorPattern* pattern_out) {
    const FieldParams fp = grid.field();
    const size_t l = sys.l, n = grid.size();
    std::vector<FieldElement> y(l * n, FieldElement(0, fp));
    for (size_t j = 0; j < n; ++j) {
        FqMatrix aj(l, l, fp);
        std::vector<FieldElement> bj(l, FieldElement(0, fp));
        for (size_t r = 0; r < l; ++r) {
            for (size_t c = 0; c < l; ++c) aj.set(r, c, sys.a(r, c).eval(grid.at(j)));
            bj[r] = sys.b[r].eval(grid.at(j));
        }
        std::vector<FieldElement> yj = solve_linear(aj, bj);
        for (size_t i = 0; i < l; ++i) y[i * n + j] = yj[i];
    }

    ErrorPattern pattern;
    pattern.positions = positions;
    std::sort(pattern.positions.begin(), pattern.positions.end());
    for (size_t j : pattern.positions) {
        if (j >= n) throw std::out_of_range("error position outside grid");
        for (size_t i = 0; i < l; ++i) {
            FieldElement v = sample_uniform(fp, rng);
            // keep the deviation from the honest value so callers can tell
            // which declared positions are genuine errors
            pattern.columns.push_back(v - y[i * n + j]);
            y[i * n + j] = v;
        }
    }
    if (pattern_out) *pattern_out = std::move(pattern);
    return ObservationMatrix(l, grid, std::move(y));
}

int64_t radius_kps(int64_t n, int64_t d_A, int64_t d_f, int64_t d_b, int64_t d_g) {
    return floordiv(n - std::max(d_A + d_f, d_b + d_g) - 1, 2);
}

int64_t radius_glz2(int64_t n, int64_t d_A, int64_t d_f, int64_t d_b, int64_t d_g, int64_t l) {
    return floordiv(l * (n - std::max(d_A + d_f, d_b + d_g) - 1), l + 1);
}

PrimedRadii primed_radii(int64_t n, int64_t l, int64_t eps, int64_t d_f, int64_t d_g,
                         int64_t d_A, int64_t d_b, int64_t deg_f, int64_t deg_g) {
    PrimedRadii r;
    r.bk = floordiv(n - std::max(deg_f + d_g, deg_g + d_f) - 1, 2);
    r.kps = floordiv(n - std::max(d_A + deg_f, d_b + deg_g) - 1, 2);
    r.glz = n - std::max(deg_f + d_g, d_f + deg_g) - ceildiv(eps, l) - 1;
    r.glz2 = n - std::max(d_A + deg_f, d_b + deg_g) - ceildiv(eps, l) - 1;
    return r;
}

int64_t n1_threshold(int64_t Df, int64_t Dg, int64_t deg_f, int64_t deg_g,
                     int64_t num_errors, int64_t l) {
    return std::max(Df + deg_g, Dg + deg_f) + ceildiv(num_errors, l) + 1;
}

int64_t n2_threshold(int64_t Df, int64_t Dg, int64_t deg_A, int64_t deg_b,
                     int64_t num_errors, int64_t l) {
    return std::max(Df + deg_A, Dg + deg_b) + ceildiv(num_errors, l) + 1;
}

int64_t rank_target(int64_t l, int64_t Df, int64_t Dg, int64_t dfge) {
    return l * (Df + 1) + Dg + 1 - std::max<int64_t>(dfge + 1, 0);
}

DegreeBoundPair algorithm1_bounds(const PlsweParams& params, int stage) {
    const int64_t n = static_cast<int64_t>(params.base.n);
    const int64_t shave = ceildiv(params.base.eps, static_cast<int64_t>(params.base.l)) + 1;
    if (stage == 1) return {n - params.base.d_g - shave, n - params.base.d_f - shave};
    if (stage == 2) return {n - params.d_A - shave, n - params.d_b - shave};
    throw std::invalid_argument("stage must be 1 or 2");
}

ObliviousOutcome algorithm1(const ObservationMatrix& obs, const PlsweParams& params) {
    if (obs.n != params.base.n || obs.l != params.base.l)
        throw std::invalid_argument("observation shape differs from parameters");
    ObliviousOutcome out;
    for (int stage = 1; stage <= 2; ++stage) {
        KeyEquationSpace space = solution_space(obs, algorithm1_bounds(params, stage));
        if (space.dimension() > 0) {
            out.candidate = minimal_solution(space);
            out.stage = stage;
            out.space_dim = space.dimension();
            return out;
        }
    }
    out.exceeded = true;
    return out;
}

std::pair<ObservationMatrix, AdversarialWitness> gen_adversarial_instance(
    const LinearSystem& sys, const RationalVector& rv, const EvaluationGrid& grid,
    const std::vector<size_t>& positions, AdversarialVariant variant) {
    const FieldParams fp = grid.field();
    const size_t l = rv.f.size(), n = grid.size();

    std::vector<FieldElement> y(l * n, FieldElement(0, fp));
    for (size_t j = 0; j < n; ++j) {
        FieldElement ginv = rv.g.eval(grid.at(j)).inv();
        for (size_t i = 0; i < l; ++i) y[i * n + j] = rv.f[i].eval(grid.at(j)) * ginv;
    }

    AdversarialWitness wit;
    wit.variant = variant;
    wit.groups.assign(l, {});
    std::vector<size_t> sorted(positions);
    std::sort(sorted.begin(), sorted.end());

    for (size_t t = 0; t < sorted.size(); ++t) {
        const size_t j = sorted[t];
        if (j >= n) throw std::out_of_range("error position outside grid");
        const size_t gidx = t % l;  // round-robin keeps every group within ceil(|E|/l)
        wit.groups[gidx].push_back(j);

        if (variant == AdversarialVariant::N1) {
            // f(a_j) - g(a_j) y_j = unit vector of the group:
            // only row gidx moves, by -1/g(a_j)
            FieldElement ginv = rv.g.eval(grid.at(j)).inv();
            y[gidx * n + j] -= ginv;
        } else {
            // f(a_j) - g(a_j) y_j = -A(a_j)^{-1} g(a_j) nu:
            // shift the whole column by the gidx-th column of A(a_j)^{-1}
            FqMatrix aj(l, l, fp);
            for (size_t r = 0; r < l; ++r)
                for (size_t c = 0; c < l; ++c) aj.set(r, c, sys.a(r, c).eval(grid.at(j)));
            std::vector<FieldElement> unit(l, FieldElement(0, fp));
            unit[gidx] = FieldElement(1, fp);
            std::vector<FieldElement> w = solve_linear(aj, unit);
            for (size_t i = 0; i < l; ++i) y[i * n + j] += w[i];
        }
    }
    return {ObservationMatrix(l, grid, std::move(y)), std::move(wit)};
}

}  // namespace srfr
