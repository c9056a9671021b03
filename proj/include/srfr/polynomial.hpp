#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "srfr/prime_field.hpp"

namespace srfr {

// Degree of the zero polynomial.  Chosen hugely negative (not -1) so that
// comparisons against derived quantities that are themselves negative, e.g.
// decoding radii of infeasible parameter sets, still order correctly.  The
// /4 keeps a handful of additive degree terms away from signed overflow.
inline constexpr int64_t kZeroPolyDegree = std::numeric_limits<int64_t>::min() / 4;

// Dense univariate polynomial over F_q, coefficients ascending, no trailing
// zeros stored.  The field travels with the value so the zero polynomial
// still knows its context.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const FieldParams& fp) : fp_(fp) {}
    Polynomial(std::vector<FieldElement> coeffs, const FieldParams& fp);

    static Polynomial zero(const FieldParams& fp) { return Polynomial(fp); }
    static Polynomial constant(uint64_t c, const FieldParams& fp);
    // x^k with unit coefficient
    static Polynomial monomial(size_t k, const FieldParams& fp);
    static Polynomial from_values(const std::vector<uint64_t>& coeffs, const FieldParams& fp);

    const FieldParams& field() const { return fp_; }
    bool is_zero() const { return coeffs_.empty(); }
    int64_t degree() const {
        return coeffs_.empty() ? kZeroPolyDegree : static_cast<int64_t>(coeffs_.size()) - 1;
    }
    // Coefficient of x^k, zero beyond the stored length.
    FieldElement coeff(size_t k) const;
    FieldElement leading_coeff() const;
    bool is_monic() const;

    FieldElement eval(const FieldElement& a) const;

    Polynomial monic() const;
    Polynomial shift(size_t k) const;  // multiply by x^k

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const FieldElement& c, const Polynomial& p);

    bool operator==(const Polynomial& o) const { return fp_ == o.fp_ && coeffs_ == o.coeffs_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    void match(const Polynomial& o) const {
        if (!(fp_ == o.fp_) || fp_.q == 0)
            throw std::invalid_argument("polynomial field mismatch");
    }

    FieldParams fp_;
    std::vector<FieldElement> coeffs_;
};

struct DivRem {
    Polynomial quot;
    Polynomial rem;
};

// Euclidean division by a nonzero divisor.
DivRem divrem(const Polynomial& a, const Polynomial& b);

// Monic gcd; gcd(0, 0) is the zero polynomial.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Distinct evaluation points; distinctness is validated at construction.
class EvaluationGrid {
public:
    EvaluationGrid(std::vector<FieldElement> alphas, const FieldParams& fp);

    const FieldParams& field() const { return fp_; }
    size_t size() const { return alphas_.size(); }
    const FieldElement& at(size_t j) const { return alphas_.at(j); }
    const std::vector<FieldElement>& points() const { return alphas_; }

    // prod_j (x - alpha_j) over the whole grid
    Polynomial vanishing_poly() const;

private:
    FieldParams fp_;
    std::vector<FieldElement> alphas_;
};

// Unique interpolant of degree < n through (alpha_j, values_j); Lagrange,
// quadratic in n which is plenty at the instance sizes handled here.
Polynomial interpolate(const EvaluationGrid& grid, const std::vector<FieldElement>& values);

// prod_{j in positions} (x - alpha_j); positions index into the grid
// (0-based) and must be distinct.
Polynomial error_locator(const EvaluationGrid& grid, const std::vector<size_t>& positions);

// Vector of numerators over one denominator, in lowest terms:
// gcd(f_1, ..., f_l, g) = 1 and g monic.
struct RationalVector {
    std::vector<Polynomial> f;
    Polynomial g;

    // max_i deg f_i (kZeroPolyDegree when every numerator vanishes)
    int64_t numerator_degree() const;
    bool operator==(const RationalVector& o) const { return f == o.f && g == o.g; }
};

// Divides the common gcd out of (numerators, denominator) and scales the
// result so the denominator is monic.  The denominator must be nonzero.
RationalVector reduce_fraction_vector(const std::vector<Polynomial>& numerators,
                                      const Polynomial& denominator);

}  // namespace srfr
