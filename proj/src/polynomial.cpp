#include "srfr/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace srfr {

Polynomial::Polynomial(std::vector<FieldElement> coeffs, const FieldParams& fp)
    : fp_(fp), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_)
        if (c.modulus() != fp_.q) throw std::invalid_argument("coefficient field mismatch");
    trim();
}

Polynomial Polynomial::constant(uint64_t c, const FieldParams& fp) {
    return Polynomial({FieldElement(c, fp)}, fp);
}

Polynomial Polynomial::monomial(size_t k, const FieldParams& fp) {
    std::vector<FieldElement> cs(k + 1, FieldElement(0, fp));
    cs[k] = FieldElement(1, fp);
    return Polynomial(std::move(cs), fp);
}

Polynomial Polynomial::from_values(const std::vector<uint64_t>& coeffs, const FieldParams& fp) {
    std::vector<FieldElement> cs;
    cs.reserve(coeffs.size());
    for (uint64_t v : coeffs) cs.emplace_back(v, fp);
    return Polynomial(std::move(cs), fp);
}

FieldElement Polynomial::coeff(size_t k) const {
    if (k < coeffs_.size()) return coeffs_[k];
    return FieldElement(0, fp_);
}

FieldElement Polynomial::leading_coeff() const {
    if (coeffs_.empty()) return FieldElement(0, fp_);
    return coeffs_.back();
}

bool Polynomial::is_monic() const {
    return !coeffs_.empty() && coeffs_.back().value() == 1;
}

FieldElement Polynomial::eval(const FieldElement& a) const {
    FieldElement acc(0, fp_);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * a + coeffs_[i];
    return acc;
}

Polynomial Polynomial::monic() const {
    if (coeffs_.empty()) return *this;
    return leading_coeff().inv() * *this;
}

Polynomial Polynomial::shift(size_t k) const {
    if (coeffs_.empty() || k == 0) return *this;
    std::vector<FieldElement> cs(k, FieldElement(0, fp_));
    cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(cs), fp_);
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.match(b);
    std::vector<FieldElement> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElement(0, a.fp_));
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i < a.coeffs_.size()) cs[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) cs[i] += b.coeffs_[i];
    }
    return Polynomial(std::move(cs), a.fp_);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.match(b);
    std::vector<FieldElement> cs(std::max(a.coeffs_.size(), b.coeffs_.size()), FieldElement(0, a.fp_));
    for (size_t i = 0; i < cs.size(); ++i) {
        if (i < a.coeffs_.size()) cs[i] += a.coeffs_[i];
        if (i < b.coeffs_.size()) cs[i] -= b.coeffs_[i];
    }
    return Polynomial(std::move(cs), a.fp_);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.match(b);
    if (a.is_zero() || b.is_zero()) return Polynomial::zero(a.fp_);
    std::vector<FieldElement> cs(a.coeffs_.size() + b.coeffs_.size() - 1, FieldElement(0, a.fp_));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < b.coeffs_.size(); ++j)
            cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(cs), a.fp_);
}

Polynomial operator*(const FieldElement& c, const Polynomial& p) {
    std::vector<FieldElement> cs(p.coeffs_);
    for (auto& x : cs) x *= c;
    return Polynomial(std::move(cs), p.fp_);
}

std::string Polynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0 || coeffs_[i].value() != 1) out << coeffs_[i].value();
        if (i > 0) {
            if (coeffs_[i].value() != 1) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

DivRem divrem(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    const FieldParams fp = a.field();
    if (!(fp == b.field())) throw std::invalid_argument("polynomial field mismatch");
    if (a.degree() < b.degree()) return {Polynomial::zero(fp), a};

    size_t da = static_cast<size_t>(a.degree());
    size_t db = static_cast<size_t>(b.degree());
    std::vector<FieldElement> rem;
    rem.reserve(da + 1);
    for (size_t i = 0; i <= da; ++i) rem.push_back(a.coeff(i));
    std::vector<FieldElement> quot(da - db + 1, FieldElement(0, fp));
    FieldElement lc_inv = b.leading_coeff().inv();
    for (size_t k = da - db + 1; k-- > 0;) {
        FieldElement c = rem[k + db] * lc_inv;
        quot[k] = c;
        if (c.is_zero()) continue;
        for (size_t i = 0; i <= db; ++i) rem[k + i] -= c * b.coeff(i);
    }
    return {Polynomial(std::move(quot), fp), Polynomial(std::move(rem), fp)};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    Polynomial r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Polynomial r2 = divrem(r0, r1).rem;
        r0 = r1;
        r1 = r2;
    }
    return r0.is_zero() ? r0 : r0.monic();
}

EvaluationGrid::EvaluationGrid(std::vector<FieldElement> alphas, const FieldParams& fp)
    : fp_(fp), alphas_(std::move(alphas)) {
    if (alphas_.empty()) throw std::invalid_argument("empty evaluation grid");
    std::vector<uint64_t> vals;
    vals.reserve(alphas_.size());
    for (const auto& a : alphas_) {
        if (a.modulus() != fp_.q) throw std::invalid_argument("grid point field mismatch");
        vals.push_back(a.value());
    }
    std::sort(vals.begin(), vals.end());
    if (std::adjacent_find(vals.begin(), vals.end()) != vals.end())
        throw std::invalid_argument("evaluation points must be distinct");
}

Polynomial EvaluationGrid::vanishing_poly() const {
    Polynomial p = Polynomial::constant(1, fp_);
    for (const auto& a : alphas_) {
        Polynomial lin({-a, FieldElement(1, fp_)}, fp_);
        p = p * lin;
    }
    return p;
}

Polynomial interpolate(const EvaluationGrid& grid, const std::vector<FieldElement>& values) {
    const FieldParams fp = grid.field();
    const size_t n = grid.size();
    if (values.size() != n) throw std::invalid_argument("value count differs from grid size");

    Polynomial master = grid.vanishing_poly();
    Polynomial acc = Polynomial::zero(fp);
    for (size_t i = 0; i < n; ++i) {
        // ell_i = master / (x - alpha_i), scaled by 1 / ell_i(alpha_i)
        Polynomial lin({-grid.at(i), FieldElement(1, fp)}, fp);
        DivRem dr = divrem(master, lin);
        FieldElement w = dr.quot.eval(grid.at(i));
        acc = acc + (values[i] * w.inv()) * dr.quot;
    }
    return acc;
}

Polynomial error_locator(const EvaluationGrid& grid, const std::vector<size_t>& positions) {
    const FieldParams fp = grid.field();
    std::vector<size_t> sorted(positions);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate error position");
    Polynomial p = Polynomial::constant(1, fp);
    for (size_t j : sorted) {
        if (j >= grid.size()) throw std::out_of_range("error position outside grid");
        Polynomial lin({-grid.at(j), FieldElement(1, fp)}, fp);
        p = p * lin;
    }
    return p;
}

int64_t RationalVector::numerator_degree() const {
    int64_t d = kZeroPolyDegree;
    for (const auto& fi : f) d = std::max(d, fi.degree());
    return d;
}

RationalVector reduce_fraction_vector(const std::vector<Polynomial>& numerators,
                                      const Polynomial& denominator) {
    if (denominator.is_zero()) throw std::domain_error("zero denominator");
    Polynomial g = denominator;
    for (const auto& num : numerators) g = poly_gcd(g, num);
    // g divides every entry, so the remainders below are zero by construction.
    RationalVector rv;
    rv.f.reserve(numerators.size());
    Polynomial den = divrem(denominator, g).quot;
    FieldElement lc_inv = den.leading_coeff().inv();
    for (const auto& num : numerators) rv.f.push_back(lc_inv * divrem(num, g).quot);
    rv.g = lc_inv * den;
    return rv;
}

}  // namespace srfr
