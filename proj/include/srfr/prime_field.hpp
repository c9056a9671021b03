#pragma once

#include <cstdint>
#include <stdexcept>

#include "srfr/rng.hpp"

namespace srfr {

// Modulus descriptor for F_q.  Construction validates that q is an odd prime
// (deterministic Miller-Rabin, exact for 64-bit inputs), so every other type
// can assume its field context is sound.
struct FieldParams {
    uint64_t q = 0;

    FieldParams() = default;
    explicit FieldParams(uint64_t modulus);

    bool operator==(const FieldParams& o) const { return q == o.q; }
};

bool is_prime_u64(uint64_t n);

// Residue in [0, q) together with its modulus.  Mixing elements from
// different fields is a usage error and throws.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(uint64_t value, const FieldParams& fp) : v_(value % fp.q), q_(fp.q) {}

    uint64_t value() const { return v_; }
    uint64_t modulus() const { return q_; }
    FieldParams field() const { return FieldParams(q_); }
    bool is_zero() const { return v_ == 0; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.match(b);
        uint64_t s = a.v_ + b.v_;  // q < 2^63 so no wrap
        if (s >= a.q_) s -= a.q_;
        return FieldElement(s, a.q_);
    }

    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.match(b);
        uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.q_ - b.v_;
        return FieldElement(s, a.q_);
    }

    FieldElement operator-() const {
        return FieldElement(v_ == 0 ? 0 : q_ - v_, q_);
    }

    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.match(b);
        unsigned __int128 p = static_cast<unsigned __int128>(a.v_) * b.v_;
        return FieldElement(static_cast<uint64_t>(p % a.q_), a.q_);
    }

    FieldElement inv() const;
    FieldElement pow(uint64_t e) const;

    friend FieldElement operator/(FieldElement a, const FieldElement& b) {
        return a * b.inv();
    }

    FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
    FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
    FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }

    bool operator==(const FieldElement& o) const { return v_ == o.v_ && q_ == o.q_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    FieldElement(uint64_t v, uint64_t q) : v_(v), q_(q) {}

    void match(const FieldElement& o) const {
        if (q_ != o.q_ || q_ == 0)
            throw std::invalid_argument("field element modulus mismatch");
    }

    uint64_t v_ = 0;
    uint64_t q_ = 0;
};

FieldElement sample_uniform(const FieldParams& fp, Rng& rng);

}  // namespace srfr
