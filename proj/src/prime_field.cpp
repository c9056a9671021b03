#include "srfr/prime_field.hpp"

namespace srfr {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

// Deterministic Miller-Rabin; the listed bases decide primality exactly for
// every 64-bit integer.
bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

FieldParams::FieldParams(uint64_t modulus) : q(modulus) {
    if (q < 3 || (q & 1) == 0 || q >= (1ull << 63) || !is_prime_u64(q))
        throw std::invalid_argument("modulus must be an odd prime below 2^63");
}

FieldElement FieldElement::inv() const {
    if (q_ == 0) throw std::invalid_argument("inverse of uninitialized element");
    if (v_ == 0) throw std::domain_error("inverse of zero");
    // Extended Euclid on (v, q); q prime so the gcd is 1.
    int64_t t = 0, nt = 1;
    uint64_t r = q_, nr = v_;
    while (nr != 0) {
        uint64_t quo = r / nr;
        int64_t tmp_t = t - static_cast<int64_t>(quo) * nt;
        t = nt;
        nt = tmp_t;
        uint64_t tmp_r = r - quo * nr;
        r = nr;
        nr = tmp_r;
    }
    uint64_t res = t < 0 ? static_cast<uint64_t>(t + static_cast<int64_t>(q_)) : static_cast<uint64_t>(t);
    return FieldElement(res, q_);
}

FieldElement FieldElement::pow(uint64_t e) const {
    if (q_ == 0) throw std::invalid_argument("pow of uninitialized element");
    return FieldElement(powmod(v_, e, q_), q_);
}

FieldElement sample_uniform(const FieldParams& fp, Rng& rng) {
    return FieldElement(rng.below(fp.q), fp);
}

}  // namespace srfr
