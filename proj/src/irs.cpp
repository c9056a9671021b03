#include "srfr/irs.hpp"

namespace srfr {

IrsCode::IrsCode(size_t n_, size_t k_, size_t l_, EvaluationGrid grid_)
    : n(n_), k(k_), l(l_), grid(std::move(grid_)) {
    if (k < 1 || k > n) throw std::invalid_argument("need 1 <= k <= n");
    if (l < 1) throw std::invalid_argument("need at least one interleaved row");
    if (grid.size() != n) throw std::invalid_argument("grid size differs from code length");
}

CodewordMatrix irs_encode(const IrsCode& code, const std::vector<Polynomial>& message) {
    if (message.size() != code.l) throw std::invalid_argument("message row count mismatch");
    const FieldParams fp = code.grid.field();
    std::vector<FieldElement> y(code.l * code.n, FieldElement(0, fp));
    for (size_t i = 0; i < code.l; ++i) {
        if (message[i].degree() > static_cast<int64_t>(code.k) - 1)
            throw std::invalid_argument("message degree exceeds k - 1");
        for (size_t j = 0; j < code.n; ++j)
            y[i * code.n + j] = message[i].eval(code.grid.at(j));
    }
    return CodewordMatrix(code.l, code.grid, std::move(y));
}

IrsDecodeResult irs_decode(const IrsCode& code, const CodewordMatrix& received, int64_t eps) {
    if (received.n != code.n || received.l != code.l)
        throw std::invalid_argument("received word shape mismatch");
    if (eps < 0 || static_cast<size_t>(eps) >= code.n)
        throw std::invalid_argument("error cap out of range");

    SrfrParams params(code.n, code.l, static_cast<int64_t>(code.k) - 1, 0, eps);
    SrfrDecodeResult inner = decode_srfr(received, params);

    IrsDecodeResult res;
    res.status = inner.status;
    res.space_dim = inner.space_dim;
    if (!inner.ok()) return res;
    // denominator cap 0 plus reduction forces g = 1 on success
    res.message = std::move(inner.value->f);
    return res;
}

}  // namespace srfr
