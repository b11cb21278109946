#include "inexp/matrix.hpp"

namespace inexp {

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Rational RationalMatrix::determinant() const {
    auto a = a_;
    Rational det(1);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && a[pivot][col] == 0) ++pivot;
        if (pivot == n_) return 0;
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t row = col + 1; row < n_; ++row) {
            if (a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n_; ++j) a[row][j] -= f * a[col][j];
        }
    }
    return det;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != n_) throw DomainError("matrix-vector dimension mismatch");
    std::vector<Rational> r(n_, Rational(0));
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) r[i] += a_[i][j] * v[j];
    return r;
}

Polynomial linear_change(const Polynomial& f, const RationalMatrix& m) {
    const std::size_t n = f.dim();
    if (m.size() != n) throw DomainError("linear_change: matrix size does not match dimension");
    if (!m.invertible()) throw DomainError("linear_change: singular matrix");

    // Image of each variable, then per-variable power cache filled on demand.
    std::vector<Polynomial> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial::TermMap row;
        for (std::size_t j = 0; j < n; ++j)
            if (m.at(i, j) != 0) row.emplace(Exponent::axis(n, j, 1), m.at(i, j));
        images.emplace_back(n, std::move(row));
    }
    std::vector<std::vector<Polynomial>> powers(n, {Polynomial::constant(n, 1)});
    auto power = [&](std::size_t i, std::uint32_t e) -> const Polynomial& {
        auto& cache = powers[i];
        while (cache.size() <= e) cache.push_back(cache.back() * images[i]);
        return cache[e];
    };

    Polynomial result(n);
    for (const auto& [beta, c] : f.terms()) {
        Polynomial t = Polynomial::constant(n, c);
        for (std::size_t i = 0; i < n; ++i)
            if (beta[i] > 0) t = t * power(i, beta[i]);
        result = result + t;
    }
    return result;
}

} // namespace inexp
