#ifndef INEXP_MATRIX_HPP
#define INEXP_MATRIX_HPP

#include <vector>

#include "inexp/polynomial.hpp"
#include "inexp/rational.hpp"

namespace inexp {

/// Square rational matrix; rows index the substituted variables.
class RationalMatrix {
public:
    explicit RationalMatrix(std::size_t n)
        : n_(n), a_(n, std::vector<Rational>(n, Rational(0))) {}

    static RationalMatrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i][j]; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i][j]; }

    Rational determinant() const;
    bool invertible() const { return determinant() != 0; }

    /// Matrix-vector product (for evaluation-based checks of substitution).
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    bool operator==(const RationalMatrix& o) const = default;

private:
    std::size_t n_;
    std::vector<std::vector<Rational>> a_;
};

/// Substitutes x_i -> sum_j M[i][j] x_j and expands. M must be invertible;
/// total degree is preserved, and the identity matrix is the identity map.
Polynomial linear_change(const Polynomial& f, const RationalMatrix& m);

} // namespace inexp

#endif
