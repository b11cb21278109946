#ifndef INEXP_UNIVARIATE_HPP
#define INEXP_UNIVARIATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "inexp/rational.hpp"

namespace inexp {

/// Dense univariate polynomial with exact rational coefficients, used for
/// eventual counting polynomials (in the variable eta).
class UnivariatePolynomial {
public:
    UnivariatePolynomial() = default;
    /// Coefficients ascending by degree; trailing zeros are trimmed.
    explicit UnivariatePolynomial(std::vector<Rational> coeffs);

    static UnivariatePolynomial zero() { return UnivariatePolynomial(); }

    /// Unique interpolating polynomial of degree < points.size() through
    /// (x_i, y_i); the x_i must be pairwise distinct.
    static UnivariatePolynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    /// Coefficient of x^d (0 beyond the degree).
    Rational coefficient(std::size_t d) const;
    Rational leading_coefficient() const;

    Rational evaluate(const Rational& x) const;

    bool operator==(const UnivariatePolynomial& o) const = default;

    std::string to_string(const std::string& var = "eta") const;

private:
    std::vector<Rational> coeffs_;
};

} // namespace inexp

#endif
