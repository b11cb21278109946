#include "inexp/univariate.hpp"

#include <sstream>

#include "inexp/errors.hpp"

namespace inexp {

UnivariatePolynomial::UnivariatePolynomial(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UnivariatePolynomial UnivariatePolynomial::interpolate(
    const std::vector<std::pair<Rational, Rational>>& points) {
    // Newton divided differences, then expansion to the monomial basis.
    const std::size_t n = points.size();
    if (n == 0) return zero();
    std::vector<Rational> coef(n);
    for (std::size_t i = 0; i < n; ++i) coef[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            Rational dx = points[i].first - points[i - level].first;
            if (dx == 0) throw DomainError("interpolate: repeated abscissa");
            coef[i] = (coef[i] - coef[i - 1]) / dx;
        }
    // Horner-style expansion: p = coef[n-1]; p = p*(x - x_i) + coef[i].
    std::vector<Rational> poly{coef[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        poly.insert(poly.begin(), Rational(0));
        for (std::size_t j = 0; j + 1 < poly.size(); ++j)
            poly[j] -= points[i].first * poly[j + 1];
        poly[0] += coef[i];
    }
    return UnivariatePolynomial(std::move(poly));
}

Rational UnivariatePolynomial::coefficient(std::size_t d) const {
    return d < coeffs_.size() ? coeffs_[d] : Rational(0);
}

Rational UnivariatePolynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational UnivariatePolynomial::evaluate(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

std::string UnivariatePolynomial::to_string(const std::string& var) const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = coeffs_.size(); d-- > 0;) {
        if (coeffs_[d] == 0) continue;
        Rational a = coeffs_[d];
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (d == 0 || a != 1) out << a.get_str();
        if (d > 0) {
            if (a != 1) out << "*";
            out << var;
            if (d > 1) out << "^" << d;
        }
    }
    return out.str();
}

} // namespace inexp
