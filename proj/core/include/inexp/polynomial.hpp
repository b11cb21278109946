#ifndef INEXP_POLYNOMIAL_HPP
#define INEXP_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "inexp/exponent.hpp"
#include "inexp/rational.hpp"

namespace inexp {

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept in a map ordered by the total order on exponents, so the
/// initial term (the minimal one, this being a local order) is begin().
/// Values are immutable in spirit: all operations return new polynomials.
class Polynomial {
public:
    using TermMap = std::map<Exponent, Rational, OrderLess>;

    explicit Polynomial(std::size_t m) : m_(m) {}
    Polynomial(std::size_t m, TermMap terms);

    /// The constant polynomial c in m variables.
    static Polynomial constant(std::size_t m, const Rational& c);
    /// c * x^beta.
    static Polynomial term(Exponent beta, const Rational& c);

    std::size_t dim() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// supp(F) as a vector, ascending in the total order.
    std::vector<Exponent> support() const;

    /// inexp(F): minimum of the support under the total order. F must be nonzero.
    const Exponent& initial_exponent() const;
    const Rational& initial_coefficient() const;
    /// The single term of F at inexp(F).
    Polynomial initial_term() const;

    /// Largest |beta| over the support; 0 for the zero polynomial.
    std::uint64_t total_degree() const;
    /// total_degree - |inexp|: the gap driving local division. F nonzero.
    std::uint64_t ecart() const;

    Rational coefficient(const Exponent& beta) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    bool operator==(const Polynomial& o) const = default;

    Polynomial scaled(const Rational& c) const;
    /// F * c * x^gamma without building a one-term polynomial.
    Polynomial times_term(const Exponent& gamma, const Rational& c) const;

    /// Drops all terms with |beta| > mu.
    Polynomial jet(std::uint64_t mu) const;

    /// F(x_1,...,x_k,0,...,0), re-expressed in k variables. Requires 1 <= k < m.
    Polynomial evaluate_at_zero(std::size_t k) const;

    /// Exact evaluation at a rational point (|point| == m).
    Rational evaluate(const std::vector<Rational>& point) const;

    /// The positive rational c such that F/c has coprime integer coefficients
    /// with positive initial coefficient. F must be nonzero.
    Rational content() const;
    /// F / content(): integer coefficients, gcd 1, initial coefficient > 0.
    Polynomial primitive_part() const;

    /// Renders with explicit '*' and '^' so the result re-parses to an equal
    /// polynomial; terms ascend in the total order.
    std::string to_string(const std::vector<std::string>& variables) const;

private:
    void check_dim(const Polynomial& o) const;

    std::size_t m_ = 0;
    TermMap terms_;
};

/// Canonical representative of a residue class mod m^{mu+1}: a polynomial all
/// of whose terms have length <= mu.
struct Jet {
    Polynomial poly;
    std::uint64_t order = 0;
};

/// j^mu F.
inline Jet mu_jet(const Polynomial& f, std::uint64_t mu) { return Jet{f.jet(mu), mu}; }

} // namespace inexp

#endif
