#ifndef INEXP_DIAGRAM_HPP
#define INEXP_DIAGRAM_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "inexp/exponent.hpp"
#include "inexp/univariate.hpp"

namespace inexp {

/// A co-ideal N of N^m (N + N^m = N), stored by its unique minimal vertex
/// set. The empty vertex set is the empty diagram, whose complement is all
/// of N^m; a diagram with the origin as its only vertex is all of N^m.
class Diagram {
public:
    explicit Diagram(std::size_t m) : m_(m) {}

    /// Smallest diagram containing every element of `generators`; vertices
    /// are the componentwise-minimal elements.
    static Diagram from_exponents(std::size_t m, const std::vector<Exponent>& generators);

    std::size_t dim() const { return m_; }
    /// Pairwise incomparable, ascending in the total order.
    const std::vector<Exponent>& vertices() const { return vertices_; }
    bool empty() const { return vertices_.empty(); }

    /// beta in N, i.e. some vertex divides beta.
    bool contains(const Exponent& beta) const;

    /// Max |v| over vertices (the paper's l_0); 0 for the empty diagram.
    std::uint64_t max_vertex_length() const;

    bool operator==(const Diagram& o) const = default;

private:
    std::size_t m_;
    std::vector<Exponent> vertices_;
};

/// The slice L_a of the complement over a point a of the last m-k
/// coordinates; members live in N^k.
struct Level {
    Exponent a;
    std::vector<Exponent> members;
    std::size_t delta() const { return members.size(); }
};

/// N has a vertex on each of the first k coordinate axes (so every level is
/// finite). Requires 1 <= k < m.
bool is_in_Dk(const Diagram& n, std::size_t k);

/// In D_k and with no vertex on any of the axes k+1..m.
bool is_in_Dk_star(const Diagram& n, std::size_t k);

/// Exact member set of the a-level. Requires n in D_k(m); a has dimension m-k.
Level level(const Diagram& n, std::size_t k, const Exponent& a);

/// The stable level over the deep cone: the witness a has every coordinate
/// equal to the largest vertex coordinate in positions k+1..m. Requires n in
/// D*_k(m); the result equals level(n, k, a') for every a' >= a componentwise.
std::pair<Exponent, Level> generic_level(const Diagram& n, std::size_t k);

/// #{beta in N^d : |beta| <= t} = binomial(t+d, d); 0 for t < 0. Requires d >= 1.
Count simplex_count(std::int64_t t, std::size_t d);

/// Number of complement points of length <= eta, computed by
/// inclusion-exclusion over vertex subsets (each subset contributes a
/// simplex count at its componentwise maximum).
Count phi(const Diagram& n, std::uint64_t eta);

/// The complement points of length <= eta themselves, ascending in the total
/// order. Enumeration, not counting; levels and thresholds build on this.
std::vector<Exponent> complement_up_to(const Diagram& n, std::uint64_t eta);

/// True when the complement of n is finite, i.e. n has a vertex on every axis.
bool has_finite_complement(const Diagram& n);

/// All complement points; DomainError when the complement is infinite.
std::vector<Exponent> finite_complement(const Diagram& n);

bool diagram_subset(const Diagram& inner, const Diagram& outer);

/// Same membership for every |beta| <= l.
bool truncated_equal(const Diagram& n1, const Diagram& n2, std::uint64_t l);

/// Smallest point (total order) on which memberships differ, or nullopt when
/// the diagrams are equal.
std::optional<Exponent> first_disagreement(const Diagram& n1, const Diagram& n2);

/// The eventual polynomial of phi together with the threshold it was fitted
/// at. Fits m-k+1 consecutive values at eta >= eta_star, validates on
/// 2(m-k)+2 further points, and checks the eta^{m-k} coefficient against
/// delta/(m-k)! from the generic level; doubles eta_star on failure.
struct PhiPolynomial {
    UnivariatePolynomial poly;
    std::uint64_t eta_star = 0;
    std::size_t delta = 0;
};
PhiPolynomial phi_polynomial(const Diagram& n, std::size_t k);

} // namespace inexp

#endif
