#ifndef INEXP_STANDARD_BASIS_HPP
#define INEXP_STANDARD_BASIS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inexp/diagram.hpp"
#include "inexp/polynomial.hpp"

namespace inexp {

/// Generators of an ideal in the local ring at the origin. The generator list
/// may be empty (the zero ideal, which evaluation can produce); individual
/// generators are never zero.
struct IdealPresentation {
    std::size_t m = 0;
    std::vector<Polynomial> generators;
    std::vector<std::string> variables; // presentation only; empty or size m

    IdealPresentation(std::size_t m_, std::vector<Polynomial> gens,
                      std::vector<std::string> vars = {});
};

/// Weak normal form for the local (minimum-seeking) order, computed by
/// ecart-driven division where intermediate results may join the reducers.
/// Either r = 0, or inexp(r) lies outside every inexp(g) + N^m. The division
/// identity is u*F = sum q_i g_i + r for a unit u with u(0) != 0 (u = 1
/// whenever no self-reduction step fires); normal_form_traced returns it.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g);

struct TracedNormalForm {
    Polynomial remainder;
    Polynomial unit;                   // u, with nonzero constant term
    std::vector<Polynomial> quotients; // one per divisor, u*f = sum q_i g_i + r
};
TracedNormalForm normal_form_traced(const Polynomial& f, const std::vector<Polynomial>& g);

/// A generating set whose initial exponents generate the full diagram of the
/// ideal: completion has driven every S-pair's normal form to zero.
class StandardBasis {
public:
    StandardBasis(IdealPresentation source, std::vector<Polynomial> basis, Diagram diagram)
        : source_(std::move(source)), basis_(std::move(basis)), diagram_(std::move(diagram)) {}

    const IdealPresentation& source() const { return source_; }
    /// Minimal, each element primitive, ascending by initial exponent.
    const std::vector<Polynomial>& basis() const { return basis_; }
    const Diagram& diagram() const { return diagram_; }

private:
    IdealPresentation source_;
    std::vector<Polynomial> basis_;
    Diagram diagram_;
};

/// S-pair completion until saturation; the result's diagram is the diagram of
/// initial exponents of the ideal generated in the local ring.
StandardBasis compute_standard_basis(const IdealPresentation& p);

/// F in the ideal of the local ring. Exact (decided by weak normal form).
bool ideal_contains(const StandardBasis& b, const Polynomial& f);

/// Representative of F mod the ideal supported in the complement of the
/// diagram; zero exactly when F lies in the ideal. The true representative is
/// a power series in general, so terms are tracked up to length `eta` (a
/// generous default when omitted); `exact` reports that nothing was truncated
/// and the remainder is the full canonical representative.
struct ComplementReduction {
    Polynomial remainder;
    bool exact = true;
    std::uint64_t eta = 0;
};
ComplementReduction reduce_to_complement(const Polynomial& f, const StandardBasis& b,
                                         std::optional<std::uint64_t> eta = std::nullopt);

/// Sets the last m-k variables to zero in every generator and drops the ones
/// that vanish; the result presents the evaluated ideal in k variables.
IdealPresentation evaluated_ideal(const IdealPresentation& p, std::size_t k);

} // namespace inexp

#endif
