#ifndef INEXP_HILBERT_HPP
#define INEXP_HILBERT_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "inexp/determinacy.hpp"
#include "inexp/diagram.hpp"
#include "inexp/standard_basis.hpp"
#include "inexp/univariate.hpp"

namespace inexp {

/// Value of the Hilbert-Samuel function read off the diagram: the number of
/// complement points of length <= eta.
Count hs_function(const Diagram& n, std::uint64_t eta);

/// dim of the quotient by (ideal + m^{eta+1}), by exact row reduction over
/// the monomials of length <= eta. Deliberately shares nothing with the
/// diagram machinery; this is the independent cross-check of the whole
/// standard-basis path.
Count hs_oracle(const IdealPresentation& p, std::uint64_t eta);

struct HilbertSamuelTable {
    std::vector<std::pair<std::uint64_t, Count>> values; // (eta, H(eta))
    UnivariatePolynomial eventual;
    std::uint64_t stable_from = 0; // smallest tabulated eta from which eventual matches
    std::uint64_t fitted_at = 0;   // threshold the interpolation ran at
    std::size_t dimension = 0;     // d = m - k
    Count multiplicity;            // e = d! * leading coefficient
};

/// Tabulates the Hilbert-Samuel function of p and fits its eventual
/// polynomial. The diagram must already lie in D*_k(m); callers normalize
/// coordinates first (verify_multiplicity_consistency does both).
HilbertSamuelTable hs_table(const IdealPresentation& p, std::size_t k,
                            std::optional<std::uint64_t> eta_max = std::nullopt);

/// e(I) as the cardinality of the generic level of the complement.
Count multiplicity_via_generic_level(const Diagram& n, std::size_t k);

/// e(I) as the number of points outside the diagram of the evaluated ideal
/// in k variables. DomainError when that complement is infinite (coordinates
/// not normalized).
Count multiplicity_via_evaluation(const IdealPresentation& p, std::size_t k);

struct MultiplicityReport {
    RegularSequenceCertificate certificate;
    HilbertSamuelTable table; // in the certificate's coordinates
    Count from_table;
    Count from_generic_level;
    Count from_evaluation;
    bool consistent = false;
};

/// Applies a seeded normalizing change and computes the multiplicity three
/// ways: from the fitted table, from the generic level, and from the
/// evaluated ideal. Disagreement is reported, never swallowed.
MultiplicityReport verify_multiplicity_consistency(const IdealPresentation& p, std::size_t k,
                                                   std::uint64_t seed);

} // namespace inexp

#endif
