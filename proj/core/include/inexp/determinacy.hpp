#ifndef INEXP_DETERMINACY_HPP
#define INEXP_DETERMINACY_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "inexp/matrix.hpp"
#include "inexp/rng.hpp"
#include "inexp/standard_basis.hpp"

namespace inexp {

/// Generators replaced by their mu-jets, zero jets dropped. DomainError when
/// every jet vanishes.
IdealPresentation truncated_ideal(const IdealPresentation& p, std::uint64_t mu);

/// Outcome of the randomized search for a coordinate change putting a vertex
/// of the diagram on each of the first k axes. `certified == true` proves the
/// generators form a regular sequence (the quotient then has dimension
/// exactly m-k); `certified == false` is inconclusive, never a disproof.
struct RegularSequenceCertificate {
    bool certified = false;
    std::size_t k = 0;
    RationalMatrix matrix{0};           // witnessing change; identity if none accepted
    Diagram normalized_diagram{0};      // diagram after the change (last attempt if failed)
    std::vector<Exponent> axis_vertices; // the vertices on axes 1..k, when certified
    std::size_t attempts = 0;
    std::uint64_t seed = 0;
};

RegularSequenceCertificate check_regular_sequence(const IdealPresentation& p, std::size_t k,
                                                  std::uint64_t seed);

/// The three maxima of the finite-complement stabilization bound and their
/// maximum: l0 = longest vertex, l1 = longest generator initial exponent,
/// l2 = longest complement point + 1.
struct Mu0Breakdown {
    std::uint64_t l0 = 0;
    std::uint64_t l1 = 0;
    std::uint64_t l2 = 0;
    std::uint64_t mu0 = 0;
};

/// Requires the diagram of p to have finite complement.
Mu0Breakdown mu0_finite_complement(const IdealPresentation& p);

/// Certified jet order: past it, every tuple with the same jets generates an
/// ideal with the same diagram (in the certificate's coordinates). Computed as
/// max of l0 of the full diagram and the finite-complement bound of the
/// evaluated ideal.
struct DeterminacyBound {
    RegularSequenceCertificate certificate;
    std::uint64_t l0_full = 0;      // longest vertex of the normalized full diagram
    Mu0Breakdown evaluated;          // bound data of the evaluated ideal in k variables
    std::uint64_t mu0 = 0;
};

DeterminacyBound determinacy_bound(const IdealPresentation& p, std::size_t k,
                                   std::uint64_t seed);

struct JetSweepRecord {
    std::uint64_t mu = 0;
    bool degenerate = false; // some generator's jet vanished; no checks run
    std::vector<Exponent> vertices;
    bool equal_to_target = false;
    /// Largest l with membership agreement on |beta| <= l; absent when equal,
    /// -1 when the diagrams already differ at the origin.
    std::optional<std::int64_t> truncated_equal_up_to;
    /// Checked only when mu >= l0.
    std::optional<bool> subset_ok;
    std::optional<bool> truncated_ok;
};

struct JetSweepReport {
    IdealPresentation source;
    std::optional<std::size_t> k;
    std::uint64_t seed = 0;
    bool certified = false;
    RationalMatrix change{0};
    Diagram target{0}; // N(I) in the shared frame
    std::uint64_t l0 = 0;
    std::uint64_t l1 = 0;
    std::optional<Mu0Breakdown> evaluated_bound; // when certified and evaluable
    std::optional<std::uint64_t> certified_mu0;
    std::vector<JetSweepRecord> records;
    std::optional<std::uint64_t> stabilized_at; // empirical, within the tested range
    bool lemma_checks_ok = true;
};

struct JetSweepOptions {
    std::optional<std::size_t> k; // attempt certification when present
    std::uint64_t mu_min = 0;
    std::uint64_t mu_max = 0;
    std::uint64_t seed = 0;
    unsigned threads = 1;
};

/// For each mu in range, the diagram of the jet-truncated ideal compared
/// against the diagram of the full ideal in one shared coordinate frame,
/// with the inclusion and truncated-equality guarantees checked wherever
/// their hypotheses hold. Per-mu failures are recorded, not thrown.
JetSweepReport jet_sweep(const IdealPresentation& p, const JetSweepOptions& options);

struct PerturbationTrialRecord {
    std::uint64_t trial = 0;
    std::vector<Polynomial> tails; // what was added to each generator
    bool regular_ok = false;       // perturbed tuple certified in the shared frame
    bool diagram_ok = false;       // N(J) = N(I)
    bool evaluated_ok = false;     // N(J(0)) = N(I(0))
    bool hs_ok = false;            // counting function agreement up to eta_max
    bool pass = false;
};

struct PerturbationReport {
    DeterminacyBound bound;
    std::uint64_t mu = 0;
    std::uint64_t eta_max = 0;
    std::vector<PerturbationTrialRecord> trials;
    bool all_pass = false;
};

struct PerturbationOptions {
    std::uint64_t mu = 0; // must be >= the certified bound
    std::uint64_t seed = 0;
    unsigned trials = 20;
    unsigned threads = 1;
};

/// Random tails of length in [mu+1, mu+3] added to the generators; asserts
/// the sampled form of the determinacy statement. Sampled evidence only:
/// failures are recorded as falsifications in the report.
PerturbationReport perturbation_trial(const IdealPresentation& p, std::size_t k,
                                      const PerturbationOptions& options);

} // namespace inexp

#endif
