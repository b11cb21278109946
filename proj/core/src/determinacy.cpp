#include "inexp/determinacy.hpp"

#include <algorithm>

#include "inexp/parallel.hpp"

namespace inexp {

IdealPresentation truncated_ideal(const IdealPresentation& p, std::uint64_t mu) {
    std::vector<Polynomial> gens;
    for (const auto& g : p.generators) {
        Polynomial j = g.jet(mu);
        if (!j.is_zero()) gens.push_back(std::move(j));
    }
    if (gens.empty() && !p.generators.empty())
        throw DomainError("truncated_ideal: every generator's jet vanishes at this order");
    return IdealPresentation(p.m, std::move(gens), p.variables);
}

namespace {

IdealPresentation transformed(const IdealPresentation& p, const RationalMatrix& m) {
    std::vector<Polynomial> gens;
    gens.reserve(p.generators.size());
    for (const auto& g : p.generators) gens.push_back(linear_change(g, m));
    return IdealPresentation(p.m, std::move(gens), p.variables);
}

std::vector<Exponent> axis_vertices_first_k(const Diagram& n, std::size_t k) {
    std::vector<Exponent> out;
    for (std::size_t i = 0; i < k; ++i) {
        const Exponent* found = nullptr;
        for (const auto& v : n.vertices())
            if (v.on_axis(i) && (!found || v[i] < (*found)[i])) found = &v;
        if (!found) return {};
        out.push_back(*found);
    }
    return out;
}

std::uint64_t max_initial_exponent_length(const IdealPresentation& p) {
    std::uint64_t l = 0;
    for (const auto& g : p.generators) l = std::max(l, g.initial_exponent().length());
    return l;
}

} // namespace

RegularSequenceCertificate check_regular_sequence(const IdealPresentation& p, std::size_t k,
                                                  std::uint64_t seed) {
    if (k < 1 || k != p.generators.size())
        throw DomainError("check_regular_sequence: k must equal the number of generators");
    if (k > p.m - 1)
        throw DomainError("check_regular_sequence: k must be at most m-1");

    RegularSequenceCertificate cert;
    cert.k = k;
    cert.seed = seed;
    cert.matrix = RationalMatrix::identity(p.m);
    cert.normalized_diagram = Diagram(p.m);

    constexpr std::size_t kMaxAttempts = 64;
    Rng rng = Rng(seed).fork(0x6d61747269786573ULL);
    for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
        RationalMatrix m = RationalMatrix::identity(p.m);
        if (attempt > 0) {
            std::int64_t bound = std::int64_t{1} << std::min<std::size_t>(attempt / 8, 4);
            do {
                for (std::size_t i = 0; i < p.m; ++i)
                    for (std::size_t j = 0; j < p.m; ++j)
                        m.at(i, j) = Rational(static_cast<long>(rng.range(-bound, bound)));
            } while (!m.invertible());
        }
        cert.attempts = attempt + 1;
        Diagram n = compute_standard_basis(transformed(p, m)).diagram();
        auto axes = axis_vertices_first_k(n, k);
        if (!axes.empty()) {
            cert.certified = true;
            cert.matrix = m;
            cert.normalized_diagram = n;
            cert.axis_vertices = std::move(axes);
            return cert;
        }
        cert.matrix = m;
        cert.normalized_diagram = n;
    }
    cert.certified = false;
    return cert;
}

Mu0Breakdown mu0_finite_complement(const IdealPresentation& p) {
    StandardBasis b = compute_standard_basis(p);
    if (!has_finite_complement(b.diagram()))
        throw DomainError("mu0_finite_complement: diagram complement is infinite");
    Mu0Breakdown out;
    out.l0 = b.diagram().max_vertex_length();
    out.l1 = max_initial_exponent_length(p);
    auto complement = finite_complement(b.diagram());
    std::uint64_t longest = 0;
    for (const auto& e : complement) longest = std::max(longest, e.length());
    out.l2 = complement.empty() ? 0 : longest + 1;
    out.mu0 = std::max({out.l0, out.l1, out.l2});
    return out;
}

DeterminacyBound determinacy_bound(const IdealPresentation& p, std::size_t k,
                                   std::uint64_t seed) {
    DeterminacyBound out;
    out.certificate = check_regular_sequence(p, k, seed);
    if (!out.certificate.certified)
        throw DomainError("determinacy_bound: regular sequence not certified (inconclusive)");
    out.l0_full = out.certificate.normalized_diagram.max_vertex_length();
    IdealPresentation normalized = transformed(p, out.certificate.matrix);
    out.evaluated = mu0_finite_complement(evaluated_ideal(normalized, k));
    out.mu0 = std::max(out.l0_full, out.evaluated.mu0);
    return out;
}

JetSweepReport jet_sweep(const IdealPresentation& p, const JetSweepOptions& options) {
    if (options.mu_max < options.mu_min)
        throw DomainError("jet_sweep: empty mu range");

    JetSweepReport report{p, options.k, options.seed, false,
                          RationalMatrix::identity(p.m), Diagram(p.m)};
    if (options.k) {
        RegularSequenceCertificate cert = check_regular_sequence(p, *options.k, options.seed);
        report.certified = cert.certified;
        if (cert.certified) report.change = cert.matrix;
    }

    IdealPresentation shared = transformed(p, report.change);
    report.target = compute_standard_basis(shared).diagram();
    report.l0 = report.target.max_vertex_length();
    report.l1 = max_initial_exponent_length(shared);
    if (report.certified) {
        try {
            report.evaluated_bound = mu0_finite_complement(evaluated_ideal(shared, *options.k));
            report.certified_mu0 = std::max(report.l0, report.evaluated_bound->mu0);
        } catch (const DomainError&) {
            // Evaluated ideal not finite-codimension; no certified bound.
        }
    }

    const std::size_t count = static_cast<std::size_t>(options.mu_max - options.mu_min) + 1;
    report.records.resize(count);
    parallel_for(count, options.threads, [&](std::size_t idx) {
        std::uint64_t mu = options.mu_min + idx;
        JetSweepRecord rec;
        rec.mu = mu;
        bool any_zero = false;
        std::vector<Polynomial> jets;
        for (const auto& g : shared.generators) {
            Polynomial j = g.jet(mu);
            if (j.is_zero())
                any_zero = true;
            else
                jets.push_back(std::move(j));
        }
        if (any_zero) {
            rec.degenerate = true;
            report.records[idx] = std::move(rec);
            return;
        }
        Diagram n = compute_standard_basis(IdealPresentation(p.m, std::move(jets))).diagram();
        rec.vertices = n.vertices();
        rec.equal_to_target = (n == report.target);
        if (!rec.equal_to_target) {
            auto diff = first_disagreement(n, report.target);
            rec.truncated_equal_up_to = static_cast<std::int64_t>(diff->length()) - 1;
        }
        if (mu >= report.l0) {
            rec.subset_ok = diagram_subset(report.target, n);
            rec.truncated_ok = truncated_equal(n, report.target, mu);
        }
        report.records[idx] = std::move(rec);
    });

    for (const auto& rec : report.records) {
        if (rec.subset_ok && !*rec.subset_ok) report.lemma_checks_ok = false;
        if (rec.truncated_ok && !*rec.truncated_ok) report.lemma_checks_ok = false;
    }
    // Longest suffix of non-degenerate equal records.
    std::optional<std::uint64_t> stable;
    for (auto it = report.records.rbegin(); it != report.records.rend(); ++it) {
        if (it->degenerate || !it->equal_to_target) break;
        stable = it->mu;
    }
    report.stabilized_at = stable;
    return report;
}

namespace {

Polynomial random_tail(std::size_t m, std::uint64_t mu, Rng& rng) {
    Polynomial tail(m);
    const std::int64_t nterms = rng.range(1, 4);
    for (std::int64_t t = 0; t < nterms; ++t) {
        std::uint64_t len = static_cast<std::uint64_t>(
            rng.range(static_cast<std::int64_t>(mu) + 1, static_cast<std::int64_t>(mu) + 3));
        std::vector<std::uint32_t> beta(m, 0);
        for (std::uint64_t u = 0; u < len; ++u) ++beta[rng.below(m)];
        std::int64_t num = 0;
        while (num == 0) num = rng.range(-5, 5);
        Rational c(static_cast<long>(num), static_cast<long>(rng.range(1, 3)));
        c.canonicalize();
        tail = tail + Polynomial::term(Exponent{std::move(beta)}, c);
    }
    return tail;
}

} // namespace

PerturbationReport perturbation_trial(const IdealPresentation& p, std::size_t k,
                                      const PerturbationOptions& options) {
    PerturbationReport report;
    report.bound = determinacy_bound(p, k, options.seed);
    if (options.mu < report.bound.mu0)
        throw DomainError("perturbation_trial: mu is below the certified bound");
    report.mu = options.mu;
    report.eta_max = report.bound.evaluated.l2 + 4;

    const RationalMatrix& change = report.bound.certificate.matrix;
    IdealPresentation normalized = transformed(p, change);
    Diagram target = report.bound.certificate.normalized_diagram;
    Diagram target_eval =
        compute_standard_basis(evaluated_ideal(normalized, k)).diagram();

    report.trials.resize(options.trials);
    Rng base(options.seed);
    parallel_for(options.trials, options.threads, [&](std::size_t t) {
        Rng rng = base.fork(0x747269616c000ULL + t);
        PerturbationTrialRecord rec;
        rec.trial = t;
        std::vector<Polynomial> perturbed;
        for (const auto& f : p.generators) {
            Polynomial tail = random_tail(p.m, options.mu, rng);
            rec.tails.push_back(tail);
            perturbed.push_back(f + tail);
        }
        IdealPresentation j_normalized =
            transformed(IdealPresentation(p.m, std::move(perturbed)), change);
        Diagram n_j = compute_standard_basis(j_normalized).diagram();

        rec.regular_ok = !axis_vertices_first_k(n_j, k).empty();
        rec.diagram_ok = (n_j == target);
        Diagram n_j_eval = compute_standard_basis(evaluated_ideal(j_normalized, k)).diagram();
        rec.evaluated_ok = (n_j_eval == target_eval);
        rec.hs_ok = true;
        for (std::uint64_t eta = 0; eta <= report.eta_max; ++eta)
            if (phi(n_j, eta) != phi(target, eta)) {
                rec.hs_ok = false;
                break;
            }
        rec.pass = rec.regular_ok && rec.diagram_ok && rec.evaluated_ok && rec.hs_ok;
        report.trials[t] = std::move(rec);
    });
    report.all_pass = true;
    for (const auto& rec : report.trials)
        if (!rec.pass) report.all_pass = false;
    return report;
}

} // namespace inexp
