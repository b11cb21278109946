#include "inexp/hilbert.hpp"

#include <algorithm>
#include <map>

namespace inexp {

Count hs_function(const Diagram& n, std::uint64_t eta) { return phi(n, eta); }

namespace {

// Local simplex enumeration; hs_oracle must not lean on the diagram module.
std::vector<Exponent> monomials_up_to(std::size_t m, std::uint64_t eta) {
    std::vector<Exponent> out;
    std::vector<std::uint32_t> p(m, 0);
    std::uint64_t len = 0;
    for (;;) {
        out.push_back(Exponent{std::vector<std::uint32_t>(p)});
        std::size_t i = 0;
        while (i < p.size()) {
            if (len < eta) {
                ++p[i];
                ++len;
                break;
            }
            len -= p[i];
            p[i] = 0;
            ++i;
        }
        if (i == p.size()) break;
    }
    std::sort(out.begin(), out.end(), OrderLess{});
    return out;
}

} // namespace

Count hs_oracle(const IdealPresentation& p, std::uint64_t eta) {
    const std::vector<Exponent> monoms = monomials_up_to(p.m, eta);
    std::map<Exponent, std::size_t, OrderLess> column;
    for (std::size_t i = 0; i < monoms.size(); ++i) column.emplace(monoms[i], i);
    const std::size_t ncols = monoms.size();

    // Span of { j^eta(x^gamma * f) : |gamma| + |inexp f| <= eta }, reduced by
    // Gaussian elimination with exact rationals.
    std::vector<std::vector<Rational>> pivot_rows(ncols);
    std::vector<bool> has_pivot(ncols, false);
    std::size_t rank = 0;

    auto insert_row = [&](std::vector<Rational> row) {
        for (std::size_t c = 0; c < ncols; ++c) {
            if (row[c] == 0) continue;
            if (has_pivot[c]) {
                Rational factor = row[c];
                const auto& pr = pivot_rows[c];
                for (std::size_t j = c; j < ncols; ++j)
                    if (pr[j] != 0) row[j] -= factor * pr[j];
                continue;
            }
            Rational lead = row[c];
            for (std::size_t j = c; j < ncols; ++j) row[j] /= lead;
            pivot_rows[c] = std::move(row);
            has_pivot[c] = true;
            ++rank;
            return;
        }
    };

    for (const auto& f : p.generators) {
        std::uint64_t ord = f.initial_exponent().length();
        if (ord > eta) continue;
        for (const auto& gamma : monomials_up_to(p.m, eta - ord)) {
            std::vector<Rational> row(ncols, Rational(0));
            bool nonzero = false;
            for (const auto& [e, c] : f.terms()) {
                Exponent shifted = e + gamma;
                if (shifted.length() > eta) continue;
                row[column.at(shifted)] += c;
                nonzero = true;
            }
            if (nonzero) insert_row(std::move(row));
        }
    }
    return Count(static_cast<unsigned long>(ncols - rank));
}

HilbertSamuelTable hs_table(const IdealPresentation& p, std::size_t k,
                            std::optional<std::uint64_t> eta_max) {
    StandardBasis b = compute_standard_basis(p);
    if (!is_in_Dk_star(b.diagram(), k))
        throw DomainError(
            "hs_table: diagram is not in D*_k(m); apply a normalizing coordinate change first");
    HilbertSamuelTable table;
    PhiPolynomial fit = phi_polynomial(b.diagram(), k);
    table.eventual = fit.poly;
    table.fitted_at = fit.eta_star;
    table.dimension = p.m - k;
    Rational e = fit.poly.coefficient(table.dimension) * Rational(factorial(table.dimension));
    if (e.get_den() != 1 || e < 0)
        throw InternalError("hs_table: leading coefficient did not yield a natural multiplicity");
    table.multiplicity = e.get_num();

    // Walk down from the fitted threshold to the first eta where values and
    // polynomial disagree; tabulated agreement starts right above it.
    std::uint64_t stable = fit.eta_star;
    while (stable > 0) {
        std::uint64_t candidate = stable - 1;
        Rational val = fit.poly.evaluate(Rational(static_cast<unsigned long>(candidate)));
        if (val.get_den() != 1 || phi(b.diagram(), candidate) != val.get_num()) break;
        stable = candidate;
    }
    table.stable_from = stable;

    std::uint64_t hi = std::max(eta_max.value_or(0), stable + 4);
    for (std::uint64_t eta = 0; eta <= hi; ++eta)
        table.values.emplace_back(eta, phi(b.diagram(), eta));
    return table;
}

Count multiplicity_via_generic_level(const Diagram& n, std::size_t k) {
    return Count(static_cast<unsigned long>(generic_level(n, k).second.delta()));
}

Count multiplicity_via_evaluation(const IdealPresentation& p, std::size_t k) {
    StandardBasis b = compute_standard_basis(evaluated_ideal(p, k));
    if (!has_finite_complement(b.diagram()))
        throw DomainError("multiplicity_via_evaluation: evaluated ideal has infinite "
                          "complement; coordinates are not normalized");
    return Count(static_cast<unsigned long>(finite_complement(b.diagram()).size()));
}

MultiplicityReport verify_multiplicity_consistency(const IdealPresentation& p, std::size_t k,
                                                   std::uint64_t seed) {
    MultiplicityReport report{check_regular_sequence(p, k, seed), {}, 0, 0, 0, false};
    if (!report.certificate.certified)
        throw DomainError("verify_multiplicity_consistency: regular sequence not certified");

    std::vector<Polynomial> gens;
    for (const auto& g : p.generators) gens.push_back(linear_change(g, report.certificate.matrix));
    IdealPresentation normalized(p.m, std::move(gens), p.variables);

    report.table = hs_table(normalized, k);
    report.from_table = report.table.multiplicity;
    report.from_generic_level =
        multiplicity_via_generic_level(report.certificate.normalized_diagram, k);
    report.from_evaluation = multiplicity_via_evaluation(normalized, k);
    report.consistent = report.from_table == report.from_generic_level &&
                        report.from_generic_level == report.from_evaluation;
    return report;
}

} // namespace inexp
