#ifndef INEXP_TESTS_RANDOM_INPUTS_HPP
#define INEXP_TESTS_RANDOM_INPUTS_HPP

#include "inexp/diagram.hpp"
#include "inexp/standard_basis.hpp"
#include "support/oracles.hpp"

namespace inexp::testing {

/// Random diagram in D*_k(m): one vertex on each of the first k axes plus
/// off-axis extras. Extras carry a nonzero head (some coordinate among the
/// first k positive), which keeps the generic level nonempty; diagrams with
/// head-free vertices do not arise from ideals of dimension m-k.
inline Diagram random_dk_star_diagram(Rng& rng, std::size_t m, std::size_t k,
                                      std::size_t max_extra, std::uint32_t max_coord) {
    std::vector<Exponent> gens;
    for (std::size_t i = 0; i < k; ++i)
        gens.push_back(
            Exponent::axis(m, i, 1 + static_cast<std::uint32_t>(rng.below(max_coord))));
    std::size_t extra = rng.below(max_extra + 1);
    for (std::size_t t = 0; t < extra; ++t) {
        std::vector<std::uint32_t> v(m);
        for (auto& c : v) c = static_cast<std::uint32_t>(rng.below(max_coord + 1));
        bool head_zero = true;
        for (std::size_t i = 0; i < k; ++i)
            if (v[i] != 0) head_zero = false;
        if (head_zero) v[rng.below(k)] += 1;
        gens.push_back(Exponent{std::move(v)});
    }
    return Diagram::from_exponents(m, gens);
}

/// Random ideal presentation at desk scale (m <= 3, <= 3 generators).
inline IdealPresentation random_ideal(Rng& rng, std::size_t max_m = 3, std::size_t max_gens = 3,
                                      std::uint64_t max_deg = 4) {
    std::size_t m = 1 + rng.below(max_m);
    std::size_t count = 1 + rng.below(max_gens);
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < count; ++i) gens.push_back(random_polynomial(rng, m, 4, max_deg));
    return IdealPresentation(m, std::move(gens));
}

/// k generators in m variables of the shape x_i^{a_i} + short tail;
/// generically a regular sequence with a small certified bound.
inline IdealPresentation random_complete_intersection(Rng& rng, std::size_t m, std::size_t k,
                                                      std::uint32_t max_ord = 3) {
    std::vector<Polynomial> gens;
    for (std::size_t i = 0; i < k; ++i) {
        std::uint32_t a = 1 + static_cast<std::uint32_t>(rng.below(max_ord));
        Polynomial g = Polynomial::term(Exponent::axis(m, i, a), 1);
        std::size_t extra = rng.below(3);
        for (std::size_t t = 0; t < extra; ++t) {
            std::uint64_t len = a + rng.below(3);
            if (len == 0) len = 1;
            g = g + Polynomial::term(random_exponent_of_length(rng, m, len), random_coeff(rng));
        }
        if (g.is_zero()) g = Polynomial::term(Exponent::axis(m, i, a), 1);
        gens.push_back(std::move(g));
    }
    return IdealPresentation(m, std::move(gens));
}

} // namespace inexp::testing

#endif
