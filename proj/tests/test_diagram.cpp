#include <doctest.h>

#include "inexp/diagram.hpp"
#include "support/oracles.hpp"
#include "support/random_inputs.hpp"

using namespace inexp;
using testing::complement_count_by_enumeration;
using testing::cone_union_member;
using testing::random_dk_star_diagram;
using testing::random_exponent;
using testing::simplex_points;

TEST_CASE("vertex minimality") {
    Diagram n = Diagram::from_exponents(2, {Exponent{2, 0}, Exponent{3, 0}, Exponent{0, 3}});
    CHECK(n.vertices() == std::vector<Exponent>{Exponent{2, 0}, Exponent{0, 3}});

    // The transient vertex of the reference example survives minimalization.
    Diagram n55 = Diagram::from_exponents(2, {Exponent{3, 1}, Exponent{2, 3}, Exponent{1, 6}});
    CHECK(n55.vertices().size() == 3);

    CHECK(Diagram::from_exponents(2, {}).empty());

    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        std::size_t m = 1 + rng.below(4);
        std::vector<Exponent> gens;
        for (std::size_t j = 0; j < 1 + rng.below(7); ++j)
            gens.push_back(random_exponent(rng, m, 5));
        Diagram n2 = Diagram::from_exponents(m, gens);
        for (const auto& a : n2.vertices())
            for (const auto& b : n2.vertices())
                if (!(a == b)) CHECK_FALSE(a.divides(b));
    }
}

TEST_CASE("membership") {
    Diagram n = Diagram::from_exponents(2, {Exponent{2, 0}, Exponent{0, 3}});
    CHECK_FALSE(n.contains(Exponent{1, 1}));
    CHECK(n.contains(Exponent{2, 5}));
    CHECK_THROWS_AS(n.contains(Exponent{1, 1, 1}), DomainError);

    // Against enumeration of the cone union from the raw generator set.
    Rng rng(32);
    for (int i = 0; i < 60; ++i) {
        std::size_t m = 1 + rng.below(3);
        std::vector<Exponent> gens;
        for (std::size_t j = 0; j < 1 + rng.below(5); ++j)
            gens.push_back(random_exponent(rng, m, 4));
        Diagram n2 = Diagram::from_exponents(m, gens);
        for (const auto& beta : simplex_points(m, 7))
            CHECK(n2.contains(beta) == cone_union_member(gens, beta));
    }
}

TEST_CASE("co-ideal property") {
    Rng rng(33);
    for (int i = 0; i < 200; ++i) {
        std::size_t m = 1 + rng.below(3);
        std::vector<Exponent> gens;
        for (std::size_t j = 0; j < 1 + rng.below(4); ++j)
            gens.push_back(random_exponent(rng, m, 4));
        Diagram n = Diagram::from_exponents(m, gens);
        Exponent beta = random_exponent(rng, m, 6);
        if (n.contains(beta)) CHECK(n.contains(beta + random_exponent(rng, m, 3)));
    }
}

TEST_CASE("D_k and D*_k membership") {
    Diagram a = Diagram::from_exponents(2, {Exponent{2, 0}});
    CHECK(is_in_Dk(a, 1));
    CHECK(is_in_Dk_star(a, 1));

    Diagram b = Diagram::from_exponents(2, {Exponent{2, 0}, Exponent{0, 4}});
    CHECK(is_in_Dk(b, 1));
    CHECK_FALSE(is_in_Dk_star(b, 1));

    Diagram c = Diagram::from_exponents(2, {Exponent{1, 1}});
    CHECK_FALSE(is_in_Dk(c, 1));

    Diagram d = Diagram::from_exponents(3, {Exponent{1, 0, 0}, Exponent{0, 1, 0}});
    CHECK(is_in_Dk(d, 2));
    CHECK(is_in_Dk_star(d, 2));
    CHECK_THROWS_AS(is_in_Dk(d, 3), DomainError); // k < m required
}

TEST_CASE("levels") {
    Diagram n1 = Diagram::from_exponents(2, {Exponent{2, 0}});
    Level l = level(n1, 1, Exponent{0u});
    CHECK(l.members == std::vector<Exponent>{Exponent{0u}, Exponent{1u}});
    CHECK(l.delta() == 2);

    Diagram n2 = Diagram::from_exponents(2, {Exponent{2, 0}, Exponent{1, 1}, Exponent{0, 4}});
    CHECK(level(n2, 1, Exponent{0u}).delta() == 2);
    CHECK(level(n2, 1, Exponent{1u}).members == std::vector<Exponent>{Exponent{0u}});
    CHECK(level(n2, 1, Exponent{4u}).delta() == 0);

    Diagram n3 = Diagram::from_exponents(3, {Exponent{1, 0, 0}, Exponent{0, 1, 0}});
    for (std::uint32_t a = 0; a < 3; ++a) {
        Level l3 = level(n3, 2, Exponent{a});
        CHECK(l3.members == std::vector<Exponent>{Exponent{0, 0}});
    }

    Diagram infinite = Diagram::from_exponents(2, {Exponent{1, 1}});
    CHECK_THROWS_AS(level(infinite, 1, Exponent{0u}), DomainError);
}

TEST_CASE("generic level") {
    auto [a1, l1] = generic_level(Diagram::from_exponents(2, {Exponent{2, 0}}), 1);
    CHECK(a1 == Exponent{0u});
    CHECK(l1.delta() == 2);

    CHECK_THROWS_AS(
        generic_level(Diagram::from_exponents(2, {Exponent{2, 0}, Exponent{1, 1}, Exponent{0, 4}}),
                      1),
        DomainError);

    Diagram n = Diagram::from_exponents(2, {Exponent{2, 0}, Exponent{1, 2}});
    auto [a, l] = generic_level(n, 1);
    CHECK(a == Exponent{2u});
    CHECK(l.members == std::vector<Exponent>{Exponent{0u}});
    for (std::uint32_t j = 2; j <= 6; ++j) {
        Level probe = level(n, 1, Exponent{j});
        CHECK(probe.members == l.members);
    }
}

TEST_CASE("level stabilization beyond the vertex bound") {
    Rng rng(34);
    for (int i = 0; i < 40; ++i) {
        std::size_t m = 2 + rng.below(3);
        std::size_t k = 1 + rng.below(m - 1);
        Diagram n = random_dk_star_diagram(rng, m, k, 4, 3);
        auto [a, gen] = generic_level(n, k);
        // Probe a grid strictly beyond the witness in every direction.
        for (std::uint32_t bump = 0; bump <= 2; ++bump) {
            std::vector<std::uint32_t> probe(m - k);
            for (std::size_t j = 0; j < m - k; ++j)
                probe[j] = a[j] + bump + static_cast<std::uint32_t>(rng.below(2));
            CHECK(level(n, k, Exponent{std::move(probe)}).members == gen.members);
        }
    }
}

TEST_CASE("simplex counts") {
    for (std::int64_t t = 0; t <= 10; ++t) CHECK(simplex_count(t, 1) == t + 1);
    for (std::size_t d = 1; d <= 4; ++d) CHECK(simplex_count(0, d) == 1);
    CHECK(simplex_count(3, 2) == 10);
    CHECK(simplex_count(-1, 3) == 0);
    CHECK_THROWS_AS(simplex_count(3, 0), DomainError);
    for (std::size_t d = 1; d <= 4; ++d)
        for (std::int64_t t = 0; t <= 10; ++t) {
            CHECK(simplex_count(t, d) == binomial(t + static_cast<std::int64_t>(d), d));
            CHECK(simplex_count(t, d) ==
                  Count(static_cast<unsigned long>(simplex_points(d, t).size())));
            // Lemma-style cross-check: the empty diagram's complement is everything.
            CHECK(simplex_count(t, d) == phi(Diagram(d), static_cast<std::uint64_t>(t)));
        }
}

TEST_CASE("complement counting") {
    Diagram n = Diagram::from_exponents(2, {Exponent{2, 0}});
    CHECK(phi(n, 0) == 1);
    for (std::uint64_t eta = 1; eta <= 10; ++eta) CHECK(phi(n, eta) == 2 * eta + 1);

    for (std::size_t m = 1; m <= 3; ++m) {
        std::vector<Exponent> axes;
        for (std::size_t i = 0; i < m; ++i) axes.push_back(Exponent::axis(m, i, 1));
        Diagram maximal = Diagram::from_exponents(m, axes);
        for (std::uint64_t eta = 0; eta <= 6; ++eta) CHECK(phi(maximal, eta) == 1);
    }

    Diagram empty(2);
    for (std::uint64_t eta = 0; eta <= 8; ++eta)
        CHECK(phi(empty, eta) == Count((eta + 1) * (eta + 2) / 2));
}

TEST_CASE("phi agrees with box enumeration") {
    Rng rng(35);
    for (int i = 0; i < 60; ++i) {
        std::size_t m = 1 + rng.below(4);
        std::vector<Exponent> gens;
        for (std::size_t j = 0; j < 1 + rng.below(6); ++j)
            gens.push_back(random_exponent(rng, m, 4));
        Diagram n = Diagram::from_exponents(m, gens);
        for (std::uint64_t eta = 0; eta <= 10; ++eta) {
            Count expected(
                static_cast<unsigned long>(complement_count_by_enumeration(m, gens, eta)));
            CHECK(phi(n, eta) == expected);
            CHECK(complement_up_to(n, eta).size() == expected);
        }
    }
}

TEST_CASE("finite complements") {
    Diagram n = Diagram::from_exponents(2, {Exponent{2, 0}, Exponent{0, 2}});
    CHECK(has_finite_complement(n));
    auto pts = finite_complement(n);
    CHECK(pts == std::vector<Exponent>{Exponent{0, 0}, Exponent{1, 0}, Exponent{0, 1},
                                       Exponent{1, 1}});
    CHECK_FALSE(has_finite_complement(Diagram::from_exponents(2, {Exponent{2, 0}})));
    CHECK_THROWS_AS(finite_complement(Diagram::from_exponents(2, {Exponent{2, 0}})), DomainError);
}

TEST_CASE("diagram comparisons") {
    Diagram a = Diagram::from_exponents(2, {Exponent{2, 0}, Exponent{0, 3}});
    Diagram b = Diagram::from_exponents(2, {Exponent{0, 3}, Exponent{2, 0}});
    CHECK(a == b);

    CHECK(diagram_subset(Diagram::from_exponents(2, {Exponent{2, 0}}),
                         Diagram::from_exponents(2, {Exponent{1, 0}})));
    CHECK_FALSE(diagram_subset(Diagram::from_exponents(2, {Exponent{1, 0}}),
                               Diagram::from_exponents(2, {Exponent{2, 0}})));

    Diagram c = Diagram::from_exponents(2, {Exponent{2, 0}});
    Diagram d = Diagram::from_exponents(2, {Exponent{2, 0}, Exponent{0, 9}});
    CHECK(truncated_equal(c, d, 8));
    CHECK_FALSE(truncated_equal(c, d, 9));
    CHECK(first_disagreement(c, d) == Exponent{0, 9});
    CHECK_FALSE(first_disagreement(c, c).has_value());
}

TEST_CASE("eventual counting polynomial") {
    auto fit1 = phi_polynomial(Diagram::from_exponents(2, {Exponent{2, 0}}), 1);
    CHECK(fit1.poly == UnivariatePolynomial({Rational(1), Rational(2)})); // 2 eta + 1
    CHECK(fit1.delta == 2);

    // k = m is rejected outright.
    CHECK_THROWS_AS(
        phi_polynomial(Diagram::from_exponents(2, {Exponent{1, 0}, Exponent{0, 1}}), 2),
        DomainError);

    auto fit2 = phi_polynomial(Diagram::from_exponents(3, {Exponent{3, 0, 0}}), 1);
    CHECK(fit2.poly.degree() == 2);
    CHECK(fit2.poly.leading_coefficient() == Rational(3, 2)); // 3 / 2!
    CHECK(fit2.delta == 3);
}

TEST_CASE("eventual polynomial degree and leading coefficient") {
    Rng rng(36);
    for (int i = 0; i < 40; ++i) {
        std::size_t m = 2 + rng.below(3);
        std::size_t k = 1 + rng.below(m - 1);
        Diagram n = random_dk_star_diagram(rng, m, k, 4, 3);
        auto fit = phi_polynomial(n, k);
        std::size_t d = m - k;
        CHECK(fit.poly.degree() == static_cast<int>(d));
        CHECK(fit.poly.leading_coefficient() ==
              Rational(static_cast<unsigned long>(fit.delta)) / Rational(factorial(d)));
        CHECK(fit.delta == generic_level(n, k).second.delta());
    }
}

TEST_CASE("degenerate generic level still fits consistently") {
    // A vertex with head zero empties the generic level; the eventual
    // polynomial drops degree and the eta^{m-k} coefficient is 0 = delta/d!.
    Diagram n = Diagram::from_exponents(3, {Exponent{2, 0, 0}, Exponent{0, 1, 1}});
    REQUIRE(is_in_Dk_star(n, 1));
    auto fit = phi_polynomial(n, 1);
    CHECK(fit.delta == 0);
    CHECK(fit.poly.degree() < 2);
    CHECK(fit.poly.coefficient(2) == 0);
    Rational at20 = fit.poly.evaluate(Rational(20));
    CHECK(Count(at20.get_num()) == phi(n, 20));
}
