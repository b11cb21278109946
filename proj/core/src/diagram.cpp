#include "inexp/diagram.hpp"

#include <algorithm>

namespace inexp {

Diagram Diagram::from_exponents(std::size_t m, const std::vector<Exponent>& generators) {
    Diagram n(m);
    std::vector<Exponent> sorted = generators;
    for (const auto& e : sorted)
        if (e.dim() != m) throw DomainError("diagram generator has wrong dimension");
    std::sort(sorted.begin(), sorted.end(), OrderLess{});
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    // A proper divisor is strictly shorter, so after sorting by the total
    // order one pass against the kept prefix suffices.
    for (const auto& e : sorted) {
        bool dominated = false;
        for (const auto& v : n.vertices_)
            if (v.divides(e)) {
                dominated = true;
                break;
            }
        if (!dominated) n.vertices_.push_back(e);
    }
    return n;
}

bool Diagram::contains(const Exponent& beta) const {
    if (beta.dim() != m_) throw DomainError("diagram membership: dimension mismatch");
    for (const auto& v : vertices_)
        if (v.divides(beta)) return true;
    return false;
}

std::uint64_t Diagram::max_vertex_length() const {
    std::uint64_t l = 0;
    for (const auto& v : vertices_) l = std::max(l, v.length());
    return l;
}

namespace {

void check_k(const Diagram& n, std::size_t k) {
    if (k < 1 || k >= n.dim()) throw DomainError("k must satisfy 1 <= k < m");
}

bool axis_has_vertex(const Diagram& n, std::size_t axis) {
    for (const auto& v : n.vertices())
        if (v.on_axis(axis)) return true;
    return false;
}

/// Smallest c with c*e_axis in N; requires such a vertex to exist.
std::uint32_t axis_bound(const Diagram& n, std::size_t axis) {
    std::uint32_t best = UINT32_MAX;
    for (const auto& v : n.vertices())
        if (v.on_axis(axis)) best = std::min(best, v[axis]);
    return best;
}

/// Walks all points of the box [0,bounds_0) x ... x [0,bounds_{d-1}).
template <typename F>
void for_each_box_point(const std::vector<std::uint32_t>& bounds, F&& f) {
    for (auto b : bounds)
        if (b == 0) return;
    std::vector<std::uint32_t> p(bounds.size(), 0);
    for (;;) {
        f(p);
        std::size_t i = 0;
        while (i < p.size()) {
            if (++p[i] < bounds[i]) break;
            p[i] = 0;
            ++i;
        }
        if (i == p.size()) return;
    }
}

} // namespace

bool is_in_Dk(const Diagram& n, std::size_t k) {
    check_k(n, k);
    for (std::size_t i = 0; i < k; ++i)
        if (!axis_has_vertex(n, i)) return false;
    return true;
}

bool is_in_Dk_star(const Diagram& n, std::size_t k) {
    if (!is_in_Dk(n, k)) return false;
    for (std::size_t i = k; i < n.dim(); ++i)
        if (axis_has_vertex(n, i)) return false;
    return true;
}

Level level(const Diagram& n, std::size_t k, const Exponent& a) {
    check_k(n, k);
    if (a.dim() != n.dim() - k) throw DomainError("level: a must live in N^(m-k)");
    if (!is_in_Dk(n, k))
        throw DomainError("level is infinite: diagram lacks a vertex on one of the first k axes");
    std::vector<std::uint32_t> bounds(k);
    for (std::size_t i = 0; i < k; ++i) bounds[i] = axis_bound(n, i);
    Level result{a, {}};
    for_each_box_point(bounds, [&](const std::vector<std::uint32_t>& p) {
        Exponent head{std::vector<std::uint32_t>(p)};
        if (!n.contains(Exponent::concat(head, a))) result.members.push_back(std::move(head));
    });
    std::sort(result.members.begin(), result.members.end(), OrderLess{});
    return result;
}

std::pair<Exponent, Level> generic_level(const Diagram& n, std::size_t k) {
    check_k(n, k);
    if (!is_in_Dk_star(n, k))
        throw DomainError("generic level requires a diagram in D*_k(m)");
    std::uint32_t bar = 0;
    for (const auto& v : n.vertices())
        for (std::size_t i = k; i < n.dim(); ++i) bar = std::max(bar, v[i]);
    Exponent a{std::vector<std::uint32_t>(n.dim() - k, bar)};
    return {a, level(n, k, a)};
}

Count simplex_count(std::int64_t t, std::size_t d) {
    if (d < 1) throw DomainError("simplex_count requires d >= 1");
    if (t < 0) return 0;
    return binomial(t + static_cast<std::int64_t>(d), d);
}

namespace {

Count box_points(std::int64_t t, std::size_t m) {
    if (t < 0) return 0;
    return binomial(t + static_cast<std::int64_t>(m), m);
}

/// Signed count of the union of the cones v+N^m over vertices[from..] within
/// lengths <= eta, with `w` the componentwise max already accumulated.
/// Subsets whose max exceeds eta are pruned: supersets only grow.
void union_count_rec(const std::vector<Exponent>& vertices, std::size_t from, const Exponent& w,
                     int sign, std::uint64_t eta, Count& acc) {
    for (std::size_t j = from; j < vertices.size(); ++j) {
        Exponent w2 = w.dim() == 0 ? vertices[j] : w.lcm(vertices[j]);
        if (w2.length() > eta) continue;
        acc += sign * box_points(static_cast<std::int64_t>(eta - w2.length()), w2.dim());
        union_count_rec(vertices, j + 1, w2, -sign, eta, acc);
    }
}

} // namespace

Count phi(const Diagram& n, std::uint64_t eta) {
    Count covered = 0;
    union_count_rec(n.vertices(), 0, Exponent{}, +1, eta, covered);
    return box_points(static_cast<std::int64_t>(eta), n.dim()) - covered;
}

std::vector<Exponent> complement_up_to(const Diagram& n, std::uint64_t eta) {
    std::vector<Exponent> out;
    // Odometer over the simplex |beta| <= eta.
    std::vector<std::uint32_t> p(n.dim(), 0);
    std::uint64_t len = 0;
    for (;;) {
        if (!n.contains(Exponent{std::vector<std::uint32_t>(p)}))
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

bool has_finite_complement(const Diagram& n) {
    for (std::size_t i = 0; i < n.dim(); ++i)
        if (!axis_has_vertex(n, i)) return false;
    return true;
}

std::vector<Exponent> finite_complement(const Diagram& n) {
    if (!has_finite_complement(n))
        throw DomainError("diagram complement is infinite (no vertex on some axis)");
    std::uint64_t bound = 0;
    for (std::size_t i = 0; i < n.dim(); ++i) bound += axis_bound(n, i);
    return complement_up_to(n, bound);
}

bool diagram_subset(const Diagram& inner, const Diagram& outer) {
    if (inner.dim() != outer.dim()) throw DomainError("diagram dimension mismatch");
    for (const auto& v : inner.vertices())
        if (!outer.contains(v)) return false;
    return true;
}

bool truncated_equal(const Diagram& n1, const Diagram& n2, std::uint64_t l) {
    if (n1.dim() != n2.dim()) throw DomainError("diagram dimension mismatch");
    auto diff = first_disagreement(n1, n2);
    return !diff || diff->length() > l;
}

std::optional<Exponent> first_disagreement(const Diagram& n1, const Diagram& n2) {
    if (n1.dim() != n2.dim()) throw DomainError("diagram dimension mismatch");
    if (n1 == n2) return std::nullopt;
    // Unequal vertex sets disagree at some vertex, so within this bound.
    std::uint64_t bound = std::max(n1.max_vertex_length(), n2.max_vertex_length());
    std::optional<Exponent> best;
    for (const auto& d : {std::pair{&n1, &n2}, std::pair{&n2, &n1}}) {
        for (const auto& v : d.first->vertices()) {
            if (d.second->contains(v)) continue;
            if (!best || order_compare(v, *best) < 0) best = v;
        }
    }
    // A vertex of one missing from the other is a disagreement, but an even
    // earlier one may hide off the vertex sets; scan below the best so far.
    std::vector<std::uint32_t> p(n1.dim(), 0);
    std::uint64_t len = 0, eta = best ? best->length() : bound;
    for (;;) {
        Exponent e{std::vector<std::uint32_t>(p)};
        if ((!best || order_compare(e, *best) < 0) && n1.contains(e) != n2.contains(e)) best = e;
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
    return best;
}

PhiPolynomial phi_polynomial(const Diagram& n, std::size_t k) {
    check_k(n, k);
    if (!is_in_Dk_star(n, k))
        throw DomainError("phi_polynomial requires a diagram in D*_k(m)");
    const std::size_t d = n.dim() - k;
    auto [a, gen] = generic_level(n, k);
    const std::size_t delta = gen.delta();

    std::uint64_t eta_star = 0;
    for (const auto& v : n.vertices()) eta_star += v.length();
    std::uint32_t bar = a.dim() == 0 ? 0 : a[0];
    eta_star += n.dim() * (static_cast<std::uint64_t>(bar) + 1);

    constexpr std::uint64_t kEtaCap = 1u << 20;
    for (; eta_star <= kEtaCap; eta_star *= 2) {
        std::vector<std::pair<Rational, Rational>> pts;
        for (std::size_t i = 0; i <= d; ++i) {
            std::uint64_t eta = eta_star + i;
            pts.emplace_back(Rational(static_cast<unsigned long>(eta)), Rational(phi(n, eta)));
        }
        UnivariatePolynomial fit = UnivariatePolynomial::interpolate(pts);
        bool ok = fit.coefficient(d) * Rational(factorial(d)) ==
                  Rational(static_cast<unsigned long>(delta));
        for (std::size_t i = 1; ok && i <= 2 * d + 2; ++i) {
            std::uint64_t eta = eta_star + d + i;
            ok = fit.evaluate(Rational(static_cast<unsigned long>(eta))) == Rational(phi(n, eta));
        }
        if (ok) return PhiPolynomial{fit, eta_star, delta};
    }
    throw InternalError("phi_polynomial: validation failed up to the eta cap");
}

} // namespace inexp
