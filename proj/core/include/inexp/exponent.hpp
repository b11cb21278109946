#ifndef INEXP_EXPONENT_HPP
#define INEXP_EXPONENT_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "inexp/errors.hpp"

namespace inexp {

/// A point of N^m: the multi-degree of a monomial x_1^{b_1}...x_m^{b_m}.
///
/// Two orders live on exponents and must not be confused:
///  - order_compare: the total order by (length, components) compared
///    lexicographically; initial exponents are minima under it.
///  - divides: the componentwise partial order; diagram membership.
class Exponent {
public:
    Exponent() = default;
    explicit Exponent(std::vector<std::uint32_t> beta) : beta_(std::move(beta)) {}
    Exponent(std::initializer_list<std::uint32_t> beta) : beta_(beta) {}

    static Exponent zero(std::size_t m) { return Exponent(std::vector<std::uint32_t>(m, 0)); }

    /// c times the i-th unit vector (i is 0-based).
    static Exponent axis(std::size_t m, std::size_t i, std::uint32_t c) {
        std::vector<std::uint32_t> v(m, 0);
        v.at(i) = c;
        return Exponent(std::move(v));
    }

    std::size_t dim() const { return beta_.size(); }
    std::uint32_t operator[](std::size_t i) const { return beta_[i]; }
    const std::vector<std::uint32_t>& components() const { return beta_; }

    /// |beta| = b_1 + ... + b_m.
    std::uint64_t length() const {
        return std::accumulate(beta_.begin(), beta_.end(), std::uint64_t{0});
    }

    bool is_zero() const {
        for (auto b : beta_)
            if (b != 0) return false;
        return true;
    }

    bool operator==(const Exponent& o) const = default;

    Exponent operator+(const Exponent& o) const {
        check_dim(o);
        std::vector<std::uint32_t> v(beta_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.beta_[i];
        return Exponent(std::move(v));
    }

    /// Componentwise difference; requires o.divides(*this).
    Exponent operator-(const Exponent& o) const {
        check_dim(o);
        std::vector<std::uint32_t> v(beta_);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (o.beta_[i] > v[i]) throw DomainError("exponent subtraction would go negative");
            v[i] -= o.beta_[i];
        }
        return Exponent(std::move(v));
    }

    /// Componentwise maximum: the exponent of lcm(x^a, x^b).
    Exponent lcm(const Exponent& o) const {
        check_dim(o);
        std::vector<std::uint32_t> v(beta_);
        for (std::size_t i = 0; i < v.size(); ++i)
            if (o.beta_[i] > v[i]) v[i] = o.beta_[i];
        return Exponent(std::move(v));
    }

    /// Componentwise <=, i.e. x^this divides x^o.
    bool divides(const Exponent& o) const {
        check_dim(o);
        for (std::size_t i = 0; i < beta_.size(); ++i)
            if (beta_[i] > o.beta_[i]) return false;
        return true;
    }

    /// True when the support of the exponent is contained in {i}; the origin
    /// lies on every axis.
    bool on_axis(std::size_t i) const {
        for (std::size_t j = 0; j < beta_.size(); ++j)
            if (j != i && beta_[j] != 0) return false;
        return true;
    }

    /// First k components, as a point of N^k.
    Exponent head(std::size_t k) const {
        return Exponent(std::vector<std::uint32_t>(beta_.begin(), beta_.begin() + k));
    }

    /// Components k+1..m (0-based: k..m-1), as a point of N^{m-k}.
    Exponent tail(std::size_t k) const {
        return Exponent(std::vector<std::uint32_t>(beta_.begin() + k, beta_.end()));
    }

    /// Concatenation (head, tail) of two exponents.
    static Exponent concat(const Exponent& head, const Exponent& tail) {
        std::vector<std::uint32_t> v(head.beta_);
        v.insert(v.end(), tail.beta_.begin(), tail.beta_.end());
        return Exponent(std::move(v));
    }

    std::string to_string() const;

private:
    void check_dim(const Exponent& o) const {
        if (beta_.size() != o.beta_.size())
            throw DomainError("exponent dimension mismatch: " + std::to_string(beta_.size()) +
                              " vs " + std::to_string(o.beta_.size()));
    }

    std::vector<std::uint32_t> beta_;
};

/// The total order: by length, ties broken reverse-lexicographically so that
/// exponents heavier in earlier variables come first (a < b iff |a| < |b|, or
/// the lengths agree and a_j < b_j at the last index j where they differ).
/// This is the local order under which a quotient finite over the last m-k
/// variables puts diagram vertices on the first k axes.
inline std::strong_ordering order_compare(const Exponent& a, const Exponent& b) {
    if (a.dim() != b.dim())
        throw DomainError("order_compare: exponent dimension mismatch");
    if (auto c = a.length() <=> b.length(); c != 0) return c;
    for (std::size_t i = a.dim(); i-- > 0;)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

/// Strict-weak-order functor for sorted containers keyed by the total order.
struct OrderLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        return order_compare(a, b) < 0;
    }
};

} // namespace inexp

#endif
