#include "inexp/polynomial.hpp"

#include <sstream>

namespace inexp {

Polynomial::Polynomial(std::size_t m, TermMap terms) : m_(m), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.dim() != m_) throw DomainError("term exponent has wrong dimension");
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
}

Polynomial Polynomial::constant(std::size_t m, const Rational& c) {
    Polynomial p(m);
    if (c != 0) p.terms_.emplace(Exponent::zero(m), c);
    return p;
}

Polynomial Polynomial::term(Exponent beta, const Rational& c) {
    Polynomial p(beta.dim());
    if (c != 0) p.terms_.emplace(std::move(beta), c);
    return p;
}

std::vector<Exponent> Polynomial::support() const {
    std::vector<Exponent> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

const Exponent& Polynomial::initial_exponent() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no initial exponent");
    return terms_.begin()->first;
}

const Rational& Polynomial::initial_coefficient() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no initial coefficient");
    return terms_.begin()->second;
}

Polynomial Polynomial::initial_term() const {
    if (terms_.empty()) throw DomainError("zero polynomial has no initial term");
    return term(terms_.begin()->first, terms_.begin()->second);
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.length());
    return d;
}

std::uint64_t Polynomial::ecart() const { return total_degree() - initial_exponent().length(); }

Rational Polynomial::coefficient(const Exponent& beta) const {
    auto it = terms_.find(beta);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::check_dim(const Polynomial& o) const {
    if (m_ != o.m_) throw DomainError("polynomial dimension mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_dim(o);
    Polynomial r(m_);
    r.terms_ = terms_;
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = r.terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(m_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_dim(o);
    Polynomial r(m_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e = e1 + e2;
            Rational c = c1 * c2;
            auto [it, inserted] = r.terms_.emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    Polynomial r(m_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Polynomial Polynomial::times_term(const Exponent& gamma, const Rational& c) const {
    Polynomial r(m_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e + gamma, k * c);
    return r;
}

Polynomial Polynomial::jet(std::uint64_t mu) const {
    Polynomial r(m_);
    for (const auto& [e, c] : terms_)
        if (e.length() <= mu) r.terms_.emplace(e, c);
    return r;
}

Polynomial Polynomial::evaluate_at_zero(std::size_t k) const {
    if (k < 1 || k >= m_)
        throw DomainError("evaluate_at_zero: k must satisfy 1 <= k < m");
    Polynomial r(k);
    for (const auto& [e, c] : terms_) {
        bool tail_free = true;
        for (std::size_t i = k; i < m_; ++i)
            if (e[i] != 0) {
                tail_free = false;
                break;
            }
        if (tail_free) r.terms_.emplace(e.head(k), c);
    }
    return r;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != m_) throw DomainError("evaluate: point has wrong dimension");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m_; ++i)
            for (std::uint32_t p = 0; p < e[i]; ++p) t *= point[i];
        acc += t;
    }
    return acc;
}

Rational Polynomial::content() const {
    if (terms_.empty()) throw DomainError("content of the zero polynomial");
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (initial_coefficient() < 0) content = -content;
    return content;
}

Polynomial Polynomial::primitive_part() const { return scaled(1 / content()); }

std::string Polynomial::to_string(const std::vector<std::string>& variables) const {
    if (variables.size() != m_) throw DomainError("to_string: wrong number of variable names");
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool printed = false;
        if (a != 1 || e.is_zero()) {
            out << a.get_str();
            printed = true;
        }
        for (std::size_t i = 0; i < m_; ++i) {
            if (e[i] == 0) continue;
            if (printed) out << "*";
            out << variables[i];
            if (e[i] > 1) out << "^" << e[i];
            printed = true;
        }
    }
    return out.str();
}

} // namespace inexp
