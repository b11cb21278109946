#include "inexp/standard_basis.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace inexp {

IdealPresentation::IdealPresentation(std::size_t m_, std::vector<Polynomial> gens,
                                     std::vector<std::string> vars)
    : m(m_), generators(std::move(gens)), variables(std::move(vars)) {
    for (const auto& g : generators) {
        if (g.dim() != m) throw DomainError("generator dimension mismatch");
        if (g.is_zero()) throw DomainError("zero generator in ideal presentation");
    }
    if (!variables.empty() && variables.size() != m)
        throw DomainError("variable list must name every coordinate");
}

namespace {

constexpr std::uint64_t kReductionStepBudget = 10'000'000;
constexpr std::size_t kCompletionPairBudget = 1'000'000;

struct Reducer {
    Polynomial poly; // primitive or scaled copy; only the cone of its inexp matters
    Exponent inexp;
    Rational lc;
    std::uint64_t ecart;
};

Reducer make_reducer(const Polynomial& p) {
    return Reducer{p, p.initial_exponent(), p.initial_coefficient(), p.ecart()};
}

/// Core Mora loop. When `trace` is non-null, content scaling is disabled and
/// the division identity u*f = sum q_i g_i + r is accumulated exactly (the
/// first g.size() reducers are the divisors).
Polynomial mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                            TracedNormalForm* trace) {
    if (g.empty()) throw DomainError("normal_form: empty divisor list");
    const std::size_t m = f.dim();
    std::vector<Reducer> reducers;
    reducers.reserve(g.size());
    for (const auto& gi : g) {
        if (gi.is_zero()) throw DomainError("normal_form: zero divisor");
        if (gi.dim() != m) throw DomainError("normal_form: dimension mismatch");
        reducers.push_back(make_reducer(gi));
    }

    // Trace data: unit/quotients for the running h, and for every stored
    // self-reducer, indexed in parallel with `reducers`.
    struct Certificate {
        Polynomial unit;
        std::vector<Polynomial> quotients;
    };
    std::vector<Certificate> stored_certs;
    Certificate cert{Polynomial::constant(m, 1),
                     std::vector<Polynomial>(g.size(), Polynomial(m))};

    Polynomial h = f;
    Rational scale(1); // stored h = scale * (true h); only without trace
    std::uint64_t steps = 0;

    while (!h.is_zero()) {
        const Exponent& target = h.initial_exponent();
        const std::size_t npool = reducers.size();
        std::size_t best = npool;
        for (std::size_t i = 0; i < npool; ++i) {
            if (!reducers[i].inexp.divides(target)) continue;
            if (best == npool || reducers[i].ecart < reducers[best].ecart) best = i;
        }
        if (best == npool) break;

        if (reducers[best].ecart > h.total_degree() - target.length()) {
            reducers.push_back(make_reducer(h));
            if (trace) stored_certs.push_back(cert);
        }

        const Reducer& red = reducers[best];
        Exponent gamma = target - red.inexp;
        Rational c = h.initial_coefficient() / red.lc;
        h = h - red.poly.times_term(gamma, c);

        if (trace) {
            if (best < g.size()) {
                cert.quotients[best] =
                    cert.quotients[best] + Polynomial::term(gamma, c);
            } else {
                const Certificate& sc = stored_certs[best - g.size()];
                cert.unit = cert.unit - sc.unit.times_term(gamma, c);
                for (std::size_t i = 0; i < g.size(); ++i)
                    cert.quotients[i] = cert.quotients[i] - sc.quotients[i].times_term(gamma, c);
            }
        } else if (!h.is_zero()) {
            Rational content = h.content();
            h = h.scaled(1 / content);
            scale /= content;
        }

        if (++steps > kReductionStepBudget)
            throw InternalError("normal_form: reduction step budget exceeded");
    }

    if (trace) {
        trace->remainder = h;
        trace->unit = std::move(cert.unit);
        trace->quotients = std::move(cert.quotients);
        return trace->remainder;
    }
    return scale == 1 ? h : h.scaled(1 / scale);
}

// ---------------------------------------------------------------------------
// Completion by homogenization: generators are homogenized with an extra
// variable t (stored as the last coordinate) and saturated with ordinary
// Buchberger S-pairs under the degree-compatible global order whose leading
// term of f^h sits over inexp(f). Every reduction stays inside one degree, so
// the climb that ecart-driven division can fall into never happens; setting
// t = 1 afterwards yields elements of the ideal whose initial exponents
// generate the full diagram.

/// Orders homogeneous terms leading-first: higher total degree first, ties by
/// the local order of the x-part (the order-minimal x-part leads).
struct HomogeneousLess {
    bool operator()(const Exponent& a, const Exponent& b) const {
        if (auto c = a.length() <=> b.length(); c != 0) return c > 0;
        std::size_t m = a.dim() - 1;
        return order_compare(a.head(m), b.head(m)) < 0;
    }
};

using HomogeneousPoly = std::map<Exponent, Rational, HomogeneousLess>;

HomogeneousPoly homogenize(const Polynomial& f) {
    const std::uint64_t d = f.total_degree();
    HomogeneousPoly out;
    for (const auto& [e, c] : f.terms()) {
        std::vector<std::uint32_t> v = e.components();
        v.push_back(static_cast<std::uint32_t>(d - e.length()));
        out.emplace(Exponent{std::move(v)}, c);
    }
    return out;
}

Polynomial dehomogenize(const HomogeneousPoly& f, std::size_t m) {
    Polynomial::TermMap terms;
    for (const auto& [e, c] : f) {
        auto [it, inserted] = terms.emplace(e.head(m), c);
        if (!inserted) it->second += c;
    }
    return Polynomial(m, std::move(terms));
}

/// Divides out the largest power of the homogenizing variable. The stripped
/// element still dehomogenizes into the ideal, and stripping keeps the
/// t-multiple pile-up of plain homogenized completion from forming.
bool strip_t(HomogeneousPoly& f) {
    if (f.empty()) return false;
    std::uint32_t c = UINT32_MAX;
    const std::size_t t = f.begin()->first.dim() - 1;
    for (const auto& [e, unused] : f) c = std::min(c, e[t]);
    if (c == 0) return false;
    HomogeneousPoly out;
    for (const auto& [e, coeff] : f) {
        std::vector<std::uint32_t> v = e.components();
        v[t] -= c;
        out.emplace(Exponent{std::move(v)}, coeff);
    }
    f = std::move(out);
    return true;
}

void make_primitive(HomogeneousPoly& f) {
    if (f.empty()) return;
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : f) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (f.begin()->second < 0) content = -content;
    for (auto& [e, c] : f) c /= content;
}

/// Head reduction of a homogeneous polynomial against homogeneous reducers.
void head_reduce(HomogeneousPoly& h, const std::vector<HomogeneousPoly>& basis) {
    std::uint64_t steps = 0;
    while (!h.empty()) {
        const Exponent& lead = h.begin()->first;
        bool reduced = false;
        for (const auto& g : basis) {
            const Exponent& glead = g.begin()->first;
            if (!glead.divides(lead)) continue;
            Exponent shift = lead - glead;
            Rational factor = h.begin()->second / g.begin()->second;
            for (const auto& [e, c] : g) {
                Exponent target = e + shift;
                auto [it, inserted] = h.emplace(target, -factor * c);
                if (!inserted) {
                    it->second -= factor * c;
                    if (it->second == 0) h.erase(it);
                }
            }
            reduced = true;
            break;
        }
        if (!reduced) return;
        if (++steps > kReductionStepBudget)
            throw InternalError("head_reduce: step budget exceeded");
    }
}

std::vector<Polynomial> complete_by_homogenization(const std::vector<Polynomial>& gens,
                                                   std::size_t m) {
    std::vector<HomogeneousPoly> basis;
    basis.reserve(gens.size());
    for (const auto& g : gens) basis.push_back(homogenize(g));

    struct PairEntry {
        std::uint64_t degree; // total degree of the lcm of the leads
        Exponent lcm;
        std::uint64_t stamp;
        std::size_t i, j;
    };
    auto later = [m](const PairEntry& a, const PairEntry& b) {
        if (a.degree != b.degree) return a.degree > b.degree;
        if (auto c = order_compare(a.lcm.head(m), b.lcm.head(m)); c != 0) return c > 0;
        return a.stamp > b.stamp;
    };
    std::priority_queue<PairEntry, std::vector<PairEntry>, decltype(later)> pairs(later);
    std::uint64_t stamp = 0;
    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            const Exponent& a = basis[i].begin()->first;
            const Exponent& b = basis[j].begin()->first;
            Exponent lcm = a.lcm(b);
            // Coprime leads reduce to zero (product criterion; the order is
            // global here, where the classical proof applies).
            if (lcm == a + b) continue;
            pairs.push(PairEntry{lcm.length(), lcm, stamp++, i, j});
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

    std::size_t processed = 0;
    while (!pairs.empty()) {
        PairEntry e = pairs.top();
        pairs.pop();
        if (++processed > kCompletionPairBudget)
            throw InternalError("compute_standard_basis: pair budget exceeded");
        const HomogeneousPoly& a = basis[e.i];
        const HomogeneousPoly& b = basis[e.j];
        Exponent sa = e.lcm - a.begin()->first;
        Exponent sb = e.lcm - b.begin()->first;
        HomogeneousPoly s;
        for (const auto& [exp, c] : a) s.emplace(exp + sa, c / a.begin()->second);
        for (const auto& [exp, c] : b) {
            auto [it, inserted] = s.emplace(exp + sb, -c / b.begin()->second);
            if (!inserted) {
                it->second -= c / b.begin()->second;
                if (it->second == 0) s.erase(it);
            }
        }
        for (;;) {
            head_reduce(s, basis);
            if (s.empty() || !strip_t(s)) break;
        }
        if (s.empty()) continue;
        make_primitive(s);
        basis.push_back(std::move(s));
        push_pairs_with(basis.size() - 1);
    }

    std::vector<Polynomial> out;
    out.reserve(basis.size());
    for (const auto& g : basis) {
        Polynomial p = dehomogenize(g, m);
        if (!p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

} // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g) {
    if (f.is_zero()) return f;
    return mora_normal_form(f, g, nullptr);
}

TracedNormalForm normal_form_traced(const Polynomial& f, const std::vector<Polynomial>& g) {
    TracedNormalForm trace{Polynomial(f.dim()), Polynomial::constant(f.dim(), 1),
                           std::vector<Polynomial>(g.size(), Polynomial(f.dim()))};
    if (f.is_zero()) return trace;
    mora_normal_form(f, g, &trace);
    return trace;
}

StandardBasis compute_standard_basis(const IdealPresentation& p) {
    // A generator with nonzero constant term is a unit of the local ring, and
    // conversely a proper local ideal has none; short-circuit the unit ideal
    // rather than letting division grind its way up to it.
    for (const auto& g : p.generators) {
        if (g.initial_exponent().length() == 0) {
            Diagram everything = Diagram::from_exponents(p.m, {Exponent::zero(p.m)});
            return StandardBasis(p, {Polynomial::constant(p.m, 1)}, std::move(everything));
        }
    }

    std::vector<Polynomial> gens;
    gens.reserve(p.generators.size());
    for (const auto& g : p.generators) gens.push_back(g.primitive_part());
    std::vector<Polynomial> basis = complete_by_homogenization(gens, p.m);

    // Minimal basis: initial exponents pairwise non-dividing.
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        auto c = order_compare(basis[a].initial_exponent(), basis[b].initial_exponent());
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Polynomial> minimal;
    std::vector<Exponent> inexps;
    for (std::size_t idx : order) {
        const Exponent& e = basis[idx].initial_exponent();
        bool covered = false;
        for (const auto& v : inexps)
            if (v.divides(e)) {
                covered = true;
                break;
            }
        if (covered) continue;
        inexps.push_back(e);
        minimal.push_back(basis[idx]);
    }

    Diagram diagram = Diagram::from_exponents(p.m, inexps);
    return StandardBasis(p, std::move(minimal), std::move(diagram));
}

bool ideal_contains(const StandardBasis& b, const Polynomial& f) {
    if (f.dim() != b.source().m) throw DomainError("ideal_contains: dimension mismatch");
    if (f.is_zero()) return true;
    if (b.basis().empty()) return false;
    return normal_form(f, b.basis()).is_zero();
}

ComplementReduction reduce_to_complement(const Polynomial& f, const StandardBasis& b,
                                         std::optional<std::uint64_t> eta_opt) {
    if (f.dim() != b.source().m) throw DomainError("reduce_to_complement: dimension mismatch");
    std::uint64_t eta =
        eta_opt.value_or(f.total_degree() + b.diagram().max_vertex_length() + 8);
    ComplementReduction out{Polynomial(f.dim()), true, eta};
    if (f.is_zero()) return out;
    if (ideal_contains(b, f)) return out;

    // Frontier reduction mod m^{eta+1}: every step replaces the least term
    // lying in the diagram by strictly later ones, so it terminates within
    // the length bound. All steps subtract exact basis multiples; no units.
    Polynomial h = f;
    Polynomial frozen(f.dim());
    std::uint64_t steps = 0;
    while (!h.is_zero()) {
        // Terms beyond eta form a suffix of the ordered term map.
        if (h.total_degree() > eta) {
            Polynomial::TermMap kept;
            for (const auto& [e, c] : h.terms()) {
                if (e.length() > eta) {
                    out.exact = false;
                    break;
                }
                kept.emplace(e, c);
            }
            h = Polynomial(f.dim(), std::move(kept));
            if (h.is_zero()) break;
        }
        const Exponent e = h.initial_exponent();
        const Rational c = h.initial_coefficient();
        if (!b.diagram().contains(e)) {
            frozen = frozen + Polynomial::term(e, c);
            h = h - Polynomial::term(e, c);
            continue;
        }
        bool reduced = false;
        for (const auto& g : b.basis()) {
            if (!g.initial_exponent().divides(e)) continue;
            h = h - g.times_term(e - g.initial_exponent(), c / g.initial_coefficient());
            reduced = true;
            break;
        }
        if (!reduced)
            throw InternalError("reduce_to_complement: diagram and basis disagree");
        if (++steps > kReductionStepBudget)
            throw InternalError("reduce_to_complement: step budget exceeded");
    }
    out.remainder = std::move(frozen);
    return out;
}

IdealPresentation evaluated_ideal(const IdealPresentation& p, std::size_t k) {
    if (k < 1 || k >= p.m) throw DomainError("evaluated_ideal: k must satisfy 1 <= k < m");
    std::vector<Polynomial> gens;
    for (const auto& g : p.generators) {
        Polynomial e = g.evaluate_at_zero(k);
        if (!e.is_zero()) gens.push_back(std::move(e));
    }
    std::vector<std::string> vars;
    if (!p.variables.empty())
        vars.assign(p.variables.begin(), p.variables.begin() + static_cast<std::ptrdiff_t>(k));
    return IdealPresentation(k, std::move(gens), std::move(vars));
}

} // namespace inexp
