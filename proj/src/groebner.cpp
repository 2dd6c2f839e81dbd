#include "bei/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace bei {

std::vector<Polynomial> binomial_edge_ideal(const Graph& g, const Ring& r) {
    if (r.vertex_count() != g.vertex_count())
        throw std::invalid_argument("binomial_edge_ideal: ring built for " +
                                    std::to_string(r.vertex_count()) + " vertices, graph has " +
                                    std::to_string(g.vertex_count()));
    std::vector<Polynomial> gens;
    for (auto [i, j] : g.edges()) {
        Monomial a = mono_mul(r.var_monomial(r.x_var(i)), r.var_monomial(r.y_var(j)));
        Monomial b = mono_mul(r.var_monomial(r.x_var(j)), r.var_monomial(r.y_var(i)));
        gens.push_back(r.polynomial({{a, r.field().one()}, {b, r.field().from_int(-1)}}));
    }
    return gens;
}

Polynomial normal_form(const Ring& r, const Polynomial& f, std::span<const Polynomial> basis) {
    Polynomial rem = f;
    bool reduced = true;
    while (reduced && !rem.is_zero()) {
        reduced = false;
        // scan terms from the largest; the first reducible one is reduced by
        // the first eligible divisor
        for (const auto& t : rem.terms()) {
            for (const auto& b : basis) {
                if (b.is_zero()) continue;
                if (!mono_divides(b.lead().mon, t.mon)) continue;
                Monomial q = mono_div(t.mon, b.lead().mon);
                Scalar c = r.field().div(t.coeff, b.lead().coeff);
                rem = r.sub(rem, r.mul_term(b, q, c));
                reduced = true;
                break;
            }
            if (reduced) break;
        }
    }
    return rem;
}

namespace {

Polynomial s_polynomial(const Ring& r, const Polynomial& f, const Polynomial& g) {
    Monomial l = mono_lcm(f.lead().mon, g.lead().mon);
    Polynomial a = r.mul_term(f, mono_div(l, f.lead().mon), r.field().inv(f.lead().coeff));
    Polynomial b = r.mul_term(g, mono_div(l, g.lead().mon), r.field().inv(g.lead().coeff));
    return r.sub(a, b);
}

} // namespace

GroebnerBasis buchberger(const Ring& r, std::vector<Polynomial> gens) {
    GroebnerBasis gb{{}, r.order(), true};
    std::vector<Polynomial> basis;
    for (auto& f : gens)
        if (!f.is_zero()) basis.push_back(r.monic(f));
    std::sort(basis.begin(), basis.end(), [&r](const Polynomial& a, const Polynomial& b) {
        return r.order().compare(a.lead().mon, b.lead().mon) < 0;
    });

    struct Pair {
        int deg;
        int i, j;
        bool operator<(const Pair& o) const { return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j); }
    };
    std::set<Pair> pending;
    auto push_pairs = [&](int upto) {
        for (int i = 0; i < upto; ++i)
            pending.insert({mono_lcm(basis[static_cast<size_t>(i)].lead().mon,
                                     basis[static_cast<size_t>(upto)].lead().mon)
                                .deg,
                            i, upto});
    };
    for (int k = 1; k < static_cast<int>(basis.size()); ++k) push_pairs(k);

    auto is_pending = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        Monomial l = mono_lcm(basis[static_cast<size_t>(i)].lead().mon,
                              basis[static_cast<size_t>(j)].lead().mon);
        return pending.count({l.deg, i, j}) != 0;
    };

    while (!pending.empty()) {
        Pair p = *pending.begin();
        pending.erase(pending.begin());
        const Polynomial& f = basis[static_cast<size_t>(p.i)];
        const Polynomial& g = basis[static_cast<size_t>(p.j)];
        if (mono_coprime(f.lead().mon, g.lead().mon)) continue;
        // chain criterion: a third element dividing the lcm whose pairs with
        // both ends were already handled
        Monomial l = mono_lcm(f.lead().mon, g.lead().mon);
        bool skip = false;
        for (int k = 0; k < static_cast<int>(basis.size()) && !skip; ++k) {
            if (k == p.i || k == p.j) continue;
            if (mono_divides(basis[static_cast<size_t>(k)].lead().mon, l) && !is_pending(p.i, k) &&
                !is_pending(p.j, k))
                skip = true;
        }
        if (skip) continue;
        Polynomial rem = normal_form(r, s_polynomial(r, f, g), basis);
        if (rem.is_zero()) continue;
        basis.push_back(r.monic(rem));
        push_pairs(static_cast<int>(basis.size()) - 1);
    }

    // minimalize: drop elements whose lead term another's divides
    std::sort(basis.begin(), basis.end(), [&r](const Polynomial& a, const Polynomial& b) {
        return r.order().compare(a.lead().mon, b.lead().mon) < 0;
    });
    std::vector<Polynomial> minimal;
    for (const auto& f : basis) {
        bool redundant = false;
        for (const auto& kept : minimal)
            if (mono_divides(kept.lead().mon, f.lead().mon)) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(f);
    }
    // tail-reduce to the reduced basis
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial> others;
            for (size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial red = r.monic(normal_form(r, minimal[i], others));
            if (!r.sub(red, minimal[i]).is_zero()) changed = true;
            minimal[i] = std::move(red);
        }
    }
    std::sort(minimal.begin(), minimal.end(), [&r](const Polynomial& a, const Polynomial& b) {
        return r.order().compare(a.lead().mon, b.lead().mon) < 0;
    });
    gb.elements = std::move(minimal);
    return gb;
}

QuadraticCheck is_quadratic_gb(const GroebnerBasis& gb) {
    QuadraticCheck out;
    for (const auto& f : gb.elements) out.max_degree = std::max(out.max_degree, f.total_degree());
    out.quadratic = out.max_degree <= 2;
    return out;
}

// ---------------------------------------------------------------------------
// Hilbert series by pivot splitting on the lead-term ideal

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(),
              [](const Monomial& a, const Monomial& b) { return a.deg < b.deg; });
    std::vector<Monomial> out;
    for (const auto& m : gens) {
        bool redundant = false;
        for (const auto& kept : out)
            if (mono_divides(kept, m)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(m);
    }
    return out;
}

void poly_add_shifted(std::vector<long long>& acc, const std::vector<long long>& p, int shift,
                      long long scale) {
    if (acc.size() < p.size() + static_cast<size_t>(shift))
        acc.resize(p.size() + static_cast<size_t>(shift), 0);
    for (size_t i = 0; i < p.size(); ++i) acc[i + static_cast<size_t>(shift)] += scale * p[i];
}

std::vector<long long> numerator_rec(std::vector<Monomial> gens, int nvars) {
    gens = minimalize(std::move(gens));
    if (gens.empty()) return {1};
    bool coprime = true;
    for (size_t i = 0; i < gens.size() && coprime; ++i)
        for (size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!mono_coprime(gens[i], gens[j])) coprime = false;
    if (coprime) {
        std::vector<long long> acc{1};
        for (const auto& m : gens) {
            std::vector<long long> next(acc.size() + static_cast<size_t>(m.deg), 0);
            for (size_t i = 0; i < acc.size(); ++i) {
                next[i] += acc[i];
                next[i + static_cast<size_t>(m.deg)] -= acc[i];
            }
            acc = std::move(next);
        }
        return acc;
    }
    // pivot on the variable hitting the most generators
    std::vector<int> freq(static_cast<size_t>(nvars), 0);
    for (const auto& m : gens)
        for (int v = 0; v < nvars; ++v)
            if (m.e[static_cast<size_t>(v)]) ++freq[static_cast<size_t>(v)];
    int pivot = static_cast<int>(std::max_element(freq.begin(), freq.end()) - freq.begin());

    // I + (x_pivot)
    std::vector<Monomial> plus;
    plus.push_back(monomial_var(nvars, pivot));
    for (const auto& m : gens)
        if (m.e[static_cast<size_t>(pivot)] == 0) plus.push_back(m);
    // I : x_pivot
    std::vector<Monomial> colon;
    for (const auto& m : gens) {
        Monomial q = m;
        if (q.e[static_cast<size_t>(pivot)] > 0) {
            --q.e[static_cast<size_t>(pivot)];
            --q.deg;
        }
        colon.push_back(q);
    }
    std::vector<long long> acc = numerator_rec(std::move(plus), nvars);
    poly_add_shifted(acc, numerator_rec(std::move(colon), nvars), 1, 1);
    return acc;
}

} // namespace

std::vector<long long> hilbert_numerator(const std::vector<Monomial>& lead_terms, int nvars) {
    return numerator_rec(lead_terms, nvars);
}

std::vector<long long> hilbert_series(const Ring& r, const GroebnerBasis& gb, int dmax) {
    if (!gb.reduced) throw std::invalid_argument("hilbert_series: basis not reduced");
    std::vector<Monomial> lts;
    for (const auto& f : gb.elements) lts.push_back(f.lead().mon);
    std::vector<long long> h = hilbert_numerator(lts, r.var_count());
    h.resize(static_cast<size_t>(dmax) + 1, 0);
    for (int rep = 0; rep < r.var_count(); ++rep)
        for (int t = 1; t <= dmax; ++t) h[static_cast<size_t>(t)] += h[static_cast<size_t>(t) - 1];
    return h;
}

} // namespace bei
