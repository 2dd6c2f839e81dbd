#pragma once

#include "bei/poly.hpp"

#include <vector>

namespace bei {

struct GroebnerBasis {
    std::vector<Polynomial> elements; // monic, sorted ascending by lead monomial
    MonomialOrder order;
    bool reduced = false;
};

// One generator x_i*y_j - x_j*y_i per edge {i,j}, i < j, sorted by edge.
std::vector<Polynomial> binomial_edge_ideal(const Graph& g, const Ring& r);

// Division remainder: repeatedly reduce the largest reducible term by the
// first basis element whose lead term divides it.
Polynomial normal_form(const Ring& r, const Polynomial& f, std::span<const Polynomial> basis);

// Reduced Groebner basis; degree-by-degree pair queue with the coprime and
// chain criteria.
GroebnerBasis buchberger(const Ring& r, std::vector<Polynomial> gens);

struct QuadraticCheck {
    bool quadratic = true;
    int max_degree = 0;
};

QuadraticCheck is_quadratic_gb(const GroebnerBasis& gb);

// h_t = number of standard monomials of degree t, t = 0..dmax.
std::vector<long long> hilbert_series(const Ring& r, const GroebnerBasis& gb, int dmax);

// Hilbert numerator of a monomial ideal by pivot splitting; exposed for the
// series computation and its tests.
std::vector<long long> hilbert_numerator(const std::vector<Monomial>& lead_terms, int nvars);

} // namespace bei
