#pragma once

#include "bei/field.hpp"
#include "bei/graph.hpp"
#include "bei/monomial.hpp"

#include <span>
#include <string>
#include <vector>

namespace bei {

struct Term {
    Monomial mon;
    Scalar coeff;
};

// Terms kept sorted strictly decreasing under the owning ring's order,
// no zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    const Term& lead() const { return terms_.front(); }
    int total_degree() const { return terms_.empty() ? -1 : terms_.front().mon.deg; }

private:
    friend class Ring;
    std::vector<Term> terms_;
};

// Polynomial ring K[x_1..x_n, y_1..y_n] for a graph on n vertices, with a
// fixed coefficient field and monomial order. Variable ids: x_i -> i-1,
// y_i -> n+i-1.
class Ring {
public:
    Ring(int n, Field field, MonomialOrder order);

    int vertex_count() const { return n_; }
    int var_count() const { return 2 * n_; }
    const Field& field() const { return field_; }
    const MonomialOrder& order() const { return order_; }

    int x_var(int i) const { return i - 1; }
    int y_var(int i) const { return n_ + i - 1; }
    std::string var_name(int var) const;

    Monomial one() const { return monomial_one(var_count()); }
    Monomial var_monomial(int var) const { return monomial_var(var_count(), var); }

    Polynomial zero() const { return {}; }
    Polynomial polynomial(std::vector<Term> terms) const; // normalizes
    Polynomial monomial_poly(const Monomial& m, const Scalar& c) const;

    Polynomial add(const Polynomial& f, const Polynomial& g) const;
    Polynomial sub(const Polynomial& f, const Polynomial& g) const;
    Polynomial negate(const Polynomial& f) const;
    Polynomial scale(const Polynomial& f, const Scalar& c) const;
    Polynomial mul_term(const Polynomial& f, const Monomial& m, const Scalar& c) const;
    Polynomial mul(const Polynomial& f, const Polynomial& g) const;
    Polynomial monic(const Polynomial& f) const;

    // Z^n multidegree (deg x_i = deg y_i = e_i); the whole polynomial must
    // be homogeneous for the second form, which throws otherwise.
    std::vector<int> multidegree(const Monomial& m) const;
    bool is_multigraded(const Polynomial& f) const;

    std::string to_string(const Polynomial& f) const;
    std::string to_string(const Monomial& m) const;

private:
    int n_;
    Field field_;
    MonomialOrder order_;
};

// The order used throughout: lex with x_1 > ... > x_n > y_1 > ... > y_n.
MonomialOrder default_lex_order(int n);
MonomialOrder default_degrevlex_order(int n);
// Lex order induced by a relabeling: variables compared by label.
MonomialOrder lex_order_for_labeling(int n, const Labeling& lab);

} // namespace bei
