#include "bei/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bei {

// ---------------------------------------------------------------------------
// Monomials

Monomial monomial_one(int nvars) {
    Monomial m;
    m.e.assign(static_cast<size_t>(nvars), 0);
    m.deg = 0;
    return m;
}

Monomial monomial_var(int nvars, int var) {
    Monomial m = monomial_one(nvars);
    m.e[static_cast<size_t>(var)] = 1;
    m.deg = 1;
    return m;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = static_cast<uint8_t>(m.e[i] + b.e[i]);
    m.deg = a.deg + b.deg;
    return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
    Monomial m = b;
    for (size_t i = 0; i < m.e.size(); ++i) m.e[i] = static_cast<uint8_t>(m.e[i] - a.e[i]);
    m.deg = b.deg - a.deg;
    return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial m = a;
    m.deg = 0;
    for (size_t i = 0; i < m.e.size(); ++i) {
        m.e[i] = std::max(a.e[i], b.e[i]);
        m.deg += m.e[i];
    }
    return m;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] && b.e[i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Orders

MonomialOrder MonomialOrder::lex(std::vector<int> priority) {
    MonomialOrder o;
    o.kind_ = Kind::lex;
    o.priority_ = std::move(priority);
    return o;
}

MonomialOrder MonomialOrder::degrevlex(std::vector<int> priority) {
    MonomialOrder o;
    o.kind_ = Kind::degrevlex;
    o.priority_ = std::move(priority);
    return o;
}

MonomialOrder MonomialOrder::block(std::vector<int> priority, std::vector<int> block_sizes) {
    MonomialOrder o;
    o.kind_ = Kind::block;
    o.priority_ = std::move(priority);
    o.blocks_ = std::move(block_sizes);
    size_t total = 0;
    for (int b : o.blocks_) total += static_cast<size_t>(b);
    if (total != o.priority_.size())
        throw std::invalid_argument("block order: block sizes do not cover the variables");
    return o;
}

std::string MonomialOrder::description() const {
    switch (kind_) {
        case Kind::lex: return "lex";
        case Kind::degrevlex: return "degrevlex";
        case Kind::block: {
            std::string s = "block(";
            for (size_t i = 0; i < blocks_.size(); ++i)
                s += (i ? "," : "") + std::to_string(blocks_[i]);
            return s + ")";
        }
    }
    return "?";
}

namespace {

// degrevlex on a contiguous slice of the priority list
int degrevlex_slice(const Monomial& a, const Monomial& b, const std::vector<int>& prio,
                    size_t lo, size_t hi) {
    int da = 0, db = 0;
    for (size_t k = lo; k < hi; ++k) {
        da += a.e[static_cast<size_t>(prio[k])];
        db += b.e[static_cast<size_t>(prio[k])];
    }
    if (da != db) return da < db ? -1 : 1;
    for (size_t k = hi; k-- > lo;) {
        int ea = a.e[static_cast<size_t>(prio[k])];
        int eb = b.e[static_cast<size_t>(prio[k])];
        if (ea != eb) return ea > eb ? -1 : 1; // smaller last exponent is larger
    }
    return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::lex:
            for (int v : priority_) {
                int ea = a.e[static_cast<size_t>(v)], eb = b.e[static_cast<size_t>(v)];
                if (ea != eb) return ea < eb ? -1 : 1;
            }
            return 0;
        case Kind::degrevlex:
            return degrevlex_slice(a, b, priority_, 0, priority_.size());
        case Kind::block: {
            size_t lo = 0;
            for (int bs : blocks_) {
                int c = degrevlex_slice(a, b, priority_, lo, lo + static_cast<size_t>(bs));
                if (c != 0) return c;
                lo += static_cast<size_t>(bs);
            }
            return 0;
        }
    }
    return 0;
}

MonomialOrder default_lex_order(int n) {
    std::vector<int> prio(static_cast<size_t>(2 * n));
    std::iota(prio.begin(), prio.end(), 0);
    return MonomialOrder::lex(std::move(prio));
}

MonomialOrder default_degrevlex_order(int n) {
    std::vector<int> prio(static_cast<size_t>(2 * n));
    std::iota(prio.begin(), prio.end(), 0);
    return MonomialOrder::degrevlex(std::move(prio));
}

MonomialOrder lex_order_for_labeling(int n, const Labeling& lab) {
    if (!is_valid_labeling(lab, n))
        throw std::invalid_argument("lex_order_for_labeling: invalid labeling");
    // vertex with label l comes l-th in priority
    std::vector<int> by_label(static_cast<size_t>(n), 0);
    for (int v = 1; v <= n; ++v) by_label[static_cast<size_t>(lab.label_of(v)) - 1] = v;
    std::vector<int> prio;
    for (int v : by_label) prio.push_back(v - 1);         // x variables
    for (int v : by_label) prio.push_back(n + v - 1);     // y variables
    return MonomialOrder::lex(std::move(prio));
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(int n, Field field, MonomialOrder order)
    : n_(n), field_(std::move(field)), order_(std::move(order)) {
    if (order_.var_count() != 2 * n)
        throw std::invalid_argument("ring: order must cover all 2n variables");
}

std::string Ring::var_name(int var) const {
    if (var < n_) return "x" + std::to_string(var + 1);
    return "y" + std::to_string(var - n_ + 1);
}

Polynomial Ring::polynomial(std::vector<Term> terms) const {
    std::sort(terms.begin(), terms.end(),
              [this](const Term& a, const Term& b) { return order_.compare(a.mon, b.mon) > 0; });
    Polynomial f;
    for (auto& t : terms) {
        if (!f.terms_.empty() && f.terms_.back().mon == t.mon)
            f.terms_.back().coeff = field_.add(f.terms_.back().coeff, t.coeff);
        else
            f.terms_.push_back(std::move(t));
    }
    std::erase_if(f.terms_, [this](const Term& t) { return field_.is_zero(t.coeff); });
    return f;
}

Polynomial Ring::monomial_poly(const Monomial& m, const Scalar& c) const {
    Polynomial f;
    if (!field_.is_zero(c)) f.terms_.push_back({m, c});
    return f;
}

Polynomial Ring::add(const Polynomial& f, const Polynomial& g) const {
    Polynomial h;
    size_t i = 0, j = 0;
    while (i < f.terms_.size() || j < g.terms_.size()) {
        if (i == f.terms_.size()) {
            h.terms_.push_back(g.terms_[j++]);
            continue;
        }
        if (j == g.terms_.size()) {
            h.terms_.push_back(f.terms_[i++]);
            continue;
        }
        int c = order_.compare(f.terms_[i].mon, g.terms_[j].mon);
        if (c > 0) h.terms_.push_back(f.terms_[i++]);
        else if (c < 0) h.terms_.push_back(g.terms_[j++]);
        else {
            Scalar s = field_.add(f.terms_[i].coeff, g.terms_[j].coeff);
            if (!field_.is_zero(s)) h.terms_.push_back({f.terms_[i].mon, s});
            ++i;
            ++j;
        }
    }
    return h;
}

Polynomial Ring::negate(const Polynomial& f) const {
    Polynomial h = f;
    for (auto& t : h.terms_) t.coeff = field_.neg(t.coeff);
    return h;
}

Polynomial Ring::sub(const Polynomial& f, const Polynomial& g) const { return add(f, negate(g)); }

Polynomial Ring::scale(const Polynomial& f, const Scalar& c) const {
    if (field_.is_zero(c)) return {};
    Polynomial h = f;
    for (auto& t : h.terms_) t.coeff = field_.mul(t.coeff, c);
    return h;
}

Polynomial Ring::mul_term(const Polynomial& f, const Monomial& m, const Scalar& c) const {
    if (field_.is_zero(c)) return {};
    Polynomial h;
    h.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_) h.terms_.push_back({mono_mul(t.mon, m), field_.mul(t.coeff, c)});
    return h; // multiplying by a monomial preserves the term order
}

Polynomial Ring::mul(const Polynomial& f, const Polynomial& g) const {
    Polynomial acc;
    for (const auto& t : g.terms()) acc = add(acc, mul_term(f, t.mon, t.coeff));
    return acc;
}

Polynomial Ring::monic(const Polynomial& f) const {
    if (f.is_zero()) return f;
    return scale(f, field_.inv(f.lead().coeff));
}

std::vector<int> Ring::multidegree(const Monomial& m) const {
    std::vector<int> d(static_cast<size_t>(n_), 0);
    for (int i = 0; i < n_; ++i)
        d[static_cast<size_t>(i)] = m.e[static_cast<size_t>(i)] + m.e[static_cast<size_t>(n_ + i)];
    return d;
}

bool Ring::is_multigraded(const Polynomial& f) const {
    if (f.terms_.size() <= 1) return true;
    auto d0 = multidegree(f.terms_.front().mon);
    for (const auto& t : f.terms_)
        if (multidegree(t.mon) != d0) return false;
    return true;
}

std::string Ring::to_string(const Monomial& m) const {
    if (m.is_one()) return "1";
    std::ostringstream out;
    bool first = true;
    for (int v = 0; v < var_count(); ++v) {
        int e = m.e[static_cast<size_t>(v)];
        if (e == 0) continue;
        if (!first) out << "*";
        out << var_name(v);
        if (e > 1) out << "^" << e;
        first = false;
    }
    return out.str();
}

std::string Ring::to_string(const Polynomial& f) const {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : f.terms_) {
        long long num = field_.balanced(t.coeff);
        long long den = t.coeff.den;
        bool negative = num < 0;
        long long mag = negative ? -num : num;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        bool unit = mag == 1 && den == 1;
        if (!unit || t.mon.is_one()) {
            out << mag;
            if (den != 1) out << "/" << den;
            if (!t.mon.is_one()) out << "*";
        }
        if (!t.mon.is_one()) out << to_string(t.mon);
        first = false;
    }
    return out.str();
}

} // namespace bei
