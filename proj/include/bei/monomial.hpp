#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bei {

// Exponent tuple over the 2n ring variables, total degree cached.
struct Monomial {
    std::vector<uint8_t> e;
    int deg = 0;

    bool operator==(const Monomial&) const = default;
    bool is_one() const { return deg == 0; }
};

Monomial monomial_one(int nvars);
Monomial monomial_var(int nvars, int var);
Monomial mono_mul(const Monomial& a, const Monomial& b);
bool mono_divides(const Monomial& a, const Monomial& b); // a | b
Monomial mono_div(const Monomial& b, const Monomial& a);  // b / a, requires a | b
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

struct MonomialHash {
    size_t operator()(const Monomial& m) const {
        size_t h = 1469598103934665603ull;
        for (uint8_t x : m.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Total multiplicative order on monomials with 1 minimal. The priority
// lists variable indices from most to least significant.
class MonomialOrder {
public:
    enum class Kind { lex, degrevlex, block };

    static MonomialOrder lex(std::vector<int> priority);
    static MonomialOrder degrevlex(std::vector<int> priority);
    // Product order: blocks of the priority list compared left to right,
    // degrevlex inside each block.
    static MonomialOrder block(std::vector<int> priority, std::vector<int> block_sizes);

    Kind kind() const { return kind_; }
    const std::vector<int>& priority() const { return priority_; }
    const std::vector<int>& block_sizes() const { return blocks_; }
    int var_count() const { return static_cast<int>(priority_.size()); }
    std::string description() const;

    // negative / zero / positive as a < b / a == b / a > b
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    Kind kind_ = Kind::lex;
    std::vector<int> priority_;
    std::vector<int> blocks_;
};

} // namespace bei
