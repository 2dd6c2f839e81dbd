#pragma once

#include "bei/graph.hpp"
#include "bei/groebner.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace bei {

struct ResolutionOptions {
    long long prime = 32003; // coefficient field for the linear algebra
    long long guard = 20000; // max dimension of any graded piece
};

// Truncated table of graded Betti numbers; absent entries are zero.
struct BettiTable {
    std::string kind;  // "tor" | "betti_S" | "module_over_A"
    std::string field; // e.g. "GF(32003)"
    int i_max = 0;
    int j_max = 0;
    std::map<std::pair<int, int>, long long> entries;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

// A = S/J with a cached reduction basis; J may be zero (the polynomial
// ring itself).
class GradedAlgebra {
public:
    GradedAlgebra(Ring ring, GroebnerBasis gb);
    static GradedAlgebra quotient_by_edge_ideal(const Graph& g, long long prime = 32003);
    static GradedAlgebra polynomial_ring_for(const Graph& g, long long prime = 32003);

    const Ring& ring() const { return ring_; }
    const GroebnerBasis& gb() const { return gb_; }

    // Standard monomials of total degree d, descending under the ring order.
    std::vector<Monomial> graded_piece(int d) const;
    long long piece_dim(int d) const;
    Polynomial reduce(const Polynomial& f) const;

private:
    Ring ring_;
    GroebnerBasis gb_;
};

// Minimal free resolution of S/J_G over the polynomial ring S, truncated at
// homological degree i_max and internal degree j_max; exact within range.
BettiTable betti_table_over_S(const Graph& g, int i_max, int j_max,
                              const ResolutionOptions& opts = {});

// dim_K Tor^A_i(K,K)_j for A = S/J_G; off-diagonal entries witness
// non-Koszulness.
BettiTable tor_table(const Graph& g, int i_max, int j_max, const ResolutionOptions& opts = {});

// Truncated minimal resolution over A of the ideal generated by the given
// variables (ids 0..2n-1). Linear up to the truncation iff every entry has
// j == i + 1.
BettiTable module_resolution_over_A(const Graph& g, const std::vector<int>& gen_vars, int i_max,
                                    int j_max, const ResolutionOptions& opts = {});

struct SyzygyObstruction {
    bool not_koszul = false;
    int witness_j = -1; // smallest j > 4 with a nonzero (2, j) entry
};

SyzygyObstruction syzygy_degree_obstruction(const Graph& g, int j_max, const ResolutionOptions& opts = {});

struct CycleSyzygyReport {
    int m = 0;
    std::vector<Monomial> coordinates; // over the ring with m vertices
    bool eps_is_zero = false;          // sum of coordinate * edge generator vanishes
    bool minimal_generator = false;    // survives modulo lower-degree syzygies
    long long betti_2m = 0;            // (2, m) entry of the truncated table
};

// The explicit degree-m first syzygy of the m-cycle's edge generators.
CycleSyzygyReport cycle_syzygy(int m, const ResolutionOptions& opts = {});

struct ConvolutionCheck {
    bool pass = false;
    int i = -1, j = -1;         // first mismatch when !pass
    long long expected = 0, actual = 0;
};

// Tor table of a disjoint union must be the convolution of the parts.
ConvolutionCheck tensor_convolution_check(const Graph& g1, const Graph& g2, int i_max, int j_max,
                                          const ResolutionOptions& opts = {});

} // namespace bei
