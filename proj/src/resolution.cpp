#include "bei/resolution.hpp"

#include "bei/errors.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace bei {

// ---------------------------------------------------------------------------
// GradedAlgebra

GradedAlgebra::GradedAlgebra(Ring ring, GroebnerBasis gb)
    : ring_(std::move(ring)), gb_(std::move(gb)) {
    if (!gb_.reduced) throw std::invalid_argument("graded algebra needs a reduced basis");
}

GradedAlgebra GradedAlgebra::quotient_by_edge_ideal(const Graph& g, long long prime) {
    Ring r(g.vertex_count(), Field(prime), default_lex_order(g.vertex_count()));
    auto gens = binomial_edge_ideal(g, r);
    return GradedAlgebra(r, buchberger(r, std::move(gens)));
}

GradedAlgebra GradedAlgebra::polynomial_ring_for(const Graph& g, long long prime) {
    Ring r(g.vertex_count(), Field(prime), default_lex_order(g.vertex_count()));
    return GradedAlgebra(r, GroebnerBasis{{}, r.order(), true});
}

Polynomial GradedAlgebra::reduce(const Polynomial& f) const {
    return normal_form(ring_, f, gb_.elements);
}

namespace {

using Mdeg = std::vector<int>;

struct MdegHash {
    size_t operator()(const Mdeg& d) const {
        size_t h = 1469598103934665603ull;
        for (int x : d) {
            h ^= static_cast<size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

int mdeg_total(const Mdeg& d) { return std::accumulate(d.begin(), d.end(), 0); }

bool mdeg_leq(const Mdeg& a, const Mdeg& b) { // a <= b componentwise
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Mdeg mdeg_sub(const Mdeg& a, const Mdeg& b) {
    Mdeg out(a);
    for (size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
    return out;
}

void enumerate_mdegs(int n, int max_total, Mdeg& cur, int pos, int used, std::vector<Mdeg>& out) {
    if (pos == n) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v + used <= max_total; ++v) {
        cur[static_cast<size_t>(pos)] = v;
        enumerate_mdegs(n, max_total, cur, pos + 1, used + v, out);
    }
    cur[static_cast<size_t>(pos)] = 0;
}

std::vector<Mdeg> all_mdegs(int n, int max_total) {
    std::vector<Mdeg> out;
    Mdeg cur(static_cast<size_t>(n), 0);
    enumerate_mdegs(n, max_total, cur, 0, 0, out);
    std::sort(out.begin(), out.end(), [](const Mdeg& a, const Mdeg& b) {
        int ta = mdeg_total(a), tb = mdeg_total(b);
        if (ta != tb) return ta < tb;
        return a < b;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Dense exact linear algebra over GF(p)

uint32_t mod_inv(uint32_t a, uint32_t p) {
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        long long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<uint32_t>(t);
}

// Incremental reduced echelon over GF(p). Pivot positions are restricted to
// the first `lead_len` coordinates; what follows is carried along, which is
// how kernels are extracted.
struct Echelon {
    uint32_t p = 0;
    size_t lead_len = 0;
    std::vector<std::vector<uint32_t>> rows; // normalized, pivot coefficient 1
    std::vector<int> pivot_of_row;
    std::unordered_map<size_t, int> pivot_at; // lead position -> row index

    Echelon(uint32_t p_, size_t lead_len_) : p(p_), lead_len(lead_len_) {}

    // Reduces v against the registered rows; returns the pivot position, or
    // -1 when the lead part vanished.
    int reduce(std::vector<uint32_t>& v) const {
        for (size_t idx = 0; idx < lead_len; ++idx) {
            if (v[idx] == 0) continue;
            auto it = pivot_at.find(idx);
            if (it == pivot_at.end()) return static_cast<int>(idx);
            const auto& row = rows[static_cast<size_t>(it->second)];
            uint64_t c = p - v[idx]; // add c*row to clear position idx
            for (size_t k = idx; k < v.size(); ++k)
                if (row[k]) v[k] = static_cast<uint32_t>((v[k] + c * row[k]) % p);
        }
        return -1;
    }

    // Registers v as a pivot when its lead part survives reduction and
    // returns true; otherwise leaves the reduced vector in place, its tail
    // holding the kernel combination of an augmented column.
    bool feed(std::vector<uint32_t>& v) {
        int piv = reduce(v);
        if (piv < 0) return false;
        uint64_t inv = mod_inv(v[static_cast<size_t>(piv)], p);
        for (auto& x : v) x = static_cast<uint32_t>((inv * x) % p);
        pivot_at[static_cast<size_t>(piv)] = static_cast<int>(rows.size());
        pivot_of_row.push_back(piv);
        rows.push_back(std::move(v));
        return true;
    }

    bool add(std::vector<uint32_t> v) { return feed(v); }

    int rank() const { return static_cast<int>(rows.size()); }
};

// ---------------------------------------------------------------------------
// Algebra context: standard monomial bases and monomial reduction, cached
// per multidegree.

using SparseVec = std::vector<std::pair<int, uint32_t>>;

struct AlgebraCtx {
    const Ring& ring;
    std::vector<Polynomial> gb;
    std::vector<Monomial> lead_terms;
    uint32_t p;
    int n;

    struct Block {
        std::vector<Monomial> mons;
        std::unordered_map<Monomial, int, MonomialHash> index;
    };
    std::unordered_map<Mdeg, Block, MdegHash> blocks;
    std::unordered_map<Monomial, SparseVec, MonomialHash> nf_cache;

    AlgebraCtx(const Ring& r, const GroebnerBasis& basis) : ring(r), gb(basis.elements) {
        if (r.field().is_rational())
            throw std::invalid_argument("resolution engine requires a prime field");
        p = static_cast<uint32_t>(r.field().characteristic());
        n = r.vertex_count();
        for (const auto& f : gb) lead_terms.push_back(f.lead().mon);
    }

    const Block& block(const Mdeg& a) {
        auto it = blocks.find(a);
        if (it != blocks.end()) return it->second;
        Block blk;
        Monomial m = ring.one();
        std::function<void(int)> rec = [&](int vtx) {
            if (vtx == n) {
                for (const auto& lt : lead_terms)
                    if (mono_divides(lt, m)) return;
                blk.mons.push_back(m);
                return;
            }
            int total = a[static_cast<size_t>(vtx)];
            for (int ax = 0; ax <= total; ++ax) {
                m.e[static_cast<size_t>(vtx)] = static_cast<uint8_t>(ax);
                m.e[static_cast<size_t>(n + vtx)] = static_cast<uint8_t>(total - ax);
                rec(vtx + 1);
            }
            m.e[static_cast<size_t>(vtx)] = 0;
            m.e[static_cast<size_t>(n + vtx)] = 0;
        };
        m.deg = mdeg_total(a);
        rec(0);
        std::sort(blk.mons.begin(), blk.mons.end(), [this](const Monomial& x, const Monomial& y) {
            return ring.order().compare(x, y) > 0;
        });
        for (size_t i = 0; i < blk.mons.size(); ++i) blk.index[blk.mons[i]] = static_cast<int>(i);
        return blocks.emplace(a, std::move(blk)).first->second;
    }

    // Expansion of the reduction of a monomial in the standard basis of its
    // multidegree block.
    const SparseVec& nf_expand(const Monomial& m) {
        auto it = nf_cache.find(m);
        if (it != nf_cache.end()) return it->second;
        Polynomial f = normal_form(ring, ring.monomial_poly(m, ring.field().one()), gb);
        Mdeg a = ring.multidegree(m);
        const Block& blk = block(a);
        SparseVec out;
        for (const auto& t : f.terms()) {
            if (ring.multidegree(t.mon) != a)
                throw std::logic_error("reduction changed the multidegree");
            auto pos = blk.index.find(t.mon);
            if (pos == blk.index.end()) throw std::logic_error("reduced term is not standard");
            out.emplace_back(pos->second, static_cast<uint32_t>(t.coeff.num));
        }
        std::sort(out.begin(), out.end());
        return nf_cache.emplace(m, std::move(out)).first->second;
    }
};

// ---------------------------------------------------------------------------
// Graded free modules and the resolution loop

struct Level {
    std::vector<Mdeg> gen_mdeg;
    std::vector<SparseVec> gen_vec; // coordinates over the previous level at gen_mdeg

    struct Basis {
        std::vector<int> gens;    // contributing generators
        std::vector<int> offsets; // parallel to gens
        int total = 0;
    };
    std::unordered_map<Mdeg, Basis, MdegHash> basis_cache;
};

struct Engine {
    AlgebraCtx& A;
    int i_max, j_max;
    long long guard;
    std::string kind;
    std::vector<Mdeg> mdegs; // all multidegrees with total <= j_max, sorted

    Engine(AlgebraCtx& a, int imax, int jmax, long long grd, std::string kind_)
        : A(a), i_max(imax), j_max(jmax), guard(grd), kind(std::move(kind_)) {
        mdegs = all_mdegs(A.n, j_max);
    }

    const Level::Basis& basis(Level& L, const Mdeg& a) {
        auto it = L.basis_cache.find(a);
        if (it != L.basis_cache.end()) return it->second;
        Level::Basis b;
        for (size_t k = 0; k < L.gen_mdeg.size(); ++k) {
            if (!mdeg_leq(L.gen_mdeg[k], a)) continue;
            const auto& blk = A.block(mdeg_sub(a, L.gen_mdeg[k]));
            if (blk.mons.empty()) continue;
            b.gens.push_back(static_cast<int>(k));
            b.offsets.push_back(b.total);
            b.total += static_cast<int>(blk.mons.size());
        }
        return L.basis_cache.emplace(a, std::move(b)).first->second;
    }

    void check_guard(Level& L, const char* what) {
        std::vector<long long> per_degree(static_cast<size_t>(j_max) + 1, 0);
        for (const auto& a : mdegs) per_degree[static_cast<size_t>(mdeg_total(a))] += basis(L, a).total;
        for (int j = 0; j <= j_max; ++j)
            if (per_degree[static_cast<size_t>(j)] > guard)
                throw SizeGuardError(kind + ": graded piece of " + what + " at degree " +
                                     std::to_string(j) + " has dimension " +
                                     std::to_string(per_degree[static_cast<size_t>(j)]) +
                                     " exceeding the guard " + std::to_string(guard));
    }

    // u * (vector over L at multidegree d) expressed over L at d + mdeg(u).
    std::vector<uint32_t> mul_vec(Level& L, const SparseVec& vec, const Mdeg& d, const Monomial& u) {
        Mdeg target = d;
        {
            Mdeg mu = A.ring.multidegree(u);
            for (size_t i = 0; i < target.size(); ++i) target[i] += mu[i];
        }
        const auto& tb = basis(L, target);
        const auto& sb = basis(L, d);
        std::vector<uint32_t> out(static_cast<size_t>(tb.total), 0);
        for (auto [idx, c] : vec) {
            // decode (generator, local monomial)
            size_t slot = 0;
            while (slot + 1 < sb.gens.size() && sb.offsets[slot + 1] <= idx) ++slot;
            int k = sb.gens[slot];
            int local = idx - sb.offsets[slot];
            const Monomial& w = A.block(mdeg_sub(d, L.gen_mdeg[static_cast<size_t>(k)])).mons[static_cast<size_t>(local)];
            const auto& expansion = A.nf_expand(mono_mul(w, u));
            if (expansion.empty()) continue;
            // position of generator k in the target basis
            auto itk = std::find(tb.gens.begin(), tb.gens.end(), k);
            if (itk == tb.gens.end())
                throw std::logic_error("mul_vec: nonzero product landed in an empty block");
            int toff = tb.offsets[static_cast<size_t>(itk - tb.gens.begin())];
            for (auto [t2, c2] : expansion) {
                size_t pos = static_cast<size_t>(toff + t2);
                out[pos] = static_cast<uint32_t>((out[pos] + static_cast<uint64_t>(c) * c2) % A.p);
            }
        }
        return out;
    }

    static SparseVec to_sparse(const std::vector<uint32_t>& v) {
        SparseVec out;
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i]) out.emplace_back(static_cast<int>(i), v[i]);
        return out;
    }

    // One homological step: select minimal generators of the submodule whose
    // pieces `zpiece` provides (vectors over `prev` per multidegree), then
    // compute the kernel of the induced presentation.
    struct StepResult {
        Level level;
        std::map<int, long long> betti; // internal degree -> count at this step
        std::unordered_map<Mdeg, std::vector<SparseVec>, MdegHash> kernel;
    };

    StepResult step(Level& prev,
                    const std::function<const std::vector<SparseVec>&(const Mdeg&)>& zpiece,
                    bool want_kernel) {
        StepResult res;
        // minimal generators: extend the span of variable multiples of the
        // lower pieces
        for (const auto& a : mdegs) {
            if (mdeg_total(a) == 0) continue;
            const auto& here = zpiece(a);
            const auto& tb = basis(prev, a);
            if (tb.total == 0) continue;
            Echelon ech(A.p, static_cast<size_t>(tb.total));
            for (int v = 0; v < 2 * A.n; ++v) {
                int vtx = v % A.n;
                if (a[static_cast<size_t>(vtx)] == 0) continue;
                Mdeg down = a;
                --down[static_cast<size_t>(vtx)];
                Monomial var = A.ring.var_monomial(v);
                for (const auto& z : zpiece(down)) ech.add(mul_vec(prev, z, down, var));
            }
            for (const auto& z : here) {
                std::vector<uint32_t> dense(static_cast<size_t>(tb.total), 0);
                for (auto [i, c] : z) dense[static_cast<size_t>(i)] = c;
                if (ech.add(std::move(dense))) {
                    res.level.gen_mdeg.push_back(a);
                    res.level.gen_vec.push_back(z);
                    res.betti[mdeg_total(a)] += 1;
                }
            }
        }
        if (!want_kernel) return res;
        check_guard(res.level, "the presentation");
        // kernel of F_new -> F_prev per multidegree
        for (const auto& a : mdegs) {
            const auto& cb = basis(res.level, a);
            if (cb.total == 0) continue;
            const auto& pb = basis(prev, a);
            size_t nrows = static_cast<size_t>(pb.total);
            size_t ncols = static_cast<size_t>(cb.total);
            Echelon ech(A.p, nrows);
            std::vector<SparseVec>& kern = res.kernel[a];
            int col = 0;
            for (size_t slot = 0; slot < cb.gens.size(); ++slot) {
                int k = cb.gens[slot];
                const Mdeg& dk = res.level.gen_mdeg[static_cast<size_t>(k)];
                for (const auto& u : A.block(mdeg_sub(a, dk)).mons) {
                    std::vector<uint32_t> colvec =
                        mul_vec(prev, res.level.gen_vec[static_cast<size_t>(k)], dk, u);
                    colvec.resize(nrows + ncols, 0);
                    colvec[nrows + static_cast<size_t>(col)] = 1;
                    if (!ech.feed(colvec)) {
                        SparseVec kv;
                        for (size_t i = 0; i < ncols; ++i)
                            if (colvec[nrows + i]) kv.emplace_back(static_cast<int>(i), colvec[nrows + i]);
                        // structural minimality: no unit coordinate sits on a
                        // generator of the same multidegree
                        for (auto [idx, c] : kv) {
                            size_t s = 0;
                            while (s + 1 < cb.gens.size() && cb.offsets[s + 1] <= idx) ++s;
                            if (res.level.gen_mdeg[static_cast<size_t>(cb.gens[s])] == a)
                                throw std::logic_error("non-minimal presentation: unit entry in kernel");
                        }
                        kern.push_back(std::move(kv));
                    }
                    ++col;
                }
            }
        }
        return res;
    }

    // Full run: resolve the submodule of A spanned by `elements` (all
    // multigraded), recording Betti numbers at homological degrees
    // i_start..i_max.
    std::map<std::pair<int, int>, long long> run(const std::vector<Polynomial>& elements,
                                                 int i_start) {
        Level ambient;
        ambient.gen_mdeg.push_back(Mdeg(static_cast<size_t>(A.n), 0));
        ambient.gen_vec.push_back({});
        check_guard(ambient, "the ambient algebra");

        // initial pieces: variable multiples of the elements
        std::unordered_map<Mdeg, std::vector<SparseVec>, MdegHash> init;
        std::vector<std::pair<Mdeg, Polynomial>> elems;
        for (const auto& f : elements) {
            if (f.is_zero()) continue;
            if (!A.ring.is_multigraded(f))
                throw std::invalid_argument("resolution: element is not multigraded");
            elems.emplace_back(A.ring.multidegree(f.lead().mon), f);
        }
        for (const auto& a : mdegs) {
            auto& vecs = init[a];
            const auto& ab = A.block(a);
            if (ab.mons.empty()) continue;
            for (const auto& [df, f] : elems) {
                if (!mdeg_leq(df, a)) continue;
                for (const auto& u : A.block(mdeg_sub(a, df)).mons) {
                    std::vector<uint32_t> dense(ab.mons.size(), 0);
                    for (const auto& t : f.terms()) {
                        uint32_t c = static_cast<uint32_t>(t.coeff.num);
                        for (auto [i2, c2] : A.nf_expand(mono_mul(t.mon, u)))
                            dense[static_cast<size_t>(i2)] = static_cast<uint32_t>(
                                (dense[static_cast<size_t>(i2)] + static_cast<uint64_t>(c) * c2) % A.p);
                    }
                    SparseVec sv = to_sparse(dense);
                    if (!sv.empty()) vecs.push_back(std::move(sv));
                }
            }
        }

        std::map<std::pair<int, int>, long long> table;
        Level prev = std::move(ambient);
        std::unordered_map<Mdeg, std::vector<SparseVec>, MdegHash> zmap = std::move(init);
        static const std::vector<SparseVec> kEmpty;
        for (int i = i_start; i <= i_max; ++i) {
            auto piece = [&zmap](const Mdeg& a) -> const std::vector<SparseVec>& {
                auto it = zmap.find(a);
                return it == zmap.end() ? kEmpty : it->second;
            };
            StepResult sr = step(prev, piece, i < i_max);
            for (auto [j, cnt] : sr.betti)
                if (cnt) table[{i, j}] += cnt;
            if (i < i_max) {
                prev = std::move(sr.level);
                zmap = std::move(sr.kernel);
            }
        }
        return table;
    }
};

BettiTable make_table(std::string kind, const Ring& ring, int i_max, int j_max,
                      std::map<std::pair<int, int>, long long> entries) {
    BettiTable t;
    t.kind = std::move(kind);
    t.field = ring.field().name();
    t.i_max = i_max;
    t.j_max = j_max;
    t.entries = std::move(entries);
    return t;
}

void check_bounds(int i_max, int j_max) {
    if (i_max < 1 || j_max < 1)
        throw std::invalid_argument("resolution: truncation bounds must be >= 1");
}

} // namespace

BettiTable betti_table_over_S(const Graph& g, int i_max, int j_max,
                              const ResolutionOptions& opts) {
    check_bounds(i_max, j_max);
    GradedAlgebra S = GradedAlgebra::polynomial_ring_for(g, opts.prime);
    AlgebraCtx ctx(S.ring(), S.gb());
    Engine eng(ctx, i_max, j_max, opts.guard, "betti_S");
    auto entries = eng.run(binomial_edge_ideal(g, S.ring()), 1);
    entries[{0, 0}] = 1;
    return make_table("betti_S", S.ring(), i_max, j_max, std::move(entries));
}

BettiTable tor_table(const Graph& g, int i_max, int j_max, const ResolutionOptions& opts) {
    check_bounds(i_max, j_max);
    GradedAlgebra A = GradedAlgebra::quotient_by_edge_ideal(g, opts.prime);
    AlgebraCtx ctx(A.ring(), A.gb());
    Engine eng(ctx, i_max, j_max, opts.guard, "tor");
    std::vector<Polynomial> vars;
    for (int v = 0; v < A.ring().var_count(); ++v)
        vars.push_back(A.ring().monomial_poly(A.ring().var_monomial(v), A.ring().field().one()));
    auto entries = eng.run(vars, 1);
    entries[{0, 0}] = 1;
    return make_table("tor", A.ring(), i_max, j_max, std::move(entries));
}

BettiTable module_resolution_over_A(const Graph& g, const std::vector<int>& gen_vars, int i_max,
                                    int j_max, const ResolutionOptions& opts) {
    if (i_max < 0 || j_max < 1)
        throw std::invalid_argument("resolution: truncation bounds must be >= 1");
    GradedAlgebra A = GradedAlgebra::quotient_by_edge_ideal(g, opts.prime);
    std::vector<int> vars(gen_vars);
    std::sort(vars.begin(), vars.end());
    if (std::unique(vars.begin(), vars.end()) != vars.end())
        throw std::invalid_argument("module_resolution_over_A: duplicate generator");
    for (int v : vars)
        if (v < 0 || v >= A.ring().var_count())
            throw std::invalid_argument("module_resolution_over_A: bad variable id");
    AlgebraCtx ctx(A.ring(), A.gb());
    Engine eng(ctx, i_max, j_max, opts.guard, "module_over_A");
    std::vector<Polynomial> gens;
    for (int v : vars)
        gens.push_back(A.ring().monomial_poly(A.ring().var_monomial(v), A.ring().field().one()));
    auto entries = eng.run(gens, 0);
    return make_table("module_over_A", A.ring(), i_max, j_max, std::move(entries));
}

SyzygyObstruction syzygy_degree_obstruction(const Graph& g, int j_max, const ResolutionOptions& opts) {
    BettiTable t = betti_table_over_S(g, 2, j_max, opts);
    for (int j = 5; j <= j_max; ++j)
        if (t.at(2, j) > 0) return {true, j};
    return {false, -1};
}

CycleSyzygyReport cycle_syzygy(int m, const ResolutionOptions& opts) {
    if (m < 4) throw std::invalid_argument("cycle_syzygy: m must be >= 4");
    CycleSyzygyReport rep;
    rep.m = m;
    Graph cycle(m);
    for (int i = 1; i < m; ++i) cycle.add_edge(i, i + 1);
    cycle.add_edge(1, m);

    Ring r(m, Field(opts.prime), default_lex_order(m));
    // cyclic presentation e_i -> f_{i,i+1} (indices wrap)
    std::vector<Polynomial> f(static_cast<size_t>(m));
    for (int i = 1; i <= m; ++i) {
        int j = i == m ? 1 : i + 1;
        Monomial a = mono_mul(r.var_monomial(r.x_var(i)), r.var_monomial(r.y_var(j)));
        Monomial b = mono_mul(r.var_monomial(r.x_var(j)), r.var_monomial(r.y_var(i)));
        f[static_cast<size_t>(i - 1)] =
            r.polynomial({{a, r.field().one()}, {b, r.field().from_int(-1)}});
    }
    // coordinate i: product of all x_j except x_i, x_{i+1}
    for (int i = 1; i <= m; ++i) {
        int j = i == m ? 1 : i + 1;
        Monomial c = r.one();
        for (int k = 1; k <= m; ++k)
            if (k != i && k != j) c = mono_mul(c, r.var_monomial(r.x_var(k)));
        rep.coordinates.push_back(c);
    }
    Polynomial eps = r.zero();
    for (int i = 0; i < m; ++i)
        eps = r.add(eps, r.mul_term(f[static_cast<size_t>(i)], rep.coordinates[static_cast<size_t>(i)],
                                    r.field().one()));
    rep.eps_is_zero = eps.is_zero();

    // minimality: the vector of coordinates is not a variable multiple of a
    // lower-degree syzygy of the presentation
    GroebnerBasis empty{{}, r.order(), true};
    AlgebraCtx ctx(r, empty);
    Engine eng(ctx, 1, m, opts.guard, "cycle_syzygy");
    Level pres;
    for (int i = 0; i < m; ++i) {
        Mdeg d(static_cast<size_t>(m), 0);
        int j = i + 1 == m ? 0 : i + 1;
        d[static_cast<size_t>(i)] = 1;
        d[static_cast<size_t>(j)] = 1;
        pres.gen_mdeg.push_back(d);
        SparseVec sv;
        const auto& blk = ctx.block(d);
        for (const auto& t : f[static_cast<size_t>(i)].terms())
            sv.emplace_back(blk.index.at(t.mon), static_cast<uint32_t>(t.coeff.num));
        std::sort(sv.begin(), sv.end());
        pres.gen_vec.push_back(std::move(sv));
    }
    Level ambient;
    ambient.gen_mdeg.push_back(Mdeg(static_cast<size_t>(m), 0));
    ambient.gen_vec.push_back({});

    auto kernel_at = [&](const Mdeg& a) {
        const auto& cb = eng.basis(pres, a);
        const auto& pb = eng.basis(ambient, a);
        Echelon ech(ctx.p, static_cast<size_t>(pb.total));
        std::vector<SparseVec> kern;
        int col = 0;
        size_t ncols = static_cast<size_t>(cb.total);
        for (size_t slot = 0; slot < cb.gens.size(); ++slot) {
            int k = cb.gens[slot];
            const Mdeg& dk = pres.gen_mdeg[static_cast<size_t>(k)];
            for (const auto& u : ctx.block(mdeg_sub(a, dk)).mons) {
                std::vector<uint32_t> colvec =
                    eng.mul_vec(ambient, pres.gen_vec[static_cast<size_t>(k)], dk, u);
                colvec.resize(static_cast<size_t>(pb.total) + ncols, 0);
                colvec[static_cast<size_t>(pb.total) + static_cast<size_t>(col)] = 1;
                if (!ech.feed(colvec)) {
                    SparseVec kv;
                    for (size_t i2 = 0; i2 < ncols; ++i2)
                        if (colvec[static_cast<size_t>(pb.total) + i2])
                            kv.emplace_back(static_cast<int>(i2),
                                            colvec[static_cast<size_t>(pb.total) + i2]);
                    kern.push_back(std::move(kv));
                }
                ++col;
            }
        }
        return kern;
    };

    Mdeg ones(static_cast<size_t>(m), 1);
    const auto& gb_basis = eng.basis(pres, ones);
    Echelon span(ctx.p, static_cast<size_t>(gb_basis.total));
    for (int v = 0; v < 2 * m; ++v) {
        int vtx = v % m;
        Mdeg down = ones;
        --down[static_cast<size_t>(vtx)];
        Monomial var = r.var_monomial(v);
        for (const auto& z : kernel_at(down)) span.add(eng.mul_vec(pres, z, down, var));
    }
    std::vector<uint32_t> gvec(static_cast<size_t>(gb_basis.total), 0);
    for (int k = 0; k < m; ++k) {
        const Mdeg& dk = pres.gen_mdeg[static_cast<size_t>(k)];
        size_t slot = static_cast<size_t>(
            std::find(gb_basis.gens.begin(), gb_basis.gens.end(), k) - gb_basis.gens.begin());
        const auto& blk = ctx.block(mdeg_sub(ones, dk));
        gvec[static_cast<size_t>(gb_basis.offsets[slot]) +
             static_cast<size_t>(blk.index.at(rep.coordinates[static_cast<size_t>(k)]))] = 1;
    }
    bool independent = span.add(std::move(gvec));

    BettiTable bt = betti_table_over_S(cycle, 2, m, opts);
    rep.betti_2m = bt.at(2, m);
    rep.minimal_generator = independent && rep.betti_2m >= 1;
    return rep;
}

ConvolutionCheck tensor_convolution_check(const Graph& g1, const Graph& g2, int i_max, int j_max,
                                          const ResolutionOptions& opts) {
    BettiTable t1 = tor_table(g1, i_max, j_max, opts);
    BettiTable t2 = tor_table(g2, i_max, j_max, opts);
    BettiTable tu = tor_table(disjoint_union(g1, g2), i_max, j_max, opts);
    ConvolutionCheck out;
    for (int p = 0; p <= i_max; ++p)
        for (int q = 0; q <= j_max; ++q) {
            long long expected = 0;
            for (int i = 0; i <= p; ++i)
                for (int k = 0; k <= q; ++k) expected += t1.at(i, k) * t2.at(p - i, q - k);
            long long actual = tu.at(p, q);
            if (expected != actual) {
                out.pass = false;
                out.i = p;
                out.j = q;
                out.expected = expected;
                out.actual = actual;
                return out;
            }
        }
    out.pass = true;
    return out;
}

// ---------------------------------------------------------------------------
// Public graded pieces

std::vector<Monomial> GradedAlgebra::graded_piece(int d) const {
    if (d < 0) throw std::invalid_argument("graded_piece: negative degree");
    AlgebraCtx ctx(ring_, gb_);
    std::vector<Monomial> out;
    for (const auto& a : all_mdegs(ring_.vertex_count(), d)) {
        if (mdeg_total(a) != d) continue;
        const auto& blk = ctx.block(a);
        out.insert(out.end(), blk.mons.begin(), blk.mons.end());
    }
    std::sort(out.begin(), out.end(), [this](const Monomial& x, const Monomial& y) {
        return ring_.order().compare(x, y) > 0;
    });
    return out;
}

long long GradedAlgebra::piece_dim(int d) const {
    return static_cast<long long>(graded_piece(d).size());
}

} // namespace bei
