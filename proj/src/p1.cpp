#include "qb/p1.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>

namespace qb {

SplitBundle::SplitBundle(std::vector<long long> d) : degrees(std::move(d)) {
    std::sort(degrees.begin(), degrees.end(), std::greater<>());
}

long long SplitBundle::degree() const {
    long long s = 0;
    for (auto d : degrees) s += d;
    return s;
}

bool PolyMatrix::is_zero() const {
    for (const auto& e : entries)
        if (!poly_is_zero(e)) return false;
    return true;
}

TypeVector QuiverBundleP1::type() const {
    TypeVector t;
    t.entries.reserve(bundles.size());
    for (const auto& b : bundles) t.entries.push_back({b.rank(), b.degree()});
    return t;
}

void QuiverBundleP1::validate() const {
    require_valid_quiver(quiver);
    if (bundles.size() != quiver.num_vertices())
        throw std::invalid_argument("bundle count does not match vertex count");
    if (maps.size() != quiver.num_arrows())
        throw std::invalid_argument("arrow map count does not match arrow count");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const SplitBundle& src = bundles[quiver.tail_index(a)];
        const SplitBundle& tgt = bundles[quiver.head_index(a)];
        const PolyMatrix& m = maps[a];
        if (m.rows != static_cast<std::size_t>(tgt.rank()) ||
            m.cols != static_cast<std::size_t>(src.rank()))
            throw std::invalid_argument("arrow map '" + quiver.arrows[a].id + "' has wrong shape");
        for (std::size_t j = 0; j < m.rows; ++j)
            for (std::size_t k = 0; k < m.cols; ++k) {
                const Poly& p = m.at(j, k);
                if (p.empty()) continue;
                long long need = tgt.degrees[j] - src.degrees[k];
                if (need < 0) {
                    if (!poly_is_zero(p))
                        throw std::invalid_argument("arrow map '" + quiver.arrows[a].id +
                                                    "' has nonzero entry of negative degree");
                } else if (static_cast<long long>(p.size()) != need + 1) {
                    throw std::invalid_argument("arrow map '" + quiver.arrows[a].id +
                                                "' entry has wrong homogeneous degree");
                }
            }
    }
}

long long hom_dim(long long a, long long b) { return std::max(b - a + 1, 0LL); }

long long ext1_dim(long long a, long long b) { return std::max(a - b - 1, 0LL); }

namespace {

// Monomial basis of H^p(Hom(src, tgt)) for split bundles, p in {0, 1}.
// Elements are (target summand j, source summand k, x0-exponent e0); the
// x1-exponent is determined by homogeneity. For p = 0 the exponents are
// non-negative; for p = 1 both are <= -1 (two-chart Cech classes).
struct HomBasis {
    int p = 0;
    std::vector<long long> src, tgt;          // summand degrees
    std::vector<std::size_t> block_offset;    // per (j, k), j * src.size() + k
    std::size_t dim = 0;

    static HomBasis make(const SplitBundle& s, const SplitBundle& t, int p) {
        HomBasis b;
        b.p = p;
        b.src = s.degrees;
        b.tgt = t.degrees;
        b.block_offset.resize(b.src.size() * b.tgt.size());
        for (std::size_t j = 0; j < b.tgt.size(); ++j)
            for (std::size_t k = 0; k < b.src.size(); ++k) {
                b.block_offset[j * b.src.size() + k] = b.dim;
                long long c = b.tgt[j] - b.src[k];
                b.dim += p == 0 ? hom_dim(0, c) : ext1_dim(0, c);
            }
        return b;
    }

    // Position of the monomial x0^e0 x1^e1 in block (j, k); nullopt when the
    // exponents fall outside the basis (p = 1 truncation).
    std::optional<std::size_t> index(std::size_t j, std::size_t k, long long e0,
                                     long long e1) const {
        long long c = tgt[j] - src[k];
        if (p == 0) {
            if (e0 < 0 || e1 < 0 || e0 + e1 != c) return std::nullopt;
            return block_offset[j * src.size() + k] + static_cast<std::size_t>(e1);
        }
        if (e0 > -1 || e1 > -1 || e0 + e1 != c) return std::nullopt;
        return block_offset[j * src.size() + k] + static_cast<std::size_t>(e0 - (c + 1));
    }
};

// Adds sign * (poly * x0^e0 x1^e1) to column `col` of M inside the target
// block described by (basis, row_base, j, k).
void scatter(RatMatrix& M, std::size_t col, const HomBasis& basis, std::size_t row_base,
             std::size_t j, std::size_t k, const Poly& poly, long long e0, long long e1,
             int sign) {
    if (poly.empty()) return;
    long long n = static_cast<long long>(poly.size()) - 1;
    for (long long s = 0; s <= n; ++s) {
        if (poly[s] == 0) continue;
        auto idx = basis.index(j, k, n - s + e0, s + e1);
        if (!idx) continue;
        Rat& cell = M.at(row_base + *idx, col);
        cell += sign < 0 ? Rat(-poly[s]) : poly[s];
    }
}

RatMatrix build_differential(const QuiverBundleP1& E, const QuiverBundleP1& Ep, int p) {
    if (E.quiver.vertices != Ep.quiver.vertices || E.quiver.num_arrows() != Ep.quiver.num_arrows())
        throw std::invalid_argument("quiver mismatch between the two bundles");
    E.validate();
    Ep.validate();

    const std::size_t nv = E.quiver.num_vertices();
    const std::size_t na = E.quiver.num_arrows();

    std::vector<HomBasis> vbasis;
    std::vector<std::size_t> voffset(nv);
    std::size_t cols = 0;
    for (std::size_t i = 0; i < nv; ++i) {
        vbasis.push_back(HomBasis::make(E.bundles[i], Ep.bundles[i], p));
        voffset[i] = cols;
        cols += vbasis[i].dim;
    }

    std::vector<HomBasis> abasis;
    std::vector<std::size_t> aoffset(na);
    std::size_t rows = 0;
    for (std::size_t a = 0; a < na; ++a) {
        abasis.push_back(
            HomBasis::make(E.bundles[E.quiver.tail_index(a)], Ep.bundles[E.quiver.head_index(a)], p));
        aoffset[a] = rows;
        rows += abasis[a].dim;
    }

    RatMatrix M(rows, cols);
    for (std::size_t i = 0; i < nv; ++i) {
        const HomBasis& vb = vbasis[i];
        const std::size_t nsrc = vb.src.size(), ntgt = vb.tgt.size();
        for (std::size_t j = 0; j < ntgt; ++j)
            for (std::size_t k = 0; k < nsrc; ++k) {
                long long c = vb.tgt[j] - vb.src[k];
                long long lo = p == 0 ? 0 : c + 1;
                long long hi = p == 0 ? c : -1;
                for (long long e1p = lo; e1p <= hi; ++e1p) {
                    // enumerate basis monomials of the block in storage order
                    long long e0, e1;
                    if (p == 0) { e1 = e1p; e0 = c - e1; }
                    else       { e0 = e1p; e1 = c - e0; }
                    auto idx = vb.index(j, k, e0, e1);
                    if (!idx) continue;
                    std::size_t col = voffset[i] + *idx;

                    for (std::size_t a = 0; a < na; ++a) {
                        // psi_ah . phi_a
                        if (E.quiver.head_index(a) == i) {
                            const PolyMatrix& phi = E.maps[a];
                            for (std::size_t kp = 0; kp < phi.cols; ++kp)
                                scatter(M, col, abasis[a], aoffset[a], j, kp, phi.at(k, kp), e0,
                                        e1, +1);
                        }
                        // - phi'_a . psi_at
                        if (E.quiver.tail_index(a) == i) {
                            const PolyMatrix& phip = Ep.maps[a];
                            for (std::size_t jp = 0; jp < phip.rows; ++jp)
                                scatter(M, col, abasis[a], aoffset[a], jp, k, phip.at(jp, j), e0,
                                        e1, -1);
                        }
                    }
                }
            }
    }
    return M;
}

long long pair_dim(const SplitBundle& s, const SplitBundle& t, int p) {
    long long sum = 0;
    for (auto b : t.degrees)
        for (auto a : s.degrees) sum += p == 0 ? hom_dim(a, b) : ext1_dim(a, b);
    return sum;
}

}  // namespace

RatMatrix build_d0(const QuiverBundleP1& E, const QuiverBundleP1& Ep) {
    return build_differential(E, Ep, 0);
}

RatMatrix build_d1(const QuiverBundleP1& E, const QuiverBundleP1& Ep) {
    return build_differential(E, Ep, 1);
}

HypercohProfile hypercoh_profile(const QuiverBundleP1& E, const QuiverBundleP1& Ep) {
    HypercohProfile pr;
    const std::size_t nv = E.quiver.num_vertices();
    for (std::size_t i = 0; i < nv; ++i) {
        pr.h0F0 += pair_dim(E.bundles[i], Ep.bundles[i], 0);
        pr.h1F0 += pair_dim(E.bundles[i], Ep.bundles[i], 1);
    }
    for (std::size_t a = 0; a < E.quiver.num_arrows(); ++a) {
        const SplitBundle& s = E.bundles[E.quiver.tail_index(a)];
        const SplitBundle& t = Ep.bundles[E.quiver.head_index(a)];
        pr.h0F1 += pair_dim(s, t, 0);
        pr.h1F1 += pair_dim(s, t, 1);
    }
    long long r0 = static_cast<long long>(rank(build_d0(E, Ep)));
    long long r1 = static_cast<long long>(rank(build_d1(E, Ep)));
    pr.H0 = pr.h0F0 - r0;
    pr.H1 = (pr.h0F1 - r0) + (pr.h1F0 - r1);
    pr.H2 = pr.h1F1 - r1;
    pr.chi = pr.H0 - pr.H1 + pr.H2;
    return pr;
}

HomSpace hom_intertwiners(const QuiverBundleP1& E, const QuiverBundleP1& Ep) {
    if (E.quiver.vertices != Ep.quiver.vertices || E.quiver.num_arrows() != Ep.quiver.num_arrows())
        throw std::invalid_argument("quiver mismatch between the two bundles");
    E.validate();
    Ep.validate();

    const std::size_t nv = E.quiver.num_vertices();

    // Unknowns: monomial coefficients of f_i(j, k): O(a_{i,k}) -> O(b'_{i,j}).
    struct Block {
        std::size_t vertex, j, k;
        long long deg;     // homogeneous degree of the entry
        std::size_t base;  // first unknown index
    };
    std::vector<Block> blocks;
    std::vector<std::vector<std::size_t>> block_of(nv);  // (j * cols + k) -> block id
    std::size_t nunk = 0;
    for (std::size_t i = 0; i < nv; ++i) {
        const auto& src = E.bundles[i].degrees;
        const auto& tgt = Ep.bundles[i].degrees;
        block_of[i].assign(src.size() * tgt.size(), static_cast<std::size_t>(-1));
        for (std::size_t j = 0; j < tgt.size(); ++j)
            for (std::size_t k = 0; k < src.size(); ++k) {
                long long n = tgt[j] - src[k];
                if (n < 0) continue;
                block_of[i][j * src.size() + k] = blocks.size();
                blocks.push_back({i, j, k, n, nunk});
                nunk += static_cast<std::size_t>(n) + 1;
            }
    }

    // Equations: per arrow a and entry (j', k') of phi'_a . f_at - f_ah . phi_a,
    // one row per monomial of the target degree.
    std::size_t nrows = 0;
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, long long>> eqs;  // a, j', k', N
    for (std::size_t a = 0; a < E.quiver.num_arrows(); ++a) {
        const auto& src = E.bundles[E.quiver.tail_index(a)].degrees;
        const auto& tgt = Ep.bundles[E.quiver.head_index(a)].degrees;
        for (std::size_t jp = 0; jp < tgt.size(); ++jp)
            for (std::size_t kp = 0; kp < src.size(); ++kp) {
                long long N = tgt[jp] - src[kp];
                if (N < 0) continue;
                eqs.emplace_back(a, jp, kp, N);
                nrows += static_cast<std::size_t>(N) + 1;
            }
    }

    RatMatrix M(nrows, nunk);
    std::size_t row_base = 0;
    for (const auto& [a, jp, kp, N] : eqs) {
        std::size_t ta = E.quiver.tail_index(a);
        std::size_t ha = E.quiver.head_index(a);
        const std::size_t src_ta = E.bundles[ta].degrees.size();
        const std::size_t src_ha = E.bundles[ha].degrees.size();

        // + phi'_a(j', m) * f_ta(m, k')
        for (std::size_t m = 0; m < Ep.bundles[ta].degrees.size(); ++m) {
            const Poly& P = Ep.maps[a].at(jp, m);
            if (poly_is_zero(P)) continue;
            std::size_t bid = block_of[ta][m * src_ta + kp];
            if (bid == static_cast<std::size_t>(-1)) continue;
            const Block& blk = blocks[bid];
            for (long long s = 0; s < static_cast<long long>(P.size()); ++s)
                for (long long u = 0; u <= blk.deg; ++u)
                    M.at(row_base + static_cast<std::size_t>(s + u), blk.base + u) += P[s];
        }
        // - f_ha(j', m) * phi_a(m, k')
        for (std::size_t m = 0; m < E.bundles[ha].degrees.size(); ++m) {
            const Poly& P = E.maps[a].at(m, kp);
            if (poly_is_zero(P)) continue;
            std::size_t bid = block_of[ha][jp * src_ha + m];
            if (bid == static_cast<std::size_t>(-1)) continue;
            const Block& blk = blocks[bid];
            for (long long s = 0; s < static_cast<long long>(P.size()); ++s)
                for (long long u = 0; u <= blk.deg; ++u)
                    M.at(row_base + static_cast<std::size_t>(u + s), blk.base + u) -= P[s];
        }
        row_base += static_cast<std::size_t>(N) + 1;
    }

    HomSpace out;
    auto basis_vecs = nullspace(M);
    out.dimension = static_cast<long long>(basis_vecs.size());
    for (const auto& v : basis_vecs) {
        std::vector<PolyMatrix> f(nv);
        for (std::size_t i = 0; i < nv; ++i)
            f[i] = PolyMatrix(Ep.bundles[i].degrees.size(), E.bundles[i].degrees.size());
        for (const Block& blk : blocks) {
            Poly p(static_cast<std::size_t>(blk.deg) + 1, Rat(0));
            bool nz = false;
            for (long long u = 0; u <= blk.deg; ++u) {
                p[u] = v[blk.base + u];
                if (p[u] != 0) nz = true;
            }
            if (nz) f[blk.vertex].at(blk.j, blk.k) = std::move(p);
        }
        out.basis.push_back(std::move(f));
    }
    return out;
}

std::pair<long long, long long> serre_dual_Pa(const QuiverBundleP1& E, const QuiverBundleP1& Ep,
                                              std::size_t arrow) {
    if (arrow >= E.quiver.num_arrows())
        throw std::invalid_argument("arrow index out of range");
    E.validate();
    Ep.validate();

    const std::size_t ta = E.quiver.tail_index(arrow);
    const std::size_t ha = E.quiver.head_index(arrow);
    const PolyMatrix& phi = E.maps[arrow];
    const PolyMatrix& phip = Ep.maps[arrow];

    // coker of d1_a : H1(Hom(E_ah, E'_ah)) + H1(Hom(E_at, E'_at)) -> H1(Hom(E_at, E'_ah)).
    // For a loop the two source spaces coincide and the map is the single
    // commutator psi . phi_a - phi'_a . psi.
    const bool loop = ta == ha;
    {
        HomBasis bh = HomBasis::make(E.bundles[ha], Ep.bundles[ha], 1);
        HomBasis bt = HomBasis::make(E.bundles[ta], Ep.bundles[ta], 1);
        HomBasis btgt = HomBasis::make(E.bundles[ta], Ep.bundles[ha], 1);
        RatMatrix M(btgt.dim, loop ? bh.dim : bh.dim + bt.dim);

        auto fill = [&](const HomBasis& vb, std::size_t col_base, bool head_side) {
            for (std::size_t j = 0; j < vb.tgt.size(); ++j)
                for (std::size_t k = 0; k < vb.src.size(); ++k) {
                    long long c = vb.tgt[j] - vb.src[k];
                    for (long long e0 = c + 1; e0 <= -1; ++e0) {
                        auto idx = vb.index(j, k, e0, c - e0);
                        if (!idx) continue;
                        std::size_t col = col_base + *idx;
                        if (head_side) {
                            // psi_ah . phi_a
                            for (std::size_t kp = 0; kp < phi.cols; ++kp)
                                scatter(M, col, btgt, 0, j, kp, phi.at(k, kp), e0, c - e0, +1);
                        } else {
                            // - phi'_a . psi_at
                            for (std::size_t jp = 0; jp < phip.rows; ++jp)
                                scatter(M, col, btgt, 0, jp, k, phip.at(jp, j), e0, c - e0, -1);
                        }
                    }
                }
        };
        fill(bh, 0, true);
        fill(bt, loop ? 0 : bh.dim, false);

        long long coker = static_cast<long long>(btgt.dim) - static_cast<long long>(rank(M));

        // ker of P_a : Hom(E'_ah, E_at (x) K) ->
        //              Hom(E'_ah, E_ah (x) K) + Hom(E'_at, E_at (x) K), K = O(-2)
        auto twist = [](const SplitBundle& b) {
            std::vector<long long> d = b.degrees;
            for (auto& x : d) x -= 2;
            return SplitBundle(d);
        };
        SplitBundle EatK = twist(E.bundles[ta]);
        SplitBundle EahK = twist(E.bundles[ha]);

        HomBasis bsrc = HomBasis::make(Ep.bundles[ha], EatK, 0);
        HomBasis bt1 = HomBasis::make(Ep.bundles[ha], EahK, 0);
        HomBasis bt2 = HomBasis::make(Ep.bundles[ta], EatK, 0);
        // For a loop the dual map is the single difference (phi (x) id) . xi - xi . phi'.
        RatMatrix P(loop ? bt1.dim : bt1.dim + bt2.dim, bsrc.dim);

        for (std::size_t k = 0; k < bsrc.tgt.size(); ++k)        // target summand of xi (E_at)
            for (std::size_t j = 0; j < bsrc.src.size(); ++j) {  // source summand (E'_ah)
                long long c = bsrc.tgt[k] - bsrc.src[j];
                for (long long e1 = 0; e1 <= c; ++e1) {
                    auto idx = bsrc.index(k, j, c - e1, e1);
                    if (!idx) continue;
                    std::size_t col = *idx;
                    // (phi_a (x) id) . xi : entry (m, j) gains phi_a(m, k) * xi(k, j)
                    for (std::size_t m = 0; m < phi.rows; ++m)
                        scatter(P, col, bt1, 0, m, j, phi.at(m, k), c - e1, e1, +1);
                    // xi . phi'_a : entry (k, m) gains xi(k, j) * phi'_a(j, m)
                    for (std::size_t m = 0; m < phip.cols; ++m)
                        scatter(P, col, bt2, loop ? 0 : bt1.dim, k, m, phip.at(j, m), c - e1, e1,
                                loop ? -1 : +1);
                }
            }

        long long ker = static_cast<long long>(bsrc.dim) - static_cast<long long>(rank(P));
        return {ker, coker};
    }
}

RankOneResult rank_one_stability(const QuiverBundleP1& E, const StabilityParameter& alpha) {
    E.validate();
    const std::size_t nv = E.quiver.num_vertices();
    if (alpha.weights.size() != nv)
        throw std::invalid_argument("vertex-set mismatch in rank_one_stability");
    for (const auto& b : E.bundles)
        if (b.rank() != 1)
            throw std::invalid_argument("rank_one_stability requires rank 1 at every vertex");

    TypeVector full = E.type();
    Rat mu = alpha_slope(full, alpha);

    RankOneResult res;
    bool have_witness = false;
    Rat best;
    bool tie = false, violated = false;
    std::vector<std::size_t> best_set, tie_set, bad_set;
    Rat tie_mu, bad_mu;

    const std::uint64_t masks = 1ull << nv;
    for (std::uint64_t m = 1; m + 1 < masks; ++m) {
        bool closed = true;
        for (std::size_t a = 0; a < E.quiver.num_arrows() && closed; ++a) {
            if (E.maps[a].is_zero()) continue;
            if ((m >> E.quiver.tail_index(a)) & 1)
                if (!((m >> E.quiver.head_index(a)) & 1)) closed = false;
        }
        if (!closed) continue;

        TypeVector sub;
        sub.entries.assign(nv, {0, 0});
        std::vector<std::size_t> set;
        for (std::size_t i = 0; i < nv; ++i)
            if ((m >> i) & 1) {
                sub.entries[i] = full.entries[i];
                set.push_back(i);
            }
        Rat s = alpha_slope(sub, alpha);
        if (!have_witness || s > best) {
            have_witness = true;
            best = s;
            best_set = set;
        }
        if (s > mu && (!violated || s > bad_mu)) {
            violated = true;
            bad_mu = s;
            bad_set = set;
        } else if (s == mu && !tie) {
            tie = true;
            tie_mu = s;
            tie_set = set;
        }
    }

    if (violated) {
        res.verdict = Verdict::Unstable;
        res.witness = bad_set;
        res.witness_slope = bad_mu;
    } else if (tie) {
        res.verdict = Verdict::StrictlySemistable;
        res.witness = tie_set;
        res.witness_slope = tie_mu;
    } else {
        res.verdict = Verdict::Stable;
        if (have_witness) {
            res.witness = best_set;
            res.witness_slope = best;
        }
    }
    return res;
}

std::optional<SplitDestabilizer> split_destabilizer_search(const QuiverBundleP1& E,
                                                           const StabilityParameter& alpha) {
    E.validate();
    const std::size_t nv = E.quiver.num_vertices();
    if (alpha.weights.size() != nv)
        throw std::invalid_argument("vertex-set mismatch in split_destabilizer_search");
    TypeVector full = E.type();
    if (full.total_rank() == 0) return std::nullopt;
    Rat mu = alpha_slope(full, alpha);

    std::vector<std::uint64_t> pick(nv, 0);
    std::vector<std::uint64_t> limit(nv);
    for (std::size_t i = 0; i < nv; ++i) limit[i] = 1ull << E.bundles[i].rank();

    while (true) {
        bool all_empty = true, all_full = true;
        for (std::size_t i = 0; i < nv; ++i) {
            if (pick[i] != 0) all_empty = false;
            if (pick[i] != limit[i] - 1) all_full = false;
        }
        if (!all_empty && !all_full) {
            // invariance: arrow blocks from chosen tail summands into
            // non-chosen head summands must vanish identically
            bool invariant = true;
            for (std::size_t a = 0; a < E.quiver.num_arrows() && invariant; ++a) {
                std::uint64_t st = pick[E.quiver.tail_index(a)];
                std::uint64_t sh = pick[E.quiver.head_index(a)];
                const PolyMatrix& m = E.maps[a];
                for (std::size_t k = 0; k < m.cols && invariant; ++k) {
                    if (!((st >> k) & 1)) continue;
                    for (std::size_t j = 0; j < m.rows; ++j)
                        if (!((sh >> j) & 1) && !poly_is_zero(m.at(j, k))) {
                            invariant = false;
                            break;
                        }
                }
            }
            if (invariant) {
                TypeVector sub;
                sub.entries.assign(nv, {0, 0});
                std::vector<std::vector<std::size_t>> chosen(nv);
                for (std::size_t i = 0; i < nv; ++i)
                    for (std::size_t k = 0; k < static_cast<std::size_t>(E.bundles[i].rank()); ++k)
                        if ((pick[i] >> k) & 1) {
                            sub.entries[i].rank += 1;
                            sub.entries[i].degree += E.bundles[i].degrees[k];
                            chosen[i].push_back(k);
                        }
                if (sub.total_rank() > 0) {
                    Rat s = alpha_slope(sub, alpha);
                    if (s > mu) return SplitDestabilizer{chosen, sub, s, mu};
                }
            }
        }
        std::size_t i = nv;
        while (i > 0) {
            --i;
            if (++pick[i] < limit[i]) break;
            pick[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (nv == 0) return std::nullopt;
    }
}

namespace {

Poly poly_det(const PolyMatrix& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
    const std::size_t n = rows.size();
    if (n == 0) return Poly{Rat(1)};
    if (n == 1) return m.at(rows[0], cols[0]);
    Poly det;
    for (std::size_t i = 0; i < n; ++i) {
        const Poly& e = m.at(rows[i], cols[0]);
        if (poly_is_zero(e)) continue;
        std::vector<std::size_t> sub_rows;
        for (std::size_t t = 0; t < n; ++t)
            if (t != i) sub_rows.push_back(rows[t]);
        std::vector<std::size_t> sub_cols(cols.begin() + 1, cols.end());
        Poly term = poly_mul(e, poly_det(m, sub_rows, sub_cols));
        // degrees of cofactor terms may differ when entries are forced zero;
        // only same-degree nonzero terms can coexist for a valid matrix
        det = (i % 2 == 0) ? poly_add(det, term) : poly_sub(det, term);
    }
    return det;
}

bool has_nonzero_maximal_minor(const PolyMatrix& m, std::size_t size, bool choose_cols) {
    // choose `size` columns (or rows) out of the larger dimension
    std::size_t total = choose_cols ? m.cols : m.rows;
    std::vector<std::size_t> fixed(size);
    for (std::size_t i = 0; i < size; ++i) fixed[i] = i;
    std::vector<std::size_t> comb(size);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos,
                                                            std::size_t start) -> bool {
        if (pos == size) {
            Poly d = choose_cols ? poly_det(m, fixed, comb) : poly_det(m, comb, fixed);
            return !poly_is_zero(d);
        }
        for (std::size_t c = start; c < total; ++c) {
            comb[pos] = c;
            if (rec(pos + 1, c + 1)) return true;
        }
        return false;
    };
    if (size == 0) return true;
    return rec(0, 0);
}

}  // namespace

bool generically_injective(const PolyMatrix& m) {
    if (m.cols == 0) return true;
    if (m.cols > m.rows) return false;
    // some cols x cols minor is a nonzero polynomial
    return has_nonzero_maximal_minor(m, m.cols, false);
}

bool generically_surjective(const PolyMatrix& m) {
    if (m.rows == 0) return true;
    if (m.rows > m.cols) return false;
    return has_nonzero_maximal_minor(m, m.rows, true);
}

namespace {

long long rand_range(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

PolyMatrix random_map(std::mt19937_64& rng, const SplitBundle& src, const SplitBundle& tgt,
                      bool dense) {
    PolyMatrix m(tgt.degrees.size(), src.degrees.size());
    for (std::size_t j = 0; j < m.rows; ++j)
        for (std::size_t k = 0; k < m.cols; ++k) {
            long long n = tgt.degrees[j] - src.degrees[k];
            if (n < 0) continue;
            if (!dense && rng() % 3 == 0) continue;  // sparse zero entries
            Poly p(static_cast<std::size_t>(n) + 1);
            bool nz = false;
            for (auto& c : p) {
                c = Rat(static_cast<long>(rand_range(rng, -3, 3)));
                if (c != 0) nz = true;
            }
            if (nz) m.at(j, k) = std::move(p);
        }
    return m;
}

}  // namespace

std::pair<QuiverBundleP1, QuiverBundleP1> random_instance(std::uint64_t seed,
                                                          const InstanceLimits& limits,
                                                          MapConstraint constraint) {
    if (limits.max_vertices < 1 || limits.max_rank < 1 || limits.max_abs_degree < 0)
        throw std::invalid_argument("invalid instance limits");
    std::mt19937_64 rng(seed);
    const bool constrained = constraint != MapConstraint::None;
    const int attempts = 1000;

    for (int att = 0; att < attempts; ++att) {
        Quiver q;
        int nv = static_cast<int>(rand_range(rng, 1, limits.max_vertices));
        for (int i = 0; i < nv; ++i) q.vertices.push_back("v" + std::to_string(i + 1));
        int aid = 0;
        for (int i = 0; i < nv; ++i)
            for (int j = 0; j < nv; ++j) {
                // the certificate hypothesis is about arrows between distinct
                // vertices; constrained draws stay loop-free
                if (constrained && i == j) continue;
                if (rng() % 2 == 0)
                    q.arrows.push_back({"a" + std::to_string(++aid), q.vertices[i], q.vertices[j]});
            }

        auto draw_bundle_set = [&]() {
            std::vector<SplitBundle> bs;
            // under a constraint a uniform rank keeps the certificates reachable
            long long fixed_rank = rand_range(rng, 1, limits.max_rank);
            for (int i = 0; i < nv; ++i) {
                long long r = constrained ? fixed_rank : rand_range(rng, 0, limits.max_rank);
                std::vector<long long> degs;
                for (long long s = 0; s < r; ++s)
                    degs.push_back(rand_range(rng, -limits.max_abs_degree, limits.max_abs_degree));
                bs.emplace_back(std::move(degs));
            }
            return bs;
        };

        QuiverBundleP1 E{q, draw_bundle_set(), {}};
        QuiverBundleP1 Ep{q, draw_bundle_set(), {}};
        bool ok = true;
        for (auto* B : {&E, &Ep}) {
            for (std::size_t a = 0; a < q.num_arrows(); ++a) {
                const SplitBundle& s = B->bundles[q.tail_index(a)];
                const SplitBundle& t = B->bundles[q.head_index(a)];
                PolyMatrix m = random_map(rng, s, t, constrained);
                if (constraint == MapConstraint::Injective && !generically_injective(m)) ok = false;
                if (constraint == MapConstraint::GenericallySurjective &&
                    !generically_surjective(m))
                    ok = false;
                B->maps.push_back(std::move(m));
            }
        }
        if (!ok) continue;
        E.validate();
        Ep.validate();
        return {std::move(E), std::move(Ep)};
    }
    throw std::runtime_error("random_instance: constraint unsatisfiable within retry budget");
}

}  // namespace qb
