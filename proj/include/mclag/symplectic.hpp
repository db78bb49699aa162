#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mclag/errors.hpp"
#include "mclag/int_matrix.hpp"
#include "mclag/presentations.hpp"
#include "mclag/smith.hpp"

namespace mclag {

// A free module with a fixed ordered basis; the labels double as coordinate
// documentation for reports.
struct BasedModule {
    std::size_t rank = 0;
    std::vector<std::string> labels;
};

// H = H_1 of the surface with the ordered basis (x_1..x_g, y_1..y_g).
inline BasedModule h_module(int g) {
    BasedModule m;
    m.rank = static_cast<std::size_t>(2 * g);
    for (int i = 1; i <= g; ++i) m.labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= g; ++i) m.labels.push_back("y" + std::to_string(i));
    return m;
}

// S^2 L with basis X_1^2, ..., X_g^2, then X_ij for i < j lexicographically.
inline BasedModule s2l_module(int g) {
    BasedModule m;
    m.rank = static_cast<std::size_t>(g * (g + 1) / 2);
    for (int i = 1; i <= g; ++i) m.labels.push_back("X" + std::to_string(i) + "^2");
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j)
            m.labels.push_back("X" + std::to_string(i) + std::to_string(j));
    return m;
}

inline std::size_t s2l_rank(int g) { return static_cast<std::size_t>(g * (g + 1) / 2); }

// Index of X_i^2 (i == j) or X_ij (i != j) in the S^2 L basis; 1-based i, j.
inline std::size_t s2l_index(int g, int i, int j) {
    if (i == j) return static_cast<std::size_t>(i - 1);
    if (i > j) std::swap(i, j);
    std::size_t off = static_cast<std::size_t>(g);
    for (int a = 1; a < i; ++a) off += static_cast<std::size_t>(g - a);
    return off + static_cast<std::size_t>(j - i - 1);
}

// Index of the unordered pair (p < q) among pairs from {0..n-1}, lexicographic.
inline std::size_t pair_index(std::size_t n, std::size_t p, std::size_t q) {
    if (p > q) std::swap(p, q);
    return p * (2 * n - p - 1) / 2 + (q - p - 1);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

inline BasedModule wedge2_module(const BasedModule& m) {
    BasedModule w;
    w.rank = pair_count(m.rank);
    for (std::size_t p = 0; p < m.rank; ++p)
        for (std::size_t q = p + 1; q < m.rank; ++q)
            w.labels.push_back(m.labels[p] + "^" + m.labels[q]);
    return w;
}

inline BasedModule wedge3_module(const BasedModule& m) {
    BasedModule w;
    for (std::size_t p = 0; p < m.rank; ++p)
        for (std::size_t q = p + 1; q < m.rank; ++q)
            for (std::size_t s = q + 1; s < m.rank; ++s)
                w.labels.push_back(m.labels[p] + "^" + m.labels[q] + "^" + m.labels[s]);
    w.rank = w.labels.size();
    return w;
}

inline BasedModule dual_module(const BasedModule& m) {
    BasedModule d;
    d.rank = m.rank;
    for (const std::string& l : m.labels) d.labels.push_back(l + "*");
    return d;
}

// --- the symplectic group and its upper-right subgroup ----------------------

inline IntMatrix standard_j(int g) {
    const std::size_t n = static_cast<std::size_t>(g);
    IntMatrix j(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        j(i, n + i) = 1;
        j(n + i, i) = -1;
    }
    return j;
}

inline bool is_symplectic(const IntMatrix& m, int g) {
    const std::size_t n = static_cast<std::size_t>(2 * g);
    if (m.rows() != n || m.cols() != n) throw DimensionMismatch("is_symplectic: matrix is not 2g x 2g");
    IntMatrix j = standard_j(g);
    return m.transpose() * j * m == j;
}

// Element of Sp(2g,Z); the defining condition is checked at construction.
struct SpMatrix {
    int g = 0;
    IntMatrix m;

    SpMatrix(int genus, IntMatrix mat) : g(genus), m(std::move(mat)) {
        if (!is_symplectic(m, g)) throw NotSymplectic("matrix fails tM J M = J");
    }

    static SpMatrix identity(int genus) {
        return SpMatrix(genus, IntMatrix::identity(static_cast<std::size_t>(2 * genus)));
    }

    bool operator==(const SpMatrix&) const = default;

    IntMatrix block(std::size_t bi, std::size_t bj) const {
        const std::size_t n = static_cast<std::size_t>(g);
        IntMatrix b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) b(i, j) = m(bi * n + i, bj * n + j);
        return b;
    }
};

inline SpMatrix operator*(const SpMatrix& a, const SpMatrix& b) {
    if (a.g != b.g) throw DimensionMismatch("Sp product: genus mismatch");
    return SpMatrix(a.g, a.m * b.m);
}

struct UrspBlocks {
    IntMatrix a; // upper-left
    IntMatrix b; // upper-right
};

// True iff the lower-left block vanishes; then D = tA^-1 and A^-1 B symmetric
// follow from symplecticity, which the implementation asserts rather than
// assumes.
inline std::optional<UrspBlocks> ursp_blocks(const SpMatrix& sp) {
    IntMatrix c = sp.block(1, 0);
    if (!c.is_zero()) return std::nullopt;
    IntMatrix a = sp.block(0, 0), b = sp.block(0, 1), d = sp.block(1, 1);
    const std::size_t n = a.rows();
    if (!(a.transpose() * d == IntMatrix::identity(n)))
        throw std::logic_error("ursp: D != tA^-1 despite C = 0");
    if (!(a * b.transpose() == b * a.transpose()))
        throw std::logic_error("ursp: A^-1 B not symmetric despite C = 0");
    return UrspBlocks{std::move(a), std::move(b)};
}

inline bool is_ursp(const SpMatrix& sp) { return ursp_blocks(sp).has_value(); }

// (I B; 0 I) for symmetric B: the realization of S^2 L inside Sp(2g,Z).
inline SpMatrix embed_sym(const IntMatrix& b) {
    if (b.rows() != b.cols()) throw NotSymmetric("embed_sym: matrix not square");
    if (!(b == b.transpose())) throw NotSymmetric("embed_sym: matrix not symmetric");
    const std::size_t n = b.rows();
    IntMatrix m = IntMatrix::identity(2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, n + j) = b(i, j);
    return SpMatrix(static_cast<int>(n), std::move(m));
}

// diag(A, tA^-1): the splitting GL(g,Z) -> urSp(2g).
inline SpMatrix embed_gl(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw NotUnimodular("embed_gl: matrix not square");
    std::optional<IntMatrix> inv = unimodular_inverse(a);
    if (!inv) throw NotUnimodular("embed_gl: matrix not unimodular");
    const std::size_t n = a.rows();
    IntMatrix dual = inv->transpose();
    IntMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = a(i, j);
            m(n + i, n + j) = dual(i, j);
        }
    return SpMatrix(static_cast<int>(n), std::move(m));
}

// Upper-left block of an upper-right symplectic matrix.
inline IntMatrix ul_map(const SpMatrix& sp) {
    std::optional<UrspBlocks> blocks = ursp_blocks(sp);
    if (!blocks) throw NotUpperTriangularBlockForm("ul_map: lower-left block is nonzero");
    return blocks->a;
}

// --- induced representations ------------------------------------------------

// Sym^2 of a g x g matrix over the S^2 L basis order.
inline IntMatrix sym2_of_gl(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw DimensionMismatch("sym2_of_gl: matrix not square");
    const int g = static_cast<int>(a.rows());
    const std::size_t r = s2l_rank(g);
    IntMatrix out(r, r);
    auto aij = [&](int row, int col) -> const Int& {
        return a(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1));
    };
    for (int j = 1; j <= g; ++j) {
        // X_j^2  |->  sum_k a_kj^2 X_k^2 + sum_{k<l} a_kj a_lj X_kl
        const std::size_t col = s2l_index(g, j, j);
        for (int k = 1; k <= g; ++k) out(s2l_index(g, k, k), col) = aij(k, j) * aij(k, j);
        for (int k = 1; k <= g; ++k)
            for (int l = k + 1; l <= g; ++l)
                out(s2l_index(g, k, l), col) = aij(k, j) * aij(l, j);
    }
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) {
            // X_ij |-> sum_k a_ki a_kj (2 X_k^2) ... + sum_{k<l} (a_ki a_lj + a_kj a_li) X_kl
            const std::size_t col = s2l_index(g, i, j);
            for (int k = 1; k <= g; ++k) out(s2l_index(g, k, k), col) = 2 * aij(k, i) * aij(k, j);
            for (int k = 1; k <= g; ++k)
                for (int l = k + 1; l <= g; ++l)
                    out(s2l_index(g, k, l), col) = aij(k, i) * aij(l, j) + aij(k, j) * aij(l, i);
        }
    return out;
}

// Wedge square: entries are the 2x2 minors of m.
inline IntMatrix wedge2_rep(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("wedge2_rep: matrix not square");
    const std::size_t n = m.rows();
    const std::size_t N = pair_count(n);
    IntMatrix out(N, N);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v) {
            const std::size_t col = pair_index(n, u, v);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = k + 1; l < n; ++l)
                    out(pair_index(n, k, l), col) = m(k, u) * m(l, v) - m(l, u) * m(k, v);
        }
    return out;
}

// Wedge cube: entries are the 3x3 minors of m.
inline IntMatrix wedge3_rep(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("wedge3_rep: matrix not square");
    const std::size_t n = m.rows();
    std::vector<std::array<std::size_t, 3>> triples;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            for (std::size_t w = v + 1; w < n; ++w) triples.push_back({u, v, w});
    const std::size_t N = triples.size();
    IntMatrix out(N, N);
    for (std::size_t col = 0; col < N; ++col) {
        const auto [u, v, w] = triples[col];
        for (std::size_t row = 0; row < N; ++row) {
            const auto [p, q, s] = triples[row];
            out(row, col) = m(p, u) * (m(q, v) * m(s, w) - m(s, v) * m(q, w)) -
                            m(p, v) * (m(q, u) * m(s, w) - m(s, u) * m(q, w)) +
                            m(p, w) * (m(q, u) * m(s, v) - m(s, u) * m(q, v));
        }
    }
    return out;
}

inline IntMatrix dual_rep(const IntMatrix& a) {
    std::optional<IntMatrix> inv = unimodular_inverse(a);
    if (!inv) throw NotUnimodular("dual_rep: matrix not unimodular");
    return inv->transpose();
}

enum class Construction { sym2_of_gl, wedge2, wedge3, dual };

inline IntMatrix induced_rep(const IntMatrix& m, Construction c) {
    switch (c) {
        case Construction::sym2_of_gl: return sym2_of_gl(m);
        case Construction::wedge2: return wedge2_rep(m);
        case Construction::wedge3: return wedge3_rep(m);
        case Construction::dual: return dual_rep(m);
    }
    throw std::logic_error("unreachable");
}

// --- Dehn twist images and the generation check -----------------------------

struct TwistImage {
    std::string label;
    std::vector<Int> vec; // coordinates in the S^2 L basis
};

// Images in S^2 L of the twists along the curves c_ij and c_k. The d-family
// has the identical image vectors, so only one copy is stored; the
// commuting-pairs argument uses it with multiplicity two.
inline std::vector<TwistImage> twist_image_table(int g) {
    if (g < 3) throw UnsupportedGenus("twist_image_table requires g >= 3");
    const std::size_t r = s2l_rank(g);
    std::vector<TwistImage> table;
    for (int i = 1; i <= g; ++i)
        for (int j = i + 1; j <= g; ++j) {
            TwistImage t;
            t.label = "c" + std::to_string(i) + std::to_string(j);
            t.vec.assign(r, 0);
            t.vec[s2l_index(g, i, i)] = 1;
            t.vec[s2l_index(g, i, j)] = -1;
            t.vec[s2l_index(g, j, j)] = 1;
            table.push_back(std::move(t));
        }
    for (int k = 1; k <= g; ++k) {
        TwistImage t;
        t.label = "c" + std::to_string(k);
        t.vec.assign(r, 0);
        t.vec[s2l_index(g, k, k)] = 1;
        table.push_back(std::move(t));
    }
    return table;
}

struct GenerationReport {
    bool generates_s2l = false;
    std::size_t wedge_rank = 0;
    std::size_t expected_wedge_rank = 0;
};

// (a) the twist images generate S^2 L as a lattice; (b) the pairwise wedges
// of images taken from the two commuting twist families span wedge^2(S^2 L)
// at full rank C(r,2), r = g(g+1)/2.
inline GenerationReport lagrangian_generation_check(int g) {
    const std::size_t r = s2l_rank(g);
    std::vector<TwistImage> table = twist_image_table(g);
    std::vector<std::vector<Int>> vecs;
    for (const TwistImage& t : table) vecs.push_back(t.vec);

    GenerationReport rep;
    rep.generates_s2l = generates_full_lattice(vecs, r);
    rep.expected_wedge_rank = pair_count(r);

    IntMatrix wedges(pair_count(r), pair_count(vecs.size()));
    std::size_t col = 0;
    for (std::size_t p = 0; p < vecs.size(); ++p)
        for (std::size_t q = p + 1; q < vecs.size(); ++q, ++col)
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t l = k + 1; l < r; ++l)
                    wedges(pair_index(r, k, l), col) =
                        vecs[p][k] * vecs[q][l] - vecs[p][l] * vecs[q][k];
    rep.wedge_rank = integer_rank(wedges);
    return rep;
}

// --- standard generating sets ------------------------------------------------

inline std::vector<IntMatrix> sl_generator_matrices(int g) {
    std::vector<IntMatrix> gens;
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            if (i != j) gens.push_back(elementary_matrix(g, i, j));
    return gens;
}

// {e_ij} plus diag(-1,1,...,1); any generating set gives the same
// coinvariants, this one is fixed for determinism.
inline std::vector<IntMatrix> gl_generator_matrices(int g) {
    std::vector<IntMatrix> gens = sl_generator_matrices(g);
    IntMatrix flip = IntMatrix::identity(static_cast<std::size_t>(g));
    flip(0, 0) = -1;
    gens.push_back(std::move(flip));
    return gens;
}

// The transvections X_j = embed_sym(E_jj) and X_{i,j} = embed_sym(E_ij+E_ji):
// a basis of the S^2 L subgroup.
inline std::vector<SpMatrix> s2l_transvection_generators(int g) {
    std::vector<SpMatrix> gens;
    const std::size_t n = static_cast<std::size_t>(g);
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix b(n, n);
        b(j, j) = 1;
        gens.push_back(embed_sym(b));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            IntMatrix b(n, n);
            b(i, j) = b(j, i) = 1;
            gens.push_back(embed_sym(b));
        }
    return gens;
}

inline std::vector<SpMatrix> ursp_generators(int g) {
    std::vector<SpMatrix> gens = s2l_transvection_generators(g);
    for (const IntMatrix& a : gl_generator_matrices(g)) gens.push_back(embed_gl(a));
    return gens;
}

// The genus-3 matrix used to push the coinvariants from urSp(6) to Sp(6,Z):
// the identity with one extra 1 in the lower-left block at position (3,3).
inline SpMatrix sp6_extra_transvection() {
    IntMatrix m = IntMatrix::identity(6);
    m(5, 2) = 1;
    return SpMatrix(3, std::move(m));
}

// The S^2 L local system over the standard SL(g,Z) presentation.
inline IntRepresentation s2l_representation(int g) {
    IntRepresentation rep;
    rep.presentation = sl_presentation(g);
    rep.rank = s2l_rank(g);
    for (std::size_t t = 0; t < rep.presentation.generator_count(); ++t) {
        auto [i, j] = sl_generator_indices(rep.presentation, static_cast<int>(t));
        rep.images.push_back(sym2_of_gl(elementary_matrix(g, i, j)));
    }
    return rep;
}

} // namespace mclag
