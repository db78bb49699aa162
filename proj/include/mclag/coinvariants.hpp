#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mclag/abelian_group.hpp"
#include "mclag/errors.hpp"
#include "mclag/int_matrix.hpp"
#include "mclag/smith.hpp"

namespace mclag {

// One acting automorphism of the module Z^a + (Z/2)^b, in block form:
//   free generator j   |->  A.col(j) in the free part, Bm.col(j) in torsion
//   torsion generator k |->  C.col(k) in torsion (free part stays zero).
// Bm and C are matrices over Z/2 stored with entries in {0,1}.
struct ActionEndo {
    IntMatrix free_map;          // a x a, unimodular
    IntMatrix torsion_from_free; // b x a over Z/2
    IntMatrix torsion_map;       // b x b over Z/2, invertible mod 2
};

// A finitely generated module (free part + exponent-2 torsion part) together
// with a finite list of acting automorphisms. Torsion of other exponents does
// not occur in this library and is not modeled.
struct ActionModule {
    std::size_t free_rank = 0;
    std::size_t torsion2_rank = 0;
    std::vector<ActionEndo> elements;
};

namespace detail {

inline bool invertible_mod2(const IntMatrix& c) {
    const std::size_t n = c.rows();
    if (c.cols() != n) return false;
    std::vector<std::vector<int>> m(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Int r = c(i, j) % 2;
            m[i][j] = (r == 0) ? 0 : 1;
        }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) return false;
        std::swap(m[piv], m[col]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != col && m[i][col])
                for (std::size_t j = 0; j < n; ++j) m[i][j] ^= m[col][j];
    }
    return true;
}

} // namespace detail

inline void validate_action(const ActionModule& mod) {
    const std::size_t a = mod.free_rank, b = mod.torsion2_rank;
    for (const ActionEndo& e : mod.elements) {
        if (e.free_map.rows() != a || e.free_map.cols() != a ||
            e.torsion_from_free.rows() != b || e.torsion_from_free.cols() != a ||
            e.torsion_map.rows() != b || e.torsion_map.cols() != b)
            throw InvalidAction("acting element has blocks of the wrong size");
        for (std::size_t i = 0; i < b; ++i) {
            for (std::size_t j = 0; j < a; ++j) {
                const Int& x = e.torsion_from_free(i, j);
                if (x != 0 && x != 1) throw InvalidAction("torsion block entries must be 0/1");
            }
            for (std::size_t j = 0; j < b; ++j) {
                const Int& x = e.torsion_map(i, j);
                if (x != 0 && x != 1) throw InvalidAction("torsion block entries must be 0/1");
            }
        }
        if (a > 0) {
            Int det = e.free_map.determinant();
            if (det != 1 && det != -1) throw InvalidAction("free block is not unimodular");
        }
        if (b > 0 && !detail::invertible_mod2(e.torsion_map))
            throw InvalidAction("torsion block is not invertible mod 2");
    }
}

// Relation matrix over a+b generators: columns 2*t_k for each torsion
// generator, then sigma(gen) - gen for every acting element and every
// generator, torsion coordinates lifted to {0,1}. The extra 2 t_k = 0
// relations make the lift choice immaterial.
//
// Relations from a generating set of the acting group span the same
// submodule as relations from all group elements: (st)x - x =
// s(tx) - (tx) + (tx - x) telescopes over words, and s^-1 x - x =
// -(s(s^-1 x) - s^-1 x) handles inverses.
inline IntMatrix coinvariant_relations(const ActionModule& mod) {
    validate_action(mod);
    const std::size_t a = mod.free_rank, b = mod.torsion2_rank;
    const std::size_t cols = b + mod.elements.size() * (a + b);
    IntMatrix rel(a + b, cols);
    std::size_t col = 0;
    for (std::size_t k = 0; k < b; ++k, ++col) rel(a + k, col) = 2;
    for (const ActionEndo& e : mod.elements) {
        for (std::size_t j = 0; j < a; ++j, ++col) {
            for (std::size_t i = 0; i < a; ++i)
                rel(i, col) = e.free_map(i, j) - (i == j ? 1 : 0);
            for (std::size_t i = 0; i < b; ++i) rel(a + i, col) = e.torsion_from_free(i, j);
        }
        for (std::size_t k = 0; k < b; ++k, ++col)
            for (std::size_t i = 0; i < b; ++i) {
                Int x = e.torsion_map(i, k) - (i == k ? 1 : 0);
                rel(a + i, col) = (x % 2 == 0) ? 0 : 1;
            }
    }
    return rel;
}

inline FgAbelianGroup coinvariants(const ActionModule& mod) {
    return from_relation_matrix(mod.free_rank + mod.torsion2_rank, coinvariant_relations(mod));
}

struct WitnessReport {
    std::optional<Int> order; // empty = infinite
    bool is_generator = false;
};

// Order and generation status of an element's class in the coinvariants.
inline WitnessReport coinvariant_witness(const ActionModule& mod, const std::vector<Int>& element) {
    if (element.size() != mod.free_rank + mod.torsion2_rank)
        throw DimensionMismatch("witness element has wrong length");
    QuotientStructure q(coinvariant_relations(mod));
    return WitnessReport{q.order_of(element), q.generates(element)};
}

} // namespace mclag
