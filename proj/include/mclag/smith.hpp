#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "mclag/abelian_group.hpp"
#include "mclag/errors.hpp"
#include "mclag/int_matrix.hpp"

namespace mclag {

// Certified Smith normal form: u * a * v = d with u, v unimodular, d diagonal
// with positive entries forming a divisibility chain.
struct SmithDecomposition {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    std::vector<Int> invariant_factors; // nonzero diagonal of d
};

namespace detail {

struct SnfOptions {
    bool with_u = false;
    bool with_v = false;
    bool with_v_inv = false;
};

struct SnfCore {
    IntMatrix d;
    IntMatrix u;     // populated iff requested
    IntMatrix v;     // populated iff requested
    IntMatrix v_inv; // populated iff requested
    std::size_t rank = 0;
    std::vector<Int> factors;
};

// Diagonalization by elementary row/column operations. Pivot selection takes
// a nonzero entry of minimal absolute value (ties: lowest row, then lowest
// column) to limit coefficient growth; the output is deterministic for a
// fixed input. Row/column updates skip zero entries, which matters for the
// large sparse relation stacks this library feeds through here.
inline SnfCore snf_core(IntMatrix a, const SnfOptions& opt) {
    const std::size_t m = a.rows(), n = a.cols();
    SnfCore res;
    if (opt.with_u) res.u = IntMatrix::identity(m);
    if (opt.with_v) res.v = IntMatrix::identity(n);
    if (opt.with_v_inv) res.v_inv = IntMatrix::identity(n);

    // Entries left of / above the active corner are already zero, so row ops
    // touch columns >= s and column ops touch rows >= s only. Certificates
    // always get the full-width update.
    auto row_axpy = [&](std::size_t dst, std::size_t src, const Int& q, std::size_t s) {
        // row dst += q * row src
        for (std::size_t j = s; j < n; ++j)
            if (a(src, j) != 0) a(dst, j) += q * a(src, j);
        if (opt.with_u)
            for (std::size_t j = 0; j < m; ++j)
                if (res.u(src, j) != 0) res.u(dst, j) += q * res.u(src, j);
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q, std::size_t s) {
        // col dst += q * col src
        for (std::size_t i = s; i < m; ++i)
            if (a(i, src) != 0) a(i, dst) += q * a(i, src);
        if (opt.with_v)
            for (std::size_t i = 0; i < n; ++i)
                if (res.v(i, src) != 0) res.v(i, dst) += q * res.v(i, src);
        if (opt.with_v_inv) // inverse op acts on rows: row src -= q * row dst
            for (std::size_t j = 0; j < n; ++j)
                if (res.v_inv(dst, j) != 0) res.v_inv(src, j) -= q * res.v_inv(dst, j);
    };
    auto swap_rows = [&](std::size_t r1, std::size_t r2, std::size_t s) {
        if (r1 == r2) return;
        for (std::size_t j = s; j < n; ++j) std::swap(a(r1, j), a(r2, j));
        if (opt.with_u)
            for (std::size_t j = 0; j < m; ++j) std::swap(res.u(r1, j), res.u(r2, j));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2, std::size_t s) {
        if (c1 == c2) return;
        for (std::size_t i = s; i < m; ++i) std::swap(a(i, c1), a(i, c2));
        if (opt.with_v)
            for (std::size_t i = 0; i < n; ++i) std::swap(res.v(i, c1), res.v(i, c2));
        if (opt.with_v_inv)
            for (std::size_t j = 0; j < n; ++j) std::swap(res.v_inv(c1, j), res.v_inv(c2, j));
    };
    auto negate_row = [&](std::size_t r, std::size_t s) {
        for (std::size_t j = s; j < n; ++j)
            if (a(r, j) != 0) a(r, j) = -a(r, j);
        if (opt.with_u)
            for (std::size_t j = 0; j < m; ++j)
                if (res.u(r, j) != 0) res.u(r, j) = -res.u(r, j);
    };

    const std::size_t lim = std::min(m, n);
    std::size_t s = 0;
    while (s < lim) {
        // Find a minimal-|.|- pivot in the trailing submatrix.
        std::size_t pi = 0, pj = 0;
        bool found = false;
        Int best;
        for (std::size_t i = s; i < m && !(found && best == 1); ++i) {
            for (std::size_t j = s; j < n; ++j) {
                const Int& x = a(i, j);
                if (x == 0) continue;
                Int ax = x < 0 ? Int(-x) : x;
                if (!found || ax < best) {
                    found = true;
                    best = ax;
                    pi = i;
                    pj = j;
                    if (best == 1) break;
                }
            }
        }
        if (!found) break; // trailing submatrix is zero

        swap_rows(s, pi, s);
        swap_cols(s, pj, s);

        for (;;) {
            bool clean = true;
            for (std::size_t i = s + 1; i < m; ++i) {
                const Int& x = a(i, s);
                if (x == 0) continue;
                Int q = x / a(s, s); // truncated division: remainder < |pivot|
                if (q != 0) row_axpy(i, s, -q, s);
                if (a(i, s) != 0) clean = false;
            }
            for (std::size_t j = s + 1; j < n; ++j) {
                const Int& x = a(s, j);
                if (x == 0) continue;
                Int q = x / a(s, s);
                if (q != 0) col_axpy(j, s, -q, s);
                if (a(s, j) != 0) clean = false;
            }
            if (!clean) {
                // Some remainder beat the pivot; reselect inside row/col s.
                std::size_t bi = s, bj = s;
                Int bbest = a(s, s) < 0 ? Int(-a(s, s)) : a(s, s);
                for (std::size_t i = s + 1; i < m; ++i) {
                    const Int& x = a(i, s);
                    if (x == 0) continue;
                    Int ax = x < 0 ? Int(-x) : x;
                    if (ax < bbest) {
                        bbest = ax;
                        bi = i;
                        bj = s;
                    }
                }
                for (std::size_t j = s + 1; j < n; ++j) {
                    const Int& x = a(s, j);
                    if (x == 0) continue;
                    Int ax = x < 0 ? Int(-x) : x;
                    if (ax < bbest) {
                        bbest = ax;
                        bi = s;
                        bj = j;
                    }
                }
                swap_rows(s, bi, s);
                swap_cols(s, bj, s);
                continue;
            }
            // Row s and column s are clear; enforce divisibility of the rest.
            bool offender = false;
            for (std::size_t i = s + 1; i < m && !offender; ++i)
                for (std::size_t j = s + 1; j < n; ++j)
                    if (a(i, j) % a(s, s) != 0) {
                        row_axpy(s, i, Int(1), s);
                        offender = true;
                        break;
                    }
            if (!offender) break;
        }

        if (a(s, s) < 0) negate_row(s, s);
        ++s;
    }

    res.rank = s;
    res.factors.reserve(s);
    for (std::size_t k = 0; k < s; ++k) res.factors.push_back(a(k, k));
    res.d = std::move(a);
    return res;
}

// Invariant factors only: identical elimination, no certificate bookkeeping.
inline std::vector<Int> snf_factors(IntMatrix a) { return snf_core(std::move(a), {}).factors; }

// Columns equal up to sign or repeated do not change a column span; relation
// stacks shrink a lot under this.
inline IntMatrix prune_columns(const IntMatrix& a) {
    std::map<std::vector<Int>, bool> seen;
    std::vector<std::vector<Int>> keep;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<Int> col = a.column(j);
        std::size_t first = 0;
        while (first < col.size() && col[first] == 0) ++first;
        if (first == col.size()) continue; // zero column
        if (col[first] < 0)
            for (Int& x : col) x = -x;
        if (seen.emplace(col, true).second) keep.push_back(std::move(col));
    }
    IntMatrix out(a.rows(), keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j) out.set_column(j, keep[j]);
    return out;
}

} // namespace detail

// --- public operations -----------------------------------------------------

inline SmithDecomposition smith_normal_form(const IntMatrix& a) {
    detail::SnfOptions opt;
    opt.with_u = opt.with_v = true;
    detail::SnfCore core = detail::snf_core(a, opt);
    return SmithDecomposition{std::move(core.d), std::move(core.u), std::move(core.v),
                              std::move(core.factors)};
}

inline std::size_t integer_rank(const IntMatrix& a) { return detail::snf_factors(a).size(); }

// Basis of the saturated integer kernel lattice {x : a x = 0}, one basis
// vector per column.
inline IntMatrix kernel_basis(const IntMatrix& a) {
    detail::SnfOptions opt;
    opt.with_v = true;
    detail::SnfCore core = detail::snf_core(a, opt);
    const std::size_t n = a.cols(), k = n - core.rank;
    IntMatrix basis(n, k);
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < n; ++i) basis(i, j) = core.v(i, core.rank + j);
    return basis;
}

// Isomorphism type of Z^rows(a) / (column span of a).
inline FgAbelianGroup cokernel_invariants(const IntMatrix& a) {
    std::vector<Int> factors = detail::snf_factors(detail::prune_columns(a));
    const std::size_t rank = factors.size();
    return FgAbelianGroup(a.rows() - rank, std::move(factors));
}

// Isomorphism type of Z^generators / (column span of relations).
inline FgAbelianGroup from_relation_matrix(std::size_t generators, const IntMatrix& relations) {
    if (relations.rows() != generators)
        throw DimensionMismatch("relation matrix must have one row per generator");
    return cokernel_invariants(relations);
}

// Solve a x = b over Z. Empty optional means b is not in the column lattice.
inline std::optional<std::vector<Int>> solve_in_column_lattice(const IntMatrix& a,
                                                               const std::vector<Int>& b) {
    if (b.size() != a.rows()) throw DimensionMismatch("solve: vector length != rows");
    detail::SnfOptions opt;
    opt.with_u = opt.with_v = true;
    detail::SnfCore core = detail::snf_core(a, opt);
    std::vector<Int> w = core.u.apply(b);
    std::vector<Int> y(a.cols());
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < core.rank) {
            if (w[i] % core.factors[i] != 0) return std::nullopt;
            y[i] = w[i] / core.factors[i];
        } else if (w[i] != 0) {
            return std::nullopt;
        }
    }
    return core.v.apply(y);
}

// True iff the given columns span all of Z^ambient_rank.
inline bool generates_full_lattice(const std::vector<std::vector<Int>>& vectors,
                                   std::size_t ambient_rank) {
    IntMatrix a(ambient_rank, vectors.size());
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != ambient_rank)
            throw DimensionMismatch("generates_full_lattice: vector length != ambient rank");
        a.set_column(j, vectors[j]);
    }
    std::vector<Int> factors = detail::snf_factors(std::move(a));
    if (factors.size() != ambient_rank) return false;
    for (const Int& f : factors)
        if (f != 1) return false;
    return true;
}

// Ker d1 / Im d2 for a two-step complex  C2 --d2--> C1 --d1--> C0.
// Each column of d2 is expressed in the coordinates of the saturated kernel
// basis of d1 (these coordinates are unique), and the cokernel of the
// coordinate matrix is returned.
inline FgAbelianGroup subquotient(const IntMatrix& d2, const IntMatrix& d1) {
    if (d2.rows() != d1.cols())
        throw DimensionMismatch("subquotient: cols(d1) != rows(d2)");
    detail::SnfOptions opt;
    opt.with_v_inv = true;
    detail::SnfCore core = detail::snf_core(d1, opt);
    IntMatrix y = core.v_inv * d2; // rows < rank must vanish iff d1*d2 = 0
    for (std::size_t i = 0; i < core.rank; ++i)
        for (std::size_t j = 0; j < y.cols(); ++j)
            if (y(i, j) != 0) throw ComplexNotExact("d1 * d2 != 0");
    const std::size_t k = d1.cols() - core.rank;
    return from_relation_matrix(k, y.row_slice(core.rank, d1.cols()));
}

// Structure of the quotient Z^n / (column span of rel), queried per element.
class QuotientStructure {
public:
    explicit QuotientStructure(const IntMatrix& rel) : n_(rel.rows()), rel_(rel) {
        detail::SnfOptions opt;
        opt.with_u = true;
        core_ = detail::snf_core(detail::prune_columns(rel), opt);
    }

    // Order of the class of x; empty optional means infinite order.
    std::optional<Int> order_of(const std::vector<Int>& x) const {
        if (x.size() != n_) throw DimensionMismatch("order_of: wrong length");
        std::vector<Int> w = core_.u.apply(x);
        Int order = 1;
        for (std::size_t i = 0; i < n_; ++i) {
            if (i < core_.rank) {
                Int r = w[i] % core_.factors[i];
                if (r < 0) r += core_.factors[i];
                if (r == 0) continue;
                Int oi = core_.factors[i] / boost::multiprecision::gcd(core_.factors[i], r);
                order = order / boost::multiprecision::gcd(order, oi) * oi;
            } else if (w[i] != 0) {
                return std::nullopt;
            }
        }
        return order;
    }

    // Does the class of x generate the whole quotient?
    bool generates(const std::vector<Int>& x) const {
        return from_relation_matrix(n_, rel_.hstack(IntMatrix::column_vector(x))).is_trivial();
    }

    FgAbelianGroup group() const {
        return FgAbelianGroup(n_ - core_.rank, core_.factors);
    }

private:
    std::size_t n_;
    IntMatrix rel_;
    detail::SnfCore core_;
};

} // namespace mclag
