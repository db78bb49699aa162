#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mclag/coinvariants.hpp"
#include "mclag/errors.hpp"
#include "mclag/int_matrix.hpp"
#include "mclag/symplectic.hpp"

namespace mclag {

// Element of the Z/2-algebra B on idempotent generators xbar for
// x in H (x) Z/2. A basis is given by the squarefree monomials in the 2g
// symbols xbar_1..xbar_g, ybar_1..ybar_g; an element is the set of monomials
// with coefficient 1. Monomial encoding: bit t < g is xbar_{t+1}, bit g+t is
// ybar_{t+1}. The full algebra (dimension 2^2g) is kept rather than a
// degree-3 truncation, so associativity is testable without case analysis;
// g <= 6 keeps this small.
class BElement {
public:
    BElement() = default;
    explicit BElement(int g) : g_(g) {}

    static BElement zero(int g) { return BElement(g); }
    static BElement unit(int g) { return monomial(g, 0); }
    static BElement monomial(int g, std::uint32_t mask) {
        BElement e(g);
        e.monos_.push_back(mask);
        return e;
    }

    int genus() const { return g_; }
    bool is_zero() const { return monos_.empty(); }
    const std::vector<std::uint32_t>& monomials() const { return monos_; }

    int degree() const {
        int d = 0;
        for (std::uint32_t m : monos_) d = std::max(d, std::popcount(m));
        return d;
    }

    bool operator==(const BElement&) const = default;

    // Addition in characteristic 2: symmetric difference of monomial sets.
    BElement operator+(const BElement& other) const {
        BElement out(g_);
        std::size_t i = 0, j = 0;
        while (i < monos_.size() && j < other.monos_.size()) {
            if (monos_[i] < other.monos_[j]) out.monos_.push_back(monos_[i++]);
            else if (monos_[i] > other.monos_[j]) out.monos_.push_back(other.monos_[j++]);
            else { ++i; ++j; }
        }
        out.monos_.insert(out.monos_.end(), monos_.begin() + static_cast<std::ptrdiff_t>(i), monos_.end());
        out.monos_.insert(out.monos_.end(), other.monos_.begin() + static_cast<std::ptrdiff_t>(j),
                          other.monos_.end());
        return out;
    }

    // Product: xbar^2 = xbar makes monomial products squarefree unions.
    BElement operator*(const BElement& other) const {
        std::map<std::uint32_t, int> acc;
        for (std::uint32_t m1 : monos_)
            for (std::uint32_t m2 : other.monos_) acc[m1 | m2] ^= 1;
        BElement out(g_);
        for (const auto& [m, c] : acc)
            if (c) out.monos_.push_back(m);
        return out;
    }

    std::string to_string() const {
        if (monos_.empty()) return "0";
        std::string s;
        for (std::size_t k = 0; k < monos_.size(); ++k) {
            if (k) s += " + ";
            if (monos_[k] == 0) {
                s += "1";
                continue;
            }
            for (int t = 0; t < 2 * g_; ++t)
                if (monos_[k] >> t & 1u)
                    s += (t < g_ ? "x" + std::to_string(t + 1) : "y" + std::to_string(t - g_ + 1));
        }
        return s;
    }

private:
    int g_ = 0;
    std::vector<std::uint32_t> monos_; // sorted, no duplicates
};

// Intersection pairing of two H (x) Z/2 vectors given as support masks.
inline int mu_bar(int g, std::uint32_t a, std::uint32_t b) {
    const std::uint32_t low = (1u << g) - 1u;
    int c = std::popcount(a & (b >> g) & low) + std::popcount((a >> g) & b & low);
    return c & 1;
}

// overline(v) for a vector v in H (x) Z/2, expanded over the fixed basis via
// the relation overline(x+y) = xbar + ybar + mu(x,y). The closed form below
// is independent of expansion order.
inline BElement bar_expand(int g, std::uint32_t v_mask) {
    BElement acc(g);
    for (int t = 0; t < 2 * g; ++t)
        if (v_mask >> t & 1u) acc = acc + BElement::monomial(g, 1u << t);
    const std::uint32_t low = (1u << g) - 1u;
    if (std::popcount(v_mask & (v_mask >> g) & low) & 1) acc = acc + BElement::unit(g);
    return acc;
}

inline std::uint32_t mask_mod2(const std::vector<Int>& coords) {
    std::uint32_t m = 0;
    for (std::size_t t = 0; t < coords.size(); ++t)
        if (coords[t] % 2 != 0) m |= 1u << t;
    return m;
}

// The algebra endomorphism of B induced by an automorphism of H:
// f(xbar) = overline(f x), extended multiplicatively.
class BAlgebraMap {
public:
    BAlgebraMap(int g, const IntMatrix& h_matrix) : g_(g) {
        if (h_matrix.rows() != static_cast<std::size_t>(2 * g) ||
            h_matrix.cols() != static_cast<std::size_t>(2 * g))
            throw DimensionMismatch("BAlgebraMap: matrix is not 2g x 2g");
        for (int t = 0; t < 2 * g; ++t)
            var_images_.push_back(bar_expand(g, mask_mod2(h_matrix.column(static_cast<std::size_t>(t)))));
    }

    BElement apply(const BElement& e) const {
        BElement out(g_);
        for (std::uint32_t m : e.monomials()) {
            BElement prod = BElement::unit(g_);
            for (int t = 0; t < 2 * g_; ++t)
                if (m >> t & 1u) prod = prod * var_images_[static_cast<std::size_t>(t)];
            out = out + prod;
        }
        return out;
    }

private:
    int g_;
    std::vector<BElement> var_images_;
};

// Lexicographic basis of wedge^3 of Z^(2g) over the (x_1..x_g, y_1..y_g)
// coordinate order.
struct Wedge3Basis {
    int n = 0; // ambient dimension 2g
    std::vector<std::array<int, 3>> triples;

    explicit Wedge3Basis(int g) : n(2 * g) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                for (int w = v + 1; w < n; ++w) triples.push_back({u, v, w});
    }

    std::size_t size() const { return triples.size(); }

    std::size_t index(int u, int v, int w) const {
        std::array<int, 3> t{u, v, w};
        std::sort(t.begin(), t.end());
        auto it = std::lower_bound(triples.begin(), triples.end(), t);
        if (it == triples.end() || *it != t) throw std::invalid_argument("bad wedge3 triple");
        return static_cast<std::size_t>(it - triples.begin());
    }

    std::uint32_t monomial_mask(std::size_t idx) const {
        const auto& t = triples[idx];
        return (1u << t[0]) | (1u << t[1]) | (1u << t[2]);
    }
};

inline const Wedge3Basis& wedge3_basis(int g) {
    static std::map<int, Wedge3Basis> cache;
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, Wedge3Basis(g)).first;
    return it->second;
}

// Number of squarefree monomials of degree <= 2: the torsion rank of the
// fiber-product model.
inline std::size_t b2_rank(int g) {
    return 1 + static_cast<std::size_t>(2 * g) + pair_count(static_cast<std::size_t>(2 * g));
}

// Degree <= 2 monomials in coordinate order: unit, singles, pairs (lex).
inline std::vector<std::uint32_t> b2_monomials(int g) {
    std::vector<std::uint32_t> out;
    out.push_back(0);
    for (int t = 0; t < 2 * g; ++t) out.push_back(1u << t);
    for (int p = 0; p < 2 * g; ++p)
        for (int q = p + 1; q < 2 * g; ++q) out.push_back((1u << p) | (1u << q));
    return out;
}

// Element of the fiber product  wedge^3 H x_{wedge^3(H (x) Z/2)} B^3  in
// canonical coordinates. The lattice part is the wedge^3 H component; beta is
// the B^3 component minus the reference monomial lift of (lattice mod 2), and
// is strictly of degree <= 2.
struct TorelliClass {
    int g = 0;
    std::vector<Int> lattice; // length C(2g,3)
    BElement beta;

    bool operator==(const TorelliClass&) const = default;
};

// Reference lift: the triple u<v<w lifts to the monomial ubar vbar wbar.
inline BElement reference_lift(int g, const std::vector<Int>& lattice) {
    const Wedge3Basis& basis = wedge3_basis(g);
    BElement out(g);
    for (std::size_t t = 0; t < lattice.size(); ++t)
        if (lattice[t] % 2 != 0) out = out + BElement::monomial(g, basis.monomial_mask(t));
    return out;
}

// Full B^3 component of a class.
inline BElement b3_component(const TorelliClass& t) {
    return reference_lift(t.g, t.lattice) + t.beta;
}

// Build a class from a raw fiber-product pair; the degree-3 parts must agree.
inline TorelliClass torelli_class_from_pair(int g, std::vector<Int> lattice, const BElement& b3) {
    const Wedge3Basis& basis = wedge3_basis(g);
    if (lattice.size() != basis.size()) throw DimensionMismatch("lattice vector has wrong length");
    TorelliClass t;
    t.g = g;
    t.beta = b3 + reference_lift(g, lattice);
    t.lattice = std::move(lattice);
    if (t.beta.degree() > 2)
        throw CompatibilityViolation("degree-3 parts of the fiber-product pair disagree");
    return t;
}

// Componentwise in canonical coordinates: the reference lift is additive mod
// 2, so (lattice, beta) coordinates subtract directly.
inline TorelliClass torelli_subtract(const TorelliClass& a, const TorelliClass& b) {
    if (a.g != b.g) throw DimensionMismatch("torelli_subtract: genus mismatch");
    TorelliClass d;
    d.g = a.g;
    d.lattice.resize(a.lattice.size());
    for (std::size_t i = 0; i < a.lattice.size(); ++i) d.lattice[i] = a.lattice[i] - b.lattice[i];
    d.beta = a.beta + b.beta; // char 2
    return d;
}

// Generators of the model as an abelian group: one infinite-order class
// (e, lift(e)) per wedge^3 H basis triple, then one order-2 class (0, beta)
// per degree <= 2 monomial.
inline std::vector<TorelliClass> canonical_generators(int g) {
    if (g < 3) throw UnsupportedGenus("canonical_generators requires g >= 3");
    const Wedge3Basis& basis = wedge3_basis(g);
    std::vector<TorelliClass> gens;
    for (std::size_t t = 0; t < basis.size(); ++t) {
        TorelliClass c;
        c.g = g;
        c.lattice.assign(basis.size(), 0);
        c.lattice[t] = 1;
        c.beta = BElement::zero(g);
        gens.push_back(std::move(c));
    }
    for (std::uint32_t m : b2_monomials(g)) {
        TorelliClass c;
        c.g = g;
        c.lattice.assign(basis.size(), 0);
        c.beta = BElement::monomial(g, m);
        gens.push_back(std::move(c));
    }
    return gens;
}

// Precomputed data for acting by one symplectic matrix.
struct SpActionContext {
    int g = 0;
    IntMatrix wedge3;
    BAlgebraMap algebra_map;

    explicit SpActionContext(const SpMatrix& s)
        : g(s.g), wedge3(wedge3_rep(s.m)), algebra_map(s.g, s.m) {}
};

// Diagonal action on the fiber product; the compatibility of the two
// components is asserted after every application.
inline TorelliClass sp_act(const SpActionContext& ctx, const TorelliClass& t) {
    if (ctx.g != t.g) throw DimensionMismatch("sp_act: genus mismatch");
    std::vector<Int> lattice = ctx.wedge3.apply(t.lattice);
    BElement b3 = ctx.algebra_map.apply(b3_component(t));
    return torelli_class_from_pair(t.g, std::move(lattice), b3);
}

inline TorelliClass sp_act(const SpMatrix& s, const TorelliClass& t) {
    return sp_act(SpActionContext(s), t);
}

// Coordinates of a class in the generator order of canonical_generators.
inline std::vector<Int> torelli_coordinates(const TorelliClass& t) {
    std::vector<std::uint32_t> b2 = b2_monomials(t.g);
    std::map<std::uint32_t, std::size_t> b2_index;
    for (std::size_t k = 0; k < b2.size(); ++k) b2_index[b2[k]] = k;
    std::vector<Int> coords = t.lattice;
    coords.resize(t.lattice.size() + b2.size());
    for (std::uint32_t m : t.beta.monomials())
        coords[t.lattice.size() + b2_index.at(m)] = 1;
    return coords;
}

// Packages the model and the action of the given symplectic elements for the
// coinvariants engine. A custom reference lift (one B^3 element per triple,
// with matching degree-3 part) selects different coordinates for the same
// module; results downstream are unchanged.
inline ActionModule torelli_action_module(int g, const std::vector<SpMatrix>& elements,
                                          const std::vector<BElement>* custom_lifts = nullptr) {
    if (g < 3) throw UnsupportedGenus("torelli_action_module requires g >= 3");
    const Wedge3Basis& basis = wedge3_basis(g);
    const std::size_t a = basis.size();
    std::vector<std::uint32_t> b2 = b2_monomials(g);
    const std::size_t b = b2.size();

    std::vector<BElement> lifts;
    lifts.reserve(a);
    for (std::size_t t = 0; t < a; ++t) {
        BElement l = BElement::monomial(g, basis.monomial_mask(t));
        if (custom_lifts) {
            l = (*custom_lifts)[t];
            BElement diff = l + BElement::monomial(g, basis.monomial_mask(t));
            if (diff.degree() > 2)
                throw CompatibilityViolation("custom lift has wrong degree-3 part");
        }
        lifts.push_back(std::move(l));
    }
    auto lift_of = [&](const std::vector<Int>& lattice) {
        BElement out(g);
        for (std::size_t t = 0; t < a; ++t)
            if (lattice[t] % 2 != 0) out = out + lifts[t];
        return out;
    };
    std::map<std::uint32_t, std::size_t> b2_index;
    for (std::size_t k = 0; k < b; ++k) b2_index[b2[k]] = k;
    auto torsion_column = [&](const BElement& beta, IntMatrix& m, std::size_t col) {
        if (beta.degree() > 2) throw CompatibilityViolation("torsion image left B^2");
        for (std::uint32_t mono : beta.monomials()) m(b2_index.at(mono), col) = 1;
    };

    ActionModule mod;
    mod.free_rank = a;
    mod.torsion2_rank = b;
    for (const SpMatrix& s : elements) {
        if (s.g != g) throw DimensionMismatch("acting element has wrong genus");
        SpActionContext ctx(s);
        ActionEndo endo;
        endo.free_map = ctx.wedge3;
        endo.torsion_from_free = IntMatrix(b, a);
        endo.torsion_map = IntMatrix(b, b);
        for (std::size_t j = 0; j < a; ++j) {
            // generator (e_j, lift_j): image pair (wedge3 e_j, map(lift_j))
            BElement beta = ctx.algebra_map.apply(lifts[j]) + lift_of(endo.free_map.column(j));
            torsion_column(beta, endo.torsion_from_free, j);
        }
        for (std::size_t k = 0; k < b; ++k)
            torsion_column(ctx.algebra_map.apply(BElement::monomial(g, b2[k])), endo.torsion_map, k);
        mod.elements.push_back(std::move(endo));
    }
    return mod;
}

} // namespace mclag
