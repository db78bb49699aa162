#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mclag/abelian_group.hpp"
#include "mclag/errors.hpp"
#include "mclag/int_matrix.hpp"
#include "mclag/smith.hpp"

namespace mclag {

// One letter of a word: generator index with exponent +1 or -1. Powers are
// always stored expanded, so a relator like w^4 has word length 4*|w|.
struct Letter {
    int generator = 0;
    int exponent = 1;
    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

inline Word word_inverse(const Word& w) {
    Word inv;
    inv.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) inv.push_back({it->generator, -it->exponent});
    return inv;
}

inline Word word_concat(const Word& a, const Word& b) {
    Word c = a;
    c.insert(c.end(), b.begin(), b.end());
    return c;
}

inline Word word_power(const Word& w, int k) {
    Word p;
    for (int t = 0; t < k; ++t) p.insert(p.end(), w.begin(), w.end());
    return p;
}

struct GroupPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;

    std::size_t generator_count() const { return generators.size(); }

    void check_valid() const {
        for (const Word& w : relators)
            for (const Letter& l : w)
                if (l.generator < 0 || static_cast<std::size_t>(l.generator) >= generators.size() ||
                    (l.exponent != 1 && l.exponent != -1))
                    throw std::invalid_argument("relator references invalid generator/exponent");
    }
};

// The g x g elementary matrix with ones on the diagonal and at (i, j);
// indices are 1-based as in the generator labels.
inline IntMatrix elementary_matrix(int g, int i, int j) {
    IntMatrix e = IntMatrix::identity(static_cast<std::size_t>(g));
    e(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = 1;
    return e;
}

// The standard finite presentation of SL(g,Z) on the elementary matrices
// e_ij. Generator order: (i,j) lexicographic. Relator order:
//   (a) commutators [e_ij, e_kl] for unordered pairs of distinct generators
//       with j != k and i != l, pairs enumerated lexicographically;
//   (b) Steinberg words e_ik e_kj e_ik^-1 e_kj^-1 e_ij^-1 for ordered
//       distinct triples (i,k,j), lexicographic;
//   (c) the torsion relator (e_12 e_21^-1 e_12)^4, expanded to 12 letters.
// Chain-complex layouts depend on this ordering; do not reorder.
inline GroupPresentation sl_presentation(int g) {
    if (g < 3) throw UnsupportedGenus("sl_presentation requires g >= 3");
    GroupPresentation p;
    std::vector<std::pair<int, int>> idx;
    for (int i = 1; i <= g; ++i)
        for (int j = 1; j <= g; ++j)
            if (i != j) {
                idx.emplace_back(i, j);
                p.generators.push_back("e" + std::to_string(i) + std::to_string(j));
            }
    auto gen_of = [&](int i, int j) {
        for (std::size_t t = 0; t < idx.size(); ++t)
            if (idx[t] == std::make_pair(i, j)) return static_cast<int>(t);
        throw std::logic_error("generator lookup");
    };

    for (std::size_t pgen = 0; pgen < idx.size(); ++pgen) {
        for (std::size_t qgen = pgen + 1; qgen < idx.size(); ++qgen) {
            const auto [i, j] = idx[pgen];
            const auto [k, l] = idx[qgen];
            if (j != k && i != l) {
                Word w = {{static_cast<int>(pgen), 1},
                          {static_cast<int>(qgen), 1},
                          {static_cast<int>(pgen), -1},
                          {static_cast<int>(qgen), -1}};
                p.relators.push_back(std::move(w));
            }
        }
    }
    for (int i = 1; i <= g; ++i)
        for (int k = 1; k <= g; ++k) {
            if (k == i) continue;
            for (int j = 1; j <= g; ++j) {
                if (j == i || j == k) continue;
                Word w = {{gen_of(i, k), 1},
                          {gen_of(k, j), 1},
                          {gen_of(i, k), -1},
                          {gen_of(k, j), -1},
                          {gen_of(i, j), -1}};
                p.relators.push_back(std::move(w));
            }
        }
    Word core = {{gen_of(1, 2), 1}, {gen_of(2, 1), -1}, {gen_of(1, 2), 1}};
    p.relators.push_back(word_power(core, 4));
    return p;
}

// The matrix of the SL(g,Z) generator with 1-based label indices (i,j).
inline const std::pair<int, int> sl_generator_indices(const GroupPresentation& pres, int gen) {
    const std::string& label = pres.generators.at(static_cast<std::size_t>(gen));
    return {label[1] - '0', label[2] - '0'};
}

// A representation by invertible integer matrices: one image per generator.
struct IntRepresentation {
    GroupPresentation presentation;
    std::size_t rank = 0;
    std::vector<IntMatrix> images;
};

inline IntRepresentation trivial_representation(GroupPresentation pres) {
    IntRepresentation rep;
    rep.rank = 1;
    rep.images.assign(pres.generator_count(), IntMatrix::identity(1));
    rep.presentation = std::move(pres);
    return rep;
}

// Exact inverse of a matrix that is unimodular; empty optional otherwise.
inline std::optional<IntMatrix> unimodular_inverse(const IntMatrix& a) {
    if (a.rows() != a.cols()) return std::nullopt;
    SmithDecomposition snf = smith_normal_form(a);
    if (snf.invariant_factors.size() != a.rows()) return std::nullopt;
    for (const Int& f : snf.invariant_factors)
        if (f != 1) return std::nullopt;
    return snf.v * snf.u; // u a v = I  =>  a^-1 = v u
}

namespace detail {

inline std::vector<IntMatrix> representation_inverses(const IntRepresentation& rep,
                                                      std::string* why) {
    std::vector<IntMatrix> inv;
    inv.reserve(rep.images.size());
    for (std::size_t t = 0; t < rep.images.size(); ++t) {
        const IntMatrix& img = rep.images[t];
        if (img.rows() != rep.rank || img.cols() != rep.rank) {
            if (why) *why = "image of " + rep.presentation.generators[t] + " has wrong size";
            return {};
        }
        std::optional<IntMatrix> i = unimodular_inverse(img);
        if (!i) {
            if (why) *why = "image of " + rep.presentation.generators[t] + " is not unimodular";
            return {};
        }
        inv.push_back(std::move(*i));
    }
    return inv;
}

} // namespace detail

inline IntMatrix evaluate_word(const IntRepresentation& rep, const Word& w) {
    std::string why;
    std::vector<IntMatrix> inv = detail::representation_inverses(rep, &why);
    if (inv.empty() && !rep.images.empty()) throw InvalidRepresentation(why);
    IntMatrix acc = IntMatrix::identity(rep.rank);
    for (const Letter& l : w)
        acc = acc * (l.exponent == 1 ? rep.images[static_cast<std::size_t>(l.generator)]
                                     : inv[static_cast<std::size_t>(l.generator)]);
    return acc;
}

// True iff every image is unimodular and every relator evaluates to the
// identity. On failure, *why names the first offender.
inline bool validate_representation(const IntRepresentation& rep, std::string* why = nullptr) {
    std::string local;
    std::vector<IntMatrix> inv = detail::representation_inverses(rep, &local);
    if (inv.size() != rep.images.size()) {
        if (why) *why = local;
        return false;
    }
    const IntMatrix id = IntMatrix::identity(rep.rank);
    for (std::size_t r = 0; r < rep.presentation.relators.size(); ++r) {
        IntMatrix acc = id;
        for (const Letter& l : rep.presentation.relators[r])
            acc = acc * (l.exponent == 1 ? rep.images[static_cast<std::size_t>(l.generator)]
                                         : inv[static_cast<std::size_t>(l.generator)]);
        if (!(acc == id)) {
            if (why) *why = "relator " + std::to_string(r) + " does not evaluate to the identity";
            return false;
        }
    }
    return true;
}

// H1 of the presented group: cokernel of the exponent-sum matrix.
inline FgAbelianGroup abelianized_h1(const GroupPresentation& pres) {
    pres.check_valid();
    IntMatrix rel(pres.generator_count(), pres.relators.size());
    for (std::size_t r = 0; r < pres.relators.size(); ++r)
        for (const Letter& l : pres.relators[r])
            rel(static_cast<std::size_t>(l.generator), r) += l.exponent;
    return from_relation_matrix(pres.generator_count(), rel);
}

} // namespace mclag
