#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "mclag/errors.hpp"
#include "mclag/int_matrix.hpp"

namespace mclag {

// Isomorphism type of a finitely generated abelian group:
// Z^free_rank + Z/d1 + ... + Z/dk with 1 < d1 | d2 | ... | dk.
// Two values compare equal exactly when the groups are isomorphic.
class FgAbelianGroup {
public:
    FgAbelianGroup() = default; // the trivial group

    // Canonicalizes an arbitrary list of cyclic orders into the divisibility
    // chain (factors equal to 1 are dropped, the rest merged CRT-style).
    FgAbelianGroup(std::size_t free_rank, std::vector<Int> factors)
        : free_rank_(free_rank), factors_(std::move(factors)) {
        for (Int& f : factors_) {
            if (f < 0) f = -f;
            if (f == 0) throw std::invalid_argument("cyclic factor 0; free summands go in free_rank");
        }
        // One pairwise gcd/lcm sweep yields the invariant-factor chain.
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            for (std::size_t j = i + 1; j < factors_.size(); ++j) {
                Int g = boost::multiprecision::gcd(factors_[i], factors_[j]);
                Int l = factors_[i] / g * factors_[j];
                factors_[i] = g;
                factors_[j] = l;
            }
        }
        factors_.erase(std::remove(factors_.begin(), factors_.end(), Int(1)), factors_.end());
    }

    static FgAbelianGroup trivial() { return FgAbelianGroup(); }
    static FgAbelianGroup free(std::size_t rank) { return FgAbelianGroup(rank, {}); }
    static FgAbelianGroup cyclic(Int order) { return FgAbelianGroup(0, {std::move(order)}); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }
    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_torsion_free() const { return factors_.empty(); }

    bool operator==(const FgAbelianGroup&) const = default;

    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream out;
        bool first = true;
        auto sep = [&]() {
            if (!first) out << " + ";
            first = false;
        };
        if (free_rank_ > 0) {
            sep();
            out << "Z";
            if (free_rank_ > 1) out << "^" << free_rank_;
        }
        for (std::size_t i = 0; i < factors_.size();) {
            std::size_t j = i;
            while (j < factors_.size() && factors_[j] == factors_[i]) ++j;
            sep();
            if (j - i > 1) out << "(Z/" << factors_[i] << ")^" << (j - i);
            else out << "Z/" << factors_[i];
            i = j;
        }
        return out.str();
    }

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> factors_;
};

inline FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b) {
    std::vector<Int> factors = a.invariant_factors();
    factors.insert(factors.end(), b.invariant_factors().begin(), b.invariant_factors().end());
    return FgAbelianGroup(a.free_rank() + b.free_rank(), std::move(factors));
}

inline bool iso_equal(const FgAbelianGroup& a, const FgAbelianGroup& b) { return a == b; }

inline std::ostream& operator<<(std::ostream& os, const FgAbelianGroup& g) {
    return os << g.to_string();
}

} // namespace mclag
