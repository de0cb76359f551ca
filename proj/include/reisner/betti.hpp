#ifndef REISNER_BETTI_HPP
#define REISNER_BETTI_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "reisner/caps.hpp"
#include "reisner/field.hpp"
#include "reisner/ideal.hpp"

namespace reisner {

// Graded Betti numbers beta_{i,j} of a monomial ideal over a field, with the
// ideal it belongs to.  Only nonzero entries are stored.
struct BettiTable {
    FieldSpec field;
    std::string subject_key;
    std::map<std::pair<int, int>, long long> entries;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    std::string str() const;
};

// Betti numbers via the Hochster subset formula on the Stanley-Reisner
// complex; non-squarefree ideals go through polarization (which preserves
// the graded Betti numbers).  Subsets that are not unions of generator
// supports are skipped: their induced complexes are cones.
BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps = {});

// max { j - i : beta_{i,j} != 0 }
int regularity(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps = {});

// Generated in a single degree d with regularity d.  Mixed-degree ideals
// count as not having a linear resolution.
bool has_linear_resolution(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps = {});

// Every squarefree degree component I_[j] is zero or has a linear resolution.
bool is_componentwise_linear(const MonomialIdeal& I, const FieldSpec& field,
                             const Caps& caps = {});

// Numerator polynomial in one variable t: the coefficient list of
// sum over subsets S of G(I) of (-1)^|S| t^(deg lcm S).
struct IntPolynomial {
    std::vector<long long> coeff; // coeff[d] multiplies t^d

    long long at(int d) const {
        return d >= 0 && d < static_cast<int>(coeff.size()) ? coeff[d] : 0;
    }
    std::string str() const;
    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
};

IntPolynomial hilbert_numerator(const MonomialIdeal& I, const Caps& caps = {});

} // namespace reisner

#endif
