#ifndef REISNER_IDEAL_HPP
#define REISNER_IDEAL_HPP

#include <string>
#include <vector>

#include "reisner/monomial.hpp"
#include "reisner/varset.hpp"

namespace reisner {

// A monomial ideal held by its unique minimal generating set in canonical
// order, so equal ideals have identical representations.  The zero ideal has
// no generators; the unit ideal is generated by 1.
class MonomialIdeal {
public:
    static MonomialIdeal zero(VariableSet vars);
    static MonomialIdeal unit(VariableSet vars);
    // Minimalizes and canonically sorts; throws on variable-count mismatch.
    static MonomialIdeal make(VariableSet vars, std::vector<Monomial> gens);

    const VariableSet& vars() const { return vars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    int nvars() const { return vars_.n; }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
    bool is_proper() const { return !is_unit(); }
    bool is_principal() const { return gens_.size() == 1; }
    bool is_squarefree() const;
    // All generators of one degree (false for the zero ideal).
    bool is_single_degree() const;

    // Ideal membership: m is divisible by some generator.
    bool contains(const Monomial& m) const;

    // Canonical serialization, usable as a memo key.
    std::string key() const;
    std::string str() const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.vars_.n == b.vars_.n && a.gens_ == b.gens_;
    }

private:
    MonomialIdeal(VariableSet vars, std::vector<Monomial> canonical_gens)
        : vars_(std::move(vars)), gens_(std::move(canonical_gens)) {}

    VariableSet vars_;
    std::vector<Monomial> gens_;
};

// Divisibility-minimal subset of the given monomials, canonically sorted.
MonomialIdeal minimalize(VariableSet vars, const std::vector<Monomial>& gens);

// Max generator degree; throws on the zero ideal.
int max_generator_degree(const MonomialIdeal& I);

// Colon ideal (I : m) = minimalize{ u / gcd(u, m) }.
MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m);

// Ideal generated by the squarefree monomials of degree exactly j lying in I.
MonomialIdeal squarefree_component(const MonomialIdeal& I, int j);

// Standard polarization; fresh variables are labelled y-style and ordered
// after the originals.  Squarefree ideals come back unchanged.
MonomialIdeal polarize(const MonomialIdeal& I);

} // namespace reisner

#endif
