#ifndef REISNER_COMPLEX_HPP
#define REISNER_COMPLEX_HPP

#include <string>
#include <vector>

#include "reisner/caps.hpp"
#include "reisner/ideal.hpp"
#include "reisner/varset.hpp"

namespace reisner {

// A simplicial complex given by its facet list in canonical order.  The void
// complex (no faces at all) and the irrelevant complex {emptyset} are
// distinct values: no facets vs. the single facet {}.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(VariableSet vars);
    static SimplicialComplex irrelevant_complex(VariableSet vars);
    static SimplicialComplex full_simplex(VariableSet vars);
    // Keeps the inclusion-maximal faces and sorts them canonically.
    static SimplicialComplex make(VariableSet vars, std::vector<VarSubset> faces);

    const VariableSet& vars() const { return vars_; }
    const std::vector<VarSubset>& facets() const { return facets_; }
    int nvars() const { return vars_.n; }

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].is_empty(); }
    bool is_simplex() const { return facets_.size() == 1; }
    bool is_pure() const;
    // dim of the void complex is reported as -2.
    int dim() const;

    bool is_face(const VarSubset& f) const;
    // Union of the facets: the vertices actually used.
    VarSubset vertex_support() const;
    // True if some vertex lies in every facet (and the complex is nonvoid
    // with a nonempty facet); cones have vanishing reduced homology.
    bool is_cone() const;

    // Subcomplex induced on W: faces contained in W.
    SimplicialComplex induced(const VarSubset& w) const;

    std::string key() const;
    std::string str() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vars_.n == b.vars_.n && a.facets_ == b.facets_;
    }

private:
    SimplicialComplex(VariableSet vars, std::vector<VarSubset> canonical_facets)
        : vars_(std::move(vars)), facets_(std::move(canonical_facets)) {}

    VariableSet vars_;
    std::vector<VarSubset> facets_;
};

// Stanley-Reisner correspondence.  The zero ideal maps to the full simplex,
// the unit ideal to the void complex, and (x1,...,xn) to {emptyset}.
SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I, const Caps& caps = {});
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c, const Caps& caps = {});

// Minimal monomial primes of a squarefree ideal, as variable subsets: the
// inclusion-minimal hitting sets of the generator supports.
std::vector<VarSubset> minimal_primes(const MonomialIdeal& I);

// Alexander dual: generators x_P over the minimal primes P.  dual(zero) is
// the unit ideal and vice versa, keeping the involution total.
MonomialIdeal alexander_dual(const MonomialIdeal& I);

SimplicialComplex link(const SimplicialComplex& c, const VarSubset& f);
SimplicialComplex deletion(const SimplicialComplex& c, const VarSubset& f);

} // namespace reisner

#endif
