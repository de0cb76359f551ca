#ifndef REISNER_CERTIFICATES_HPP
#define REISNER_CERTIFICATES_HPP

#include <string>
#include <variant>
#include <vector>

#include "reisner/complex.hpp"
#include "reisner/ideal.hpp"
#include "reisner/monomial.hpp"
#include "reisner/varset.hpp"

namespace reisner {

// Witness tree for a vertex splitting I = x I1 + I2: a leaf covers the base
// cases (zero, unit, principal); an inner node names the splitting variable
// and carries the certificates for I1 and I2, in that order.
struct SplitTree {
    int vertex = -1;
    std::vector<SplitTree> children; // empty (leaf) or {I1 cert, I2 cert}

    bool is_leaf() const { return children.empty(); }
};

// Witness tree for vertex decomposability: a leaf is a simplex (the void and
// irrelevant complexes included); an inner node names the shedding vertex and
// carries the certificates for the link and the deletion, in that order.
struct DecompTree {
    int vertex = -1;
    std::vector<DecompTree> children; // empty (leaf) or {link cert, deletion cert}

    bool is_leaf() const { return children.empty(); }
};

struct ShellingOrder {
    std::vector<VarSubset> facets;
};

struct LqOrder {
    std::vector<Monomial> gens;
};

// Variable order for the weak polymatroidal condition; position 0 holds the
// greatest variable.
struct WpmOrder {
    std::vector<int> vars;
};

// Negative outcome of an exhaustive search, with the number of orders (or
//候candidate splits) the search accounted for.
struct RefutationNote {
    std::string claim;
    long long examined = 0;
};

using Certificate =
    std::variant<SplitTree, DecompTree, ShellingOrder, LqOrder, WpmOrder, RefutationNote>;

using Subject = std::variant<MonomialIdeal, SimplicialComplex>;

// Witness replays against the definitions, with no search.  Each checks the
// whole tree or order and returns false on the first violated condition.
bool verify_split_tree(const SplitTree& t, const MonomialIdeal& I);
bool verify_decomposition_tree(const DecompTree& t, const SimplicialComplex& c);
bool verify_shelling_order(const ShellingOrder& order, const SimplicialComplex& c);
bool verify_lq_order(const LqOrder& order, const MonomialIdeal& I);
bool verify_wpm_order(const WpmOrder& order, const MonomialIdeal& I);

// Dispatcher; throws std::invalid_argument when the certificate kind does not
// fit the subject.  Refutation notes verify trivially (they carry no witness).
bool verify_certificate(const Certificate& cert, const Subject& subject);

std::string certificate_kind(const Certificate& cert);
std::string certificate_summary(const Certificate& cert, const VariableSet& vars);

} // namespace reisner

#endif
