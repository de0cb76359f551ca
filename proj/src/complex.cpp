#include "reisner/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "reisner/errors.hpp"

namespace reisner {

SimplicialComplex SimplicialComplex::void_complex(VariableSet vars) {
    return SimplicialComplex(std::move(vars), {});
}

SimplicialComplex SimplicialComplex::irrelevant_complex(VariableSet vars) {
    return SimplicialComplex(std::move(vars), {VarSubset::empty()});
}

SimplicialComplex SimplicialComplex::full_simplex(VariableSet vars) {
    VarSubset all = VarSubset::full(vars.n);
    return SimplicialComplex(std::move(vars), {all});
}

SimplicialComplex SimplicialComplex::make(VariableSet vars, std::vector<VarSubset> faces) {
    VarSubset all = VarSubset::full(vars.n);
    for (const VarSubset& f : faces)
        if (!f.subset_of(all)) throw std::invalid_argument("face outside the vertex set");
    std::vector<VarSubset> keep;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool maximal = true;
        for (std::size_t j = 0; j < faces.size() && maximal; ++j) {
            if (i == j) continue;
            if (faces[i].subset_of(faces[j])) {
                if (faces[i] == faces[j])
                    maximal = j > i;
                else
                    maximal = false;
            }
        }
        if (maximal) keep.push_back(faces[i]);
    }
    std::sort(keep.begin(), keep.end(), subset_canonical_less);
    return SimplicialComplex(std::move(vars), std::move(keep));
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    int d = facets_.front().size();
    return std::all_of(facets_.begin(), facets_.end(),
                       [d](const VarSubset& f) { return f.size() == d; });
}

int SimplicialComplex::dim() const {
    if (facets_.empty()) return -2;
    int d = -1;
    for (const VarSubset& f : facets_) d = std::max(d, f.size() - 1);
    return d;
}

bool SimplicialComplex::is_face(const VarSubset& f) const {
    for (const VarSubset& g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

VarSubset SimplicialComplex::vertex_support() const {
    VarSubset s;
    for (const VarSubset& f : facets_) s = s.unite(f);
    return s;
}

bool SimplicialComplex::is_cone() const {
    if (facets_.empty()) return false;
    VarSubset apex = facets_.front();
    for (const VarSubset& f : facets_) apex = apex.intersect(f);
    return !apex.is_empty();
}

SimplicialComplex SimplicialComplex::induced(const VarSubset& w) const {
    std::vector<VarSubset> faces;
    faces.reserve(facets_.size());
    for (const VarSubset& f : facets_) faces.push_back(f.intersect(w));
    return make(vars_, std::move(faces));
}

std::string SimplicialComplex::key() const {
    std::string k = std::to_string(vars_.n) + ";";
    for (const VarSubset& f : facets_) {
        k += std::to_string(f.bits);
        k += ',';
    }
    return k;
}

std::string SimplicialComplex::str() const {
    if (facets_.empty()) return "<void>";
    std::string out = "<";
    bool first = true;
    for (const VarSubset& f : facets_) {
        if (!first) out += ", ";
        out += vars_.subset_str(f);
        first = false;
    }
    return out + ">";
}

SimplicialComplex stanley_reisner_complex(const MonomialIdeal& I, const Caps& caps) {
    if (!I.is_squarefree())
        throw std::invalid_argument("Stanley-Reisner complex needs a squarefree ideal");
    int n = I.nvars();
    if (n > caps.enumeration_vars)
        throw CapError("stanley_reisner_complex: " + std::to_string(n) + " variables exceeds cap");
    if (I.is_unit()) return SimplicialComplex::void_complex(I.vars());

    std::vector<VarSubset> supports;
    supports.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) supports.push_back(g.support());

    // A subset is a face iff it contains no generator support; facets are the
    // faces no neighbour extends.
    std::uint32_t total = std::uint32_t{1} << n;
    std::vector<char> face(total, 1);
    for (std::uint32_t w = 0; w < total; ++w) {
        for (const VarSubset& s : supports) {
            if ((s.bits & ~w) == 0) {
                face[w] = 0;
                break;
            }
        }
    }
    std::vector<VarSubset> facets;
    for (std::uint32_t w = 0; w < total; ++w) {
        if (!face[w]) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v)
            if (!((w >> v) & 1u) && face[w | (std::uint32_t{1} << v)]) maximal = false;
        if (maximal) facets.push_back(VarSubset{w});
    }
    return SimplicialComplex::make(I.vars(), std::move(facets));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c, const Caps& caps) {
    int n = c.nvars();
    if (n > caps.enumeration_vars)
        throw CapError("stanley_reisner_ideal: " + std::to_string(n) + " variables exceeds cap");
    if (c.is_void()) return MonomialIdeal::unit(c.vars());

    // Minimal non-faces: non-faces all of whose codimension-one subsets are
    // faces.
    std::uint32_t total = std::uint32_t{1} << n;
    std::vector<char> face(total, 0);
    for (std::uint32_t w = 0; w < total; ++w) face[w] = c.is_face(VarSubset{w}) ? 1 : 0;
    std::vector<Monomial> gens;
    for (std::uint32_t w = 0; w < total; ++w) {
        if (face[w]) continue;
        bool minimal = true;
        for (int v = 0; v < n && minimal; ++v)
            if (((w >> v) & 1u) && !face[w & ~(std::uint32_t{1} << v)]) minimal = false;
        if (minimal) gens.push_back(Monomial::from_support(n, VarSubset{w}));
    }
    return MonomialIdeal::make(c.vars(), std::move(gens));
}

namespace {

void hitting_sets(const std::vector<VarSubset>& supports, VarSubset chosen,
                  std::size_t from, std::vector<VarSubset>& out) {
    // Find the first support not yet hit.
    for (std::size_t i = from; i < supports.size(); ++i) {
        if (supports[i].intersects(chosen)) continue;
        for (int v : supports[i].members())
            hitting_sets(supports, chosen.with(v), i + 1, out);
        return;
    }
    out.push_back(chosen);
}

} // namespace

std::vector<VarSubset> minimal_primes(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw std::invalid_argument("minimal_primes needs a squarefree ideal");
    if (I.is_zero() || I.is_unit())
        throw std::invalid_argument("minimal_primes needs a nonzero proper ideal");

    std::vector<VarSubset> supports;
    supports.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) supports.push_back(g.support());

    std::vector<VarSubset> candidates;
    hitting_sets(supports, VarSubset::empty(), 0, candidates);

    // The branch enumeration can emit non-minimal covers; filter and dedupe.
    std::vector<VarSubset> primes;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < candidates.size() && minimal; ++j) {
            if (i == j) continue;
            if (candidates[j].subset_of(candidates[i]))
                minimal = candidates[j] == candidates[i] ? j > i : false;
        }
        if (minimal) primes.push_back(candidates[i]);
    }
    std::sort(primes.begin(), primes.end(), subset_canonical_less);
    return primes;
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    if (!I.is_squarefree()) throw std::invalid_argument("alexander_dual needs a squarefree ideal");
    if (I.is_zero()) return MonomialIdeal::unit(I.vars());
    if (I.is_unit()) return MonomialIdeal::zero(I.vars());
    std::vector<Monomial> gens;
    for (const VarSubset& p : minimal_primes(I))
        gens.push_back(Monomial::from_support(I.nvars(), p));
    return MonomialIdeal::make(I.vars(), std::move(gens));
}

SimplicialComplex link(const SimplicialComplex& c, const VarSubset& f) {
    std::vector<VarSubset> faces;
    for (const VarSubset& g : c.facets())
        if (f.subset_of(g)) faces.push_back(g.minus(f));
    return SimplicialComplex::make(c.vars(), std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& c, const VarSubset& f) {
    std::vector<VarSubset> faces;
    faces.reserve(c.facets().size());
    for (const VarSubset& g : c.facets()) faces.push_back(g.minus(f));
    return SimplicialComplex::make(c.vars(), std::move(faces));
}

} // namespace reisner
