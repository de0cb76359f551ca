#include "reisner/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace reisner {

MonomialIdeal MonomialIdeal::zero(VariableSet vars) {
    return MonomialIdeal(std::move(vars), {});
}

MonomialIdeal MonomialIdeal::unit(VariableSet vars) {
    int n = vars.n;
    return MonomialIdeal(std::move(vars), {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::make(VariableSet vars, std::vector<Monomial> gens) {
    for (const Monomial& m : gens)
        if (m.nvars() != vars.n)
            throw std::invalid_argument("generator over mismatched variable count");
    std::vector<Monomial> keep;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < gens.size() && minimal; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i])) {
                // Of two equal monomials keep the first occurrence.
                if (gens[j] == gens[i])
                    minimal = j > i;
                else
                    minimal = false;
            }
        }
        if (minimal) keep.push_back(gens[i]);
    }
    std::sort(keep.begin(), keep.end(), monomial_canonical_less);
    return MonomialIdeal(std::move(vars), std::move(keep));
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.squarefree(); });
}

bool MonomialIdeal::is_single_degree() const {
    if (gens_.empty()) return false;
    int d = gens_.front().degree();
    return std::all_of(gens_.begin(), gens_.end(), [d](const Monomial& m) { return m.degree() == d; });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

std::string MonomialIdeal::key() const {
    std::string k = std::to_string(vars_.n) + ";";
    for (const Monomial& g : gens_) {
        for (int e : g.exponents()) {
            k += std::to_string(e);
            k += ',';
        }
        k += '|';
    }
    return k;
}

std::string MonomialIdeal::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const Monomial& g : gens_) {
        if (!out.empty()) out += ", ";
        out += g.str(vars_);
    }
    return out;
}

MonomialIdeal minimalize(VariableSet vars, const std::vector<Monomial>& gens) {
    return MonomialIdeal::make(std::move(vars), gens);
}

int max_generator_degree(const MonomialIdeal& I) {
    if (I.is_zero()) throw std::invalid_argument("degree of the zero ideal is undefined");
    int d = 0;
    for (const Monomial& g : I.gens()) d = std::max(d, g.degree());
    return d;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m) {
    if (m.nvars() != I.nvars())
        throw std::invalid_argument("colon monomial over mismatched variable count");
    std::vector<Monomial> quotients;
    quotients.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) quotients.push_back(g.divided_by(g.gcd(m)));
    return minimalize(I.vars(), quotients);
}

MonomialIdeal squarefree_component(const MonomialIdeal& I, int j) {
    if (!I.is_squarefree()) throw std::invalid_argument("squarefree_component needs a squarefree ideal");
    int n = I.nvars();
    std::vector<Monomial> gens;
    if (j >= 0 && j <= n) {
        // Walk all squarefree monomials of degree j.
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
            VarSubset s{bits};
            if (s.size() != j) continue;
            Monomial m = Monomial::from_support(n, s);
            if (I.contains(m)) gens.push_back(m);
        }
    }
    return minimalize(I.vars(), gens);
}

MonomialIdeal polarize(const MonomialIdeal& I) {
    int n = I.nvars();
    std::vector<int> max_exp(n, 0);
    for (const Monomial& g : I.gens())
        for (int i = 0; i < n; ++i) max_exp[i] = std::max(max_exp[i], g.exponent(i));

    // Fresh slots (i, k) for k = 2..max_exp[i], ordered slot-major so the
    // second copies y1..yt come right after the originals.
    int total = n;
    int max_slot = 0;
    for (int i = 0; i < n; ++i) max_slot = std::max(max_slot, max_exp[i]);
    std::vector<std::vector<int>> slot_index(n); // slot_index[i][k-2] = variable index
    std::vector<std::string> names = I.vars().names;
    for (int k = 2; k <= max_slot; ++k) {
        for (int i = 0; i < n; ++i) {
            if (max_exp[i] < k) continue;
            slot_index[i].push_back(total++);
            std::string label = "y" + std::to_string(i + 1);
            if (k > 2) label += "_" + std::to_string(k - 1);
            names.push_back(label);
        }
    }
    if (total == n) return I; // already squarefree

    VariableSet pv(total, names);
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const Monomial& g : I.gens()) {
        std::vector<int> exps(total, 0);
        for (int i = 0; i < n; ++i) {
            int e = g.exponent(i);
            if (e >= 1) exps[i] = 1;
            for (int k = 2; k <= e; ++k) exps[slot_index[i][k - 2]] = 1;
        }
        gens.push_back(Monomial::from_exponents(std::move(exps)));
    }
    return MonomialIdeal::make(pv, std::move(gens));
}

} // namespace reisner
