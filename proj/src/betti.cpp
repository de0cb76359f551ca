#include "reisner/betti.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "reisner/complex.hpp"
#include "reisner/errors.hpp"
#include "reisner/homology.hpp"

namespace reisner {

std::string BettiTable::str() const {
    if (entries.empty()) return "(empty)";
    std::string out;
    for (const auto& [ij, v] : entries) {
        if (!out.empty()) out += ", ";
        out += "beta(" + std::to_string(ij.first) + "," + std::to_string(ij.second) +
               ")=" + std::to_string(v);
    }
    return out;
}

std::string IntPolynomial::str() const {
    std::string out;
    for (int d = 0; d < static_cast<int>(coeff.size()); ++d) {
        if (coeff[d] == 0) continue;
        long long c = coeff[d];
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long a = c < 0 ? -c : c;
        if (a != 1 || d == 0) out += std::to_string(a);
        if (d >= 1) {
            out += "t";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

struct BettiCache {
    std::mutex mutex;
    std::unordered_map<std::string, BettiTable> map;
};

BettiCache& betti_cache() {
    static BettiCache cache;
    return cache;
}

// All unions of nonempty sets of generator supports, by breadth-first
// closure.  Any other vertex subset induces a cone (some vertex sits in
// every facet) and contributes nothing to the Hochster sum.
std::vector<std::uint32_t> support_union_closure(const MonomialIdeal& I) {
    std::vector<std::uint32_t> bases;
    for (const Monomial& g : I.gens()) bases.push_back(g.support().bits);
    std::unordered_set<std::uint32_t> seen(bases.begin(), bases.end());
    std::vector<std::uint32_t> queue(seen.begin(), seen.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::uint32_t w = queue[head];
        for (std::uint32_t b : bases) {
            std::uint32_t u = w | b;
            if (seen.insert(u).second) queue.push_back(u);
        }
    }
    std::sort(queue.begin(), queue.end());
    return queue;
}

BettiTable compute_betti(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps) {
    MonomialIdeal subject = I.is_squarefree() ? I : polarize(I);
    if (subject.nvars() > caps.homology_vertices)
        throw CapError("betti_table: variable count exceeds homology cap");

    SimplicialComplex delta = stanley_reisner_complex(subject, caps);
    BettiTable table{field, I.key(), {}};
    for (std::uint32_t w : support_union_closure(subject)) {
        VarSubset sub{w};
        int j = sub.size();
        HomologyProfile profile = reduced_homology_dims(delta.induced(sub), field, caps);
        for (int k = -1; k <= j - 2; ++k) {
            long long d = profile.dim_at(k);
            if (d == 0) continue;
            int i = j - k - 2;
            table.entries[{i, j}] += d;
        }
    }
    return table;
}

} // namespace

BettiTable betti_table(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps) {
    if (I.is_zero() || I.is_unit())
        throw std::invalid_argument("betti_table needs a nonzero proper ideal");

    std::string key = field.str() + "#" + I.key();
    BettiCache& cache = betti_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.map.find(key);
        if (it != cache.map.end()) return it->second;
    }
    BettiTable table = compute_betti(I, field, caps);
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        cache.map.emplace(key, table);
    }
    return table;
}

int regularity(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps) {
    BettiTable table = betti_table(I, field, caps);
    int reg = 0;
    for (const auto& [ij, v] : table.entries)
        if (v != 0) reg = std::max(reg, ij.second - ij.first);
    return reg;
}

bool has_linear_resolution(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps) {
    if (I.is_zero() || I.is_unit())
        throw std::invalid_argument("has_linear_resolution needs a nonzero proper ideal");
    if (!I.is_single_degree()) return false;
    int d = I.gens().front().degree();
    return regularity(I, field, caps) == d;
}

bool is_componentwise_linear(const MonomialIdeal& I, const FieldSpec& field, const Caps& caps) {
    if (!I.is_squarefree())
        throw std::invalid_argument("is_componentwise_linear needs a squarefree ideal");
    if (I.is_zero() || I.is_unit())
        throw std::invalid_argument("is_componentwise_linear needs a nonzero proper ideal");
    int lo = I.gens().front().degree();
    for (int j = lo; j <= I.nvars(); ++j) {
        MonomialIdeal component = squarefree_component(I, j);
        if (component.is_zero()) continue;
        if (!has_linear_resolution(component, field, caps)) return false;
    }
    return true;
}

IntPolynomial hilbert_numerator(const MonomialIdeal& I, const Caps& caps) {
    if (I.is_zero() || I.is_unit())
        throw std::invalid_argument("hilbert_numerator needs a nonzero proper ideal");
    int s = static_cast<int>(I.gens().size());
    if (s > caps.hilbert_generators)
        throw CapError("hilbert_numerator: generator count exceeds cap of " +
                       std::to_string(caps.hilbert_generators));

    int n = I.nvars();
    int degree_bound = 0;
    Monomial top = Monomial::one(n);
    for (const Monomial& g : I.gens()) top = top.lcm(g);
    degree_bound = top.degree();

    IntPolynomial poly;
    poly.coeff.assign(degree_bound + 1, 0);

    // Inclusion-exclusion over generator subsets with a running lcm stack.
    std::vector<Monomial> stack{Monomial::one(n)};
    auto recurse = [&](auto&& self, int from, int parity) -> void {
        poly.coeff[stack.back().degree()] += parity;
        for (int i = from; i < s; ++i) {
            stack.push_back(stack.back().lcm(I.gens()[i]));
            self(self, i + 1, -parity);
            stack.pop_back();
        }
    };
    recurse(recurse, 0, 1);
    return poly;
}

} // namespace reisner
