#ifndef REISNER_VARSET_HPP
#define REISNER_VARSET_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace reisner {

// A subset of the variable (vertex) indices {0,...,n-1}, stored as a bitmask.
// Doubles as a face of a simplicial complex and as the support of a monomial.
struct VarSubset {
    std::uint32_t bits = 0;

    static VarSubset empty() { return VarSubset{0}; }
    static VarSubset full(int n) {
        return VarSubset{n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1};
    }
    static VarSubset single(int i) { return VarSubset{std::uint32_t{1} << i}; }

    int size() const { return std::popcount(bits); }
    bool is_empty() const { return bits == 0; }
    bool contains(int i) const { return (bits >> i) & 1u; }
    bool subset_of(const VarSubset& o) const { return (bits & ~o.bits) == 0; }
    bool intersects(const VarSubset& o) const { return (bits & o.bits) != 0; }

    VarSubset with(int i) const { return VarSubset{bits | (std::uint32_t{1} << i)}; }
    VarSubset without(int i) const { return VarSubset{bits & ~(std::uint32_t{1} << i)}; }
    VarSubset unite(const VarSubset& o) const { return VarSubset{bits | o.bits}; }
    VarSubset intersect(const VarSubset& o) const { return VarSubset{bits & o.bits}; }
    VarSubset minus(const VarSubset& o) const { return VarSubset{bits & ~o.bits}; }

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint32_t b = bits; b;) {
            int i = std::countr_zero(b);
            out.push_back(i);
            b &= b - 1;
        }
        return out;
    }

    friend bool operator==(const VarSubset&, const VarSubset&) = default;
};

// Canonical facet order: by size, then lexicographically on the sorted
// member lists (so {x1,x4} sorts before {x2,x3}).
inline bool subset_canonical_less(const VarSubset& a, const VarSubset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::uint32_t x = a.bits, y = b.bits;
    while (x && y) {
        int i = std::countr_zero(x), j = std::countr_zero(y);
        if (i != j) return i < j;
        x &= x - 1;
        y &= y - 1;
    }
    return false;
}

// The ambient variable set x1..xn with display labels.
struct VariableSet {
    int n = 0;
    std::vector<std::string> names;

    VariableSet() = default;
    explicit VariableSet(int count) : n(count) {
        if (count < 1) throw std::invalid_argument("variable set needs n >= 1");
        if (count > 31) throw std::invalid_argument("variable set capped at 31 variables");
        names.reserve(count);
        for (int i = 1; i <= count; ++i) names.push_back("x" + std::to_string(i));
    }
    VariableSet(int count, std::vector<std::string> labels) : n(count), names(std::move(labels)) {
        if (count < 1 || static_cast<int>(names.size()) != count)
            throw std::invalid_argument("variable label count mismatch");
    }

    const std::string& name(int i) const { return names.at(i); }

    std::string subset_str(const VarSubset& s) const {
        if (s.is_empty()) return "{}";
        std::string out = "{";
        bool first = true;
        for (int i : s.members()) {
            if (!first) out += ",";
            out += names[i];
            first = false;
        }
        return out + "}";
    }

    friend bool operator==(const VariableSet& a, const VariableSet& b) {
        return a.n == b.n && a.names == b.names;
    }
};

} // namespace reisner

#endif
