#ifndef REISNER_MONOMIAL_HPP
#define REISNER_MONOMIAL_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "reisner/varset.hpp"

namespace reisner {

// A monomial over a fixed variable count, stored as its exponent vector.
// Squarefree monomials double as vertex subsets via support().
class Monomial {
public:
    explicit Monomial(int nvars) : exp_(nvars, 0) {
        if (nvars < 1) throw std::invalid_argument("monomial needs nvars >= 1");
    }
    static Monomial one(int nvars) { return Monomial(nvars); }
    static Monomial variable(int nvars, int i) {
        Monomial m(nvars);
        m.exp_[i] = 1;
        return m;
    }
    static Monomial from_exponents(std::vector<int> exps) {
        if (exps.empty()) throw std::invalid_argument("empty exponent vector");
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("negative exponent");
        Monomial m(static_cast<int>(exps.size()));
        m.exp_ = std::move(exps);
        return m;
    }
    static Monomial from_support(int nvars, const VarSubset& s) {
        Monomial m(nvars);
        for (int i : s.members()) m.exp_[i] = 1;
        return m;
    }

    int nvars() const { return static_cast<int>(exp_.size()); }
    int exponent(int i) const { return exp_[i]; }
    const std::vector<int>& exponents() const { return exp_; }

    int degree() const { return std::accumulate(exp_.begin(), exp_.end(), 0); }
    bool is_one() const { return degree() == 0; }
    bool squarefree() const {
        return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e <= 1; });
    }

    VarSubset support() const {
        VarSubset s;
        for (int i = 0; i < nvars(); ++i)
            if (exp_[i] > 0) s = s.with(i);
        return s;
    }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < nvars(); ++i)
            if (exp_[i] > o.exp_[i]) return false;
        return true;
    }

    Monomial gcd(const Monomial& o) const {
        Monomial m(nvars());
        for (int i = 0; i < nvars(); ++i) m.exp_[i] = std::min(exp_[i], o.exp_[i]);
        return m;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial m(nvars());
        for (int i = 0; i < nvars(); ++i) m.exp_[i] = std::max(exp_[i], o.exp_[i]);
        return m;
    }
    Monomial times(const Monomial& o) const {
        Monomial m(nvars());
        for (int i = 0; i < nvars(); ++i) m.exp_[i] = exp_[i] + o.exp_[i];
        return m;
    }
    Monomial times_var(int i) const {
        Monomial m = *this;
        ++m.exp_[i];
        return m;
    }
    // this / d, requiring d | this.
    Monomial divided_by(const Monomial& d) const {
        Monomial m(nvars());
        for (int i = 0; i < nvars(); ++i) {
            m.exp_[i] = exp_[i] - d.exp_[i];
            if (m.exp_[i] < 0) throw std::invalid_argument("monomial division not exact");
        }
        return m;
    }
    Monomial divided_by_var(int i) const {
        if (exp_[i] < 1) throw std::invalid_argument("monomial division not exact");
        Monomial m = *this;
        --m.exp_[i];
        return m;
    }

    std::string str(const VariableSet& vars) const {
        if (is_one()) return "1";
        std::string out;
        for (int i = 0; i < nvars(); ++i) {
            if (exp_[i] == 0) continue;
            if (!out.empty()) out += "*";
            out += vars.name(i);
            if (exp_[i] > 1) out += "^" + std::to_string(exp_[i]);
        }
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::vector<int> exp_;
};

// Canonical generator order: degree ascending, then exponent vectors in
// descending lexicographic order, so x1-leading monomials print first.
inline bool monomial_canonical_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.exponents() > b.exponents();
}

} // namespace reisner

#endif
