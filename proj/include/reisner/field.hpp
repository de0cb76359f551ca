#ifndef REISNER_FIELD_HPP
#define REISNER_FIELD_HPP

#include <stdexcept>
#include <string>

namespace reisner {

// Coefficient field for homology and Betti numbers: the rationals or a prime
// field F_p.  Ranks are always computed with exact arithmetic.
struct FieldSpec {
    enum class Kind { Rationals, Prime };
    Kind kind = Kind::Rationals;
    long long p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime(long long p);

    // Accepts "q"/"Q" or "fpP" (e.g. "fp2", "fp32003").
    static FieldSpec parse(const std::string& text);

    bool is_rationals() const { return kind == Kind::Rationals; }
    std::string str() const {
        return is_rationals() ? "Q" : "F" + std::to_string(p);
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

} // namespace reisner

#endif
