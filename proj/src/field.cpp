#include "reisner/field.hpp"

namespace reisner {

namespace {

bool is_prime_ll(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

FieldSpec FieldSpec::prime(long long p) {
    if (!is_prime_ll(p)) throw std::invalid_argument("field characteristic must be prime");
    FieldSpec f;
    f.kind = Kind::Prime;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.size() > 2 && (text.rfind("fp", 0) == 0 || text.rfind("Fp", 0) == 0)) {
        long long p = 0;
        for (std::size_t i = 2; i < text.size(); ++i) {
            char c = text[i];
            if (c < '0' || c > '9') throw std::invalid_argument("bad field spec: " + text);
            p = p * 10 + (c - '0');
            if (p > 1'000'000'000) throw std::invalid_argument("field characteristic too large");
        }
        return prime(p);
    }
    throw std::invalid_argument("bad field spec: " + text + " (expected q or fpP)");
}

} // namespace reisner
