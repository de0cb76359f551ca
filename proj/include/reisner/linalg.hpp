#ifndef REISNER_LINALG_HPP
#define REISNER_LINALG_HPP

#include <cstdint>
#include <vector>

#include "reisner/field.hpp"

namespace reisner {

// Dense integer matrix with small entries (boundary matrices are 0/±1).
using IntMatrix = std::vector<std::vector<int>>;

// Exact rank over the requested field.  Rationals use fraction-free Bareiss
// elimination (64-bit when the Hadamard bound allows, big integers
// otherwise); prime fields use Gaussian elimination mod p.
int exact_rank(const IntMatrix& m, const FieldSpec& field);

} // namespace reisner

#endif
