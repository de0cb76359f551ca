#ifndef REISNER_HOMOLOGY_HPP
#define REISNER_HOMOLOGY_HPP

#include <vector>

#include "reisner/caps.hpp"
#include "reisner/complex.hpp"
#include "reisner/field.hpp"

namespace reisner {

// Reduced homology dimensions of a simplicial complex over a field, indexed
// from degree -1 upward: dim_at(k) = dim H~_k.
struct HomologyProfile {
    FieldSpec field;
    std::vector<long long> dims; // dims[k + 1] = dim H~_k, k = -1 .. dim

    long long dim_at(int k) const {
        int idx = k + 1;
        if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
        return dims[idx];
    }
    bool all_zero() const {
        for (long long d : dims)
            if (d != 0) return false;
        return true;
    }
};

// Exact reduced simplicial homology from boundary-matrix ranks.  Results are
// memoized on (canonical complex, field).
HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field,
                                      const Caps& caps = {});

} // namespace reisner

#endif
