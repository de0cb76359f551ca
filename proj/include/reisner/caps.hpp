#ifndef REISNER_CAPS_HPP
#define REISNER_CAPS_HPP

namespace reisner {

// Resource caps for the exponential searches and enumerations.  Exceeding a
// cap raises CapError or yields an explicit undecided outcome, never a
// silently truncated answer.
struct Caps {
    int homology_vertices = 16;   // max vertex support for simplicial homology
    int enumeration_vars = 22;    // max n for 2^n subset sweeps (SR complex etc.)
    int hilbert_generators = 20;  // max generators for the inclusion-exclusion numerator
    int wpm_order_vars = 9;       // max n for exhaustive variable-order refutation
    int lq_order_generators = 20; // max generators for exhaustive order refutation
    int shelling_facets = 12;     // max facets for exhaustive shelling refutation
    long long search_node_budget = 20'000'000; // guard for the recursive searches
};

} // namespace reisner

#endif
