#include "reisner/homology.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

#include "reisner/errors.hpp"
#include "reisner/linalg.hpp"

namespace reisner {

namespace {

struct HomologyCache {
    std::mutex mutex;
    std::unordered_map<std::string, HomologyProfile> map;
};

HomologyCache& homology_cache() {
    static HomologyCache cache;
    return cache;
}

HomologyProfile compute_profile(const SimplicialComplex& c, const FieldSpec& field) {
    HomologyProfile profile{field, {}};
    if (c.is_void()) return profile; // no chains in any degree

    // Collect the faces, grouped and sorted by cardinality.
    std::unordered_set<std::uint32_t> seen;
    int max_card = 0;
    for (const VarSubset& facet : c.facets()) {
        std::uint32_t f = facet.bits;
        // All subsets of the facet.
        std::uint32_t sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
        max_card = std::max(max_card, facet.size());
    }
    std::vector<std::vector<std::uint32_t>> faces(max_card + 1);
    for (std::uint32_t f : seen) faces[std::popcount(f)].push_back(f);
    for (auto& level : faces) std::sort(level.begin(), level.end());

    // Index of each face within its cardinality level.
    std::unordered_map<std::uint32_t, int> index;
    for (const auto& level : faces)
        for (std::size_t i = 0; i < level.size(); ++i) index[level[i]] = static_cast<int>(i);

    // rank of the boundary map from cardinality c to c-1, for c = 1..max_card
    std::vector<int> boundary_rank(max_card + 2, 0);
    for (int card = 1; card <= max_card; ++card) {
        IntMatrix m(faces[card - 1].size(), std::vector<int>(faces[card].size(), 0));
        for (std::size_t col = 0; col < faces[card].size(); ++col) {
            std::uint32_t f = faces[card][col];
            int sign = 1, pos = 0;
            for (std::uint32_t b = f; b; b &= b - 1, ++pos) {
                int v = std::countr_zero(b);
                std::uint32_t sub = f & ~(std::uint32_t{1} << v);
                m[index[sub]][col] = sign;
                sign = -sign;
            }
        }
        boundary_rank[card] = exact_rank(m, field);
    }

    // dim H~_{c-1} = #faces_c - rank d_c - rank d_{c+1}
    profile.dims.resize(max_card + 1, 0);
    for (int card = 0; card <= max_card; ++card)
        profile.dims[card] = static_cast<long long>(faces[card].size()) - boundary_rank[card] -
                             boundary_rank[card + 1];
    return profile;
}

} // namespace

HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field,
                                      const Caps& caps) {
    if (c.vertex_support().size() > caps.homology_vertices)
        throw CapError("reduced_homology_dims: vertex support exceeds cap of " +
                       std::to_string(caps.homology_vertices));

    std::string key = field.str() + "#" + c.key();
    HomologyCache& cache = homology_cache();
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        auto it = cache.map.find(key);
        if (it != cache.map.end()) return it->second;
    }
    HomologyProfile profile = compute_profile(c, field);
    {
        std::lock_guard<std::mutex> lock(cache.mutex);
        cache.map.emplace(key, profile);
    }
    return profile;
}

} // namespace reisner
