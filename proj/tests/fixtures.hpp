#pragma once

#include <string>
#include <vector>

#include "tightcx/complex_io.hpp"
#include "tightcx/simplicial_complex.hpp"

#ifndef TIGHTCX_DATA_DIR
#define TIGHTCX_DATA_DIR "."
#endif

namespace tightcx::testing {

inline std::string data_path(const char* file) {
    return std::string(TIGHTCX_DATA_DIR) + "/" + file;
}

inline SimplicialComplex cx(const std::vector<std::vector<int>>& facets) {
    return SimplicialComplex::fromFacets(facets);
}

inline std::vector<long> fv(const SimplicialComplex& x) { return x.fVector().counts; }

inline SimplicialComplex load_fixture(const char* file) {
    return load_complex_file(data_path(file)).complex;
}

// fan disc: cone over the 4-cycle 1-2-3-4 with apex 0
inline SimplicialComplex fan_disc() {
    return cx({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 1, 4}});
}

inline SimplicialComplex cycle(int n) {
    std::vector<std::vector<int>> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return cx(edges);
}

} // namespace tightcx::testing
