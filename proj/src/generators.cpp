#include "tightcx/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "tightcx/errors.hpp"

namespace tightcx {

std::uint64_t SeededRng::next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

std::uint64_t SeededRng::below(std::uint64_t n) {
    if (n == 0) throw InvalidInput("empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    for (;;) {
        const std::uint64_t v = next();
        if (v < limit) return v % n;
    }
}

namespace {

void check_label_budget(int maxLabel, const char* what) {
    if (maxLabel > kMaxVertexLabel)
        throw InvalidInput(std::string(what) + " would need vertex labels beyond " +
                           std::to_string(kMaxVertexLabel));
}

std::vector<int> range_vertices(int first, int count) {
    std::vector<int> v(static_cast<std::size_t>(count));
    std::iota(v.begin(), v.end(), first);
    return v;
}

// all k-subsets of the given vertices, in canonical order
std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& verts, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> pick;
    const std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == k) {
            out.push_back(pick);
            return;
        }
        for (std::size_t j = from; j < verts.size(); ++j) {
            pick.push_back(verts[j]);
            rec(j + 1);
            pick.pop_back();
        }
    };
    rec(0);
    return out;
}

} // namespace

SimplicialComplex simplex_ball(int d) {
    if (d < 0) throw InvalidInput("simplex dimension must be >= 0");
    check_label_budget(d, "simplex");
    return SimplicialComplex::fromFacets({range_vertices(0, d + 1)});
}

SimplicialComplex boundary_simplex(int d) {
    if (d < 1) throw InvalidInput("boundary sphere dimension must be >= 1");
    check_label_budget(d + 1, "boundary simplex");
    return SimplicialComplex::fromFacets(
        subsets_of_size(range_vertices(0, d + 2), d + 1));
}

SimplicialComplex kuehnel_handle(int d) {
    if (d < 2) throw InvalidInput("handle body needs d >= 2");
    const int n = 2 * d + 1;
    check_label_budget(n - 1, "handle body");
    std::vector<std::vector<int>> facets;
    facets.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<int> f;
        f.reserve(static_cast<std::size_t>(d) + 1);
        for (int j = 0; j <= d; ++j) f.push_back((i + j) % n);
        facets.push_back(std::move(f));
    }
    return SimplicialComplex::fromFacets(facets);
}

SimplicialComplex stacked_ball(int D, int n_facets, std::uint64_t seed) {
    if (D < 2) throw InvalidInput("stacked ball dimension must be >= 2");
    if (n_facets < 1) throw InvalidInput("stacked ball needs at least one facet");
    check_label_budget(D + n_facets - 1, "stacked ball");

    SeededRng rng(seed);
    std::vector<std::uint64_t> facets{mask_of(range_vertices(0, D + 1))};
    int nextVertex = D + 1;
    for (int step = 1; step < n_facets; ++step) {
        // free (D-1)-faces = in exactly one current facet, canonical order
        std::map<std::uint64_t, int, decltype(&face_lex_less)> ridge(&face_lex_less);
        for (std::uint64_t f : facets) {
            std::uint64_t rest = f;
            while (rest) {
                const std::uint64_t bit = rest & (~rest + 1);
                ++ridge[f ^ bit];
                rest &= rest - 1;
            }
        }
        std::vector<std::uint64_t> free;
        for (const auto& [r, cnt] : ridge)
            if (cnt == 1) free.push_back(r);
        const std::uint64_t chosen = free[rng.below(free.size())];
        facets.push_back(chosen | (std::uint64_t{1} << nextVertex));
        ++nextVertex;
    }
    return SimplicialComplex::fromFacetMasks(facets);
}

SimplicialComplex join_ball(int a, int b) {
    if (a < 1 || b < 2) throw InvalidInput("join ball requires a >= 1 and b >= 2");
    check_label_budget(a + b + 1, "join ball");
    const SimplicialComplex ball = simplex_ball(a);
    const SimplicialComplex sphere = SimplicialComplex::fromFacets(
        subsets_of_size(range_vertices(a + 1, b + 1), b));
    return join(ball, sphere);
}

SimplicialComplex cyclic_sphere(int n, int D) {
    if (D < 1) throw InvalidInput("cyclic sphere dimension must be >= 1");
    if (n < D + 2) throw InvalidInput("cyclic sphere needs n >= D + 2");
    check_label_budget(n - 1, "cyclic sphere");

    // Gale evenness on 0..n-1
    std::vector<std::vector<int>> facets;
    for (auto& S : subsets_of_size(range_vertices(0, n), D + 1)) {
        const std::uint64_t inS = mask_of(S);
        bool even = true;
        for (int i = 0; i < n && even; ++i) {
            if ((inS >> i) & 1) continue;
            int between = 0;
            for (int j = i + 1; j < n && even; ++j) {
                if ((inS >> j) & 1) {
                    ++between;
                    continue;
                }
                if (between % 2 != 0) even = false;
            }
        }
        if (even) facets.push_back(S);
    }
    return SimplicialComplex::fromFacets(facets);
}

SimplicialComplex random_complex(int n, int D, const Rational& density, std::uint64_t seed) {
    if (n < 1 || n > 16) throw InvalidInput("random complex supports 1..16 vertices");
    if (D < 0 || D >= n) throw InvalidInput("random complex dimension out of range");
    if (density < Rational(0) || density > Rational(1))
        throw InvalidInput("density must lie in [0, 1]");

    const mpz_class& num = density.num();
    const mpz_class& den = density.den();
    if (!den.fits_ulong_p())
        throw InvalidInput("density denominator too large for exact sampling");

    SeededRng rng(seed);
    const std::uint64_t denU = den.get_ui();
    std::vector<std::uint64_t> kept;
    for (auto& S : subsets_of_size(range_vertices(0, n), D + 1)) {
        // keep with probability num/den, exactly
        const std::uint64_t draw = rng.below(denU);
        if (mpz_cmp_ui(num.get_mpz_t(), draw) > 0) kept.push_back(mask_of(S));
    }
    return SimplicialComplex::fromFacetMasks(kept);
}

} // namespace tightcx
