#include "tightcx/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "tightcx/rational.hpp"

namespace tightcx {

namespace {

constexpr std::size_t kMaxTotalFaces = std::size_t{1} << 22;

std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

} // namespace

std::uint64_t mask_of(std::span<const int> vertices) {
    std::uint64_t m = 0;
    for (int v : vertices) {
        if (v < 0 || v > kMaxVertexLabel)
            throw InvalidInput("vertex label " + std::to_string(v) + " outside 0.." +
                               std::to_string(kMaxVertexLabel));
        m |= std::uint64_t{1} << v;
    }
    return m;
}

std::vector<int> mask_vertices(std::uint64_t mask) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(mask)));
    while (mask) {
        const int v = std::countr_zero(mask);
        out.push_back(v);
        mask &= mask - 1;
    }
    return out;
}

bool face_lex_less(std::uint64_t a, std::uint64_t b) {
    while (a && b) {
        const int va = std::countr_zero(a);
        const int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0; // a proper prefix precedes its extensions
}

Simplex::Simplex(std::span<const int> vertices) : mask_(mask_of(vertices)) {
    if (mask_ == 0) throw InvalidInput("a simplex needs at least one vertex");
    if (std::popcount(mask_) != static_cast<int>(vertices.size()))
        throw InvalidInput("repeated vertex in simplex");
}

Simplex Simplex::fromMask(std::uint64_t mask) {
    if (mask == 0) throw InvalidInput("a simplex needs at least one vertex");
    return Simplex(mask);
}

int Simplex::dimension() const { return std::popcount(mask_) - 1; }

std::string Simplex::str() const {
    std::string out = "{";
    bool first = true;
    for (int v : vertices()) {
        if (!first) out += " ";
        out += std::to_string(v);
        first = false;
    }
    return out + "}";
}

struct SimplicialComplex::Rep {
    int dim = -1;
    std::uint64_t vertex_mask = 0;
    std::vector<std::vector<std::uint64_t>> faces; // by dimension, canonical order
    std::shared_ptr<const std::vector<std::uint64_t>> facets;
    std::size_t total_faces = 0;
    std::size_t hash = 0;
};

namespace {

const std::shared_ptr<const SimplicialComplex::Rep>& empty_rep() {
    static const auto rep = [] {
        auto r = std::make_shared<SimplicialComplex::Rep>();
        r->facets = std::make_shared<const std::vector<std::uint64_t>>();
        r->hash = mix64(0);
        return std::shared_ptr<const SimplicialComplex::Rep>(r);
    }();
    return rep;
}

} // namespace

std::shared_ptr<const SimplicialComplex::Rep>
SimplicialComplex::makeRep(std::vector<std::vector<std::uint64_t>> facesByDim) {
    while (!facesByDim.empty() && facesByDim.back().empty()) facesByDim.pop_back();
    if (facesByDim.empty()) return empty_rep();

    auto rep = std::make_shared<Rep>();
    rep->faces = std::move(facesByDim);
    rep->dim = static_cast<int>(rep->faces.size()) - 1;
    for (auto& level : rep->faces) {
        std::sort(level.begin(), level.end(), face_lex_less);
        rep->total_faces += level.size();
        for (std::uint64_t f : level) rep->vertex_mask |= f;
    }

    // maximal faces: drop everything that sits under a one-higher face
    auto facets = std::make_shared<std::vector<std::uint64_t>>();
    std::unordered_set<std::uint64_t> covered;
    for (int i = rep->dim; i >= 0; --i) {
        for (std::uint64_t f : rep->faces[i]) {
            if (!covered.count(f)) facets->push_back(f);
        }
        covered.clear();
        if (i > 0) {
            for (std::uint64_t f : rep->faces[i]) {
                std::uint64_t rest = f;
                while (rest) {
                    const std::uint64_t bit = rest & (~rest + 1);
                    covered.insert(f ^ bit);
                    rest &= rest - 1;
                }
            }
        }
    }
    std::sort(facets->begin(), facets->end(), face_lex_less);
    rep->facets = facets;

    std::size_t h = mix64(rep->vertex_mask);
    for (std::uint64_t f : *rep->facets) h = mix64(h ^ mix64(f));
    rep->hash = h;
    return rep;
}

SimplicialComplex::SimplicialComplex() : rep_(empty_rep()) {}

SimplicialComplex SimplicialComplex::fromFacetMasks(std::span<const std::uint64_t> facets) {
    std::size_t budget = 0;
    for (std::uint64_t f : facets) {
        if (f == 0) throw InvalidInput("empty facet");
        budget += std::size_t{1} << std::popcount(f);
        if (budget > kMaxTotalFaces)
            throw InvalidInput("complex too large: face closure exceeds engine limits");
    }
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::vector<std::uint64_t>> byDim;
    for (std::uint64_t f : facets) {
        // enumerate nonempty submasks
        for (std::uint64_t s = f;; s = (s - 1) & f) {
            if (s != 0 && seen.insert(s).second) {
                const int d = std::popcount(s) - 1;
                if (d >= static_cast<int>(byDim.size())) byDim.resize(d + 1);
                byDim[static_cast<std::size_t>(d)].push_back(s);
            }
            if (s == 0) break;
        }
    }
    return SimplicialComplex(makeRep(std::move(byDim)));
}

SimplicialComplex SimplicialComplex::fromFacets(const std::vector<std::vector<int>>& facets) {
    std::vector<std::uint64_t> masks;
    masks.reserve(facets.size());
    for (const auto& f : facets) {
        if (f.empty()) throw InvalidInput("empty facet");
        masks.push_back(mask_of(f));
    }
    return fromFacetMasks(masks);
}

SimplicialComplex
SimplicialComplex::fromClosedFaces(std::vector<std::vector<std::uint64_t>> facesByDim) {
    return SimplicialComplex(makeRep(std::move(facesByDim)));
}

int SimplicialComplex::dim() const { return rep_->dim; }
std::uint64_t SimplicialComplex::vertexMask() const { return rep_->vertex_mask; }
int SimplicialComplex::vertexCount() const { return std::popcount(rep_->vertex_mask); }

const std::vector<std::uint64_t>& SimplicialComplex::facesOfDim(int i) const {
    static const std::vector<std::uint64_t> none;
    if (i < 0 || i > rep_->dim) return none;
    return rep_->faces[static_cast<std::size_t>(i)];
}

long SimplicialComplex::faceCount(int i) const {
    return static_cast<long>(facesOfDim(i).size());
}

std::size_t SimplicialComplex::totalFaceCount() const { return rep_->total_faces; }

bool SimplicialComplex::containsFace(std::uint64_t mask) const {
    if (mask == 0) return false;
    const auto& level = facesOfDim(std::popcount(mask) - 1);
    return std::binary_search(level.begin(), level.end(), mask, face_lex_less);
}

FVector SimplicialComplex::fVector() const {
    FVector f;
    f.counts.reserve(static_cast<std::size_t>(rep_->dim + 1));
    for (int i = 0; i <= rep_->dim; ++i) f.counts.push_back(faceCount(i));
    return f;
}

const std::vector<std::uint64_t>& SimplicialComplex::facetMasks() const { return *rep_->facets; }

std::vector<std::vector<int>> SimplicialComplex::facetVertexLists() const {
    std::vector<std::vector<int>> out;
    out.reserve(rep_->facets->size());
    for (std::uint64_t f : *rep_->facets) out.push_back(mask_vertices(f));
    return out;
}

bool SimplicialComplex::isPure() const {
    if (isEmpty()) return false;
    const int top = std::popcount(rep_->facets->front());
    return std::all_of(rep_->facets->begin(), rep_->facets->end(),
                       [&](std::uint64_t f) { return std::popcount(f) == top; }) &&
           top == rep_->dim + 1;
}

std::size_t SimplicialComplex::contentHash() const { return rep_->hash; }

std::shared_ptr<const std::vector<std::uint64_t>> SimplicialComplex::sharedFacetList() const {
    return rep_->facets;
}

bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.rep_ == b.rep_) return true;
    return a.rep_->hash == b.rep_->hash && *a.rep_->facets == *b.rep_->facets;
}

FVector f_vector(const SimplicialComplex& x) { return x.fVector(); }

SimplicialComplex induced_subcomplex(const SimplicialComplex& x, std::uint64_t vertex_mask) {
    if ((vertex_mask & ~x.vertexMask()) != 0)
        throw InvalidInput("induced subcomplex: subset contains non-vertices");
    std::vector<std::vector<std::uint64_t>> byDim;
    for (int i = 0; i <= x.dim(); ++i) {
        std::vector<std::uint64_t> level;
        for (std::uint64_t f : x.facesOfDim(i))
            if ((f & ~vertex_mask) == 0) level.push_back(f);
        byDim.push_back(std::move(level));
    }
    return SimplicialComplex::fromClosedFaces(std::move(byDim));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& x, std::span<const int> vertices) {
    return induced_subcomplex(x, mask_of(vertices));
}

SimplicialComplex link(const SimplicialComplex& x, const Simplex& s) {
    if (!x.containsFace(s.mask())) throw InvalidInput("link of a non-face");
    const std::uint64_t sm = s.mask();
    std::vector<std::vector<std::uint64_t>> byDim;
    for (int i = s.dimension() + 1; i <= x.dim(); ++i) {
        for (std::uint64_t f : x.facesOfDim(i)) {
            if ((f & sm) == sm) {
                const std::uint64_t rest = f & ~sm;
                const int d = std::popcount(rest) - 1;
                if (d >= static_cast<int>(byDim.size())) byDim.resize(d + 1);
                byDim[static_cast<std::size_t>(d)].push_back(rest);
            }
        }
    }
    return SimplicialComplex::fromClosedFaces(std::move(byDim));
}

SimplicialComplex skeleton(const SimplicialComplex& x, int k) {
    if (k < -1) throw InvalidInput("skeleton dimension below -1");
    std::vector<std::vector<std::uint64_t>> byDim;
    for (int i = 0; i <= std::min(k, x.dim()); ++i) byDim.push_back(x.facesOfDim(i));
    return SimplicialComplex::fromClosedFaces(std::move(byDim));
}

SimplicialComplex boundary_complex(const SimplicialComplex& x) {
    if (x.dim() < 1) throw InvalidInput("boundary complex requires dimension >= 1");
    if (!x.isPure()) throw InvalidInput("boundary complex requires a pure complex");
    std::unordered_map<std::uint64_t, int> ridgeCount;
    for (std::uint64_t f : x.facesOfDim(x.dim())) {
        std::uint64_t rest = f;
        while (rest) {
            const std::uint64_t bit = rest & (~rest + 1);
            ++ridgeCount[f ^ bit];
            rest &= rest - 1;
        }
    }
    std::vector<std::uint64_t> boundaryRidges;
    for (const auto& [ridge, cnt] : ridgeCount)
        if (cnt == 1) boundaryRidges.push_back(ridge);
    return SimplicialComplex::fromFacetMasks(boundaryRidges);
}

SimplicialComplex cone(const SimplicialComplex& x, int apex) {
    const std::uint64_t apexBit = mask_of(std::vector<int>{apex});
    if (x.vertexMask() & apexBit) throw InvalidInput("cone apex is already a vertex");
    std::vector<std::vector<std::uint64_t>> byDim(static_cast<std::size_t>(x.dim() + 2));
    byDim[0].push_back(apexBit);
    for (int i = 0; i <= x.dim(); ++i) {
        for (std::uint64_t f : x.facesOfDim(i)) {
            byDim[static_cast<std::size_t>(i)].push_back(f);
            byDim[static_cast<std::size_t>(i + 1)].push_back(f | apexBit);
        }
    }
    return SimplicialComplex::fromClosedFaces(std::move(byDim));
}

SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y) {
    if (x.vertexMask() & y.vertexMask())
        throw InvalidInput("join requires disjoint vertex labels");
    std::vector<std::vector<std::uint64_t>> byDim(
        static_cast<std::size_t>(std::max(0, x.dim() + y.dim() + 2)));
    if (byDim.empty()) return SimplicialComplex();
    for (int i = 0; i <= x.dim(); ++i)
        for (std::uint64_t f : x.facesOfDim(i)) byDim[static_cast<std::size_t>(i)].push_back(f);
    for (int j = 0; j <= y.dim(); ++j)
        for (std::uint64_t g : y.facesOfDim(j)) byDim[static_cast<std::size_t>(j)].push_back(g);
    for (int i = 0; i <= x.dim(); ++i)
        for (std::uint64_t f : x.facesOfDim(i))
            for (int j = 0; j <= y.dim(); ++j)
                for (std::uint64_t g : y.facesOfDim(j))
                    byDim[static_cast<std::size_t>(i + j + 1)].push_back(f | g);
    return SimplicialComplex::fromClosedFaces(std::move(byDim));
}

std::vector<std::uint64_t> component_masks(const SimplicialComplex& x) {
    if (x.isEmpty()) return {};
    const std::vector<int> verts = x.vertices();
    std::vector<int> parent(verts.size());
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    };
    std::unordered_map<int, int> indexOf;
    for (std::size_t i = 0; i < verts.size(); ++i) indexOf[verts[i]] = static_cast<int>(i);
    for (std::uint64_t e : x.facesOfDim(1)) {
        const auto vs = mask_vertices(e);
        const int a = find(indexOf[vs[0]]);
        const int b = find(indexOf[vs[1]]);
        if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
    std::unordered_map<int, std::uint64_t> byRoot;
    for (std::size_t i = 0; i < verts.size(); ++i)
        byRoot[find(static_cast<int>(i))] |= std::uint64_t{1} << verts[i];
    std::vector<std::uint64_t> out;
    out.reserve(byRoot.size());
    for (const auto& [root, mask] : byRoot) out.push_back(mask);
    std::sort(out.begin(), out.end(), face_lex_less);
    return out;
}

int connected_components(const SimplicialComplex& x) {
    return static_cast<int>(component_masks(x).size());
}

int neighbourliness(const SimplicialComplex& x) {
    if (x.isEmpty()) throw InvalidInput("neighbourliness of the empty complex");
    const int n = x.vertexCount();
    if (x.containsFace(x.vertexMask())) return n; // the full simplex
    int t = 1;
    while (t + 1 <= n) {
        const mpz_class expected = binomial(static_cast<unsigned long>(n), t + 1);
        if (mpz_class(x.faceCount(t)) != expected) break;
        ++t;
    }
    return t;
}

} // namespace tightcx
