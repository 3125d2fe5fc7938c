#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "tightcx/errors.hpp"

namespace tightcx {

/// Vertex labels are small nonnegative integers so that any vertex subset
/// fits in a 64-bit mask; that mask is the working currency of every
/// subset sweep in the engine.
inline constexpr int kMaxVertexLabel = 63;

std::uint64_t mask_of(std::span<const int> vertices);
std::vector<int> mask_vertices(std::uint64_t mask);

/// Canonical face order: lexicographic on the sorted vertex sequences.
/// This is not numeric order of the masks ({0,3} precedes {1,2}).
bool face_lex_less(std::uint64_t a, std::uint64_t b);

/// A nonempty face, stored as a vertex-set mask.
class Simplex {
public:
    explicit Simplex(std::span<const int> vertices);
    Simplex(std::initializer_list<int> vertices)
        : Simplex(std::span<const int>(vertices.begin(), vertices.size())) {}
    static Simplex fromMask(std::uint64_t mask);

    int dimension() const;
    std::uint64_t mask() const { return mask_; }
    std::vector<int> vertices() const { return mask_vertices(mask_); }
    std::string str() const;

    friend bool operator==(const Simplex& a, const Simplex& b) { return a.mask_ == b.mask_; }
    friend bool operator!=(const Simplex& a, const Simplex& b) { return a.mask_ != b.mask_; }

private:
    explicit Simplex(std::uint64_t mask) : mask_(mask) {}
    std::uint64_t mask_;
};

struct FVector {
    std::vector<long> counts; // f_0 .. f_d

    int dim() const { return static_cast<int>(counts.size()) - 1; }
    long operator[](int i) const {
        return (i >= 0 && i < static_cast<int>(counts.size())) ? counts[i] : 0;
    }
    friend bool operator==(const FVector& a, const FVector& b) = default;
};

/// An abstract finite simplicial complex: faces grouped by dimension, each
/// group duplicate-free and in canonical order.  Immutable after
/// construction; copies share the representation.
class SimplicialComplex {
public:
    SimplicialComplex(); // the empty complex, dimension -1

    /// Closure of the given vertex sets.  An empty list yields the empty
    /// complex; an empty facet or an out-of-range label throws.
    static SimplicialComplex fromFacets(const std::vector<std::vector<int>>& facets);
    static SimplicialComplex fromFacetMasks(std::span<const std::uint64_t> facets);

    /// Adopts an already subset-closed family (faces grouped by dimension,
    /// any order, no duplicates across the same dimension).
    static SimplicialComplex fromClosedFaces(std::vector<std::vector<std::uint64_t>> facesByDim);

    int dim() const;
    bool isEmpty() const { return dim() < 0; }
    std::uint64_t vertexMask() const;
    int vertexCount() const;
    std::vector<int> vertices() const { return mask_vertices(vertexMask()); }

    /// i-faces in canonical order; empty for i outside [0, dim].
    const std::vector<std::uint64_t>& facesOfDim(int i) const;
    long faceCount(int i) const;
    std::size_t totalFaceCount() const;
    bool containsFace(std::uint64_t mask) const;
    bool containsVertex(int v) const { return v >= 0 && v <= kMaxVertexLabel && ((vertexMask() >> v) & 1u); }

    FVector fVector() const;

    /// Maximal faces, canonical order.
    const std::vector<std::uint64_t>& facetMasks() const;
    std::vector<std::vector<int>> facetVertexLists() const;
    bool isPure() const;

    /// Content hash (facet list); stable across identical reconstructions.
    std::size_t contentHash() const;
    std::shared_ptr<const std::vector<std::uint64_t>> sharedFacetList() const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b);
    friend bool operator!=(const SimplicialComplex& a, const SimplicialComplex& b) {
        return !(a == b);
    }

    struct Rep; // implementation detail, defined in the .cpp

private:
    explicit SimplicialComplex(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
    static std::shared_ptr<const Rep> makeRep(std::vector<std::vector<std::uint64_t>> facesByDim);
    std::shared_ptr<const Rep> rep_;
};

FVector f_vector(const SimplicialComplex& x);

/// X[A]: faces of X contained in A.  A must be a subset of V(X).
SimplicialComplex induced_subcomplex(const SimplicialComplex& x, std::uint64_t vertex_mask);
SimplicialComplex induced_subcomplex(const SimplicialComplex& x, std::span<const int> vertices);

/// lk(σ, X): faces disjoint from σ whose union with σ is a face.
SimplicialComplex link(const SimplicialComplex& x, const Simplex& s);

/// Faces of dimension ≤ k (k ≥ -1; k = -1 gives the empty complex).
SimplicialComplex skeleton(const SimplicialComplex& x, int k);

/// Closure of the (D-1)-faces lying in exactly one facet.  Requires a
/// pure complex of dimension ≥ 1.
SimplicialComplex boundary_complex(const SimplicialComplex& x);

/// Faces of X, the apex, and every face extended by the apex.
SimplicialComplex cone(const SimplicialComplex& x, int apex);

/// All unions of a face (or nothing) from each side; vertex sets must be
/// disjoint.
SimplicialComplex join(const SimplicialComplex& x, const SimplicialComplex& y);

/// Connected components of the 1-skeleton; 0 for the empty complex.
int connected_components(const SimplicialComplex& x);

/// Vertex masks of the connected components, in canonical order.
std::vector<std::uint64_t> component_masks(const SimplicialComplex& x);

/// Largest t ≥ 1 with f_{t-1} = C(f_0, t); f_0 for the full simplex.
/// Errors on the empty complex.
int neighbourliness(const SimplicialComplex& x);

} // namespace tightcx
