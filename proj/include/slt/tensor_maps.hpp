#ifndef SLT_TENSOR_MAPS_HPP
#define SLT_TENSOR_MAPS_HPP

#include "slt/lattice.hpp"

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace slt {

/*
 * A map f from an ordered atom list E (subspaces of H) to subspaces of K.
 *
 * The pair (atoms[j], values[j]) means f(E_j) = values[j]. Maps over the same
 * atom list form a lattice under pointwise meet and join; comparisons are
 * order-sensitive, with atom order inherited from lattice_atoms.
 */
struct AtomMap {
    std::size_t k_dim = 0;
    std::size_t h_dim = 0;
    std::vector<Subspace> atoms;
    std::vector<Subspace> values;

    /// Throws DimensionMismatch on length or ambient-dimension inconsistencies.
    static AtomMap make(std::size_t k_dim, std::size_t h_dim, std::vector<Subspace> atoms,
                        std::vector<Subspace> values);
    static AtomMap constant(std::size_t k_dim, std::vector<Subspace> atoms, const Subspace& value);

    std::size_t size() const noexcept { return atoms.size(); }
    friend bool operator==(const AtomMap& a, const AtomMap& b) = default;
};

AtomMap pointwise_join(const AtomMap& f, const AtomMap& g);
AtomMap pointwise_meet(const AtomMap& f, const AtomMap& g);
bool pointwise_leq(const AtomMap& f, const AtomMap& g);

/// θ(f) = ∨_j f(E_j) ⊗ E_j inside K ⊗ H.
Subspace theta(const AtomMap& f);

/// φ in full mode: f(E) = {x ∈ K : x ⊗ e ∈ Q for all e ∈ range E}, the largest
/// subspace R of K with R ⊗ E ≤ Q, found by a single kernel solve per atom.
AtomMap phi_full(const Subspace& q, std::span<const Subspace> atoms, std::size_t k_dim);

/// φ in lattice mode: f(E) = ∨{P ∈ L : P ⊗ E ≤ Q} for a finite closed lattice L on K.
AtomMap phi_lattice(const Subspace& q, std::span<const Subspace> atoms, const ProjectionLattice& l);

struct ElementaryEntry {
    std::size_t product_index;
    std::size_t left_index;
    std::size_t right_index;
};

/// L ⊗ M: the lattice on K ⊗ H generated by the elementary tensors P_L ⊗ P_M.
struct TensorLattice {
    ProjectionLattice left;
    ProjectionLattice right;
    ProjectionLattice product;
    /// One entry per factor pair (i, j): product element equal to left[i] ⊗ right[j].
    std::vector<ElementaryEntry> elementary;

    bool is_elementary(std::size_t product_index) const;
};

TensorLattice tensor_lattice(const ProjectionLattice& l, const ProjectionLattice& m,
                             std::size_t cap = default_lattice_cap, Exec exec = Exec::parallel);

/// f^⊥(D_j) = f(E_j)^⊥ over the complement atoms D_j (same order as f's atoms).
AtomMap atom_map_perp(const AtomMap& f, std::span<const Subspace> complement_atoms);

/// Index set used for cyclic decompositions over M: its atoms when M is an ABSL,
/// otherwise all nonzero elements.
std::vector<Subspace> decomposition_index(const ProjectionLattice& m);

/// Reshape ξ = Σ_j e_j ⊗ x_j (K-index = row) and return f(E) = span{Σ_j (x_j, q) e_j : E_- q = 0}.
/// Verifies θ(f) equals the orbit span of ξ under I_K ⊗ Alg M before returning.
/// Throws PreconditionError when M lacks rank-one density.
AtomMap cyclic_decomposition(std::span<const Scalar> xi, const ProjectionLattice& m, std::size_t k_dim);

/// Visit every map from `atoms` into the elements of `values` (mixed-radix order,
/// first atom varies slowest). Returns the number of maps visited.
std::size_t for_each_atom_map(std::span<const Subspace> atoms, const ProjectionLattice& values,
                              const std::function<void(const AtomMap&)>& visit);

/// Swap the tensor factors: F^m ⊗ F^n → F^n ⊗ F^m.
Subspace flip_factors(const Subspace& s, std::size_t m, std::size_t n);

} // namespace slt

#endif
