#ifndef SLT_OPALG_HPP
#define SLT_OPALG_HPP

#include "slt/lattice.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace slt {

/*
 * A linear subspace of n×n matrices with a canonical basis.
 *
 * Matrices are identified with their column-stacked vectorization
 * (vec(T)[j*n + i] = T(i,j)); the basis is the RREF of those vectors, so two
 * operator spaces are equal exactly when their bases agree.
 */
class OperatorSpace {
public:
    explicit OperatorSpace(std::size_t n) : n_(n), echelon_(n * n) {}

    /// Span of the given matrices. With verify_algebra, is_algebra is decided by
    /// checking I ∈ A and closure under products of basis pairs; otherwise it is
    /// taken from `algebra` as given.
    static OperatorSpace span(std::size_t n, std::span<const Matrix> matrices, bool algebra = false,
                              bool verify_algebra = false);
    static OperatorSpace full(std::size_t n);
    static OperatorSpace scalars(std::size_t n);

    std::size_t ambient_dim() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return echelon_.rank(); }
    bool is_algebra() const noexcept { return is_algebra_; }
    std::vector<Matrix> basis() const;

    bool contains(const Matrix& t) const;
    /// I ∈ A and every product of basis pairs lies in A.
    bool verify_algebra() const;

    friend bool operator==(const OperatorSpace& a, const OperatorSpace& b) {
        return a.n_ == b.n_ && a.echelon_.rows() == b.echelon_.rows();
    }

private:
    std::size_t n_;
    RowSpace echelon_;
    bool is_algebra_ = false;
};

/// Alg L: all T with (I − P_L) T P_L = 0 for every L in the lattice. Intersects one
/// element's invariance constraint at a time inside the current solution space;
/// the per-basis-matrix constraint evaluation runs in parallel.
OperatorSpace alg_of(const ProjectionLattice& lat, Exec exec = Exec::parallel);

/// Alg L as one stacked kernel problem over vectorized T. Serial reference for alg_of.
OperatorSpace alg_of_reference(const ProjectionLattice& lat);

/// Span of all x·y* with x ∈ range L and y ∈ range (L_-)^⊥, over L in the lattice.
OperatorSpace rank_one_subspace(const ProjectionLattice& lat);

struct DensityReport {
    std::size_t rank_one_dim = 0;
    std::size_t alg_dim = 0;
    bool dense() const noexcept { return rank_one_dim == alg_dim; }
};

DensityReport rank_one_density(const ProjectionLattice& lat);
bool has_rank_one_density(const ProjectionLattice& lat);

/// (I − P_Q) T P_Q = 0 for every basis matrix T of A.
bool is_invariant(const Subspace& q, const OperatorSpace& a);

/// span{T x : T ∈ basis(A)}; invariant when A is an algebra containing I.
Subspace cyclic_invariant_subspace(const OperatorSpace& a, std::span<const Scalar> x);

/// {S : ST = TS for every T in A}.
OperatorSpace commutant(const OperatorSpace& a);

struct InvariantSample {
    std::vector<Subspace> subspaces;
    std::size_t requested = 0;
    bool shortfall() const noexcept { return subspaces.size() < requested; }
};

/// Up to `count` distinct members of Lat A: cyclic subspaces of pseudo-random
/// vectors plus pairwise meets and joins of those, topped up with images under
/// random commutant elements on a shortfall. Deterministic for the seed.
InvariantSample sample_invariant_projections(const OperatorSpace& a, std::uint64_t seed, std::size_t count,
                                             Field field = Field::Rational);

/// span{S ⊗ T : S ∈ basis(A), T ∈ basis(B)}.
OperatorSpace operator_space_tensor_span(const OperatorSpace& a, const OperatorSpace& b);

/// I_K ⊗ A, the ampliation of A to K ⊗ H.
OperatorSpace ampliation(std::size_t k_dim, const OperatorSpace& a);

bool operator_space_equal(const OperatorSpace& a, const OperatorSpace& b);

} // namespace slt

#endif
