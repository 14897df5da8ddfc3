#ifndef SLT_LATTICE_HPP
#define SLT_LATTICE_HPP

#include "slt/subspace.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace slt {

/// Serial path is the reference implementation; parallel path runs OpenMP kernels.
enum class Exec { serial, parallel };

constexpr std::size_t default_lattice_cap = 512;

struct LatticeFlags {
    bool is_closed = false;
    bool is_csl = false;
    bool is_distributive = false;
    bool is_complemented = false;
    bool is_absl = false;
};

/// Lattice closure grew past its cap. Carries the partial family and the pair
/// whose meet or join produced the overflowing element.
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(std::string what, std::vector<Subspace> partial, std::array<Subspace, 2> witness)
        : std::runtime_error(std::move(what)), partial_(std::move(partial)), witness_(std::move(witness)) {}
    explicit CapExceeded(std::string what) : std::runtime_error(std::move(what)) {}
    const std::vector<Subspace>& partial() const noexcept { return partial_; }
    const std::array<Subspace, 2>& witness() const noexcept { return witness_; }

private:
    std::vector<Subspace> partial_;
    std::array<Subspace, 2> witness_;
};

/*
 * A finite family of subspaces of F^n containing 0 and I.
 *
 * Elements are deduplicated and kept in canonical order. When the family is
 * closed under meet and join, the full meet/join tables are stored, so every
 * order-theoretic query afterwards is an index lookup.
 */
class ProjectionLattice {
public:
    /// Adds 0 and I if missing, sorts and deduplicates, then classifies.
    static ProjectionLattice from_elements(std::size_t dim, std::vector<Subspace> elements,
                                           Exec exec = Exec::parallel);

    std::size_t ambient_dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<Subspace>& elements() const noexcept { return elements_; }
    const Subspace& operator[](std::size_t i) const { return elements_[i]; }

    std::optional<std::size_t> index_of(const Subspace& s) const;
    bool contains(const Subspace& s) const { return index_of(s).has_value(); }

    const LatticeFlags& flags() const noexcept { return flags_; }
    bool is_closed() const noexcept { return flags_.is_closed; }
    /// Minimal nonzero elements, in canonical order. Empty unless closed.
    const std::vector<Subspace>& atoms() const noexcept { return atoms_; }
    /// First (a,b,c) violating a∧(b∨c) = (a∧b)∨(a∧c), if any.
    const std::optional<std::array<std::size_t, 3>>& distributivity_witness() const noexcept {
        return distributivity_witness_;
    }

    // Table lookups; require is_closed().
    std::size_t meet_index(std::size_t a, std::size_t b) const;
    std::size_t join_index(std::size_t a, std::size_t b) const;
    bool leq_index(std::size_t a, std::size_t b) const { return meet_index(a, b) == a; }
    std::size_t zero_index() const noexcept { return 0; }
    std::size_t top_index() const noexcept { return elements_.size() - 1; }

    friend bool operator==(const ProjectionLattice& a, const ProjectionLattice& b) {
        return a.dim_ == b.dim_ && a.elements_ == b.elements_;
    }

private:
    void require_closed(const char* op) const;

    std::size_t dim_ = 0;
    std::vector<Subspace> elements_;
    std::vector<std::size_t> meet_;
    std::vector<std::size_t> join_;
    LatticeFlags flags_;
    std::vector<Subspace> atoms_;
    std::optional<std::array<std::size_t, 3>> distributivity_witness_;
};

/// Smallest family containing the generators, 0 and I that is closed under ∧ and ∨.
/// Frontier-based fixpoint; each round's candidate pairs are evaluated in parallel.
ProjectionLattice lattice_closure(std::size_t dim, std::span<const Subspace> generators,
                                  std::size_t cap = default_lattice_cap, Exec exec = Exec::parallel);

/// Naive reference closure: repeated all-pairs passes until nothing new appears.
ProjectionLattice lattice_closure_reference(std::size_t dim, std::span<const Subspace> generators,
                                            std::size_t cap = default_lattice_cap);

/// L_- = join of all elements P of the lattice with L ≰ P.
Subspace l_minus(const Subspace& l, const ProjectionLattice& lat);

std::vector<Subspace> lattice_atoms(const ProjectionLattice& lat);

LatticeFlags classify_lattice(const ProjectionLattice& lat);

/// Distributivity decided directly from subspace meets/joins, no tables. Test oracle for the table scan.
bool is_distributive_reference(const ProjectionLattice& lat);

struct ComplementLattice {
    ProjectionLattice lattice;
    /// D_j = ∧_{i≠j} E_i^⊥, in the order of the input lattice's atoms.
    std::vector<Subspace> atoms;
};

/// {L^⊥ : L ∈ lat} together with its atoms D_j. Requires an ABSL.
ComplementLattice complement_lattice(const ProjectionLattice& lat);

/// Any complement of element `a` inside the lattice (requires closed).
std::optional<std::size_t> find_complement(const ProjectionLattice& lat, std::size_t a);

} // namespace slt

#endif
