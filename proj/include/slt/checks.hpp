#ifndef SLT_CHECKS_HPP
#define SLT_CHECKS_HPP

#include "slt/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace slt {

enum class Status { pass, fail, skip };

std::string to_string(Status s);

struct CheckConfig {
    std::uint64_t seed = 1;
    std::size_t samples = 16;
    std::size_t k_dim = 2;
    std::size_t lattice_cap = default_lattice_cap;
    std::size_t max_product_dim = 16;
    Field field = Field::Rational;
};

/*
 * Outcome of one theorem check.
 *
 * On failure `counterexample` holds a self-contained payload
 * {"check", "kind", "data"} that replay_counterexample() re-evaluates on its
 * own. Timing is kept out of the JSON form so reports stay byte-identical
 * across runs.
 */
struct CheckReport {
    std::string id;
    std::string property;
    std::string subject;
    Status status = Status::pass;
    std::size_t samples = 0;
    io::Json details = io::Json::object();
    io::Json counterexample = nullptr;
    std::vector<std::string> notes;
    double seconds = 0.0;

    bool ok() const noexcept { return status != Status::fail; }
    io::Json to_json() const;
};

/// A named lattice together with the label used in report subjects.
struct NamedLattice {
    std::string name;
    ProjectionLattice lattice;
};

// θ∘φ = id on sampled members of Lat(I_K ⊗ Alg M); φ injective and ∧-preserving on
// sampled pairs; for ABSLs additionally φ∘θ = id on random atom maps.
CheckReport check_theorem_a(const NamedLattice& m, const CheckConfig& cfg);

// θ : m(E, L) → L ⊗ M is a bijection with inverse φ, preserving ∧ and ∨.
CheckReport check_isomorphism(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg);

// Distinct atom maps have distinct θ-images (values from L exhaustively, plus random maps).
CheckReport check_uniqueness(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg);

// θ(f)^⊥ = θ(f^⊥), and the complement lattice has atoms D_j = ∧_{i≠j} E_i^⊥.
CheckReport check_perp_identity(const NamedLattice& m, const CheckConfig& cfg);

// Lat Alg(L ⊗ M) = (Lat Alg L) ⊗ M, both inclusions on samples.
CheckReport check_latalg_tensor(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg);

// Lat(Alg L ⊗ Alg M) = L ⊗ M for reflexive L; explicit two-atom form when M has two atoms.
CheckReport check_ltpf(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg);

// Alg(L ⊗ M) = span of Kronecker products of Alg L and Alg M.
CheckReport check_atpf_dimension(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg);

// L ⊗ M is an ABSL with atoms D_i ⊗ E_j and explicit complements.
CheckReport check_absl_tensor(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg);

// Membership of sampled Lat Alg(L ⊗ M) elements transfers to L through φ; finite-K
// surrogate of property (p) via an enlarged multiplicity space.
CheckReport check_reflexivity_transfer(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg);

// Rank-one density of M, optionally against an expected value; density ⇒ distributive.
CheckReport check_rank_one_density(const NamedLattice& m, std::optional<bool> expect_dense);

// Orbit span of ξ under I_K ⊗ Alg M equals θ(f) for the cyclic-vector formula f.
CheckReport check_cyclic_decomposition(const NamedLattice& m, const CheckConfig& cfg);

// Deliberately false probe: φ(Q1 ∨ Q2) = φ(Q1) ∨ φ(Q2) for Q_i = L_i ⊗ E_i with
// L1 ∧ L2 ≠ 0. Must FAIL on any ABSL with two atoms and rank-one density.
CheckReport check_phi_join_probe(const NamedLattice& m, const CheckConfig& cfg, std::optional<Subspace> l1 = {},
                                 std::optional<Subspace> l2 = {});

/// Re-evaluate a counterexample payload in isolation.
CheckReport replay_counterexample(const io::Json& payload);

/// Names accepted by `check <name>` and in scenario files.
const std::vector<std::string>& check_names();

/// The set of lattice arguments a check takes: "M", or "L" and "M".
bool check_takes_left_lattice(const std::string& name);

} // namespace slt

#endif
