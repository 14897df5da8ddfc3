#ifndef SLT_FIXTURES_HPP
#define SLT_FIXTURES_HPP

#include "slt/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace slt::fixtures {

/// {0, I} on F^n.
ProjectionLattice trivial(std::size_t n);
/// {0, span(e1), I} on F^2.
ProjectionLattice nest2();
/// {0, P = span(e1), Q = span(e1 + e2), I} on F^2: non-orthogonal two-atom ABSL.
ProjectionLattice two_atom2();
/// Boolean lattice generated by the coordinate axes of F^n (2^n elements).
ProjectionLattice axes(std::size_t n);
/// Lattice generated by span(e1), span(e2), span(e1 + e2) in F^2: the non-distributive diamond.
ProjectionLattice diamond2();
/// {0, P, Q, I} with P, Q random subspaces of F^dim of rank atom_dim, P ∧ Q = 0, P ∨ Q = I.
ProjectionLattice random_two_atom(std::size_t dim, std::size_t atom_dim, std::uint64_t seed);

/*
 * Named fixtures: TRIV(n) (also TRIVn), NEST2, TWOATOM2, AXES(n) (also AXESn),
 * DIAMOND2, and TWOATOM4R(seed) for a generic two-atom ABSL on F^4 with
 * 2-dimensional atoms. Throws ParseError on an unknown name.
 */
ProjectionLattice by_name(const std::string& name);
bool is_fixture_name(const std::string& name);
std::vector<std::string> names();

} // namespace slt::fixtures

#endif
