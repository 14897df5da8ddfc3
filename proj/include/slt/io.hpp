#ifndef SLT_IO_HPP
#define SLT_IO_HPP

#include "slt/opalg.hpp"
#include "slt/tensor_maps.hpp"

#include <json.hpp>

#include <string>

namespace slt::io {

using Json = nlohmann::ordered_json;

// Scalars: "p/q" (q omitted when 1) or {"re": "p/q", "im": "r/s"}; bare integers are accepted on input.
Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& where = "");

// Matrices: row-major arrays of scalar literals.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const std::string& where = "");

Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j, std::size_t dim, const std::string& where = "");

// Subspaces: {"basis": [[...vector...], ...]}, one inner array per basis vector.
Json to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j, std::size_t dim, const std::string& where = "");

// Lattices: {"dim": n, "elements": [...]} or {"dim": n, "generators": [...]} (closed on load).
Json to_json(const ProjectionLattice& lat);
ProjectionLattice lattice_from_json(const Json& j, std::size_t cap = default_lattice_cap,
                                    const std::string& where = "");

// Operator spaces: {"dim": n, "basis": [matrix, ...]}.
Json to_json(const OperatorSpace& a);
OperatorSpace operator_space_from_json(const Json& j, const std::string& where = "");

// Atom maps: {"atoms": [subspace...], "values": [subspace...]} plus "k_dim"/"h_dim".
Json to_json(const AtomMap& f);
AtomMap atom_map_from_json(const Json& j, const std::string& where = "");

// Tensor lattices: factors under "left"/"right", closure under "product".
Json to_json(const TensorLattice& t);

Json flags_to_json(const LatticeFlags& f);

} // namespace slt::io

#endif
