#include "slt/io.hpp"

#include "slt/errors.hpp"

namespace slt::io {

namespace {

std::string at(const std::string& where, const std::string& key) {
    return where + "/" + key;
}

std::string at(const std::string& where, std::size_t i) {
    return where + "/" + std::to_string(i);
}

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw ParseError(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where, std::string("missing key \"") + key + "\"");
    return *it;
}

std::size_t count_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw ParseError(at(where, key), "expected a non-negative integer");
    return v.get<std::size_t>();
}

mpq_class rational_from_json(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return mpq_class(j.get<long>());
    if (!j.is_string()) throw ParseError(where, "expected a rational literal \"p/q\"");
    try {
        return Scalar::parse_rational(j.get<std::string>()).re();
    } catch (const ParseError& e) {
        throw ParseError(where, e.what());
    }
}

std::vector<Subspace> subspace_list(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of subspaces");
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(subspace_from_json(j[i], dim, at(where, i)));
    return out;
}

std::size_t infer_dim(const Json& list, const std::string& where) {
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Json& b = field(list[i], "basis", at(where, i));
        if (b.is_array() && !b.empty() && b[0].is_array()) return b[0].size();
    }
    throw ParseError(where, "cannot infer the ambient dimension (give \"k_dim\"/\"h_dim\")");
}

} // namespace

Json to_json(const Scalar& s) {
    if (s.is_real()) return rational_to_string(s.re());
    Json j = Json::object();
    j["re"] = rational_to_string(s.re());
    j["im"] = rational_to_string(s.im());
    return j;
}

Scalar scalar_from_json(const Json& j, const std::string& where) {
    if (j.is_object()) {
        return Scalar(rational_from_json(field(j, "re", where), at(where, "re")),
                      rational_from_json(field(j, "im", where), at(where, "im")));
    }
    return Scalar(rational_from_json(j, where));
}

Json vector_to_json(const Vector& v) {
    Json j = Json::array();
    for (const auto& s : v) j.push_back(to_json(s));
    return j;
}

Vector vector_from_json(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of scalars");
    if (j.size() != dim)
        throw ParseError(where, "vector has " + std::to_string(j.size()) + " entries, expected " + std::to_string(dim));
    Vector v;
    v.reserve(dim);
    for (std::size_t i = 0; i < j.size(); ++i) v.push_back(scalar_from_json(j[i], at(where, i)));
    return v;
}

Json to_json(const Matrix& m) {
    Json j = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        j.push_back(std::move(row));
    }
    return j;
}

Matrix matrix_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected a row-major array of rows");
    const std::size_t rows = j.size();
    const std::size_t cols = rows == 0 ? 0 : (j[0].is_array() ? j[0].size() : 0);
    std::vector<Vector> data;
    for (std::size_t i = 0; i < rows; ++i) data.push_back(vector_from_json(j[i], cols, at(where, i)));
    return Matrix::from_rows(cols, data);
}

Json to_json(const Subspace& s) {
    Json basis = Json::array();
    for (const auto& v : s.basis_vectors()) basis.push_back(vector_to_json(v));
    Json j = Json::object();
    j["basis"] = std::move(basis);
    return j;
}

Subspace subspace_from_json(const Json& j, std::size_t dim, const std::string& where) {
    const Json& basis = field(j, "basis", where);
    if (!basis.is_array()) throw ParseError(at(where, "basis"), "expected an array of vectors");
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        vs.push_back(vector_from_json(basis[i], dim, at(at(where, "basis"), i)));
    return Subspace::span(dim, vs);
}

Json flags_to_json(const LatticeFlags& f) {
    Json j = Json::object();
    j["is_closed"] = f.is_closed;
    j["is_csl"] = f.is_csl;
    j["is_distributive"] = f.is_distributive;
    j["is_complemented"] = f.is_complemented;
    j["is_absl"] = f.is_absl;
    return j;
}

Json to_json(const ProjectionLattice& lat) {
    Json j = Json::object();
    j["dim"] = lat.ambient_dim();
    Json elements = Json::array();
    for (const auto& s : lat.elements()) elements.push_back(to_json(s));
    j["elements"] = std::move(elements);
    j["flags"] = flags_to_json(lat.flags());
    Json atoms = Json::array();
    for (const auto& a : lat.atoms()) atoms.push_back(to_json(a));
    j["atoms"] = std::move(atoms);
    return j;
}

ProjectionLattice lattice_from_json(const Json& j, std::size_t cap, const std::string& where) {
    const std::size_t dim = count_field(j, "dim", where);
    const bool has_elements = j.contains("elements");
    const bool has_generators = j.contains("generators");
    if (has_elements == has_generators)
        throw ParseError(where, "lattice needs exactly one of \"elements\" or \"generators\"");
    if (has_generators) {
        const auto gens = subspace_list(j["generators"], dim, at(where, "generators"));
        return lattice_closure(dim, gens, cap);
    }
    return ProjectionLattice::from_elements(dim, subspace_list(j["elements"], dim, at(where, "elements")));
}

Json to_json(const OperatorSpace& a) {
    Json j = Json::object();
    j["dim"] = a.ambient_dim();
    Json basis = Json::array();
    for (const auto& t : a.basis()) basis.push_back(to_json(t));
    j["basis"] = std::move(basis);
    j["dimension"] = a.dimension();
    j["is_algebra"] = a.is_algebra();
    return j;
}

OperatorSpace operator_space_from_json(const Json& j, const std::string& where) {
    const std::size_t n = count_field(j, "dim", where);
    const Json& basis = field(j, "basis", where);
    if (!basis.is_array()) throw ParseError(at(where, "basis"), "expected an array of matrices");
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        Matrix m = matrix_from_json(basis[i], at(at(where, "basis"), i));
        if (m.rows() != n || m.cols() != n)
            throw ParseError(at(at(where, "basis"), i), "matrix is not " + std::to_string(n) + "x" + std::to_string(n));
        mats.push_back(std::move(m));
    }
    return OperatorSpace::span(n, mats, false, true);
}

Json to_json(const AtomMap& f) {
    Json j = Json::object();
    j["k_dim"] = f.k_dim;
    j["h_dim"] = f.h_dim;
    Json atoms = Json::array();
    Json values = Json::array();
    for (const auto& a : f.atoms) atoms.push_back(to_json(a));
    for (const auto& v : f.values) values.push_back(to_json(v));
    j["atoms"] = std::move(atoms);
    j["values"] = std::move(values);
    return j;
}

AtomMap atom_map_from_json(const Json& j, const std::string& where) {
    const Json& atoms = field(j, "atoms", where);
    const Json& values = field(j, "values", where);
    if (!atoms.is_array() || !values.is_array()) throw ParseError(where, "\"atoms\" and \"values\" must be arrays");
    const std::size_t h = j.contains("h_dim") ? count_field(j, "h_dim", where) : infer_dim(atoms, at(where, "atoms"));
    const std::size_t k = j.contains("k_dim") ? count_field(j, "k_dim", where) : infer_dim(values, at(where, "values"));
    try {
        return AtomMap::make(k, h, subspace_list(atoms, h, at(where, "atoms")),
                             subspace_list(values, k, at(where, "values")));
    } catch (const DimensionMismatch& e) {
        throw ParseError(where, e.what());
    }
}

Json to_json(const TensorLattice& t) {
    Json j = Json::object();
    j["left"] = to_json(t.left);
    j["right"] = to_json(t.right);
    j["product"] = to_json(t.product);
    Json el = Json::array();
    for (const auto& e : t.elementary) el.push_back(Json::array({e.product_index, e.left_index, e.right_index}));
    j["elementary"] = std::move(el);
    return j;
}

} // namespace slt::io
