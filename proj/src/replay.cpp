#include "slt/checks.hpp"

#include "slt/errors.hpp"

#include <algorithm>

namespace slt {

using io::Json;

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + "/" + key, "missing field");
    return j.at(key);
}

std::size_t count_field(const Json& j, const char* key, const std::string& where) {
    const Json& v = field(j, key, where);
    if (!v.is_number_unsigned()) throw ParseError(where + "/" + key, "expected a non-negative integer");
    return v.get<std::size_t>();
}

std::vector<Subspace> subspace_list(const Json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array()) throw ParseError(where, "expected an array of subspaces");
    std::vector<Subspace> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(io::subspace_from_json(j[i], dim, where + "/" + std::to_string(i)));
    return out;
}

/// Each kind returns true when the asserted property holds on the payload.
bool holds(const std::string& kind, const Json& d) {
    const std::string w = "/data";
    if (kind == "theta_phi" || kind == "phi_injective" || kind == "phi_meet" || kind == "phi_join") {
        const std::size_t k = count_field(d, "k_dim", w);
        const std::size_t h = count_field(d, "h_dim", w);
        const auto index = subspace_list(field(d, "index", w), h, w + "/index");
        const std::size_t n = k * h;
        if (kind == "theta_phi") {
            const Subspace q = io::subspace_from_json(field(d, "q", w), n, w + "/q");
            return theta(phi_full(q, index, k)) == q;
        }
        const Subspace q1 = io::subspace_from_json(field(d, "q1", w), n, w + "/q1");
        const Subspace q2 = io::subspace_from_json(field(d, "q2", w), n, w + "/q2");
        const AtomMap f1 = phi_full(q1, index, k);
        const AtomMap f2 = phi_full(q2, index, k);
        if (kind == "phi_injective") return q1 == q2 || !(f1 == f2);
        if (kind == "phi_meet") return phi_full(meet(q1, q2), index, k) == pointwise_meet(f1, f2);
        return phi_full(join(q1, q2), index, k) == pointwise_join(f1, f2);
    }
    if (kind == "phi_theta") {
        const AtomMap f = io::atom_map_from_json(field(d, "map", w), w + "/map");
        return phi_full(theta(f), f.atoms, f.k_dim) == f;
    }
    if (kind == "theta_join" || kind == "theta_meet" || kind == "theta_injective") {
        const AtomMap f = io::atom_map_from_json(field(d, "f", w), w + "/f");
        const AtomMap g = io::atom_map_from_json(field(d, "g", w), w + "/g");
        if (kind == "theta_join") return theta(pointwise_join(f, g)) == join(theta(f), theta(g));
        if (kind == "theta_meet") return theta(pointwise_meet(f, g)) == meet(theta(f), theta(g));
        return f == g || !(theta(f) == theta(g));
    }
    if (kind == "perp") {
        const AtomMap f = io::atom_map_from_json(field(d, "map", w), w + "/map");
        const auto comp = subspace_list(field(d, "complement_atoms", w), f.h_dim, w + "/complement_atoms");
        return perp(theta(f)) == theta(atom_map_perp(f, comp));
    }
    if (kind == "invariant") {
        const OperatorSpace a = io::operator_space_from_json(field(d, "algebra", w), w + "/algebra");
        const Subspace q = io::subspace_from_json(field(d, "q", w), a.ambient_dim(), w + "/q");
        return is_invariant(q, a);
    }
    if (kind == "member") {
        const ProjectionLattice lat = io::lattice_from_json(field(d, "lattice", w), default_lattice_cap, w + "/lattice");
        return lat.contains(io::subspace_from_json(field(d, "q", w), lat.ambient_dim(), w + "/q"));
    }
    if (kind == "orbit") {
        const ProjectionLattice m = io::lattice_from_json(field(d, "m", w), default_lattice_cap, w + "/m");
        const std::size_t k = count_field(d, "k_dim", w);
        const Vector xi = io::vector_from_json(field(d, "xi", w), k * m.ambient_dim(), w + "/xi");
        try {
            cyclic_decomposition(xi, m, k);
        } catch (const PreconditionError&) {
            throw;
        } catch (const std::logic_error&) {
            return false;
        }
        return true;
    }
    if (kind == "opspace_equal") {
        return operator_space_equal(io::operator_space_from_json(field(d, "a", w), w + "/a"),
                                    io::operator_space_from_json(field(d, "b", w), w + "/b"));
    }
    if (kind == "density" || kind == "density_distributive") {
        const ProjectionLattice lat = io::lattice_from_json(field(d, "lattice", w), default_lattice_cap, w + "/lattice");
        const bool dense = has_rank_one_density(lat);
        if (kind == "density") return dense == field(d, "expect_dense", w).get<bool>();
        return !dense || lat.flags().is_distributive;
    }
    if (kind == "complement_atoms") {
        const ProjectionLattice lat = io::lattice_from_json(field(d, "lattice", w), default_lattice_cap, w + "/lattice");
        try {
            complement_lattice(lat);
        } catch (const std::logic_error&) {
            return false;
        }
        return true;
    }
    if (kind == "absl" || kind == "absl_atoms" || kind == "complement_witness") {
        const ProjectionLattice lat = io::lattice_from_json(field(d, "lattice", w), default_lattice_cap, w + "/lattice");
        if (kind == "absl") return lat.flags().is_absl;
        if (kind == "absl_atoms") {
            auto expected = subspace_list(field(d, "expected_atoms", w), lat.ambient_dim(), w + "/expected_atoms");
            std::sort(expected.begin(), expected.end());
            return expected == lat.atoms();
        }
        const Subspace x = io::subspace_from_json(field(d, "x", w), lat.ambient_dim(), w + "/x");
        if (d.contains("witness")) {
            const Subspace c = io::subspace_from_json(d.at("witness"), lat.ambient_dim(), w + "/witness");
            return meet(x, c).is_zero() && join(x, c).is_full();
        }
        const auto idx = lat.index_of(x);
        return idx && find_complement(lat, *idx).has_value();
    }
    if (kind == "membership_transfer") {
        const ProjectionLattice l = io::lattice_from_json(field(d, "l", w), default_lattice_cap, w + "/l");
        const ProjectionLattice m = io::lattice_from_json(field(d, "m", w), default_lattice_cap, w + "/m");
        const TensorLattice t = tensor_lattice(l, m);
        const Subspace q = io::subspace_from_json(field(d, "q", w), t.product.ambient_dim(), w + "/q");
        const AtomMap f = phi_full(q, m.atoms(), l.ambient_dim());
        const bool values_in_l =
            std::all_of(f.values.begin(), f.values.end(), [&](const Subspace& s) { return l.contains(s); });
        return t.product.contains(q) == values_in_l;
    }
    throw ParseError("/kind", "unknown counterexample kind '" + kind + "'");
}

} // namespace

CheckReport replay_counterexample(const Json& payload) {
    const std::string check = field(payload, "check", "").get<std::string>();
    const std::string kind = field(payload, "kind", "").get<std::string>();
    const Json& data = field(payload, "data", "");

    if (kind == "rerun") {
        const std::string w = "/data";
        NamedLattice l{"L", io::lattice_from_json(field(data, "l", w), default_lattice_cap, w + "/l")};
        NamedLattice m{"M", io::lattice_from_json(field(data, "m", w), default_lattice_cap, w + "/m")};
        CheckConfig cfg;
        cfg.seed = field(data, "seed", w).get<std::uint64_t>();
        cfg.samples = count_field(data, "samples", w);
        cfg.lattice_cap = count_field(data, "max_lattice", w);
        cfg.max_product_dim = l.lattice.ambient_dim() * m.lattice.ambient_dim();
        if (check != "isomorphism") throw ParseError("/check", "rerun payloads exist only for isomorphism");
        return check_isomorphism(l, m, cfg);
    }

    CheckReport r;
    r.id = check;
    r.property = "replay of " + kind;
    r.subject = "counterexample";
    r.samples = 1;
    if (!holds(kind, data)) {
        r.status = Status::fail;
        r.counterexample = payload;
        r.notes.push_back("counterexample reproduces");
    }
    return r;
}

} // namespace slt
