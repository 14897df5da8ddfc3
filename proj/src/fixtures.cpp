#include "slt/fixtures.hpp"

#include "slt/errors.hpp"
#include "slt/random.hpp"

#include <regex>

namespace slt::fixtures {

namespace {

Subspace line(std::initializer_list<long> coords) {
    Vector v;
    for (long c : coords) v.emplace_back(c);
    const std::vector<Vector> vs{v};
    return Subspace::span(v.size(), vs);
}

} // namespace

ProjectionLattice trivial(std::size_t n) {
    return ProjectionLattice::from_elements(n, {});
}

ProjectionLattice nest2() {
    return ProjectionLattice::from_elements(2, {line({1, 0})});
}

ProjectionLattice two_atom2() {
    return ProjectionLattice::from_elements(2, {line({1, 0}), line({1, 1})});
}

ProjectionLattice axes(std::size_t n) {
    std::vector<Subspace> gens;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t a[] = {i};
        gens.push_back(Subspace::coordinate(n, a));
    }
    return lattice_closure(n, gens);
}

ProjectionLattice diamond2() {
    const std::vector<Subspace> gens{line({1, 0}), line({0, 1}), line({1, 1})};
    return lattice_closure(2, gens);
}

ProjectionLattice random_two_atom(std::size_t dim, std::size_t atom_dim, std::uint64_t seed) {
    if (2 * atom_dim != dim) throw PreconditionError("random two-atom ABSL needs dim = 2 * atom_dim");
    Rng rng(split_seed(seed, 0x7a));
    for (;;) {
        Subspace p = rng.subspace_of_rank(dim, atom_dim, Field::Rational);
        Subspace q = rng.subspace_of_rank(dim, atom_dim, Field::Rational);
        if (meet(p, q).is_zero() && join(p, q).is_full() && !(p == q))
            return ProjectionLattice::from_elements(dim, {std::move(p), std::move(q)});
    }
}

ProjectionLattice by_name(const std::string& name) {
    static const std::regex triv(R"(TRIV\(?(\d+)\)?)");
    static const std::regex ax(R"(AXES\(?(\d+)\)?)");
    static const std::regex rnd(R"(TWOATOM4R\((\d+)\))");
    std::smatch m;
    if (std::regex_match(name, m, triv)) {
        const auto n = std::stoul(m[1]);
        if (n == 0 || n > 16) throw ParseError(name, "TRIV dimension must be in 1..16");
        return trivial(n);
    }
    if (std::regex_match(name, m, ax)) {
        const auto n = std::stoul(m[1]);
        if (n == 0 || n > 6) throw ParseError(name, "AXES dimension must be in 1..6");
        return axes(n);
    }
    if (std::regex_match(name, m, rnd)) return random_two_atom(4, 2, std::stoull(m[1]));
    if (name == "NEST2") return nest2();
    if (name == "TWOATOM2") return two_atom2();
    if (name == "DIAMOND2") return diamond2();
    throw ParseError(name, "unknown fixture lattice");
}

bool is_fixture_name(const std::string& name) {
    try {
        by_name(name);
        return true;
    } catch (const ParseError&) {
        return false;
    }
}

std::vector<std::string> names() {
    return {"TRIV(n)", "NEST2", "TWOATOM2", "AXES(n)", "DIAMOND2", "TWOATOM4R(seed)"};
}

} // namespace slt::fixtures
