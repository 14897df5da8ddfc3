#include <doctest.h>

#include "helpers.hpp"

#include "slt/errors.hpp"
#include "slt/fixtures.hpp"
#include "slt/opalg.hpp"
#include "slt/random.hpp"
#include "slt/tensor_maps.hpp"

using namespace slt;
using testing::span;

namespace {

AtomMap random_map(Rng& rng, const ProjectionLattice& m, std::size_t k, Field f) {
    std::vector<Subspace> values;
    for (std::size_t j = 0; j < m.atoms().size(); ++j) values.push_back(rng.subspace(k, f));
    return AtomMap::make(k, m.ambient_dim(), m.atoms(), values);
}

} // namespace

TEST_CASE("tensor lattice sizes against the closure oracle") {
    struct Case {
        const char* l;
        const char* m;
        std::size_t size;
    };
    const Case cases[] = {{"TRIV(2)", "TWOATOM2", 4}, {"NEST2", "TWOATOM2", 9}, {"TWOATOM2", "TWOATOM2", 16},
                          {"NEST2", "NEST2", 6},      {"TRIV(2)", "TRIV(2)", 2}};
    for (const auto& c : cases) {
        CAPTURE(c.l);
        CAPTURE(c.m);
        const ProjectionLattice l = fixtures::by_name(c.l);
        const ProjectionLattice m = fixtures::by_name(c.m);
        const TensorLattice t = tensor_lattice(l, m);
        CHECK(t.product.size() == c.size);
        const auto oc = oracle::tensor_closure(testing::to_oracle(l), testing::to_oracle(m));
        CHECK(oc.size() == t.product.size());
        for (const auto& s : t.product.elements()) CHECK(oc.contains(testing::to_oracle(s)));
        CHECK(t.product == tensor_lattice(l, m, 512, Exec::serial).product);
        CHECK(t.elementary.size() == l.size() * m.size());
        for (const auto& e : t.elementary)
            CHECK(t.product[e.product_index] == tensor(l[e.left_index], m[e.right_index]));
    }
}

TEST_CASE("a nest tensored with a nest is not complemented but stays distributive") {
    const TensorLattice t = tensor_lattice(fixtures::nest2(), fixtures::nest2());
    CHECK(t.product.flags().is_distributive);
    CHECK_FALSE(t.product.flags().is_absl);
}

TEST_CASE("theta and phi are mutually inverse over a dense ABSL") {
    Rng rng(31);
    for (const char* name : {"TWOATOM2", "AXES(3)", "TWOATOM4R(6)", "TRIV(2)"}) {
        CAPTURE(name);
        const ProjectionLattice m = fixtures::by_name(name);
        for (std::size_t k : {1u, 2u, 3u}) {
            for (int t = 0; t < 10; ++t) {
                const Field f = t % 3 == 2 ? Field::GaussianRational : Field::Rational;
                const AtomMap fm = random_map(rng, m, k, f);
                const Subspace q = theta(fm);
                CHECK(phi_full(q, m.atoms(), k) == fm);
            }
            const OperatorSpace amp = ampliation(k, alg_of(m));
            for (const auto& q : sample_invariant_projections(amp, 9 + k, 12, Field::Rational).subspaces)
                CHECK(theta(phi_full(q, m.atoms(), k)) == q);
        }
    }
}

TEST_CASE("phi full mode: values are maximal with R (x) E <= Q") {
    Rng rng(32);
    const ProjectionLattice m = fixtures::two_atom2();
    for (int t = 0; t < 30; ++t) {
        const Subspace q = rng.subspace(6, Field::Rational);
        const AtomMap f = phi_full(q, m.atoms(), 3);
        for (std::size_t j = 0; j < f.size(); ++j) {
            CHECK(leq(tensor(f.values[j], m.atoms()[j]), q));
            const Subspace r = rng.subspace(3, Field::Rational);
            if (leq(tensor(r, m.atoms()[j]), q)) CHECK(leq(r, f.values[j]));
            // A strictly larger candidate never fits.
            const Subspace bigger = join(f.values[j], rng.subspace(3, Field::Rational));
            if (!(bigger == f.values[j])) CHECK_FALSE(leq(tensor(bigger, m.atoms()[j]), q));
        }
    }
}

TEST_CASE("phi lattice mode agrees with full mode on L (x) M") {
    const ProjectionLattice l = fixtures::nest2();
    const ProjectionLattice m = fixtures::two_atom2();
    const TensorLattice t = tensor_lattice(l, m);
    for (const auto& q : t.product.elements()) {
        const AtomMap full = phi_full(q, m.atoms(), 2);
        CHECK(phi_lattice(q, m.atoms(), l) == full);
        for (const auto& v : full.values) CHECK(l.contains(v));
    }
}

TEST_CASE("theta preserves pointwise meet and join") {
    Rng rng(33);
    const ProjectionLattice m = fixtures::axes(3);
    for (int t = 0; t < 20; ++t) {
        const AtomMap f = random_map(rng, m, 2, Field::Rational);
        const AtomMap g = random_map(rng, m, 2, Field::Rational);
        CHECK(theta(pointwise_join(f, g)) == join(theta(f), theta(g)));
        CHECK(theta(pointwise_meet(f, g)) == meet(theta(f), theta(g)));
        CHECK(pointwise_leq(f, g) == leq(theta(f), theta(g)));
    }
}

TEST_CASE("perp identity for atom maps") {
    Rng rng(34);
    for (const char* name : {"TWOATOM2", "AXES(3)", "TWOATOM4R(2)"}) {
        CAPTURE(name);
        const ProjectionLattice m = fixtures::by_name(name);
        const ComplementLattice c = complement_lattice(m);
        for (int t = 0; t < 15; ++t) {
            const AtomMap f = random_map(rng, m, 3, t % 2 ? Field::GaussianRational : Field::Rational);
            CHECK(perp(theta(f)) == theta(atom_map_perp(f, c.atoms)));
        }
    }
}

TEST_CASE("cyclic decomposition matches the orbit span") {
    Rng rng(35);
    for (const char* name : {"TWOATOM2", "NEST2", "AXES(3)", "TRIV(2)"}) {
        CAPTURE(name);
        const ProjectionLattice m = fixtures::by_name(name);
        const OperatorSpace amp = ampliation(2, alg_of(m));
        for (int t = 0; t < 10; ++t) {
            const Vector xi = rng.vector(2 * m.ambient_dim(), Field::Rational);
            const AtomMap f = cyclic_decomposition(xi, m, 2);
            CHECK(theta(f) == cyclic_invariant_subspace(amp, xi));
            CHECK(f.atoms == decomposition_index(m));
        }
    }
    CHECK_THROWS_AS(cyclic_decomposition(testing::vec({1, 0, 0, 1}), fixtures::diamond2(), 2), PreconditionError);
}

TEST_CASE("cyclic decomposition of an elementary tensor") {
    // xi = e1 (x) e1 over TWOATOM2: only the atom span(e1) sees a nonzero value, namely span(e1).
    const ProjectionLattice m = fixtures::two_atom2();
    const AtomMap f = cyclic_decomposition(testing::vec({1, 0, 0, 0}), m, 2);
    REQUIRE(f.size() == 2);
    const std::size_t e1 = m.atoms()[0] == span(2, {{1, 0}}) ? 0 : 1;
    CHECK(f.values[e1] == span(2, {{1, 0}}));
    CHECK(f.values[1 - e1].is_zero());
}

TEST_CASE("atom map enumeration order and count") {
    const ProjectionLattice l = fixtures::nest2();
    const ProjectionLattice m = fixtures::two_atom2();
    std::vector<AtomMap> seen;
    const std::size_t n = for_each_atom_map(m.atoms(), l, [&](const AtomMap& f) { seen.push_back(f); });
    CHECK(n == 9);
    REQUIRE(seen.size() == 9);
    CHECK(seen[0].values[0] == l[0]);
    CHECK(seen[0].values[1] == l[0]);
    CHECK(seen[1].values[0] == l[0]);
    CHECK(seen[1].values[1] == l[1]);
    CHECK(seen[3].values[0] == l[1]);
}

TEST_CASE("factor flip") {
    const Subspace a = span(2, {{1, 2}});
    const Subspace b = span(3, {{0, 1, 1}, {1, 0, 0}});
    CHECK(flip_factors(tensor(a, b), 2, 3) == tensor(b, a));
    Rng rng(36);
    const Subspace s = rng.subspace(6, Field::Rational);
    CHECK(flip_factors(flip_factors(s, 2, 3), 3, 2) == s);
}

TEST_CASE("atom map construction validates shapes") {
    const ProjectionLattice m = fixtures::two_atom2();
    CHECK_THROWS_AS(AtomMap::make(2, 2, m.atoms(), {Subspace::full(2)}), DimensionMismatch);
    CHECK_THROWS_AS(AtomMap::make(2, 2, m.atoms(), {Subspace::full(3), Subspace::full(2)}), DimensionMismatch);
    const AtomMap c = AtomMap::constant(2, m.atoms(), Subspace::full(2));
    CHECK(theta(c).is_full());
    CHECK(theta(AtomMap::constant(2, m.atoms(), Subspace::zero(2))).is_zero());
}

TEST_CASE("theta over non-atoms is defined") {
    const ProjectionLattice m = fixtures::nest2();
    std::vector<Subspace> index;
    for (const auto& s : m.elements())
        if (!s.is_zero()) index.push_back(s);
    const AtomMap f = AtomMap::make(2, 2, index, {span(2, {{1, 0}}), Subspace::zero(2)});
    CHECK(theta(f) == tensor(span(2, {{1, 0}}), index[0]));
}
