// Seeded property sweeps. Each case draws its inputs from a fixed seed range so
// failures are reproducible by seed.

#include <doctest.h>

#include "helpers.hpp"

#include "slt/fixtures.hpp"
#include "slt/opalg.hpp"
#include "slt/random.hpp"
#include "slt/tensor_maps.hpp"

using namespace slt;

namespace {

constexpr std::uint64_t seeds = 40;

Field field_for(std::uint64_t seed) {
    return seed % 2 ? Field::GaussianRational : Field::Rational;
}

} // namespace

TEST_CASE("subspace lattice laws") {
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        CAPTURE(seed);
        Rng rng(split_seed(seed, 1));
        const Field f = field_for(seed);
        const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
        const Subspace a = rng.subspace(n, f);
        const Subspace b = rng.subspace(n, f);
        const Subspace c = rng.subspace(n, f);
        CHECK(meet(a, b) == meet(b, a));
        CHECK(join(a, b) == join(b, a));
        CHECK(meet(a, join(a, b)) == a);
        CHECK(join(a, meet(a, b)) == a);
        CHECK(meet(meet(a, b), c) == meet(a, meet(b, c)));
        CHECK(join(join(a, b), c) == join(a, join(b, c)));
        CHECK(perp(perp(a)) == a);
        CHECK(perp(join(a, b)) == meet(perp(a), perp(b)));
        CHECK(perp(meet(a, b)) == join(perp(a), perp(b)));
        CHECK(meet(a, perp(a)).is_zero());
        CHECK(join(a, perp(a)).is_full());
        // Modular law: a ≤ c implies a ∨ (b ∧ c) = (a ∨ b) ∧ c.
        const Subspace ac = meet(a, c);
        CHECK(join(ac, meet(b, c)) == meet(join(ac, b), c));
        CHECK(a.projection() * a.projection() == a.projection());
        CHECK(a.projection().adjoint() == a.projection());
    }
}

TEST_CASE("tensor of subspaces") {
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        CAPTURE(seed);
        Rng rng(split_seed(seed, 2));
        const Field f = field_for(seed);
        const Subspace a = rng.subspace(2, f);
        const Subspace b = rng.subspace(3, f);
        const Subspace c = rng.subspace(3, f);
        CHECK(tensor(a, b).rank() == a.rank() * b.rank());
        CHECK(tensor(a, meet(b, c)) == meet(tensor(a, b), tensor(a, c)));
        CHECK(tensor(a, join(b, c)) == join(tensor(a, b), tensor(a, c)));
        CHECK(kronecker(a.projection(), b.projection()) == tensor(a, b).projection());
    }
}

TEST_CASE("closures are lattices and serial equals parallel") {
    for (std::uint64_t seed = 0; seed < seeds / 2; ++seed) {
        CAPTURE(seed);
        Rng rng(split_seed(seed, 3));
        const Field f = field_for(seed);
        std::vector<Subspace> gens{rng.subspace(3, f), rng.subspace(3, f)};
        const ProjectionLattice lat = lattice_closure(3, gens);
        CHECK(lat == lattice_closure(3, gens, 512, Exec::serial));
        CHECK(lat.flags().is_distributive); // two generators always give a distributive lattice
        for (const auto& x : lat.elements())
            for (const auto& y : lat.elements()) {
                CHECK(lat.contains(meet(x, y)));
                CHECK(lat.contains(join(x, y)));
            }
        CHECK(alg_of(lat) == alg_of_reference(lat));
    }
}

TEST_CASE("theta/phi round trips on random two-atom ABSLs") {
    for (std::uint64_t seed = 0; seed < seeds / 2; ++seed) {
        CAPTURE(seed);
        const ProjectionLattice m = fixtures::random_two_atom(4, 2, seed);
        REQUIRE(m.flags().is_absl);
        REQUIRE(has_rank_one_density(m));
        Rng rng(split_seed(seed, 4));
        const Field f = field_for(seed);
        for (int t = 0; t < 4; ++t) {
            const AtomMap fm = AtomMap::make(2, 4, m.atoms(), {rng.subspace(2, f), rng.subspace(2, f)});
            const Subspace q = theta(fm);
            CHECK(phi_full(q, m.atoms(), 2) == fm);
            CHECK(perp(q) == theta(atom_map_perp(fm, complement_lattice(m).atoms)));
        }
    }
}

TEST_CASE("phi is meet-preserving on sampled invariant pairs") {
    const ProjectionLattice m = fixtures::axes(3);
    const OperatorSpace amp = ampliation(2, alg_of(m));
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        CAPTURE(seed);
        const auto qs = sample_invariant_projections(amp, seed, 8, field_for(seed)).subspaces;
        for (std::size_t i = 0; i < qs.size(); ++i)
            for (std::size_t j = i + 1; j < qs.size(); ++j)
                CHECK(phi_full(meet(qs[i], qs[j]), m.atoms(), 2) ==
                      pointwise_meet(phi_full(qs[i], m.atoms(), 2), phi_full(qs[j], m.atoms(), 2)));
    }
}

TEST_CASE("tensor lattice of distributive factors is distributive") {
    for (const char* l : {"NEST2", "TWOATOM2", "AXES(3)"})
        for (const char* m : {"NEST2", "TWOATOM2"}) {
            CAPTURE(l);
            CAPTURE(m);
            const TensorLattice t = tensor_lattice(fixtures::by_name(l), fixtures::by_name(m));
            CHECK(t.product.flags().is_distributive);
            CHECK(t.product.flags().is_distributive == is_distributive_reference(t.product));
        }
}
