#include <doctest.h>

#include "helpers.hpp"

#include "slt/errors.hpp"
#include "slt/fixtures.hpp"
#include "slt/random.hpp"

using namespace slt;
using testing::span;

TEST_CASE("fixture sizes and flags") {
    struct Row {
        const char* name;
        std::size_t size;
        std::size_t atoms;
        bool csl, distributive, complemented, absl;
    };
    const Row rows[] = {
        {"TRIV(1)", 2, 1, true, true, true, true},   {"TRIV(3)", 2, 1, true, true, true, true},
        {"NEST2", 3, 1, true, true, false, false},   {"TWOATOM2", 4, 2, false, true, true, true},
        {"AXES(3)", 8, 3, true, true, true, true},   {"AXES(4)", 16, 4, true, true, true, true},
        {"DIAMOND2", 5, 3, false, false, true, false}, {"TWOATOM4R(3)", 4, 2, false, true, true, true},
    };
    for (const auto& r : rows) {
        CAPTURE(r.name);
        const ProjectionLattice lat = fixtures::by_name(r.name);
        CHECK(lat.size() == r.size);
        CHECK(lat.atoms().size() == r.atoms);
        CHECK(lat.flags().is_closed);
        CHECK(lat.flags().is_csl == r.csl);
        CHECK(lat.flags().is_distributive == r.distributive);
        CHECK(lat.flags().is_complemented == r.complemented);
        CHECK(lat.flags().is_absl == r.absl);
        CHECK(lat.flags().is_distributive == is_distributive_reference(lat));
    }
}

TEST_CASE("fixture names") {
    CHECK(fixtures::by_name("TRIV2") == fixtures::trivial(2));
    CHECK(fixtures::by_name("AXES3") == fixtures::axes(3));
    CHECK(fixtures::is_fixture_name("TWOATOM4R(9)"));
    CHECK_FALSE(fixtures::is_fixture_name("PENTAGON"));
    CHECK_THROWS_AS(fixtures::by_name("TRIV(0)"), ParseError);
    CHECK_THROWS_AS(fixtures::by_name("AXES(9)"), ParseError);
    CHECK(fixtures::random_two_atom(4, 2, 5) == fixtures::random_two_atom(4, 2, 5));
}

TEST_CASE("elements are ordered and zero/top sit at the ends") {
    const ProjectionLattice lat = fixtures::axes(3);
    CHECK(lat[lat.zero_index()].is_zero());
    CHECK(lat[lat.top_index()].is_full());
    for (std::size_t i = 1; i < lat.size(); ++i) CHECK(lat[i - 1] < lat[i]);
    for (std::size_t a = 0; a < lat.size(); ++a)
        for (std::size_t b = 0; b < lat.size(); ++b) {
            CHECK(lat[lat.meet_index(a, b)] == meet(lat[a], lat[b]));
            CHECK(lat[lat.join_index(a, b)] == join(lat[a], lat[b]));
            CHECK(lat.leq_index(a, b) == leq(lat[a], lat[b]));
        }
}

TEST_CASE("parallel closure, reference closure and the oracle agree") {
    Rng rng(21);
    int checked = 0;
    for (int t = 0; t < 25; ++t) {
        const auto n = static_cast<std::size_t>(rng.uniform(2, 3));
        const auto g = static_cast<std::size_t>(rng.uniform(1, 3));
        std::vector<Subspace> gens;
        for (std::size_t i = 0; i < g; ++i) gens.push_back(rng.subspace(n, Field::Rational));
        const ProjectionLattice par = lattice_closure(n, gens, 512, Exec::parallel);
        const ProjectionLattice ser = lattice_closure(n, gens, 512, Exec::serial);
        const ProjectionLattice ref = lattice_closure_reference(n, gens, 512);
        CHECK(par == ser);
        CHECK(par == ref);
        std::vector<oracle::Space> og;
        for (const auto& s : gens) og.push_back(testing::to_oracle(s));
        const auto oc = oracle::closure(n, og);
        CHECK(par.size() == oc.size());
        for (const auto& s : par.elements()) CHECK(oc.contains(testing::to_oracle(s)));
        CHECK(par.flags().is_distributive == is_distributive_reference(par));
        ++checked;
    }
    CHECK(checked == 25);
}

TEST_CASE("closure cap overflow carries the partial family and a witness") {
    // Four points in general position generate the whole rational projective plane.
    const std::vector<Subspace> gens{span(3, {{1, 0, 0}}), span(3, {{0, 1, 0}}), span(3, {{0, 0, 1}}),
                                     span(3, {{1, 1, 1}})};
    try {
        lattice_closure(3, gens, 40);
        FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
        CHECK(e.partial().size() >= 40);
        CHECK(e.witness()[0].ambient_dim() == 3);
    }
    CHECK_THROWS_AS(lattice_closure_reference(3, gens, 40), CapExceeded);
}

TEST_CASE("from_elements reports non-closed families") {
    const ProjectionLattice lat =
        ProjectionLattice::from_elements(2, {span(2, {{1, 0}}), span(2, {{0, 1}}), span(2, {{1, 1}})});
    CHECK(lat.size() == 5);
    CHECK(lat.flags().is_closed);
    const ProjectionLattice open = ProjectionLattice::from_elements(
        3, {span(3, {{1, 0, 0}}), span(3, {{0, 1, 0}})});
    CHECK_FALSE(open.flags().is_closed);
    CHECK_THROWS_AS(l_minus(span(3, {{1, 0, 0}}), open), PreconditionError);
}

TEST_CASE("L minus") {
    const ProjectionLattice nest = fixtures::nest2();
    const Subspace e1 = span(2, {{1, 0}});
    CHECK(l_minus(e1, nest).is_zero());
    CHECK(l_minus(Subspace::full(2), nest) == e1);

    const ProjectionLattice two = fixtures::two_atom2();
    const Subspace e2 = span(2, {{1, 1}});
    CHECK(l_minus(e1, two) == e2);
    CHECK(l_minus(e2, two) == e1);
    CHECK_THROWS_AS(l_minus(span(2, {{0, 1}}), two), PreconditionError);

    // Atoms of an ABSL: (E_k)_- is the join of the other atoms.
    const ProjectionLattice ax = fixtures::axes(4);
    for (std::size_t k = 0; k < ax.atoms().size(); ++k) {
        std::vector<Subspace> others;
        for (std::size_t j = 0; j < ax.atoms().size(); ++j)
            if (j != k) others.push_back(ax.atoms()[j]);
        CHECK(l_minus(ax.atoms()[k], ax) == join_all(4, others));
    }
}

TEST_CASE("distributivity witness on the diamond") {
    const ProjectionLattice d = fixtures::diamond2();
    REQUIRE(d.distributivity_witness().has_value());
    const auto [a, b, c] = *d.distributivity_witness();
    CHECK_FALSE(meet(d[a], join(d[b], d[c])) == join(meet(d[a], d[b]), meet(d[a], d[c])));
    CHECK_FALSE(fixtures::two_atom2().distributivity_witness().has_value());
}

TEST_CASE("complement lattice atoms") {
    const ProjectionLattice two = fixtures::two_atom2();
    const ComplementLattice c = complement_lattice(two);
    REQUIRE(c.atoms.size() == 2);
    // Atoms E1 = span(e1), E2 = span(e1+e2): D1 = E2^perp, D2 = E1^perp.
    CHECK(c.atoms[0] == perp(two.atoms()[1]));
    CHECK(c.atoms[1] == perp(two.atoms()[0]));
    CHECK(c.lattice.flags().is_absl);
    CHECK(c.lattice.size() == 4);
    CHECK_THROWS_AS(complement_lattice(fixtures::nest2()), PreconditionError);

    const ProjectionLattice r = fixtures::random_two_atom(4, 2, 8);
    const ComplementLattice cr = complement_lattice(r);
    for (std::size_t j = 0; j < r.atoms().size(); ++j) {
        std::vector<Subspace> perps;
        for (std::size_t i = 0; i < r.atoms().size(); ++i)
            if (i != j) perps.push_back(perp(r.atoms()[i]));
        CHECK(cr.atoms[j] == meet_all(4, perps));
    }
}

TEST_CASE("complements inside a lattice") {
    const ProjectionLattice nest = fixtures::nest2();
    CHECK_FALSE(find_complement(nest, *nest.index_of(span(2, {{1, 0}}))).has_value());
    const ProjectionLattice ax = fixtures::axes(3);
    for (std::size_t a = 0; a < ax.size(); ++a) {
        const auto c = find_complement(ax, a);
        REQUIRE(c.has_value());
        CHECK(meet(ax[a], ax[*c]).is_zero());
        CHECK(join(ax[a], ax[*c]).is_full());
    }
}
