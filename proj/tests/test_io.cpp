#include <doctest.h>

#include "helpers.hpp"

#include "slt/errors.hpp"
#include "slt/fixtures.hpp"
#include "slt/io.hpp"
#include "slt/random.hpp"

using namespace slt;
using io::Json;

namespace {

std::string location_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const ParseError& e) {
        return e.where();
    }
    return "<no error>";
}

} // namespace

TEST_CASE("scalars serialise as exact literals") {
    CHECK(io::to_json(Scalar(-3, 6)) == Json("-1/2"));
    CHECK(io::to_json(Scalar(4)) == Json("4"));
    const Scalar z(mpq_class(1, 3), mpq_class(-2));
    CHECK(io::scalar_from_json(io::to_json(z)) == z);
    CHECK(io::scalar_from_json(Json(5)) == Scalar(5));
    CHECK(io::scalar_from_json(Json::parse(R"j({"re": "1/2", "im": 0})j")) == Scalar(1, 2));
    CHECK_THROWS_AS(io::scalar_from_json(Json(0.5)), ParseError);
    CHECK_THROWS_AS(io::scalar_from_json(Json("2/0")), ParseError);
}

TEST_CASE("round trips") {
    Rng rng(41);
    for (int t = 0; t < 10; ++t) {
        const Field f = t % 2 ? Field::GaussianRational : Field::Rational;
        const Subspace s = rng.subspace(4, f);
        CHECK(io::subspace_from_json(io::to_json(s), 4) == s);
        const Vector v = rng.vector(3, f);
        CHECK(io::vector_from_json(io::vector_to_json(v), 3) == v);
    }
    for (const char* name : {"NEST2", "TWOATOM2", "AXES(3)", "DIAMOND2", "TWOATOM4R(1)"}) {
        const ProjectionLattice lat = fixtures::by_name(name);
        CHECK(io::lattice_from_json(io::to_json(lat)) == lat);
        const OperatorSpace a = alg_of(lat);
        const OperatorSpace back = io::operator_space_from_json(io::to_json(a));
        CHECK(back == a);
        CHECK(back.is_algebra());
    }
    const ProjectionLattice m = fixtures::two_atom2();
    const AtomMap f = AtomMap::make(3, 2, m.atoms(), {rng.subspace(3, Field::Rational), Subspace::full(3)});
    CHECK(io::atom_map_from_json(io::to_json(f)) == f);

    const TensorLattice t = tensor_lattice(fixtures::nest2(), m);
    const Json tj = io::to_json(t);
    CHECK(tj["product"]["elements"].size() == 9);
    CHECK(tj["elementary"].size() == 12);
}

TEST_CASE("lattices load from generators") {
    const Json j = Json::parse(R"j({"dim": 2, "generators": [{"basis": [["1", "0"]]}, {"basis": [["1", "1"]]}]})j");
    CHECK(io::lattice_from_json(j) == fixtures::two_atom2());
    const Json diamond = Json::parse(
        R"j({"dim": 2, "generators": [{"basis": [[1, 0]]}, {"basis": [[0, 1]]}, {"basis": [[1, 1]]}]})j");
    CHECK(io::lattice_from_json(diamond).size() == 5);
    CHECK_THROWS_AS(io::lattice_from_json(diamond, 3), CapExceeded);
}

TEST_CASE("atom maps infer dimensions when absent") {
    const Json j = Json::parse(R"j({"atoms": [{"basis": [["1", "0"]]}, {"basis": [["1", "1"]]}],
                                   "values": [{"basis": [["1", "0", "0"]]}, {"basis": []}]})j");
    const AtomMap f = io::atom_map_from_json(j);
    CHECK(f.k_dim == 3);
    CHECK(f.h_dim == 2);
    CHECK(f.values[1].is_zero());
}

TEST_CASE("parse errors carry locations") {
    CHECK(location_of([] { io::matrix_from_json(Json::parse(R"j([["1", "2"], ["3", "x"]])j"), "/m"); }) == "/m/1/1");
    CHECK(location_of([] { io::matrix_from_json(Json::parse(R"j([["1", "2"], ["3"]])j"), "/m"); }) == "/m/1");
    CHECK(location_of([] {
              io::lattice_from_json(Json::parse(R"j({"dim": 2, "elements": [{"basis": [["1", "0", "0"]]}]})j"));
          }) == "/elements/0/basis/0");
    CHECK(location_of([] { io::lattice_from_json(Json::parse(R"j({"dim": 2})j")); }).empty());
    CHECK(location_of([] { io::lattice_from_json(Json::parse(R"j({"dim": -1, "elements": []})j")); }) == "/dim");
    CHECK(location_of([] { io::subspace_from_json(Json::parse(R"j({"rows": []})j"), 2, "/q"); }) == "/q");
    CHECK(location_of([] {
              io::operator_space_from_json(Json::parse(R"j({"dim": 2, "basis": [[["1"]]]})j"), "/a");
          }) == "/a/basis/0");
}
