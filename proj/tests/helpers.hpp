#ifndef SLT_TESTS_HELPERS_HPP
#define SLT_TESTS_HELPERS_HPP

#include "oracle.hpp"

#include "slt/subspace.hpp"
#include "slt/lattice.hpp"

#include <initializer_list>
#include <vector>

namespace testing {

inline slt::Vector vec(std::initializer_list<long> xs) {
    slt::Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline slt::Subspace span(std::size_t dim, std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<slt::Vector> vs;
    for (auto r : rows) vs.push_back(vec(r));
    return slt::Subspace::span(dim, vs);
}

// Real subspaces only.
inline oracle::Space to_oracle(const slt::Subspace& s) {
    oracle::Rows rows;
    for (const auto& v : s.basis_vectors()) {
        oracle::Row r;
        for (const auto& x : v) r.push_back(x.re());
        rows.push_back(r);
    }
    return oracle::Space::of(s.ambient_dim(), rows);
}

inline std::vector<oracle::Space> to_oracle(const slt::ProjectionLattice& lat) {
    std::vector<oracle::Space> out;
    for (const auto& s : lat.elements()) out.push_back(to_oracle(s));
    return out;
}

} // namespace testing

#endif
