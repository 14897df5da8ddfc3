#include "slt/random.hpp"

#include "slt/errors.hpp"

namespace slt {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
}

Scalar Rng::entry(Field field) {
    const long re = uniform(-3, 3);
    if (field == Field::Rational) return Scalar(re);
    return Scalar(mpq_class(re), mpq_class(uniform(-3, 3)));
}

Vector Rng::vector(std::size_t dim, Field field) {
    // Sparsity level: keep all, about half, or about a quarter of the coordinates.
    const unsigned level = static_cast<unsigned>(uniform(0, 2));
    Vector v(dim);
    for (auto& x : v) {
        Scalar e = entry(field);
        const bool keep = level == 0 || (level == 1 ? chance(1, 2) : chance(1, 4));
        if (keep) x = std::move(e);
    }
    return v;
}

Subspace Rng::subspace(std::size_t dim, Field field) {
    const auto count = static_cast<std::size_t>(uniform(0, static_cast<long>(dim)));
    std::vector<Vector> vs;
    for (std::size_t k = 0; k < count; ++k) vs.push_back(vector(dim, field));
    return Subspace::span(dim, vs);
}

Subspace Rng::subspace_of_rank(std::size_t dim, std::size_t rank, Field field) {
    if (rank > dim) throw PreconditionError("requested rank exceeds ambient dimension");
    for (;;) {
        std::vector<Vector> vs;
        for (std::size_t k = 0; k < rank; ++k) {
            Vector v(dim);
            for (auto& x : v) x = entry(field);
            vs.push_back(std::move(v));
        }
        Subspace s = Subspace::span(dim, vs);
        if (s.rank() == rank) return s;
    }
}

} // namespace slt
