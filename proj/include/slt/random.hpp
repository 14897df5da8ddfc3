#ifndef SLT_RANDOM_HPP
#define SLT_RANDOM_HPP

#include "slt/subspace.hpp"

#include <cstdint>
#include <random>

namespace slt {

/// SplitMix64 finalizer; derives independent stream seeds from (seed, stream).
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t stream);

/*
 * Deterministic generator for small exact test data.
 *
 * std::mt19937_64 output is fixed by the standard; ranges are reduced by
 * modulo so results do not depend on the library's distribution objects.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    bool chance(unsigned num, unsigned den) { return next() % den < num; }

    /// Entries uniform in [-3, 3] (both parts for Gaussian rationals). A random
    /// fraction of coordinates is zeroed so low-rank structure shows up often.
    Vector vector(std::size_t dim, Field field);
    /// Span of a random number (0..dim) of random vectors.
    Subspace subspace(std::size_t dim, Field field);
    /// Random subspace of exactly the given rank (retries until attained).
    Subspace subspace_of_rank(std::size_t dim, std::size_t rank, Field field);

private:
    Scalar entry(Field field);
    std::mt19937_64 engine_;
};

} // namespace slt

#endif
