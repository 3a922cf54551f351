#ifndef NORMTOP_SAMPLING_HPP
#define NORMTOP_SAMPLING_HPP

#include "normtop/vectorspace.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace normtop {

// Deterministic source of exact-rational sample data. Reduction is done
// with plain modulo on the raw engine output so identical seeds give
// identical streams everywhere.
class SampleGen {
public:
    explicit SampleGen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t next_below(std::uint64_t bound); // uniform-ish in [0, bound)

    // Nonzero rational with |numerator| <= num_bound, denominator <= den_bound.
    Rat next_scalar(std::uint64_t num_bound, std::uint64_t den_bound);

    // Vector supported in the slice with at most max_support nonzero
    // coordinates of bounded denominator.
    FinVector next_vector(const IndexSet& slice, std::size_t max_support,
                          std::uint64_t num_bound, std::uint64_t den_bound);

private:
    std::mt19937_64 rng_;
};

} // namespace normtop

#endif
