#include "normtop/sampling.hpp"

#include "normtop/errors.hpp"

#include <map>

namespace normtop {

std::uint64_t SampleGen::next_below(std::uint64_t bound) {
    if (bound == 0)
        throw InvalidArgument("empty sampling range");
    return rng_() % bound;
}

Rat SampleGen::next_scalar(std::uint64_t num_bound, std::uint64_t den_bound) {
    if (num_bound == 0 || den_bound == 0)
        throw InvalidArgument("sampling bounds must be positive");
    const std::uint64_t num = 1 + next_below(num_bound);
    const std::uint64_t den = 1 + next_below(den_bound);
    const bool negative = next_below(2) == 1;
    Rat r(Nat(num), Nat(den));
    return negative ? Rat(-r) : r;
}

FinVector SampleGen::next_vector(const IndexSet& slice, std::size_t max_support,
                                 std::uint64_t num_bound, std::uint64_t den_bound) {
    if (slice.empty())
        return FinVector();
    const std::size_t want = 1 + next_below(std::min<std::uint64_t>(max_support, slice.size()));
    std::map<Index, Rat> coords;
    const auto& ids = slice.indices();
    for (std::size_t n = 0; n < want; ++n) {
        const Index k = ids[next_below(ids.size())];
        coords[k] = next_scalar(num_bound, den_bound);
    }
    return FinVector(std::move(coords));
}

} // namespace normtop
