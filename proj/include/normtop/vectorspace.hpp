#ifndef NORMTOP_VECTORSPACE_HPP
#define NORMTOP_VECTORSPACE_HPP

#include "normtop/rational.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <vector>

namespace normtop {

// Basis index: the vector space has basis (e_k) indexed by non-negative
// integers. Only finitely many coordinates ever materialize.
using Index = std::uint32_t;

// Finite sorted set of basis indices; names a finite-dimensional slice V_J.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<Index> ids);
    explicit IndexSet(std::vector<Index> ids); // sorts, dedups

    bool contains(Index k) const;
    bool subset_of(const IndexSet& other) const;
    IndexSet unite(const IndexSet& other) const;
    IndexSet intersect(const IndexSet& other) const;
    IndexSet with(Index k) const;

    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }
    const std::vector<Index>& indices() const { return ids_; }

    bool operator==(const IndexSet&) const = default;

private:
    std::vector<Index> ids_;
};

// Finitely-supported vector x = sum_k x_k e_k with exact rational
// coordinates. Zero coordinates are never stored, so the key set is
// exactly the support. Immutable after construction.
class FinVector {
public:
    FinVector() = default;
    explicit FinVector(std::map<Index, Rat> coords); // drops zeros

    static FinVector unit(Index k);
    static FinVector scaled_unit(Index k, const Rat& a);

    // 0 for indices outside the support.
    const Rat& coord(Index k) const;
    const std::map<Index, Rat>& coords() const { return coords_; }
    bool is_zero() const { return coords_.empty(); }

    bool operator==(const FinVector&) const = default;

private:
    std::map<Index, Rat> coords_;
};

IndexSet support(const FinVector& v);

// a*u + b*w, exact, zero coordinates dropped.
FinVector combine(const Rat& a, const FinVector& u, const Rat& b, const FinVector& w);

inline FinVector add(const FinVector& u, const FinVector& w) { return combine(1, u, 1, w); }
inline FinVector subtract(const FinVector& u, const FinVector& w) { return combine(1, u, -1, w); }
inline FinVector scale_vec(const Rat& a, const FinVector& u) { return combine(a, u, 0, FinVector()); }

// Projection onto V_J in the basis: keeps coordinates with index in J.
FinVector restrict_to(const FinVector& v, const IndexSet& J);

// Increasing chain of subspaces F_0 c F_1 c ... obtained by adjoining one
// basis vector at a time: F_n spans base plus the first n added indices.
class Flag {
public:
    Flag() = default;
    Flag(IndexSet base, std::vector<Index> added); // added distinct, disjoint from base

    const IndexSet& base() const { return base_; }
    const std::vector<Index>& added() const { return added_; }
    std::size_t depth() const { return added_.size(); }

    IndexSet slice(std::size_t n) const; // base plus added[0..n)

    bool operator==(const Flag&) const = default;

private:
    IndexSet base_;
    std::vector<Index> added_;
};

} // namespace normtop

#endif
