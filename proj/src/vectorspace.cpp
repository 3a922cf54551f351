#include "normtop/vectorspace.hpp"

#include "normtop/errors.hpp"

#include <algorithm>
#include <string>

namespace normtop {

IndexSet::IndexSet(std::initializer_list<Index> ids) : IndexSet(std::vector<Index>(ids)) {}

IndexSet::IndexSet(std::vector<Index> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool IndexSet::contains(Index k) const {
    return std::binary_search(ids_.begin(), ids_.end(), k);
}

bool IndexSet::subset_of(const IndexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

IndexSet IndexSet::unite(const IndexSet& other) const {
    std::vector<Index> out;
    out.reserve(ids_.size() + other.ids_.size());
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                   std::back_inserter(out));
    IndexSet r;
    r.ids_ = std::move(out);
    return r;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
    std::vector<Index> out;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                          std::back_inserter(out));
    IndexSet r;
    r.ids_ = std::move(out);
    return r;
}

IndexSet IndexSet::with(Index k) const {
    return unite(IndexSet{k});
}

FinVector::FinVector(std::map<Index, Rat> coords) : coords_(std::move(coords)) {
    for (auto it = coords_.begin(); it != coords_.end();) {
        if (it->second == 0)
            it = coords_.erase(it);
        else
            ++it;
    }
}

FinVector FinVector::unit(Index k) {
    return scaled_unit(k, 1);
}

FinVector FinVector::scaled_unit(Index k, const Rat& a) {
    std::map<Index, Rat> c;
    if (a != 0)
        c.emplace(k, a);
    FinVector v;
    v.coords_ = std::move(c);
    return v;
}

const Rat& FinVector::coord(Index k) const {
    static const Rat zero(0);
    const auto it = coords_.find(k);
    return it == coords_.end() ? zero : it->second;
}

IndexSet support(const FinVector& v) {
    std::vector<Index> ids;
    ids.reserve(v.coords().size());
    for (const auto& [k, x] : v.coords())
        ids.push_back(k);
    return IndexSet(std::move(ids));
}

FinVector combine(const Rat& a, const FinVector& u, const Rat& b, const FinVector& w) {
    std::map<Index, Rat> out;
    for (const auto& [k, x] : u.coords()) {
        const Rat val = a * x;
        if (val != 0)
            out.emplace(k, val);
    }
    for (const auto& [k, x] : w.coords()) {
        const Rat val = b * x;
        if (val == 0)
            continue;
        auto [it, inserted] = out.emplace(k, val);
        if (!inserted) {
            it->second += val;
            if (it->second == 0)
                out.erase(it);
        }
    }
    FinVector v;
    v = FinVector(std::move(out));
    return v;
}

FinVector restrict_to(const FinVector& v, const IndexSet& J) {
    std::map<Index, Rat> out;
    for (const auto& [k, x] : v.coords())
        if (J.contains(k))
            out.emplace(k, x);
    return FinVector(std::move(out));
}

Flag::Flag(IndexSet base, std::vector<Index> added) : base_(std::move(base)), added_(std::move(added)) {
    IndexSet seen = base_;
    for (const Index k : added_) {
        if (seen.contains(k))
            throw InvalidArgument("flag index " + std::to_string(k) + " repeated or already in the base");
        seen = seen.with(k);
    }
}

IndexSet Flag::slice(std::size_t n) const {
    if (n > added_.size())
        throw InvalidArgument("flag slice " + std::to_string(n) + " exceeds depth " + std::to_string(added_.size()));
    std::vector<Index> ids(added_.begin(), added_.begin() + static_cast<std::ptrdiff_t>(n));
    return base_.unite(IndexSet(std::move(ids)));
}

} // namespace normtop
