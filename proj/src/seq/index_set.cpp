#include "produal/seq/index_set.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace produal {

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    return a / std::gcd(a, b) * b;
}

IndexSet::IndexSet() : period_{false} {}

IndexSet::IndexSet(std::vector<bool> prefix, std::vector<bool> period)
    : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("index set period must be nonempty");
    normalize();
}

IndexSet IndexSet::all() { return IndexSet({}, {true}); }

IndexSet IndexSet::empty() { return IndexSet(); }

IndexSet IndexSet::single(std::uint64_t i) {
    std::vector<bool> prefix(i + 1, false);
    prefix[i] = true;
    return IndexSet(std::move(prefix), {false});
}

IndexSet IndexSet::finite(const std::vector<std::uint64_t>& members) {
    if (members.empty()) return empty();
    std::uint64_t mx = *std::max_element(members.begin(), members.end());
    std::vector<bool> prefix(mx + 1, false);
    for (auto m : members) prefix[m] = true;
    return IndexSet(std::move(prefix), {false});
}

IndexSet IndexSet::residue_class(std::uint64_t residue, std::uint64_t modulus,
                                 std::uint64_t from) {
    if (modulus == 0) throw std::invalid_argument("zero modulus");
    std::vector<bool> prefix(from, false);
    std::vector<bool> period(modulus, false);
    // membership of index from + j decided by period[j % modulus]
    period[(residue % modulus + modulus - from % modulus) % modulus] = true;
    return IndexSet(std::move(prefix), std::move(period));
}

IndexSet IndexSet::from_index(std::uint64_t from) {
    return IndexSet(std::vector<bool>(from, false), {true});
}

void IndexSet::normalize() {
    // primitive period
    std::uint64_t l = period_.size();
    for (std::uint64_t d = 1; d < l; ++d) {
        if (l % d != 0) continue;
        bool ok = true;
        for (std::uint64_t i = d; ok && i < l; ++i)
            if (period_[i] != period_[i % d]) ok = false;
        if (ok) {
            period_.resize(d);
            break;
        }
    }
    // absorb the prefix tail into the (rotated) period
    while (!prefix_.empty() && prefix_.back() == period_.back()) {
        prefix_.pop_back();
        period_.insert(period_.begin(), period_.back());
        period_.pop_back();
    }
}

bool IndexSet::contains(std::uint64_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    return period_[(i - prefix_.size()) % period_.size()];
}

bool IndexSet::is_finite() const {
    return std::none_of(period_.begin(), period_.end(), [](bool b) { return b; });
}

bool IndexSet::is_empty() const {
    return is_finite() && std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; });
}

bool IndexSet::is_all() const { return prefix_.empty() && period_ == std::vector<bool>{true}; }

std::optional<std::uint64_t> IndexSet::first() const {
    for (std::uint64_t i = 0; i < prefix_.size(); ++i)
        if (prefix_[i]) return i;
    for (std::uint64_t r = 0; r < period_.size(); ++r)
        if (period_[r]) return prefix_.size() + r;
    return std::nullopt;
}

std::vector<bool> IndexSet::bits_on_grid(std::uint64_t p, std::uint64_t l) const {
    if (p < prefix_.size() || l % period_.size() != 0)
        throw std::invalid_argument("grid does not refine this index set");
    std::vector<bool> bits(p + l);
    for (std::uint64_t i = 0; i < p; ++i) bits[i] = contains(i);
    for (std::uint64_t r = 0; r < l; ++r) bits[p + r] = contains(p + r);
    return bits;
}

namespace {

template <class Op>
IndexSet combine(const IndexSet& a, const IndexSet& b, Op op) {
    std::uint64_t p = std::max(a.prefix_size(), b.prefix_size());
    std::uint64_t l = lcm_u64(a.period_size(), b.period_size());
    std::vector<bool> prefix(p), period(l);
    for (std::uint64_t i = 0; i < p; ++i) prefix[i] = op(a.contains(i), b.contains(i));
    for (std::uint64_t r = 0; r < l; ++r) period[r] = op(a.contains(p + r), b.contains(p + r));
    return IndexSet(std::move(prefix), std::move(period));
}

}  // namespace

IndexSet IndexSet::complement() const {
    std::vector<bool> prefix = prefix_, period = period_;
    prefix.flip();
    period.flip();
    return IndexSet(std::move(prefix), std::move(period));
}

IndexSet IndexSet::intersect(const IndexSet& o) const {
    return combine(*this, o, [](bool x, bool y) { return x && y; });
}

IndexSet IndexSet::unite(const IndexSet& o) const {
    return combine(*this, o, [](bool x, bool y) { return x || y; });
}

bool IndexSet::disjoint_with(const IndexSet& o) const { return intersect(o).is_empty(); }

bool IndexSet::subset_of(const IndexSet& o) const { return intersect(o) == *this; }

std::vector<std::uint64_t> IndexSet::members_below(std::uint64_t n) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < n; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

std::optional<std::uint64_t> IndexSet::first_member_at_least(std::uint64_t from) const {
    for (std::uint64_t i = from; i < prefix_.size(); ++i)
        if (prefix_[i]) return i;
    std::uint64_t start = std::max<std::uint64_t>(from, prefix_.size());
    for (std::uint64_t i = start; i < start + period_.size(); ++i)
        if (contains(i)) return i;
    return std::nullopt;
}

std::vector<std::uint64_t> IndexSet::first_members(std::size_t n) const {
    std::vector<std::uint64_t> out;
    if (n == 0) return out;
    for (std::uint64_t i = 0; out.size() < n; ++i) {
        if (contains(i)) out.push_back(i);
        if (i >= prefix_.size() && is_finite() && i >= prefix_.size() + period_.size()) break;
    }
    return out;
}

}  // namespace produal
