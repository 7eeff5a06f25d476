#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace produal {

/// Eventually periodic subset of N, stored as a finite prefix of membership
/// bits plus a repeating period.  Always kept in canonical form: the period
/// is primitive and the prefix is minimal, so value equality is operator==.
class IndexSet {
  public:
    IndexSet();  // empty set
    IndexSet(std::vector<bool> prefix, std::vector<bool> period);

    static IndexSet all();
    static IndexSet empty();
    static IndexSet single(std::uint64_t i);
    static IndexSet finite(const std::vector<std::uint64_t>& members);
    /// {i >= from : i == residue (mod modulus)}
    static IndexSet residue_class(std::uint64_t residue, std::uint64_t modulus,
                                  std::uint64_t from = 0);
    /// {i : i >= from}
    static IndexSet from_index(std::uint64_t from);

    bool contains(std::uint64_t i) const;
    bool is_empty() const;
    bool is_finite() const;
    bool is_infinite() const { return !is_finite(); }
    bool is_all() const;
    std::optional<std::uint64_t> first() const;

    std::uint64_t prefix_size() const { return prefix_.size(); }
    std::uint64_t period_size() const { return period_.size(); }
    const std::vector<bool>& prefix_bits() const { return prefix_; }
    const std::vector<bool>& period_bits() const { return period_; }

    /// Membership bits on an aligned grid: positions [0, p) explicit, then
    /// membership of p + r for r in [0, l).  p must be >= prefix_size and l a
    /// multiple of period_size.
    std::vector<bool> bits_on_grid(std::uint64_t p, std::uint64_t l) const;

    IndexSet complement() const;
    IndexSet intersect(const IndexSet& o) const;
    IndexSet unite(const IndexSet& o) const;
    bool disjoint_with(const IndexSet& o) const;
    bool subset_of(const IndexSet& o) const;

    std::vector<std::uint64_t> members_below(std::uint64_t n) const;
    /// First n members (fewer if the set has fewer).
    std::vector<std::uint64_t> first_members(std::size_t n) const;
    std::optional<std::uint64_t> first_member_at_least(std::uint64_t from) const;

    bool operator==(const IndexSet& o) const = default;

  private:
    std::vector<bool> prefix_;
    std::vector<bool> period_;  // nonempty

    void normalize();
};

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace produal
