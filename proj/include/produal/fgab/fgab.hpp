#pragma once

#include "produal/exact/snf.hpp"
#include "produal/exact/torus.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace produal {

/// Finitely generated abelian group in invariant-factor normal form:
/// Z_{d_1} + ... + Z_{d_k} + Z^free_rank with d_1 | d_2 | ... and d_i >= 2.
struct FGAbelianGroup {
    std::vector<Int> invariant_factors;
    std::size_t free_rank = 0;

    static FGAbelianGroup trivial() { return {}; }
    static FGAbelianGroup cyclic(const Int& n);  // Z_n, n >= 1 (Z_1 = trivial)
    static FGAbelianGroup free(std::size_t rank) { return {{}, rank}; }
    /// Normal form of a direct sum of cyclic groups.
    static FGAbelianGroup direct_sum(const std::vector<Int>& cyclic_orders,
                                     std::size_t free_rank = 0);

    std::size_t factor_count() const { return invariant_factors.size() + free_rank; }
    bool is_finite() const { return free_rank == 0; }
    bool is_trivial() const { return factor_count() == 0; }
    Int order() const;  // throws NotFinite
    /// Order of the k-th factor, 0 for a free factor.
    Int factor_order(std::size_t k) const;

    bool operator==(const FGAbelianGroup&) const = default;
    std::string str() const;
};

/// Element as a coordinate vector, torsion coordinates reduced mod d_k.
struct GroupElement {
    std::vector<Int> coords;
    bool operator==(const GroupElement&) const = default;
    bool operator<(const GroupElement& o) const {
        return std::lexicographical_compare(coords.begin(), coords.end(), o.coords.begin(),
                                            o.coords.end());
    }
    bool is_zero() const;
};

GroupElement reduce_element(const FGAbelianGroup& g, GroupElement e);
GroupElement zero_element(const FGAbelianGroup& g);
GroupElement add(const FGAbelianGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement negate(const FGAbelianGroup& g, const GroupElement& a);
GroupElement scale(const FGAbelianGroup& g, const Int& n, const GroupElement& a);
Int element_order(const FGAbelianGroup& g, const GroupElement& a);

/// All elements in lexicographic coordinate order.  Throws NotFinite.
std::vector<GroupElement> enumerate_elements(const FGAbelianGroup& g);

/// Homomorphism given by an integer matrix on coordinates (columns = images
/// of the source generators).
struct GroupHom {
    FGAbelianGroup source, target;
    IntMatrix matrix;

    GroupElement apply(const GroupElement& e) const;
    bool well_defined() const;
};

struct GroupFromRelations {
    FGAbelianGroup group;
    GroupHom projection;  // Z^generators -> group
};

/// Quotient of Z^generators by the row span of `relations`, in normal form.
GroupFromRelations group_from_relations(std::size_t generators, const IntMatrix& relations);

// ---- duality ----------------------------------------------------------------

/// Dual of a finite group: same invariant factors, paired by
/// chi_a(b) = sum a_k b_k / d_k mod 1.  Throws NotFinite.
FGAbelianGroup dual_group(const FGAbelianGroup& g);
TorusValue character_pairing(const FGAbelianGroup& g, const GroupElement& chi,
                             const GroupElement& x);

/// Hom(G, H) of finitely generated abelian groups, in normal form.
FGAbelianGroup hom_group(const FGAbelianGroup& g, const FGAbelianGroup& h);

// ---- bicharacters -------------------------------------------------------------

/// Bicharacter of finite G x H, stored by generator values (canonical torus
/// window).  Construction validates order compatibility.
struct Bicharacter {
    FGAbelianGroup lhs, rhs;
    std::vector<std::vector<Rat>> table;  // [i][j] = beta(g_i, h_j)

    Bicharacter(FGAbelianGroup lhs_, FGAbelianGroup rhs_, std::vector<std::vector<Rat>> table_);
    TorusValue eval(const GroupElement& a, const GroupElement& b) const;
    Bicharacter plus(const Bicharacter& o) const;
    bool is_zero() const;
    bool operator==(const Bicharacter&) const = default;
};

/// All bicharacters of G x H, deterministic order.  Throws TooLarge beyond
/// the guard.
std::vector<Bicharacter> enumerate_bicharacters(const FGAbelianGroup& g, const FGAbelianGroup& h,
                                                const Int& guard = Int(4096));

/// beta -> (g -> beta(g, .)) as a homomorphism into dual_group(rhs).
GroupHom garling_transpose(const Bicharacter& b);

// ---- tensor product -----------------------------------------------------------

struct TensorConstruction {
    FGAbelianGroup group;
    std::vector<GroupElement> lhs_elements, rhs_elements;
    /// bimap[ia][ic] = image of the pair (lhs_elements[ia], rhs_elements[ic])
    std::vector<std::vector<GroupElement>> bimap;
};

/// Literal free-group-on-pairs construction: impose both bilinearity relation
/// families plus generator-order relations and reduce by Smith normal form.
/// Guard bounds |G| * |H|.
TensorConstruction tensor_construct(const FGAbelianGroup& g, const FGAbelianGroup& h,
                                    const Int& guard = Int(256));

// ---- verification -------------------------------------------------------------

struct FailureReport {
    std::string what;
};

/// Checks that every bihomomorphism G x H -> B factors uniquely through the
/// constructed tensor product.
std::optional<FailureReport> verify_universal_property(const FGAbelianGroup& g,
                                                       const FGAbelianGroup& h,
                                                       const FGAbelianGroup& b,
                                                       const Int& guard = Int(256));

struct DualTensorReport {
    bool ok = false;
    std::string what;
    Int bicharacter_count, tensor_dual_count;
    /// generator tables paired with the dual element realizing them
    std::vector<std::pair<std::vector<std::vector<Rat>>, GroupElement>> iso_witness;
};

/// Checks that beta -> (character of G (x) H through the bimap) is a group
/// isomorphism from the bicharacter group onto the dual of the tensor.
DualTensorReport verify_dual_of_tensor(const FGAbelianGroup& g, const FGAbelianGroup& h,
                                       const Int& guard = Int(256));

// ---- polars -------------------------------------------------------------------

struct Subset {
    FGAbelianGroup group;  // finite
    std::vector<GroupElement> elements;  // sorted, deduplicated
};

Subset make_subset(const FGAbelianGroup& g, std::vector<GroupElement> elements);
/// A^> : characters bounded by 1/4 on A (as a subset of the dual).
Subset polar(const Subset& a);
/// X^< : elements on which every character of X is bounded by 1/4.
Subset prepolar(const Subset& x);
Subset quasiconvex_hull(const Subset& a);
bool subset_contains(const Subset& s, const GroupElement& e);
bool subset_leq(const Subset& a, const Subset& b);

}  // namespace produal
