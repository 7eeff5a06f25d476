#pragma once

#include "produal/seq/sequences.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace produal {

/// x (x) t: acts on Z^(N) by g -> t * <g, x>.
struct ElementaryTensor {
    IntSeq vector;
    TorusValue value;
    bool operator==(const ElementaryTensor&) const = default;
};

/// Finite formal sum of elementary tensors; its pointwise character is
/// i -> sum_k t_k * x_k(i).
struct TensorSum {
    std::vector<ElementaryTensor> terms;
    bool operator==(const TensorSum&) const = default;
};

/// F = {x_1, ..., x_m}: vanishing of all <g, x_j> forces <g, t> = 0.
struct ContinuitySubset {
    std::vector<IntSeq> vectors;
};

struct NonMembershipCertificate {
    int symbol;                // component whose denominators blow up
    std::size_t cell_index;    // offending cell of the canonical presentation
    Poly reduced_denominator;  // degree >= 1
};

struct MembershipVerdict {
    struct InDual {
        TensorSum decomposition;
        ContinuitySubset witness;
    };
    struct NotInDual {
        NonMembershipCertificate certificate;
    };
    std::variant<InDual, NotInDual> result;

    bool in_dual() const { return std::holds_alternative<InDual>(result); }
    const InDual& in() const { return std::get<InDual>(result); }
    const NotInDual& out() const { return std::get<NotInDual>(result); }
};

/// Decide whether t is a continuous character of Z^(N) with the pointwise
/// topology.  InDual comes with a decomposition and a continuity subset;
/// NotInDual with an unbounded-denominator certificate.
MembershipVerdict decide_membership(const CharacterPresentation& t);

/// Elementary-tensor decomposition; throws NotInDualError when t is not a
/// continuous character.
TensorSum decompose(const CharacterPresentation& t);

TorusValue tensor_eval(const TensorSum& s, const FinSupportVector& g);

/// Pointwise character of a tensor sum as a presentation.  Throws
/// Unrepresentable when independent components collide at one index.
CharacterPresentation tensor_to_pointwise(const TensorSum& s);

struct CharComparison {
    bool equal;
    std::uint64_t witness = 0;  // a differing index when !equal
};
CharComparison char_equal(const CharacterPresentation& a, const CharacterPresentation& b);

/// Nonzero g supported inside J with <g, x> = 0 for every x in F, found on
/// the first |F|+1 indices of J.  Throws FiniteIndexSet when J is finite.
FinSupportVector annihilator_witness(const std::vector<IntSeq>& f, const IndexSet& j);

struct ContinuityCheck {
    bool ok;
    FinSupportVector counterexample;  // when !ok: g with all F-pairings 0, <g,t> != 0
};

/// Exact check of the continuity-subset property: for every g in Z^(N),
/// <g, x_j> = 0 for all j implies <g, t> = 0 in T.
ContinuityCheck verify_continuity_subset(const CharacterPresentation& t,
                                         const ContinuitySubset& f);

/// Best-effort reduction: drop vectors while the subset keeps certifying t.
ContinuitySubset minimize_continuity_subset(const CharacterPresentation& t, ContinuitySubset f);

/// For a character rejected by the bounded-denominator criterion, emit `count`
/// vectors g that annihilate every vector of `attempt` yet pair nontrivially
/// with t.
std::vector<FinSupportVector> unbounded_demo(const CharacterPresentation& t,
                                             const std::vector<IntSeq>& attempt,
                                             std::size_t count);

}  // namespace produal
