#pragma once

#include "produal/exact/torus.hpp"
#include "produal/seq/index_set.hpp"
#include "produal/seq/rational_function.hpp"

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

namespace produal {

inline constexpr int kSymbolOne = 0;  // symbol id 0 stands for 1 (rational values)

/// Finitely supported integer vector, an element of the direct sum Z^(N).
class FinSupportVector {
  public:
    FinSupportVector() = default;
    static FinSupportVector unit(std::uint64_t i);

    void add(std::uint64_t i, const Int& v);  // entries_[i] += v, dropping zeros
    const std::map<std::uint64_t, Int>& entries() const { return entries_; }
    Int at(std::uint64_t i) const;
    bool is_zero() const { return entries_.empty(); }

    FinSupportVector operator+(const FinSupportVector& o) const;
    FinSupportVector scaled(const Int& c) const;

    bool operator==(const FinSupportVector& o) const = default;

  private:
    std::map<std::uint64_t, Int> entries_;
};

/// Piecewise-polynomial integer sequence: cells partition N, each carrying an
/// integer polynomial.  Canonical after construction.
class IntSeq {
  public:
    struct Cell {
        IndexSet support;
        Poly poly;
        bool operator==(const Cell&) const = default;
    };

    IntSeq();  // zero sequence
    static IntSeq from_cells(std::vector<Cell> cells);
    static IntSeq constant(const Int& c);
    static IntSeq of_poly(Poly p);
    /// indicator of J scaled by c (c on J, 0 off J)
    static IntSeq indicator(const IndexSet& j, const Int& c = Int(1));

    const std::vector<Cell>& cells() const { return cells_; }
    Int eval(std::uint64_t i) const;
    bool is_zero() const;
    /// Support {i : value != 0}; eventually periodic by construction.
    IndexSet nonzero_set() const;

    IntSeq operator+(const IntSeq& o) const;
    IntSeq scaled(const Int& c) const;
    IntSeq restricted(const IndexSet& j) const;

    bool operator==(const IntSeq& o) const = default;

  private:
    std::vector<Cell> cells_;
    friend IntSeq canonicalize_int_seq(std::vector<Cell> cells);
};

/// Piecewise rational-function sequence over N (denominators never vanish at
/// naturals).
class RatSeq {
  public:
    struct Cell {
        IndexSet support;
        RationalFunction func;
        bool operator==(const Cell&) const = default;
    };

    RatSeq();  // zero
    static RatSeq from_cells(std::vector<Cell> cells);
    static RatSeq constant(const Rat& c);
    static RatSeq of_function(RationalFunction f);
    static RatSeq from_int_seq(const IntSeq& s);

    const std::vector<Cell>& cells() const { return cells_; }
    Rat eval(std::uint64_t i) const;
    bool is_zero() const;

    RatSeq operator+(const RatSeq& o) const;
    RatSeq scaled(const Rat& c) const;
    RatSeq restricted(const IndexSet& j) const;

    bool operator==(const RatSeq& o) const = default;

  private:
    std::vector<Cell> cells_;
    friend RatSeq canonicalize_rat_seq(std::vector<Cell> cells);
};

/// Finitely presented candidate element of T^N: cells partition N, each cell
/// carries one symbol (tau_k or 1) and a rational-function coefficient; the
/// value at i is coeff(i) * symbol mod 1.
class CharacterPresentation {
  public:
    struct Cell {
        IndexSet support;
        int symbol = kSymbolOne;  // 0 = "one", k >= 1 = tau_k
        RationalFunction coeff;
        bool operator==(const Cell&) const = default;
    };

    CharacterPresentation();  // zero character
    static CharacterPresentation from_cells(std::vector<Cell> cells);
    static CharacterPresentation zero();
    /// coeff * symbol everywhere.
    static CharacterPresentation constant(int symbol, const Rat& coeff);

    const std::vector<Cell>& cells() const { return cells_; }
    TorusValue eval(std::uint64_t i) const;
    bool is_zero() const;
    /// Symbols appearing with a nonzero cell, ascending (kSymbolOne first).
    std::vector<int> symbols() const;
    /// Union of supports of the cells carrying this symbol.
    IndexSet symbol_support(int symbol) const;
    /// Coefficient sequence of one symbol, zero elsewhere.
    RatSeq symbol_coefficients(int symbol) const;

    CharacterPresentation operator+(const CharacterPresentation& o) const;
    CharacterPresentation operator-() const;

    bool operator==(const CharacterPresentation& o) const = default;

  private:
    std::vector<Cell> cells_;
    friend CharacterPresentation canonicalize_character(std::vector<Cell> cells);
};

/// Reduced-denominator landscape of a rational sequence over an index set.
struct DenominatorProfile {
    struct Bounded {
        std::map<Int, IndexSet> strata;  // reduced denominator -> indices
    };
    struct Unbounded {
        std::size_t cell_index;      // offending cell of the analyzed sequence
        Poly reduced_denominator;    // degree >= 1
    };
    std::variant<Bounded, Unbounded> result;

    bool is_bounded() const { return std::holds_alternative<Bounded>(result); }
    const Bounded& bounded() const { return std::get<Bounded>(result); }
    const Unbounded& unbounded() const { return std::get<Unbounded>(result); }
};

// ---- operations -----------------------------------------------------------

Int pair(const FinSupportVector& g, const IntSeq& x);
Rat pair(const FinSupportVector& g, const RatSeq& x);

/// <g, t> = sum over supp g of g(i) * t(i) in T.
TorusValue char_eval(const CharacterPresentation& t, const FinSupportVector& g);

/// delta_J * t: equal to t on J, zero off J.
CharacterPresentation restrict_character(const CharacterPresentation& t, const IndexSet& j);

/// Reduced-denominator profile of r over J.  Bounded iff every cell meeting J
/// infinitely often has a constant reduced denominator.
DenominatorProfile denominator_profile(const RatSeq& r, const IndexSet& j);

// canonicalization entry points (used by from_cells)
IntSeq canonicalize_int_seq(std::vector<IntSeq::Cell> cells);
RatSeq canonicalize_rat_seq(std::vector<RatSeq::Cell> cells);
CharacterPresentation canonicalize_character(std::vector<CharacterPresentation::Cell> cells);

}  // namespace produal
