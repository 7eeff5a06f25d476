#pragma once

#include "produal/exact/torus.hpp"
#include "produal/seq/sequences.hpp"

#include <map>
#include <string>
#include <vector>

namespace produal {

/// The two concrete 0-dimensional space models: a finite discrete set and the
/// convergent sequence N with a limit point at infinity.
struct SpaceModel {
    enum class Kind { FiniteDiscrete, ConvergentSequence };
    Kind kind = Kind::FiniteDiscrete;
    std::size_t points = 0;  // finite model only

    static SpaceModel finite_discrete(std::size_t n) { return {Kind::FiniteDiscrete, n}; }
    static SpaceModel convergent_sequence() { return {Kind::ConvergentSequence, 0}; }
    bool operator==(const SpaceModel&) const = default;
};

struct Point {
    bool at_infinity = false;
    std::uint64_t index = 0;

    static Point at(std::uint64_t i) { return {false, i}; }
    static Point infinity() { return {true, 0}; }
    bool operator==(const Point&) const = default;
    bool operator<(const Point& o) const {
        if (at_infinity != o.at_infinity) return !at_infinity;
        return index < o.index;
    }
    std::string str() const { return at_infinity ? "inf" : std::to_string(index); }
};

/// Integer-valued function on a space model.  On the convergent-sequence
/// model the values along N are an eventually periodic integer sequence plus
/// the value at infinity; continuity is a checkable property, not an
/// invariant.
class IntFunction {
  public:
    static IntFunction on_finite(std::vector<Int> values);
    /// Validates that the sequence values are eventually periodic (every
    /// infinite cell constant).
    static IntFunction on_sequence(IntSeq seq, Int limit);

    const SpaceModel& space() const { return space_; }
    Int at(const Point& p) const;
    const Int& limit_value() const { return limit_; }
    const IntSeq& sequence() const { return seq_; }
    const std::vector<Int>& finite_values() const { return values_; }

    IntFunction pointwise_mod(const Int& m) const;  // values in [0, m)

  private:
    SpaceModel space_;
    std::vector<Int> values_;  // finite model
    IntSeq seq_;               // convergent-sequence model
    Int limit_;
};

/// phi = sum n_x delta_x, an element of the free abelian group on the space.
struct FreePoint {
    std::map<Point, Int> terms;  // nonzero coefficients only

    void add(const Point& p, const Int& c);
    bool is_zero() const { return terms.empty(); }
};

/// phi(f) = sum n_x f(x)
Int apply_free_point(const FreePoint& phi, const IntFunction& f);

struct ContinuityResult {
    bool continuous;
    IndexSet witness;  // infinite set of indices where f differs from its limit
};
ContinuityResult is_continuous(const IntFunction& f);

/// Support of phi as a homomorphism C_p(X, Z) -> Z: the minimum finite set F
/// with f(F) = {0} implying phi(f) = 0.
std::vector<Point> support_of_hom(const SpaceModel& x, const FreePoint& phi);

/// theta(f (x) t)[phi] = t * phi(f)
TorusValue theta_eval(const IntFunction& f, const TorusValue& t, const FreePoint& phi);

struct ReduceResult {
    bool reduced;
    IntFunction g;         // when reduced
    IndexSet witness;      // otherwise: infinite set with non-constant residues
};

/// Continuous replacement g with the same induced character f (x) t.
/// Rational t = a/m: g = f mod m when the residue function is continuous.
/// Pure irrational t: g = f when f is continuous.  Mixed torus values are
/// rejected with UnsupportedTorusValue.
ReduceResult theorem_b_reduce(const IntFunction& f, const TorusValue& t);

/// Exact real lift of a finitely supported character: lambda_x in [0, 1)
/// (plus mirrored formal irrational parts); restricting to integer-valued
/// functions reproduces the character.
struct RealLift {
    struct Coefficient {
        Rat lambda;                    // in [0, 1)
        std::map<int, Rat> irrational;
        bool operator==(const Coefficient&) const = default;
    };
    std::map<Point, Coefficient> coefficients;

    TorusValue eval(const IntFunction& f) const;
};

RealLift extend_character(const SpaceModel& x, const std::map<Point, TorusValue>& chi);

}  // namespace produal
