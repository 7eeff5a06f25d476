#pragma once

#include <stdexcept>
#include <string>

namespace produal {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Cells of a sequence/character presentation do not partition the index set.
struct PresentationInvalid : Error {
    using Error::Error;
};

/// A rational cell denominator vanishes at a natural index.
struct ZeroDenominator : Error {
    using Error::Error;
};

/// Operation requires an infinite index set.
struct FiniteIndexSet : Error {
    using Error::Error;
};

/// decompose() called on a character that is not a continuous character.
struct NotInDualError : Error {
    using Error::Error;
};

/// A pointwise sum needs two independent torus components at one index and
/// cannot be written as a single-symbol-per-cell presentation.
struct Unrepresentable : Error {
    using Error::Error;
};

/// Operation requires a finite group.
struct NotFinite : Error {
    using Error::Error;
};

/// Enumeration guard exceeded.
struct TooLarge : Error {
    using Error::Error;
};

/// Bicharacter generator table violates order compatibility.
struct IllFormedBicharacter : Error {
    using Error::Error;
};

/// Torus value mixes a rational part with an irrational symbol where a pure
/// value is required.
struct UnsupportedTorusValue : Error {
    using Error::Error;
};

}  // namespace produal
