#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "verdad/rational.hpp"

namespace verdad {

// Base dimensions, in canonical order. Angle is a base dimension: deg and
// rad convert into each other and neither converts to dimensionless.
enum class Dim : std::uint8_t {
    Length = 0,
    Mass,
    Time,
    Current,
    Temperature,
    Amount,
    Luminous,
    Angle,
};

inline constexpr std::size_t kDimCount = 8;

using DimVector = std::array<Rational, kDimCount>;

// Exact positive factor converting one unit of an expression to coherent SI.
// Kept as rational * pi^e * residual; the residual is 1.0 unless a fractional
// power forced an inexact root. Conversions between scales with equal pi
// exponent and residual reduce to one exact rational ratio.
class ExactScale {
public:
    ExactScale() : rational_(1) {}
    explicit ExactScale(mpq_class rational, Rational pi_exp = Rational(0),
                        double residual = 1.0)
        : rational_(std::move(rational)), pi_exp_(pi_exp), residual_(residual) {
        rational_.canonicalize();
    }

    static ExactScale one() { return ExactScale(); }
    static ExactScale from_fraction(long num, long den) {
        return ExactScale(mpq_class(num, den));
    }

    const mpq_class& rational() const noexcept { return rational_; }
    Rational pi_exp() const noexcept { return pi_exp_; }
    double residual() const noexcept { return residual_; }

    ExactScale operator*(const ExactScale& o) const;
    ExactScale operator/(const ExactScale& o) const;
    ExactScale pow(const Rational& e) const;

    double as_double() const;

    bool operator==(const ExactScale& o) const {
        return rational_ == o.rational_ && pi_exp_ == o.pi_exp_ &&
               residual_ == o.residual_;
    }
    bool operator!=(const ExactScale& o) const { return !(*this == o); }

    // Ratio this/other as a correctly-rounded double where possible.
    static double ratio(const ExactScale& a, const ExactScale& b);

private:
    mpq_class rational_;
    Rational pi_exp_{0};
    double residual_ = 1.0;
};

// A parsed unit expression: base-dimension exponents, the exact scale to
// coherent SI, and the canonical text form that round-trips through
// parse_unit with identical dims and scale.
struct UnitExpr {
    DimVector dims{};
    ExactScale scale;
    std::string label;

    bool convertible_to(const UnitExpr& o) const noexcept { return dims == o.dims; }
    bool is_dimensionless() const noexcept;

    bool operator==(const UnitExpr& o) const {
        return dims == o.dims && scale == o.scale && label == o.label;
    }
};

// Numeric magnitude paired with a physical unit. Magnitude is always finite;
// NaN or infinity throws InvalidValue.
struct Quantity {
    double magnitude = 0.0;
    UnitExpr unit;

    Quantity() = default;
    Quantity(double mag, UnitExpr u);

    bool operator==(const Quantity& o) const {
        return magnitude == o.magnitude && unit == o.unit;
    }
};

// Parses a unit expression ("km", "kg*m/s^2", "deg", "1/s", "m^1/2") over
// the built-in symbol table. Case-sensitive. Throws UnknownUnitSymbol or
// MalformedExpression.
UnitExpr parse_unit(std::string_view text);

// Returns a new quantity expressed in `target`. Throws DimensionMismatch
// when the dimensions differ.
Quantity convert_quantity(const Quantity& q, const UnitExpr& target);

// One entry of the unit symbol table.
struct UnitSymbol {
    std::string symbol;
    DimVector dims;
    ExactScale scale;
    bool prefixable = false;
};

// Parses the plain-text symbol table format (one entry per line:
// symbol, 8-component dims vector, exact scale as a rational with an
// optional pi factor, optional "prefixable" flag).
std::vector<UnitSymbol> parse_unit_table(std::string_view text);

// The compiled-in symbol table (see core/data/units.txt for the source).
const std::vector<UnitSymbol>& builtin_unit_table();

}  // namespace verdad
