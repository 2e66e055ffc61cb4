#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "verdad/canonical.hpp"
#include "verdad/errors.hpp"
#include "verdad/unit.hpp"

using namespace verdad;

TEST_CASE("parse_unit resolves SI prefixes") {
    const UnitExpr km = parse_unit("km");
    CHECK(km.dims[static_cast<int>(Dim::Length)] == Rational(1));
    for (int d = 1; d < 8; ++d) CHECK(km.dims[d].is_zero());
    CHECK(km.scale.as_double() == 1000.0);
    CHECK(km.label == "km");
}

TEST_CASE("parse_unit coherent SI compound") {
    const UnitExpr u = parse_unit("kg*m/s^2");
    CHECK(u.dims[static_cast<int>(Dim::Mass)] == Rational(1));
    CHECK(u.dims[static_cast<int>(Dim::Length)] == Rational(1));
    CHECK(u.dims[static_cast<int>(Dim::Time)] == Rational(-2));
    CHECK(u.scale.as_double() == 1.0);
    CHECK(u.label == "kg*m/s^2");
}

TEST_CASE("parse_unit rejects unknown symbols") {
    CHECK_THROWS_AS(parse_unit("slug"), UnknownUnitSymbol);
    CHECK_THROWS_AS(parse_unit("furlngs"), UnknownUnitSymbol);
}

TEST_CASE("parse_unit rejects malformed expressions") {
    CHECK_THROWS_AS(parse_unit(""), MalformedExpression);
    CHECK_THROWS_AS(parse_unit("m*"), MalformedExpression);
    CHECK_THROWS_AS(parse_unit("m^"), MalformedExpression);
    CHECK_THROWS_AS(parse_unit("*m"), MalformedExpression);
    CHECK_THROWS_AS(parse_unit("m2"), MalformedExpression);
    CHECK_THROWS_AS(parse_unit("(m"), MalformedExpression);
}

TEST_CASE("canonical label sorts factors and round-trips") {
    const UnitExpr a = parse_unit("m*kg/s^2");
    CHECK(a.label == "kg*m/s^2");
    const UnitExpr b = parse_unit(a.label);
    CHECK(b.dims == a.dims);
    CHECK(b.scale == a.scale);
    CHECK(b.label == a.label);

    CHECK(parse_unit("s^-1").label == "1/s");
    CHECK(parse_unit("1/s").label == "1/s");
    CHECK(parse_unit("2*m").label == "2*m");
    CHECK(parse_unit("m/2").label == "1/2*m");
    CHECK(parse_unit("m*s/s").label == "m");
    CHECK(parse_unit("(m/s)^2").label == "m^2/s^2");
}

TEST_CASE("exact-symbol matches beat prefix splits") {
    // "min" is the minute, not milli-inch.
    CHECK(parse_unit("min").dims[static_cast<int>(Dim::Time)] == Rational(1));
    CHECK(parse_unit("min").scale.as_double() == 60.0);
    // "cd" is the candela.
    CHECK(parse_unit("cd").dims[static_cast<int>(Dim::Luminous)] == Rational(1));
    // Prefixes do not attach to non-SI symbols.
    CHECK_THROWS_AS(parse_unit("kft"), UnknownUnitSymbol);
}

TEST_CASE("convert_quantity exact SI prefix") {
    const Quantity q(1000.0, parse_unit("m"));
    const Quantity r = convert_quantity(q, parse_unit("km"));
    CHECK(r.magnitude == 1.0);
    CHECK(r.unit.label == "km");
    // input untouched
    CHECK(q.magnitude == 1000.0);
    CHECK(q.unit.label == "m");
}

TEST_CASE("convert_quantity identity dims identity scale") {
    const Quantity q(1.0, parse_unit("N"));
    const Quantity r = convert_quantity(q, parse_unit("kg*m/s^2"));
    CHECK(r.magnitude == 1.0);
}

TEST_CASE("convert_quantity lbf to N matches the standards value") {
    // 1 lbf = 0.45359237 kg x 9.80665 m/s^2 = 4.4482216152605 N exactly.
    const Quantity q(1.0, parse_unit("lbf"));
    const Quantity r = convert_quantity(q, parse_unit("N"));
    CHECK(float_repr(r.magnitude) == "4.4482216152605");
}

TEST_CASE("convert_quantity dimension mismatch") {
    const Quantity q(1.0, parse_unit("m"));
    CHECK_THROWS_AS(convert_quantity(q, parse_unit("s")), DimensionMismatch);
}

TEST_CASE("angle is a base dimension") {
    const Quantity q(180.0, parse_unit("deg"));
    const Quantity r = convert_quantity(q, parse_unit("rad"));
    CHECK(r.magnitude == doctest::Approx(std::numbers::pi).epsilon(1e-15));
    // deg does not convert to dimensionless
    CHECK_THROWS_AS(convert_quantity(q, parse_unit("1")), DimensionMismatch);
}

TEST_CASE("quantity magnitude must be finite") {
    CHECK_THROWS_AS(Quantity(std::nan(""), parse_unit("m")), InvalidValue);
    CHECK_THROWS_AS(Quantity(INFINITY, parse_unit("m")), InvalidValue);
}

TEST_CASE("fractional exponents take exact roots where possible") {
    const UnitExpr u = parse_unit("km^1/2");
    // (1000)^(1/2) is irrational; handled numerically.
    CHECK(u.scale.as_double() == doctest::Approx(std::sqrt(1000.0)).epsilon(1e-15));
    const UnitExpr v = parse_unit(u.label);
    CHECK(v.scale == u.scale);
    CHECK(v.dims == u.dims);
    CHECK(v.dims[static_cast<int>(Dim::Length)] == Rational(1, 2));
}

TEST_CASE("unit round trip and composition properties") {
    // Alternatives with identical dims for substitution.
    const std::vector<std::vector<std::string>> groups = {
        {"m", "km", "ft", "in", "nmi", "AU", "cm", "mm"},
        {"s", "hr", "min", "day", "ms"},
        {"kg", "g", "lbm", "mg"},
        {"N", "kN", "lbf", "MN"},
        {"deg", "rad", "mrad"},
    };
    std::mt19937 rng(20260810);
    std::uniform_int_distribution<std::size_t> group_pick(0, groups.size() - 1);
    std::uniform_real_distribution<double> mag(-1e6, 1e6);

    double worst_rel = 0.0;
    for (int iter = 0; iter < 1000; ++iter) {
        const auto& group = groups[group_pick(rng)];
        std::uniform_int_distribution<std::size_t> sym(0, group.size() - 1);
        const UnitExpr u0 = parse_unit(group[sym(rng)]);
        const UnitExpr u1 = parse_unit(group[sym(rng)]);
        const UnitExpr u2 = parse_unit(group[sym(rng)]);

        const Quantity q(mag(rng), u0);
        const Quantity back = convert_quantity(convert_quantity(q, u1), u0);
        if (q.magnitude != 0.0) {
            const double rel = std::abs(back.magnitude - q.magnitude) /
                               std::abs(q.magnitude);
            worst_rel = std::max(worst_rel, rel);
        }

        const Quantity direct = convert_quantity(q, u2);
        const Quantity chained = convert_quantity(convert_quantity(q, u1), u2);
        if (direct.magnitude != 0.0) {
            const double rel =
                std::abs(chained.magnitude - direct.magnitude) /
                std::abs(direct.magnitude);
            worst_rel = std::max(worst_rel, rel);
        }
    }
    CHECK(worst_rel < 1e-12);
}

TEST_CASE("unit table text format round-trips") {
    const auto table = parse_unit_table("x 1,0,0,0,0,0,0,0 3048/10000 prefixable\n");
    REQUIRE(table.size() == 1);
    CHECK(table[0].symbol == "x");
    CHECK(table[0].prefixable);
    CHECK(table[0].scale.as_double() == 0.3048);

    CHECK_THROWS_AS(parse_unit_table("bad 1,0 1\n"), InvalidValue);
    CHECK_THROWS_AS(parse_unit_table("bad 1,0,0,0,0,0,0,0 0\n"), InvalidValue);
}

TEST_CASE("builtin table has the spec symbols") {
    for (const char* sym :
         {"m", "g", "s", "A", "K", "mol", "cd", "rad", "N", "Pa", "J", "W",
          "lbf", "lbm", "ft", "in", "nmi", "AU", "deg", "hr", "min", "day"})
        CHECK_NOTHROW(parse_unit(sym));
}
