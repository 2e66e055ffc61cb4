#include <doctest.h>

#include <cmath>

#include "verdad/epoch.hpp"
#include "verdad/errors.hpp"

using namespace verdad;

namespace {

// One microsecond in days.
constexpr double kMicrosecondDays = 1e-6 / 86400.0;

// Frozen values from the independent oracle (tests/oracle/tdb_oracle.py).
constexpr double kUtc0AsTdb = 0.0007428695438040338;
constexpr double kUtc5000_25AsTdb = 5000.250777575101;
constexpr double kUtcNeg3000_75AsTdb = -3000.749326592962;
constexpr double kUtc12000AsTdb = 12000.000800724983;

}  // namespace

TEST_CASE("same-scale conversion is the identity") {
    const Epoch e{TimeScale::UTC, 123.456};
    const Epoch r = convert_epoch(e, TimeScale::UTC);
    CHECK(r == e);
}

TEST_CASE("UTC J2000 to TDB matches the oracle") {
    const Epoch r = convert_epoch({TimeScale::UTC, 0.0}, TimeScale::TDB);
    CHECK(r.scale == TimeScale::TDB);
    CHECK(std::abs(r.days - kUtc0AsTdb) < kMicrosecondDays);
}

TEST_CASE("oracle grid spot checks") {
    CHECK(std::abs(convert_epoch({TimeScale::UTC, 5000.25}, TimeScale::TDB).days -
                   kUtc5000_25AsTdb) < kMicrosecondDays);
    CHECK(std::abs(convert_epoch({TimeScale::UTC, -3000.75}, TimeScale::TDB).days -
                   kUtcNeg3000_75AsTdb) < kMicrosecondDays);
    CHECK(std::abs(convert_epoch({TimeScale::UTC, 12000.0}, TimeScale::TDB).days -
                   kUtc12000AsTdb) < kMicrosecondDays);
}

TEST_CASE("UTC<->TDB round trip under a microsecond across 1972-2035") {
    // 1972-01-01 is about -10226.5; 2035-12-31 about +13148.5.
    const double lo = -10226.0;
    const double hi = 13148.0;
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double utc = lo + (hi - lo) * i / 199.0 + 0.3;
        const Epoch tdb = convert_epoch({TimeScale::UTC, utc}, TimeScale::TDB);
        const Epoch back = convert_epoch(tdb, TimeScale::UTC);
        worst = std::max(worst, std::abs(back.days - utc));
    }
    CHECK(worst < kMicrosecondDays);

    const Epoch probe{TimeScale::UTC, 8765.4321};
    const double rt =
        convert_epoch(convert_epoch(probe, TimeScale::TDB), TimeScale::UTC).days;
    CHECK(std::abs(rt - probe.days) < 1.16e-11);
}

TEST_CASE("UTC to TDB is strictly monotone") {
    double prev = convert_epoch({TimeScale::UTC, -10226.0}, TimeScale::TDB).days;
    for (int i = 1; i < 500; ++i) {
        const double utc = -10226.0 + i * 23374.0 / 499.0;
        const double tdb = convert_epoch({TimeScale::UTC, utc}, TimeScale::TDB).days;
        CHECK(tdb > prev);
        prev = tdb;
    }
}

TEST_CASE("epochs before the leap table are rejected") {
    CHECK_THROWS_AS(convert_epoch({TimeScale::UTC, -15000.0}, TimeScale::TDB),
                    EpochOutOfLeapTable);
    // TDB conversion landing before 1972 also fails.
    CHECK_THROWS_AS(convert_epoch({TimeScale::TDB, -15000.0}, TimeScale::UTC),
                    EpochOutOfLeapTable);
}

TEST_CASE("epoch_from_calendar reference instants") {
    CHECK(epoch_from_calendar({2000, 1, 1, 12, 0, 0.0}, TimeScale::UTC).days == 0.0);
    CHECK(epoch_from_calendar({2000, 1, 2, 12, 0, 0.0}, TimeScale::UTC).days == 1.0);
    CHECK(epoch_from_calendar({1999, 12, 31, 12, 0, 0.0}, TimeScale::TDB).days == -1.0);
    CHECK(epoch_from_calendar({2000, 1, 1, 0, 0, 0.0}, TimeScale::UTC).days == -0.5);
}

TEST_CASE("epoch_from_calendar validates fields") {
    CHECK_THROWS_AS(epoch_from_calendar({2000, 13, 1, 0, 0, 0.0}, TimeScale::UTC),
                    InvalidCalendarDate);
    CHECK_THROWS_AS(epoch_from_calendar({2001, 2, 29, 0, 0, 0.0}, TimeScale::UTC),
                    InvalidCalendarDate);
    CHECK_NOTHROW(epoch_from_calendar({2000, 2, 29, 0, 0, 0.0}, TimeScale::UTC));
    CHECK_THROWS_AS(epoch_from_calendar({2000, 1, 1, 24, 0, 0.0}, TimeScale::UTC),
                    InvalidCalendarDate);
    CHECK_THROWS_AS(epoch_from_calendar({2000, 1, 1, 0, 60, 0.0}, TimeScale::UTC),
                    InvalidCalendarDate);
    CHECK_THROWS_AS(epoch_from_calendar({2000, 1, 1, 0, 0, 61.5}, TimeScale::UTC),
                    InvalidCalendarDate);
}

TEST_CASE("leap seconds are valid only at listed UTC instants") {
    // 2016-12-31T23:59:60 UTC precedes the 2017-01-01 entry.
    CHECK_NOTHROW(epoch_from_calendar({2016, 12, 31, 23, 59, 60.0}, TimeScale::UTC));
    CHECK_NOTHROW(epoch_from_calendar({1998, 12, 31, 23, 59, 60.0}, TimeScale::UTC));
    // No leap second was announced for mid-2016.
    CHECK_THROWS_AS(epoch_from_calendar({2016, 6, 30, 23, 59, 60.0}, TimeScale::UTC),
                    InvalidLeapSecond);
    // TDB has no leap seconds.
    CHECK_THROWS_AS(epoch_from_calendar({2016, 12, 31, 23, 59, 60.0}, TimeScale::TDB),
                    InvalidLeapSecond);
    // Second 60 anywhere but 23:59 is invalid.
    CHECK_THROWS_AS(epoch_from_calendar({2016, 12, 31, 22, 59, 60.0}, TimeScale::UTC),
                    InvalidLeapSecond);
    // The inserted second maps onto the next midnight.
    const Epoch leap = epoch_from_calendar({2016, 12, 31, 23, 59, 60.0}, TimeScale::UTC);
    const Epoch midnight = epoch_from_calendar({2017, 1, 1, 0, 0, 0.0}, TimeScale::UTC);
    CHECK(leap.days == midnight.days);
}

TEST_CASE("ISO-8601 formatting") {
    CHECK(format_iso8601({TimeScale::UTC, 0.0}) == "2000-01-01T12:00:00 UTC");
    CHECK(format_iso8601({TimeScale::UTC, 1.0}) == "2000-01-02T12:00:00 UTC");
    CHECK(format_iso8601({TimeScale::UTC, -0.5}) == "2000-01-01T00:00:00 UTC");
    // Frozen oracle instant.
    CHECK(format_iso8601({TimeScale::TDB, kUtc0AsTdb}) ==
          "2000-01-01T12:01:04.183929 TDB");
}

TEST_CASE("ISO-8601 parsing") {
    const CalendarDateTime cal = parse_iso8601("2000-01-01T12:00:00");
    CHECK(epoch_from_calendar(cal, TimeScale::UTC).days == 0.0);
    CHECK(epoch_from_calendar(parse_iso8601("2000-01-01T12:00:00Z"), TimeScale::UTC)
              .days == 0.0);
    CHECK(epoch_from_calendar(parse_iso8601("2000-01-02"), TimeScale::UTC).days ==
          0.5);
    const CalendarDateTime frac = parse_iso8601("2000-01-01T12:00:00.25");
    CHECK(frac.second == 0.25);
    CHECK_THROWS_AS(parse_iso8601("2000-1-1"), InvalidCalendarDate);
    CHECK_THROWS_AS(parse_iso8601("2000-01-01T12:00"), InvalidCalendarDate);
    CHECK_THROWS_AS(parse_iso8601("garbage"), InvalidCalendarDate);
}

TEST_CASE("format/parse round trip at microsecond resolution") {
    for (const double days : {0.0, 123.456789, -7000.123456, 9131.25}) {
        const Epoch e{TimeScale::UTC, days};
        const std::string iso = format_iso8601(e);
        const std::string date_part = iso.substr(0, iso.size() - 4);
        const Epoch back =
            epoch_from_calendar(parse_iso8601(date_part), TimeScale::UTC);
        CHECK(std::abs(back.days - days) < kMicrosecondDays);
    }
}

TEST_CASE("leap table text format") {
    const auto table = parse_leap_table("1972-01-01 10\n1972-07-01 11\n");
    REQUIRE(table.size() == 2);
    CHECK(table[0].offset_seconds == 10);
    CHECK_THROWS_AS(parse_leap_table(""), InvalidValue);
    CHECK_THROWS_AS(parse_leap_table("junk\n"), InvalidValue);
    CHECK_THROWS_AS(parse_leap_table("1980-01-01 19\n1972-01-01 10\n"), InvalidValue);
}
