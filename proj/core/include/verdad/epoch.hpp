#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace verdad {

// User-facing astronomical time scales. TAI and TT exist only inside the
// conversion chain.
enum class TimeScale : std::uint8_t { UTC, TDB };

std::string_view to_string(TimeScale scale) noexcept;

// An instant as days elapsed since 2000-01-01T12:00:00 *as read on its own
// scale*: UTC 0.0 and TDB 0.0 name instants roughly 64 s apart, and all
// cross-scale offsets live in convert_epoch. A single 64-bit day count gives
// about microsecond resolution at +/-100 years from J2000.
struct Epoch {
    TimeScale scale = TimeScale::UTC;
    double days = 0.0;

    bool operator==(const Epoch& o) const {
        return scale == o.scale && days == o.days;
    }
};

// Proleptic Gregorian calendar fields. `second` may reach into [60, 61) only
// for a UTC instant sitting on a listed leap second.
struct CalendarDateTime {
    int year = 2000;
    int month = 1;
    int day = 1;
    int hour = 0;
    int minute = 0;
    double second = 0.0;
};

// UTC -> TAI (leap table) -> TT (fixed 32.184 s) -> TDB (single-term
// periodic approximation, good to ~50 us against the full series).
// Same-scale conversion returns the input unchanged. Throws
// EpochOutOfLeapTable when the instant predates the leap table.
Epoch convert_epoch(const Epoch& e, TimeScale target_scale);

// Validates the calendar fields and produces the signed day count. Throws
// InvalidCalendarDate or InvalidLeapSecond.
Epoch epoch_from_calendar(const CalendarDateTime& cal, TimeScale scale);

// Splits an epoch back into calendar fields on its own scale. Instants that
// were entered as a leap second 23:59:60 render as 00:00:00 of the next day
// (the float day count cannot keep them apart).
CalendarDateTime calendar_from_epoch(const Epoch& e);

// "2000-01-01T12:01:04.183929 TDB" — microsecond precision, trailing
// fraction zeros trimmed, scale suffix appended.
std::string format_iso8601(const Epoch& e);

// Strict ISO-8601 subset: YYYY-MM-DD, optionally followed by
// 'T'HH:MM:SS[.frac] and an optional trailing 'Z'. No UTC offsets.
CalendarDateTime parse_iso8601(std::string_view text);

// One leap-second table entry: cumulative TAI-UTC seconds effective from
// 00:00:00 UTC on the given date.
struct LeapEntry {
    double utc_days_threshold;
    int offset_seconds;
};

// Parses the plain-text leap table format ("YYYY-MM-DD offset" per line).
std::vector<LeapEntry> parse_leap_table(std::string_view text);

// The compiled-in table (see core/data/leap_seconds.txt for the source).
const std::vector<LeapEntry>& builtin_leap_table();

// Signed day count from 2000-01-01 for a civil date (Gregorian).
std::int64_t civil_days_from_j2000(int year, int month, int day);

}  // namespace verdad
