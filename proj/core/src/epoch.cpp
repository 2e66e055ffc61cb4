#include "verdad/epoch.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "verdad/errors.hpp"

namespace verdad {

namespace {

constexpr double kSecPerDay = 86400.0;
constexpr double kTtMinusTai = 32.184;

// Hinnant's civil-date algorithms, days since 1970-01-01.
std::int64_t days_from_civil(std::int64_t y, int m, int d) {
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const auto yoe = static_cast<std::int64_t>(y - era * 400);
    const std::int64_t doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
    const std::int64_t doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + doe - 719468;
}

void civil_from_days(std::int64_t z, int& y_out, int& m_out, int& d_out) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const auto doe = static_cast<std::int64_t>(z - era * 146097);
    const std::int64_t yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    std::int64_t y = yoe + era * 400;
    const std::int64_t doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const std::int64_t mp = (5 * doy + 2) / 153;
    const std::int64_t d = doy - (153 * mp + 2) / 5 + 1;
    const std::int64_t m = mp + (mp < 10 ? 3 : -9);
    y += (m <= 2);
    y_out = static_cast<int>(y);
    m_out = static_cast<int>(m);
    d_out = static_cast<int>(d);
}

const std::int64_t kJ2000Civil = days_from_civil(2000, 1, 1);

bool is_gregorian_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                    31, 31, 30, 31, 30, 31};
    if (m == 2 && is_gregorian_leap(y)) return 29;
    return lengths[m - 1];
}

double tai_minus_utc_at(double utc_days) {
    const auto& table = builtin_leap_table();
    if (utc_days < table.front().utc_days_threshold)
        throw EpochOutOfLeapTable("UTC epoch " + std::to_string(utc_days) +
                                  " days predates the leap-second table");
    const auto it = std::upper_bound(
        table.begin(), table.end(), utc_days,
        [](double v, const LeapEntry& e) { return v < e.utc_days_threshold; });
    return static_cast<double>(std::prev(it)->offset_seconds);
}

double tdb_minus_tt_seconds(double tt_days) {
    return 0.001657 * std::sin(6.240060 + 0.017202 * tt_days);
}

double utc_to_tdb(double utc) {
    const double tai = utc + tai_minus_utc_at(utc) / kSecPerDay;
    const double tt = tai + kTtMinusTai / kSecPerDay;
    return tt + tdb_minus_tt_seconds(tt) / kSecPerDay;
}

double tdb_to_utc(double tdb) {
    // The periodic term varies by <2e-10 s over its own size, so two
    // fixed-point rounds land well under a nanosecond.
    double tt = tdb;
    for (int i = 0; i < 3; ++i) tt = tdb - tdb_minus_tt_seconds(tt) / kSecPerDay;
    const double tai = tt - kTtMinusTai / kSecPerDay;
    double utc = tai;
    for (int i = 0; i < 3; ++i) utc = tai - tai_minus_utc_at(utc) / kSecPerDay;
    return utc;
}

}  // namespace

std::string_view to_string(TimeScale scale) noexcept {
    return scale == TimeScale::UTC ? "UTC" : "TDB";
}

std::int64_t civil_days_from_j2000(int year, int month, int day) {
    return days_from_civil(year, month, day) - kJ2000Civil;
}

namespace builtin_data {
extern const char* kLeapSeconds;
}

std::vector<LeapEntry> parse_leap_table(std::string_view text) {
    std::vector<LeapEntry> out;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        auto eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\r'))
            line.remove_suffix(1);
        while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
        if (line.empty()) continue;

        int y = 0, m = 0, d = 0, off = 0;
        if (std::sscanf(std::string(line).c_str(), "%d-%d-%d %d", &y, &m, &d, &off) != 4)
            throw InvalidValue("leap table line " + std::to_string(lineno) +
                               ": expected 'YYYY-MM-DD offset'");
        LeapEntry entry;
        entry.utc_days_threshold =
            static_cast<double>(civil_days_from_j2000(y, m, d)) - 0.5;
        entry.offset_seconds = off;
        out.push_back(entry);
    }
    if (out.empty()) throw InvalidValue("leap table is empty");
    if (!std::is_sorted(out.begin(), out.end(),
                        [](const LeapEntry& a, const LeapEntry& b) {
                            return a.utc_days_threshold < b.utc_days_threshold;
                        }))
        throw InvalidValue("leap table entries out of order");
    return out;
}

const std::vector<LeapEntry>& builtin_leap_table() {
    static const std::vector<LeapEntry> table =
        parse_leap_table(builtin_data::kLeapSeconds);
    return table;
}

Epoch convert_epoch(const Epoch& e, TimeScale target_scale) {
    if (e.scale == target_scale) return e;
    if (e.scale == TimeScale::UTC) return {TimeScale::TDB, utc_to_tdb(e.days)};
    return {TimeScale::UTC, tdb_to_utc(e.days)};
}

Epoch epoch_from_calendar(const CalendarDateTime& cal, TimeScale scale) {
    if (cal.month < 1 || cal.month > 12)
        throw InvalidCalendarDate("month out of range: " + std::to_string(cal.month));
    if (cal.day < 1 || cal.day > days_in_month(cal.year, cal.month))
        throw InvalidCalendarDate("day out of range: " + std::to_string(cal.day));
    if (cal.hour < 0 || cal.hour > 23)
        throw InvalidCalendarDate("hour out of range: " + std::to_string(cal.hour));
    if (cal.minute < 0 || cal.minute > 59)
        throw InvalidCalendarDate("minute out of range: " + std::to_string(cal.minute));
    if (!(cal.second >= 0.0) || cal.second >= 61.0 || !std::isfinite(cal.second))
        throw InvalidCalendarDate("second out of range");

    const std::int64_t day_count = civil_days_from_j2000(cal.year, cal.month, cal.day);

    if (cal.second >= 60.0) {
        // Only a listed positive leap second at 23:59:60 UTC is admissible.
        if (scale != TimeScale::UTC || cal.hour != 23 || cal.minute != 59)
            throw InvalidLeapSecond("second 60 is only valid at 23:59:60 UTC");
        const double next_midnight = static_cast<double>(day_count + 1) - 0.5;
        const auto& table = builtin_leap_table();
        const bool listed = std::any_of(
            table.begin() + 1, table.end(), [&](const LeapEntry& e) {
                return e.utc_days_threshold == next_midnight;
            });
        if (!listed)
            throw InvalidLeapSecond("no leap second announced at end of " +
                                    std::to_string(cal.year) + "-" +
                                    std::to_string(cal.month) + "-" +
                                    std::to_string(cal.day));
    }

    const double sec_of_day =
        cal.hour * 3600.0 + cal.minute * 60.0 + cal.second;
    return {scale, static_cast<double>(day_count) + (sec_of_day - 43200.0) / kSecPerDay};
}

CalendarDateTime calendar_from_epoch(const Epoch& e) {
    // Work in integer microseconds relative to J2000 noon to keep the
    // split deterministic.
    const double total_us = std::round(e.days * kSecPerDay * 1e6);
    const auto us_from_ref = static_cast<std::int64_t>(total_us);
    std::int64_t us_of_day = us_from_ref + 43200LL * 1000000LL;
    const std::int64_t us_per_day = 86400LL * 1000000LL;
    std::int64_t whole_days = us_of_day / us_per_day;
    if (us_of_day < 0 && us_of_day % us_per_day != 0) --whole_days;
    us_of_day -= whole_days * us_per_day;

    CalendarDateTime cal;
    civil_from_days(kJ2000Civil + whole_days, cal.year, cal.month, cal.day);
    const std::int64_t sec = us_of_day / 1000000;
    const std::int64_t us = us_of_day % 1000000;
    cal.hour = static_cast<int>(sec / 3600);
    cal.minute = static_cast<int>((sec % 3600) / 60);
    cal.second = static_cast<double>(sec % 60) + static_cast<double>(us) * 1e-6;
    return cal;
}

std::string format_iso8601(const Epoch& e) {
    const CalendarDateTime cal = calendar_from_epoch(e);
    const auto whole_sec = static_cast<int>(cal.second);
    const auto us = static_cast<std::int64_t>(
        std::round((cal.second - whole_sec) * 1e6));

    char buf[48];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d", cal.year,
                  cal.month, cal.day, cal.hour, cal.minute, whole_sec);
    std::string out = buf;
    if (us > 0) {
        std::snprintf(buf, sizeof buf, ".%06lld", static_cast<long long>(us));
        std::string frac = buf;
        while (frac.back() == '0') frac.pop_back();
        out += frac;
    }
    out += ' ';
    out += to_string(e.scale);
    return out;
}

CalendarDateTime parse_iso8601(std::string_view text) {
    const auto bad = [&](const char* why) -> InvalidCalendarDate {
        return InvalidCalendarDate(std::string("bad ISO-8601 text '") +
                                   std::string(text) + "': " + why);
    };
    if (!text.empty() && text.back() == 'Z') text.remove_suffix(1);

    CalendarDateTime cal;
    const auto parse_int = [&](std::string_view s, int& out) {
        const auto* first = s.data();
        const auto* last = s.data() + s.size();
        auto [ptr, ec] = std::from_chars(first, last, out);
        return ec == std::errc() && ptr == last;
    };

    std::string_view date = text;
    std::string_view clock;
    if (const auto t = text.find('T'); t != std::string_view::npos) {
        date = text.substr(0, t);
        clock = text.substr(t + 1);
    }
    if (date.size() != 10 || date[4] != '-' || date[7] != '-')
        throw bad("expected YYYY-MM-DD");
    if (!parse_int(date.substr(0, 4), cal.year) ||
        !parse_int(date.substr(5, 2), cal.month) ||
        !parse_int(date.substr(8, 2), cal.day))
        throw bad("non-numeric date fields");

    if (!clock.empty()) {
        if (clock.size() < 8 || clock[2] != ':' || clock[5] != ':')
            throw bad("expected HH:MM:SS");
        int whole = 0;
        if (!parse_int(clock.substr(0, 2), cal.hour) ||
            !parse_int(clock.substr(3, 2), cal.minute) ||
            !parse_int(clock.substr(6, 2), whole))
            throw bad("non-numeric time fields");
        cal.second = whole;
        if (clock.size() > 8) {
            if (clock[8] != '.' || clock.size() == 9) throw bad("malformed fraction");
            double frac = 0.0, place = 0.1;
            for (const char c : clock.substr(9)) {
                if (c < '0' || c > '9') throw bad("malformed fraction");
                frac += (c - '0') * place;
                place *= 0.1;
            }
            cal.second += frac;
        }
    }
    return cal;
}

}  // namespace verdad
