#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fuelreset {

// Calendar date, proleptic Gregorian. No time zone: the feeds carry local
// clock time and the analysis windows avoid DST transitions.
struct Date {
    int year = 1970;
    int month = 1;  // 1..12
    int day = 1;    // 1..31

    friend bool operator==(const Date&, const Date&) = default;
    friend auto operator<=>(const Date&, const Date&) = default;
};

struct DateTime {
    Date date;
    int hour = 0;
    int minute = 0;
    int second = 0;
};

// Days since 1970-01-01 (negative before).
std::int64_t days_from_civil(const Date& d);
Date civil_from_days(std::int64_t days);

std::int64_t epoch_seconds(const DateTime& dt);

// 0=Sunday .. 6=Saturday
int day_of_week(const Date& d);
bool is_weekday(const Date& d);

enum class DayFilter { Weekday, Weekend, All };
bool matches_filter(const Date& d, DayFilter f);

std::optional<DayFilter> parse_day_filter(std::string_view token);
std::string to_string(DayFilter f);

// "YYYY-MM-DD"
std::optional<Date> parse_date(std::string_view text);
// "YYYY-MM-DDTHH:MM:SS" ('T' or ' ' separator; seconds optional)
std::optional<DateTime> parse_datetime(std::string_view text);

std::string to_string(const Date& d);

}  // namespace fuelreset
