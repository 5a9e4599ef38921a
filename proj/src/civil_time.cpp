#include "fuelreset/civil_time.hpp"

#include <charconv>
#include <cstdio>

namespace fuelreset {

namespace {

bool parse_int_field(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

bool valid_date(const Date& d) {
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) return false;
    // round-trip through the day count rejects e.g. Feb 30
    return civil_from_days(days_from_civil(d)) == d;
}

}  // namespace

// Howard Hinnant's chrono-compatible civil day algorithms.
std::int64_t days_from_civil(const Date& d) {
    int y = d.year;
    const int m = d.month;
    const int dd = d.day;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + dd - 1;
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

Date civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned d = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return Date{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(d)};
}

std::int64_t epoch_seconds(const DateTime& dt) {
    return days_from_civil(dt.date) * 86400 + dt.hour * 3600 + dt.minute * 60 + dt.second;
}

int day_of_week(const Date& d) {
    // 1970-01-01 was a Thursday
    std::int64_t days = days_from_civil(d);
    return static_cast<int>(((days % 7) + 11) % 7);  // +4 shifted into positive range
}

bool is_weekday(const Date& d) {
    const int w = day_of_week(d);
    return w >= 1 && w <= 5;
}

bool matches_filter(const Date& d, DayFilter f) {
    switch (f) {
        case DayFilter::Weekday: return is_weekday(d);
        case DayFilter::Weekend: return !is_weekday(d);
        case DayFilter::All: return true;
    }
    return false;
}

std::optional<DayFilter> parse_day_filter(std::string_view token) {
    if (token == "weekday") return DayFilter::Weekday;
    if (token == "weekend") return DayFilter::Weekend;
    if (token == "all") return DayFilter::All;
    return std::nullopt;
}

std::string to_string(DayFilter f) {
    switch (f) {
        case DayFilter::Weekday: return "weekday";
        case DayFilter::Weekend: return "weekend";
        case DayFilter::All: return "all";
    }
    return "?";
}

std::optional<Date> parse_date(std::string_view text) {
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
    Date d;
    if (!parse_int_field(text.substr(0, 4), d.year) ||
        !parse_int_field(text.substr(5, 2), d.month) ||
        !parse_int_field(text.substr(8, 2), d.day))
        return std::nullopt;
    if (!valid_date(d)) return std::nullopt;
    return d;
}

std::optional<DateTime> parse_datetime(std::string_view text) {
    // YYYY-MM-DD[T ]HH:MM[:SS]
    if (text.size() < 16) return std::nullopt;
    if (text[10] != 'T' && text[10] != ' ') return std::nullopt;
    auto date = parse_date(text.substr(0, 10));
    if (!date) return std::nullopt;
    DateTime dt;
    dt.date = *date;
    if (text[13] != ':') return std::nullopt;
    if (!parse_int_field(text.substr(11, 2), dt.hour) ||
        !parse_int_field(text.substr(14, 2), dt.minute))
        return std::nullopt;
    if (text.size() >= 19) {
        if (text[16] != ':') return std::nullopt;
        if (!parse_int_field(text.substr(17, 2), dt.second)) return std::nullopt;
        if (text.size() > 19) return std::nullopt;
    } else if (text.size() != 16) {
        return std::nullopt;
    }
    if (dt.hour < 0 || dt.hour > 23 || dt.minute < 0 || dt.minute > 59 ||
        dt.second < 0 || dt.second > 60)
        return std::nullopt;
    return dt;
}

std::string to_string(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

}  // namespace fuelreset
