#pragma once

#include <cctype>
#include <string>

#include "fgplab/errors.hpp"

namespace fgplab {

// Trading-time calendar: 250 trading days per year, 6.5 hours per day.
// All library-internal times are in years under this convention.
inline constexpr double kTradingDaysPerYear = 250.0;
inline constexpr double kTradingHoursPerDay = 6.5;
inline constexpr double kYearsPerDay = 1.0 / kTradingDaysPerYear;
inline constexpr double kYearsPerHour = kYearsPerDay / kTradingHoursPerDay;
inline constexpr double kYearsPerMinute = kYearsPerHour / 60.0;
inline constexpr double kYearsPerSecond = kYearsPerMinute / 60.0;

inline double seconds_to_years(double s) { return s * kYearsPerSecond; }
inline double minutes_to_years(double m) { return m * kYearsPerMinute; }
inline double years_to_minutes(double y) { return y / kYearsPerMinute; }

/// Parses a duration string with a mandatory unit suffix, e.g. "7.5min",
/// "1y", "2d", "30s", "1.5h". Returns years. A bare number is rejected:
/// every time-valued input must declare its unit.
inline double parse_duration(const std::string& text,
                             const std::string& field = "duration") {
  std::size_t pos = 0;
  while (pos < text.size() &&
         (std::isdigit(static_cast<unsigned char>(text[pos])) ||
          text[pos] == '.' || text[pos] == '-' || text[pos] == '+' ||
          text[pos] == 'e' || text[pos] == 'E' ||
          (pos > 0 && (text[pos - 1] == 'e' || text[pos - 1] == 'E') &&
           (text[pos] == '-' || text[pos] == '+')))) {
    ++pos;
  }
  // Backtrack if a trailing 'e'/'E' was actually the start of a unit.
  while (pos > 0 && (text[pos - 1] == 'e' || text[pos - 1] == 'E')) --pos;
  if (pos == 0)
    throw ValidationError(field + ": cannot parse duration '" + text + "'");
  double value = 0.0;
  try {
    value = std::stod(text.substr(0, pos));
  } catch (const std::exception&) {
    throw ValidationError(field + ": cannot parse duration '" + text + "'");
  }
  std::string unit = text.substr(pos);
  while (!unit.empty() && unit.front() == ' ') unit.erase(unit.begin());
  if (unit == "y" || unit == "yr" || unit == "year" || unit == "years")
    return value;
  if (unit == "d" || unit == "day" || unit == "days")
    return value * kYearsPerDay;
  if (unit == "h" || unit == "hr" || unit == "hour" || unit == "hours")
    return value * kYearsPerHour;
  if (unit == "min" || unit == "minute" || unit == "minutes")
    return value * kYearsPerMinute;
  if (unit == "s" || unit == "sec" || unit == "second" || unit == "seconds")
    return value * kYearsPerSecond;
  if (unit.empty())
    throw ValidationError(field + ": missing time unit in '" + text +
                          "' (use y, d, h, min, or s)");
  throw ValidationError(field + ": unknown time unit '" + unit + "'");
}

}  // namespace fgplab
