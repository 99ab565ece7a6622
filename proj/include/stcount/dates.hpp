#pragma once

#include <cstdint>
#include <string>

namespace stcount {

// Calendar date stored as a serial day count (days since 1970-01-01).
// Civil-calendar conversions follow the standard proleptic Gregorian
// algorithms so that date arithmetic is exact integer arithmetic.
class Date {
 public:
  Date() = default;
  explicit Date(std::int64_t serial) : serial_(serial) {}
  static Date from_ymd(int year, int month, int day);
  // Parses "YYYY-MM-DD"; throws DataError on malformed input.
  static Date parse(const std::string& iso);

  std::int64_t serial() const { return serial_; }
  Date operator+(std::int64_t days) const { return Date(serial_ + days); }
  std::int64_t operator-(Date other) const { return serial_ - other.serial_; }
  bool operator==(const Date&) const = default;
  auto operator<=>(const Date&) const = default;

  // 0 = Monday ... 6 = Sunday.
  int weekday() const;
  std::string to_string() const;  // ISO "YYYY-MM-DD"

 private:
  std::int64_t serial_ = 0;
};

}  // namespace stcount
