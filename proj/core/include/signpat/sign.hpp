#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace signpat {

/// Qualitative sign of a real number.
enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

constexpr Sign sign_of(double x, double tol = 0.0) {
  if (x > tol) return Sign::Plus;
  if (x < -tol) return Sign::Minus;
  return Sign::Zero;
}

constexpr int to_int(Sign s) { return static_cast<int>(s); }

constexpr Sign operator*(Sign a, Sign b) {
  return static_cast<Sign>(to_int(a) * to_int(b));
}

constexpr Sign operator-(Sign a) { return static_cast<Sign>(-to_int(a)); }

constexpr char to_char(Sign s) {
  switch (s) {
    case Sign::Plus: return '+';
    case Sign::Minus: return '-';
    default: return '0';
  }
}

constexpr std::optional<Sign> sign_from_char(char c) {
  switch (c) {
    case '+': return Sign::Plus;
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    default: return std::nullopt;
  }
}

/// Extended symbols for templates and qualitative sums.
/// PlusZero admits {+,0}, MinusZero admits {-,0}, Any admits all three.
enum class ExtendedSign : std::int8_t {
  Minus,
  MinusZero,
  Zero,
  PlusZero,
  Plus,
  Any,
};

constexpr bool admits(ExtendedSign e, Sign s) {
  switch (e) {
    case ExtendedSign::Minus: return s == Sign::Minus;
    case ExtendedSign::Zero: return s == Sign::Zero;
    case ExtendedSign::Plus: return s == Sign::Plus;
    case ExtendedSign::MinusZero: return s != Sign::Plus;
    case ExtendedSign::PlusZero: return s != Sign::Minus;
    case ExtendedSign::Any: return true;
  }
  return false;
}

constexpr ExtendedSign to_extended(Sign s) {
  switch (s) {
    case Sign::Plus: return ExtendedSign::Plus;
    case Sign::Minus: return ExtendedSign::Minus;
    default: return ExtendedSign::Zero;
  }
}

constexpr std::string_view to_string(ExtendedSign e) {
  switch (e) {
    case ExtendedSign::Minus: return "-";
    case ExtendedSign::MinusZero: return "-0";
    case ExtendedSign::Zero: return "0";
    case ExtendedSign::PlusZero: return "+0";
    case ExtendedSign::Plus: return "+";
    case ExtendedSign::Any: return "#";
  }
  return "?";
}

}  // namespace signpat
