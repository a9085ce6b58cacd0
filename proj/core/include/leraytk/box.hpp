#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace leraytk {

using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p" and "p/q" with q != 0. Throws FormatError otherwise.
Rational parse_rational(std::string_view text);
// Canonical text: "p" for integers, "p/q" in lowest terms otherwise.
std::string format_rational(const Rational& value);

struct Interval {
  Rational lo;
  Rational hi;
  bool operator==(const Interval&) const = default;
};

// Product of closed rational intervals. A box is empty when some axis has
// lo > hi; degenerate axes (lo == hi) are allowed and nonempty.
class Box {
 public:
  Box() = default;
  explicit Box(std::vector<Interval> axes);
  static Box empty_box(std::size_t dimension);

  std::size_t dimension() const { return axes_.size(); }
  const std::vector<Interval>& axes() const { return axes_; }
  bool empty() const { return empty_; }

  Box intersected_with(const Box& other) const;
  bool meets(const Box& other) const { return !intersected_with(other).empty(); }

  bool operator==(const Box&) const = default;

 private:
  std::vector<Interval> axes_;
  bool empty_ = false;
};

}  // namespace leraytk
