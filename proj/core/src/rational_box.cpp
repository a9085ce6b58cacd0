#include <algorithm>
#include <cctype>

#include "leraytk/box.hpp"
#include "leraytk/errors.hpp"

namespace leraytk {
namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isdigit(c) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den)) {
    throw FormatError("malformed rational \"" + std::string(text) + "\"");
  }
  const boost::multiprecision::cpp_int n(std::string(num.front() == '+' ? num.substr(1) : num));
  const boost::multiprecision::cpp_int d(std::string(den.front() == '+' ? den.substr(1) : den));
  if (d == 0) throw FormatError("zero denominator in \"" + std::string(text) + "\"");
  return Rational(n, d);
}

std::string format_rational(const Rational& value) {
  const auto num = boost::multiprecision::numerator(value);
  const auto den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Box::Box(std::vector<Interval> axes) : axes_(std::move(axes)) {
  empty_ = std::any_of(axes_.begin(), axes_.end(),
                       [](const Interval& i) { return i.lo > i.hi; });
}

Box Box::empty_box(std::size_t dimension) {
  Box b(std::vector<Interval>(dimension, Interval{Rational(0), Rational(0)}));
  b.empty_ = true;
  return b;
}

Box Box::intersected_with(const Box& other) const {
  if (dimension() != other.dimension()) throw InvalidArgument("box dimensions differ");
  if (empty_ || other.empty_) return empty_box(dimension());
  std::vector<Interval> axes;
  axes.reserve(axes_.size());
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    axes.push_back({std::max(axes_[i].lo, other.axes_[i].lo),
                    std::min(axes_[i].hi, other.axes_[i].hi)});
  }
  return Box(std::move(axes));
}

}  // namespace leraytk
