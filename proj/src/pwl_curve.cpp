#include "battopf/pwl_curve.hpp"

#include <algorithm>
#include <cmath>

#include "battopf/errors.hpp"

namespace battopf {

namespace {
constexpr double kSlopeTol = 1e-9;
}

PwlCurve::PwlCurve(std::vector<double> x, std::vector<double> y, bool require_unit_slopes,
                   const std::string& what)
    : x_(std::move(x)), y_(std::move(y)), what_(what) {
  if (x_.size() != y_.size() || x_.size() < 2)
    throw ValidationError(what_ + ": curve needs matching x/y lists with at least 2 points");
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) {
    if (!(x_[i] < x_[i + 1]))
      throw ValidationError(what_ + ": breakpoints must be strictly increasing");
    double s = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
    if (s < 0.0)
      throw ValidationError(what_ + ": values must be nondecreasing");
    if (require_unit_slopes && (s <= 0.0 || s > 1.0 + kSlopeTol))
      throw ValidationError(what_ + ": segment slope " + std::to_string(s) +
                            " outside (0, 1]");
  }
  for (double v : x_)
    if (!std::isfinite(v)) throw ValidationError(what_ + ": non-finite breakpoint");
  for (double v : y_)
    if (!std::isfinite(v)) throw ValidationError(what_ + ": non-finite value");
}

int PwlCurve::segment_of(double x) const {
  if (x < x_.front() || x > x_.back())
    throw DomainError(what_ + ": coordinate " + std::to_string(x) + " outside [" +
                      std::to_string(x_.front()) + ", " + std::to_string(x_.back()) + "]");
  // Lower-indexed segment at interior breakpoints: first segment whose upper
  // end is >= x.
  auto it = std::lower_bound(x_.begin() + 1, x_.end(), x);
  return static_cast<int>(it - x_.begin()) - 1;
}

int PwlCurve::segment_of_value(double y) const {
  if (y < y_.front() || y > y_.back())
    throw DomainError(what_ + ": value " + std::to_string(y) + " outside [" +
                      std::to_string(y_.front()) + ", " + std::to_string(y_.back()) + "]");
  auto it = std::lower_bound(y_.begin() + 1, y_.end(), y);
  int s = static_cast<int>(it - y_.begin()) - 1;
  // Flat segments share y values; advance to the last segment starting at y so
  // the inverse is well defined (left inverse of a nondecreasing function).
  return std::min(s, num_segments() - 1);
}

double PwlCurve::slope(int segment) const {
  return (y_[segment + 1] - y_[segment]) / (x_[segment + 1] - x_[segment]);
}

double PwlCurve::eval(double x) const {
  int s = segment_of(x);
  return y_[s] + slope(s) * (x - x_[s]);
}

double PwlCurve::inverse(double y) const {
  int s = segment_of_value(y);
  double m = slope(s);
  if (m <= 0.0)
    throw DomainError(what_ + ": inverse undefined on a flat segment");
  return x_[s] + (y - y_[s]) / m;
}

double PwlCurve::eval_extrapolated(double x) const {
  if (x < x_.front()) return y_.front() + slope(0) * (x - x_.front());
  if (x > x_.back()) return y_.back() + slope(num_segments() - 1) * (x - x_.back());
  return eval(x);
}

double PwlCurve::inverse_extrapolated(double y) const {
  if (y < y_.front()) {
    double m = slope(0);
    return x_.front() + (y - y_.front()) / (m > 0 ? m : 1.0);
  }
  if (y > y_.back()) {
    double m = slope(num_segments() - 1);
    return x_.back() + (y - y_.back()) / (m > 0 ? m : 1.0);
  }
  return inverse(y);
}

}  // namespace battopf
