#pragma once

#include <string>
#include <vector>

namespace battopf {

// Monotone piecewise-linear curve given by strictly increasing x breakpoints
// and nondecreasing y values. Used for battery charge/discharge functions.
class PwlCurve {
public:
  PwlCurve() = default;
  // Validates: sizes match and >= 2, x strictly increasing, y nondecreasing.
  // When require_unit_slopes is true every segment slope must lie in (0, 1].
  PwlCurve(std::vector<double> x, std::vector<double> y, bool require_unit_slopes,
           const std::string& what);

  double eval(double x) const;      // y = f(x), x in [x_front, x_back]
  double inverse(double y) const;   // x = f^{-1}(y), y in [y_front, y_back]

  // Linear extrapolation with the boundary segment slope. Used only to
  // express out-of-range magnitudes, never to evolve state.
  double eval_extrapolated(double x) const;
  double inverse_extrapolated(double y) const;

  // Segment s contains x in [x_s, x_{s+1}]. Interior breakpoints resolve to
  // the lower-indexed segment.
  int segment_of(double x) const;
  int segment_of_value(double y) const;

  int num_segments() const { return static_cast<int>(x_.size()) - 1; }
  double slope(int segment) const;
  double x_front() const { return x_.front(); }
  double x_back() const { return x_.back(); }
  double y_front() const { return y_.front(); }
  double y_back() const { return y_.back(); }
  const std::vector<double>& xs() const { return x_; }
  const std::vector<double>& ys() const { return y_; }

  bool operator==(const PwlCurve& o) const { return x_ == o.x_ && y_ == o.y_; }

private:
  std::vector<double> x_;
  std::vector<double> y_;
  std::string what_;
};

}  // namespace battopf
