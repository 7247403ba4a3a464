#include "expframe/interval_union.hpp"

#include <algorithm>
#include <cmath>

#include "expframe/error.hpp"

namespace expframe {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

double IntervalUnion::measure() const noexcept {
  double total = 0.0;
  for (const auto& iv : parts_) total += iv.b - iv.a;
  return total;
}

IntervalUnion IntervalUnion::translated(double shift) const {
  IntervalUnion out = *this;
  for (auto& iv : out.parts_) {
    iv.a += shift;
    iv.b += shift;
  }
  return out;
}

IntervalUnion validate(std::vector<Interval> raw) {
  if (raw.empty()) raise(Errc::empty_spectrum, "spectrum has no intervals (measure 0)");
  for (const auto& iv : raw) {
    if (!std::isfinite(iv.a) || !std::isfinite(iv.b))
      raise(Errc::bad_interval, "interval endpoint is not finite");
    if (!(iv.a < iv.b))
      raise(Errc::bad_interval, "interval [" + std::to_string(iv.a) + ", " +
                                    std::to_string(iv.b) + ") is empty or reversed");
  }
  std::sort(raw.begin(), raw.end(),
            [](const Interval& x, const Interval& y) { return x.a < y.a; });
  IntervalUnion out;
  out.parts_.push_back(raw.front());
  for (std::size_t i = 1; i < raw.size(); ++i) {
    Interval& last = out.parts_.back();
    if (raw[i].a <= last.b) {
      last.b = std::max(last.b, raw[i].b);  // touching or overlapping: merge
    } else {
      out.parts_.push_back(raw[i]);
    }
  }
  return out;
}

NormalizedSpectrum normalize_to_window(const IntervalUnion& u) {
  const double shift = u.inf();
  IntervalUnion moved = u.translated(-shift);
  const double width = moved.sup();
  double d = width / kTwoPi;
  // One rounding of width/2pi can leave 2*pi*d a ulp short of the set's
  // supremum; nudge d up so the window [0, 2*pi*d] provably contains the set.
  while (kTwoPi * d < width) d = std::nextafter(d, std::numeric_limits<double>::infinity());
  return NormalizedSpectrum{std::move(moved), shift, d};
}

}  // namespace expframe
