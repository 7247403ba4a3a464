#pragma once

#include <utility>
#include <vector>

namespace expframe {

struct Interval {
  double a = 0.0;
  double b = 0.0;
};

/// A finite union of disjoint half-open intervals on the frequency axis,
/// kept in canonical form: endpoints finite, a < b, sorted by a, pairwise
/// disjoint (touching intervals merged).
class IntervalUnion {
 public:
  IntervalUnion() = default;

  const std::vector<Interval>& intervals() const noexcept { return parts_; }
  double measure() const noexcept;
  double inf() const noexcept { return parts_.front().a; }
  double sup() const noexcept { return parts_.back().b; }

  IntervalUnion translated(double shift) const;

 private:
  friend IntervalUnion validate(std::vector<Interval> raw);
  std::vector<Interval> parts_;
};

/// Canonicalizes a raw endpoint list: sorts, merges touching or overlapping
/// intervals. Rejects empty input (EmptySpectrum) and any interval with
/// a >= b or a non-finite endpoint (BadInterval).
IntervalUnion validate(std::vector<Interval> raw);

struct NormalizedSpectrum {
  IntervalUnion set;  // translated so inf = 0; lies in [0, 2*pi*d]
  double shift;       // amount subtracted from the input: output = input - shift
  double d;           // window scale, sup - inf = 2*pi*d (d rounded up by <= 1 ulp)
};

/// Translates the set so its infimum is 0 and reports the window scale d.
/// Translation changes only phases of the exponentials, so any frame
/// certificate for the output transfers verbatim to the input.
NormalizedSpectrum normalize_to_window(const IntervalUnion& u);

}  // namespace expframe
