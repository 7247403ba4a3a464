#include "expframe/schedule.hpp"

#include <cmath>
#include <string>

#include "expframe/error.hpp"

namespace expframe {

HalvingSchedule compute_schedule(double delta) {
  if (!(delta > 0.0) || !(delta < 0.01))
    raise(Errc::delta_out_of_range,
          "delta=" + std::to_string(delta) + " outside (0, 1/100)");

  HalvingSchedule s;
  s.delta = delta;
  s.alphas = {1.0};
  s.betas = {1.0};
  while (s.alphas.back() >= 100.0 * delta) {
    const double a = s.alphas.back();
    const double g = 5.0 * std::sqrt(delta / a);
    s.alphas.push_back(a * (1.0 - g) / 2.0);
    s.betas.push_back(s.betas.back() * (1.0 + g) / 2.0);
  }
  s.L = static_cast<int>(s.alphas.size()) - 2;

  double c = 1.0;
  for (int j = 0;; ++j) {
    const double t = std::exp2(-1.0 - 0.5 * j);
    const double f = (1.0 + t) / (1.0 - t);
    c *= f;
    if (f - 1.0 < 1e-12) break;  // relative change of the partial product
  }
  s.C_product = c;
  return s;
}

}  // namespace expframe
