#pragma once

#include <string>

#include "json.hpp"

#include "expframe/certificate.hpp"
#include "expframe/grid_spectrum.hpp"
#include "expframe/interval_union.hpp"
#include "expframe/schedule.hpp"
#include "expframe/selection.hpp"
#include "expframe/verification.hpp"

namespace expframe {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const IntervalUnion& u);
ordered_json to_json(const GridSpectrum& g);
ordered_json to_json(const FrameCertificate& c);
ordered_json to_json(const SelectionTrace& t);
ordered_json to_json(const HalvingSchedule& s);
ordered_json to_json(const MonteCarloReport& r);
ordered_json to_json(const DensityReport& r);

/// Either {"intervals": [[a,b],...]} or {"grid": {"m":..., "I":[...], "d":...}}.
struct SpectrumInput {
  bool is_grid = false;
  IntervalUnion intervals;  // valid when !is_grid
  int grid_m = 0;           // valid when is_grid
  std::vector<int> grid_I;
  double grid_d = 1.0;
};
SpectrumInput parse_spectrum(const ordered_json& j);

GridSpectrum grid_from_json(const ordered_json& j);
std::vector<int> rows_from_json(const ordered_json& j);

SelectionMethod method_from_string(const std::string& s);
const char* method_to_string(SelectionMethod m);
ordered_json to_json(const SelectionConfig& cfg);
SelectionConfig selection_config_from_json(const ordered_json& j);

}  // namespace expframe
