#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinorth/config.hpp"

namespace spinorth {

/// A named, fully resolved figure computation.
struct FigurePreset {
  std::string name;
  std::string description;
  Config config;
};

/// All built-in presets, in a fixed order.
const std::vector<FigurePreset>& figure_presets();

/// Lookup by name.
std::optional<FigurePreset> find_preset(const std::string& name);

}  // namespace spinorth
