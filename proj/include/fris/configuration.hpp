#ifndef FRIS_CONFIGURATION_HPP
#define FRIS_CONFIGURATION_HPP

#include <vector>

#include "fris/surface.hpp"

namespace fris {

enum class ConfigMode { kAdaptive, kFixedUniform, kFixedRandom };

/// Active elements and their reflection phases (radians, [0, 2 pi)).
/// phases[k] belongs to selection[k]. Together they form the diagonal
/// M x M reflection mask: e^{j phi} on selected entries, 0 elsewhere.
struct FrisConfiguration {
  SelectionSet selection;
  std::vector<double> phases;
  ConfigMode mode = ConfigMode::kAdaptive;

  void validate() const;
};

}  // namespace fris

#endif  // FRIS_CONFIGURATION_HPP
