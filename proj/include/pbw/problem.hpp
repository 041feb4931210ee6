#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pbw/deform.hpp"
#include "pbw/hopf.hpp"
#include "pbw/modalg.hpp"

namespace pbw {

/// A complete input: the Hopf algebra, the module algebra it acts on, the
/// action as given on generators, and an optional deformation map.
struct Problem {
  std::string name;
  HopfAlgebra hopf;
  ModuleAlgebra algebra;
  std::vector<std::pair<Vec, Mat>> action_generators;
  std::optional<Kappa> kappa;
};

/// "sweedler", "taft-n", "h8", "ha1", "cbh-cyclic-n".
Problem preset_problem(std::string_view name, bool with_kappa = false, int cutoff = 6);
/// Names used by the test catalog and `preset --list`.
std::vector<std::string> preset_names();

}  // namespace pbw
