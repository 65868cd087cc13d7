#pragma once

#include <stdexcept>
#include <string>

namespace aclab {

struct NonBistable : std::runtime_error {
  explicit NonBistable(const std::string& what) : std::runtime_error(what) {}
};
struct UnbalancedPotential : std::runtime_error {
  explicit UnbalancedPotential(const std::string& what) : std::runtime_error(what) {}
};
struct QuadratureSingularity : std::runtime_error {
  explicit QuadratureSingularity(const std::string& what) : std::runtime_error(what) {}
};
struct SolvabilityViolation : std::runtime_error {
  explicit SolvabilityViolation(const std::string& what) : std::runtime_error(what) {}
};
struct TailDivergence : std::runtime_error {
  explicit TailDivergence(const std::string& what) : std::runtime_error(what) {}
};
struct OutOfBox : std::runtime_error {
  explicit OutOfBox(const std::string& what) : std::runtime_error(what) {}
};
struct BranchCross : std::runtime_error {
  explicit BranchCross(const std::string& what) : std::runtime_error(what) {}
};
struct AtEquilibrium : std::runtime_error {
  explicit AtEquilibrium(const std::string& what) : std::runtime_error(what) {}
};
struct CFLViolation : std::runtime_error {
  explicit CFLViolation(const std::string& what) : std::runtime_error(what) {}
};
struct GridTooCoarse : std::runtime_error {
  explicit GridTooCoarse(const std::string& what) : std::runtime_error(what) {}
};
struct NonFinite : std::runtime_error {
  explicit NonFinite(const std::string& what) : std::runtime_error(what) {}
};
struct InterfaceLost : std::runtime_error {
  explicit InterfaceLost(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateCurve : std::runtime_error {
  explicit DegenerateCurve(const std::string& what) : std::runtime_error(what) {}
};
struct NonPositiveRadius : std::runtime_error {
  explicit NonPositiveRadius(const std::string& what) : std::runtime_error(what) {}
};
struct ReinitDiverged : std::runtime_error {
  explicit ReinitDiverged(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateTuning : std::runtime_error {
  explicit DegenerateTuning(const std::string& what) : std::runtime_error(what) {}
};
struct DegenerateFit : std::runtime_error {
  explicit DegenerateFit(const std::string& what) : std::runtime_error(what) {}
};
struct NeverGenerated : std::runtime_error {
  explicit NeverGenerated(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aclab
