#pragma once

#include <stdexcept>
#include <string>

namespace yfp {

/// Failure of a numerical stage (Newton divergence, extrapolation residuals,
/// mass defects). The stage name is part of the message so multi-stage
/// pipelines can be diagnosed from the error alone.
class numerical_error : public std::runtime_error {
public:
  numerical_error(const std::string& stage, const std::string& what)
      : std::runtime_error(stage + ": " + what), stage_(stage) {}
  const std::string& stage() const { return stage_; }

private:
  std::string stage_;
};

} // namespace yfp
