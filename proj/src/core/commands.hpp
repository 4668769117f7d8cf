#pragma once

#include <string>

#include "serialize.hpp"

namespace gia {

struct CommandResult {
  std::string text;
  /// false when a checking command ran but found a mismatch
  bool passed = true;
};

/// Runs a named command on a JSON request and renders it as json, csv or table.
CommandResult run_command(const std::string& name, const Json& request, const std::string& format);

}  // namespace gia
