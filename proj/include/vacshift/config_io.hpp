#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "vacshift/params.hpp"

namespace vacshift {

inline constexpr std::string_view kReferenceConfigName = "sec-reference";

// Flat "key = value" text, '#' starts a comment. Unknown keys are rejected.
ExperimentConfig parse_config(std::string_view text);

// Reads a config file, or returns the built-in reference for "sec-reference".
ExperimentConfig load_config(const std::string& path_or_name);

std::string format_config(const ExperimentConfig& config);

}  // namespace vacshift
