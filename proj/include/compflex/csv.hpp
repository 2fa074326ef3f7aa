#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "compflex/engine.hpp"

namespace compflex {

extern const char* const kCsvHeader;

const char* scheme_name(Scheme s);
const char* model_name(InterferenceVariant m);
const char* power_mode_name(PowerMode m);

Scheme scheme_from_name(std::string_view name);
InterferenceVariant model_from_name(std::string_view name);
PowerMode power_mode_from_name(std::string_view name);

// Floating-point fields use 17 significant digits so a reload is
// bit-faithful.
std::string to_csv(const std::vector<SweepRecord>& records);
std::vector<SweepRecord> parse_csv(const std::string& text);

} // namespace compflex
