#pragma once

#include <string_view>
#include <vector>

namespace trigcolloc {

/// Embedded copies of the config fixtures under data/, so the table
/// regeneration command works from any directory. Names: example1,
/// example2, example3, example4, example5a, example5b, example6.
std::string_view example_config(std::string_view name);

std::vector<std::string_view> example_config_names();

} // namespace trigcolloc
