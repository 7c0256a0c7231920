#pragma once

#include <string_view>

namespace polevo {

inline constexpr std::string_view kToolVersion = "polevo 0.1.0";

}  // namespace polevo
