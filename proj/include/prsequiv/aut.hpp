#pragma once

#include <string>
#include <string_view>

#include "prsequiv/lts.hpp"

namespace prsequiv {

// Aldebaran format: header `des (root, #transitions, #states)`, then one
// `(src,"label",dst)` line per transition.
std::string export_aut(const FiniteLts& lts);
FiniteLts import_aut(std::string_view text);
FiniteLts load_aut(const std::string& path);

}  // namespace prsequiv
