#pragma once

#include <string_view>

namespace sfsurg::embedded {

std::string_view catalog_text();
std::string_view pinned_mismatches_text();

}  // namespace sfsurg::embedded
