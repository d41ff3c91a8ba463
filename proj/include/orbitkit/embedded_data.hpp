#pragma once

#include <string_view>

namespace orbitkit::data {

extern const std::string_view catalog_json;
extern const std::string_view classification_json;

}  // namespace orbitkit::data
