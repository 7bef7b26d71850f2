#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace otoric {

/// Embedded graph documents, selectable with --fixtures.
std::vector<std::string> fixture_names();
std::optional<std::string> fixture_document(std::string_view name);

} // namespace otoric
