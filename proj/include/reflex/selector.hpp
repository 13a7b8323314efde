#pragma once

#include <string_view>

#include "reflex/model.hpp"

namespace reflex {

/// Builds a model from its selector string:
///   free-cl:<n> | lambda-beta | poly:<base>:<n> | bar1:<base> | astar:<base>
/// Throws UnknownModel.
ModelPtr select_model(std::string_view selector);

}  // namespace reflex
