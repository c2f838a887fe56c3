#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "framegeo/manifold.hpp"

namespace framegeo {

struct BuiltinExample {
  std::string name;
  std::string document;  // manifold file content (JSON)
};

/// Builtin manifold library: heisenberg5 (the worked 5-dimensional example),
/// sphere3, heisenberg3, abelian5.
const std::vector<BuiltinExample>& builtin_examples();

/// nullptr when the name is unknown.
const BuiltinExample* find_builtin(std::string_view name);

/// Parsed form of a builtin document. Throws std::invalid_argument on an
/// unknown name.
FrameManifold builtin_manifold(std::string_view name);

}  // namespace framegeo
