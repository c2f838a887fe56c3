#include "framegeo/builtins.hpp"

#include <stdexcept>

namespace framegeo {

const std::vector<BuiltinExample>& builtin_examples() {
  static const std::vector<BuiltinExample> examples = {
      {"heisenberg5", R"({
  "name": "heisenberg5",
  "dimension": 5,
  "brackets": [
    {"i": 1, "j": 2, "coeffs": {"3": 2}},
    {"i": 4, "j": 5, "coeffs": {"3": 2}}
  ],
  "phi": [
    [0, -1, 0, 0, 0],
    [1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1],
    [0, 0, 0, 1, 0]
  ],
  "xi": [0, 0, 1, 0, 0]
}
)"},
      {"sphere3", R"({
  "name": "sphere3",
  "dimension": 3,
  "brackets": [
    {"i": 1, "j": 2, "coeffs": {"3": 2}},
    {"i": 1, "j": 3, "coeffs": {"2": -2}},
    {"i": 2, "j": 3, "coeffs": {"1": 2}}
  ],
  "phi": [
    [0, -1, 0],
    [1, 0, 0],
    [0, 0, 0]
  ],
  "xi": [0, 0, 1]
}
)"},
      {"heisenberg3", R"({
  "name": "heisenberg3",
  "dimension": 3,
  "brackets": [
    {"i": 1, "j": 2, "coeffs": {"3": 2}}
  ],
  "phi": [
    [0, -1, 0],
    [1, 0, 0],
    [0, 0, 0]
  ],
  "xi": [0, 0, 1]
}
)"},
      {"abelian5", R"({
  "name": "abelian5",
  "dimension": 5,
  "brackets": [],
  "phi": [
    [0, -1, 0, 0, 0],
    [1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0],
    [0, 0, 0, 0, -1],
    [0, 0, 0, 1, 0]
  ],
  "xi": [0, 0, 1, 0, 0]
}
)"}};
  return examples;
}

const BuiltinExample* find_builtin(std::string_view name) {
  for (const auto& ex : builtin_examples())
    if (ex.name == name) return &ex;
  return nullptr;
}

FrameManifold builtin_manifold(std::string_view name) {
  const BuiltinExample* ex = find_builtin(name);
  if (ex == nullptr) throw std::invalid_argument("unknown builtin example '" + std::string(name) + "'");
  return parse_manifold(ex->document);
}

}  // namespace framegeo
