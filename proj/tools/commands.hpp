#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>

#include "acvf/json_io.hpp"

namespace acvf::cli {

struct Context {
  std::optional<Backend> backend;
  std::uint64_t seed = 0;
  std::size_t budget = 200;
};

using Handler = std::function<Json(const Json& in, const Context& ctx)>;

/// "group command" → handler.
const std::map<std::string, Handler>& commands();

}  // namespace acvf::cli
