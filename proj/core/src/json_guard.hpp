#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "minram/errors.hpp"

namespace minram::detail {

/// Runs a JSON decoder; missing keys and type mismatches become ParseError.
template <class Fn>
auto decode_json(std::string_view what, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace minram::detail
