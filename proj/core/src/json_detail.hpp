#pragma once

// nlohmann-based conversions shared by io.cpp and catalog.cpp. Not installed.

#include "rigidity/monodromy.hpp"
#include "rigidity/qmatrix.hpp"

#include <json.hpp>

#include <optional>
#include <string_view>

namespace rigidity::detail {

using Json = nlohmann::ordered_json;

Json parse_json(std::string_view text);

Json rational_json(const Rational& r);
Rational rational_from(const Json& j, std::string_view field);

Json matrix_json(const QMatrix& m);
/// When `shape` is given it fixes rows x cols; needed for matrices with a
/// zero dimension, which the nested-array form cannot express.
QMatrix matrix_from(const Json& j, std::string_view field,
                    std::optional<std::pair<std::size_t, std::size_t>> shape = std::nullopt);

Json tuple_json(const MonodromyTuple& t);
MonodromyTuple tuple_from(const Json& j);

}  // namespace rigidity::detail
