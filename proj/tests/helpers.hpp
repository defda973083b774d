#pragma once

// Shared helpers for the test binaries.

#include <initializer_list>
#include <string>
#include <string_view>

#include "tournament/core.hpp"

namespace test_util {

// Builds a matrix from one string per row, e.g. mat({"01", "00"}).
inline tournament::BinaryMatrix mat(std::initializer_list<std::string_view> rows) {
  std::string text = std::to_string(rows.size());
  text.push_back('\n');
  for (std::string_view row : rows) {
    text += row;
    text.push_back('\n');
  }
  return tournament::parse_matrix(text);
}

}  // namespace test_util
