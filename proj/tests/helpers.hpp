#pragma once

#include <random>
#include <string>
#include <vector>

#include <doctest.h>

#include "spqg/error.hpp"
#include "spqg/io.hpp"
#include "spqg/partition.hpp"

namespace testing {

inline spqg::SpatialPartition P(const std::string& text) { return spqg::parse_text(text); }

template <class F>
spqg::ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const spqg::Error& e) {
    return e.code();
  }
  FAIL("expected an spqg::Error");
  return spqg::ErrorCode::Internal;
}

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<spqg::SpatialPartition> {
  static String convert(const spqg::SpatialPartition& p) { return spqg::to_text(p).c_str(); }
};
}  // namespace doctest
