#pragma once

#include <doctest.h>

#include "nv/element.hpp"

namespace doctest {

template <>
struct StringMaker<nv::DyadicPoint> {
  static String convert(nv::DyadicPoint const& p) { return nv::to_string(p).c_str(); }
};

template <>
struct StringMaker<nv::Rect> {
  static String convert(nv::Rect const& r) { return r.to_string().c_str(); }
};

}  // namespace doctest
