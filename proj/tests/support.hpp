#pragma once

#include "ars3d/group.hpp"
#include "ars3d/linalg2.hpp"

#include <algorithm>
#include <cmath>

namespace testing {

inline double diff(const ars3d::Mat2& a, const ars3d::Mat2& b) { return ars3d::max_abs(a - b); }
inline double diff(const ars3d::Vec2& a, const ars3d::Vec2& b) { return ars3d::max_abs(a - b); }
inline double diff(const ars3d::GroupElement& a, const ars3d::GroupElement& b) {
    return ars3d::distance(a, b);
}
inline double diff(const ars3d::Tangent& a, const ars3d::Tangent& b) {
    return std::max(std::fabs(a.a - b.a), ars3d::max_abs(a.w - b.w));
}

}  // namespace testing
