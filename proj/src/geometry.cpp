// SPDX-License-Identifier: Apache-2.0
//
// wptsim: link-budget simulator for RF wireless power transfer to shelf labels
// Copyright (C) 2026 The wptsim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "wpt/geometry.hpp"
#include "wpt/units.hpp"

#include <algorithm>
#include <stdexcept>

namespace wpt {

bool is_finite(Point3 p)
{
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

Vec3 normalized(Vec3 v)
{
    double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n))
        throw std::invalid_argument("Cannot normalize a zero or non-finite vector.");
    return (1.0 / n) * v;
}

Point3 mirror_point(Point3 p, Point3 origin, Vec3 normal)
{
    double s = dot(p - origin, normal);
    return p - (2.0 * s) * normal;
}

Vec3 mirror_direction(Vec3 d, Vec3 normal)
{
    return d - (2.0 * dot(d, normal)) * normal;
}

LocalFrame make_frame(Vec3 axis)
{
    Vec3 w = normalized(axis);
    Vec3 ref = std::abs(w.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
    Vec3 u = normalized(ref - dot(ref, w) * w);
    Vec3 v = cross(w, u);
    return {u, v, w};
}

Direction direction_in_frame(const LocalFrame &frame, Vec3 unit_direction)
{
    double cw = std::clamp(dot(unit_direction, frame.w), -1.0, 1.0);
    double cu = dot(unit_direction, frame.u);
    double cv = dot(unit_direction, frame.v);

    Direction out;
    out.theta = std::acos(cw);
    double phi = std::atan2(cv, cu);
    if (phi < 0.0)
        phi += 2.0 * pi;
    if (phi >= 2.0 * pi) // atan2 rounding at the branch cut
        phi = 0.0;
    out.phi = phi;
    return out;
}

} // namespace wpt
