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

#pragma once

#include <cmath>

namespace wpt {

struct Point3
{
    double x = 0.0, y = 0.0, z = 0.0;

    friend constexpr Point3 operator+(Point3 a, Point3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend constexpr Point3 operator-(Point3 a, Point3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend constexpr Point3 operator*(double s, Point3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend constexpr Point3 operator*(Point3 a, double s) { return s * a; }
    friend constexpr bool operator==(const Point3 &, const Point3 &) = default;
};

// Directions share the representation; unit norm is checked where it matters.
using Vec3 = Point3;

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vec3 cross(Vec3 a, Vec3 b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }

bool is_finite(Point3 p);

// Throws std::invalid_argument for a zero or non-finite vector.
Vec3 normalized(Vec3 v);

// Mirror image of a point across the plane through `origin` with unit `normal`.
Point3 mirror_point(Point3 p, Point3 origin, Vec3 normal);

// Mirror image of a direction (reflection of a free vector).
Vec3 mirror_direction(Vec3 d, Vec3 normal);

// Right-handed orthonormal frame (u, v, w) with w along `axis`. The choice of u
// is deterministic so that azimuths are reproducible.
struct LocalFrame
{
    Vec3 u, v, w;
};

LocalFrame make_frame(Vec3 axis);

// Polar angle from the frame axis in [0, pi] and azimuth in [0, 2 pi).
struct Direction
{
    double theta = 0.0;
    double phi = 0.0;
};

Direction direction_in_frame(const LocalFrame &frame, Vec3 unit_direction);

} // namespace wpt
