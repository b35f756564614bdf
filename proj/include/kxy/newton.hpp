#pragma once

#include <compare>
#include <optional>
#include <vector>

#include "kxy/budget.hpp"
#include "kxy/poly.hpp"

namespace kxy {

struct LatticePoint {
    long i = 0;
    long j = 0;
    auto operator<=>(const LatticePoint&) const = default;
};

// Convex hull of support(f) together with the origin; vertices are the
// extreme points, counterclockwise, starting at (0,0), no three consecutive
// collinear.
struct NewtonPolygon {
    std::vector<LatticePoint> vertices;
    bool operator==(const NewtonPolygon&) const = default;
};

NewtonPolygon newton_polygon(const Poly& f);

// Positive rational r with r * A = B as vertex sets (scaling about the
// origin); nullopt when no such ratio exists.
std::optional<Rat> radial_similarity(const NewtonPolygon& a, const NewtonPolygon& b);

enum class Axis { x, y };

// True iff the polygon of f has an edge of positive length on the axis.
bool axis_edge(const Poly& f, Axis axis);

// One pure-x cancellation q <- q - c * p^k.
struct Thm13Step {
    Rat c;
    int k = 0;
};

struct Thm13Result {
    Poly q_final;
    std::vector<Thm13Step> steps;
    bool radially_similar = false;
    std::optional<Rat> ratio;
};

// Requires p of the exact form x + y*h. Repeatedly removes the highest
// pure-x monomial of q and reports whether the polygons of p and the final
// q are radially similar.
Thm13Result thm13_reduce(const Poly& p, const Poly& q, const Budget& budget = {});

}  // namespace kxy
