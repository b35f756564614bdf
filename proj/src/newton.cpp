#include "kxy/newton.hpp"

#include <algorithm>

namespace kxy {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a.i - o.i) * (b.j - o.j) - (a.j - o.j) * (b.i - o.i);
}

// Monotone chain; strict turns only, so collinear interior points drop out.
std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;  // CCW, no repeated first point
}

}  // namespace

NewtonPolygon newton_polygon(const Poly& f) {
    if (f.is_zero()) throw PrecondError("newton_polygon: zero polynomial");
    if (!(f.ring() == Ring::xy()))
        throw RingError("newton_polygon: expected a polynomial over {x,y}");
    std::vector<LatticePoint> pts{{0, 0}};
    for (const auto& [m, c] : f.terms()) pts.push_back({m.e[0], m.e[1]});
    std::vector<LatticePoint> hull = convex_hull(std::move(pts));
    // Rotate so (0,0) leads; it is always extreme in the nonnegative quadrant.
    auto origin = std::find(hull.begin(), hull.end(), LatticePoint{0, 0});
    std::rotate(hull.begin(), origin, hull.end());
    return NewtonPolygon{std::move(hull)};
}

std::optional<Rat> radial_similarity(const NewtonPolygon& a, const NewtonPolygon& b) {
    if (a.vertices.size() != b.vertices.size()) return std::nullopt;
    // Scaling about the origin fixes (0,0) and preserves the CCW vertex
    // order, so canonical lists must correspond elementwise.
    std::optional<Rat> ratio;
    for (std::size_t i = 0; i < a.vertices.size(); ++i) {
        const LatticePoint& va = a.vertices[i];
        const LatticePoint& vb = b.vertices[i];
        if (va == LatticePoint{0, 0} || vb == LatticePoint{0, 0}) {
            if (!(va == vb)) return std::nullopt;
            continue;
        }
        Rat r = va.i != 0 ? make_rat(vb.i, va.i) : make_rat(vb.j, va.j);
        if (r <= 0) return std::nullopt;
        if (r * va.i != vb.i || r * va.j != vb.j) return std::nullopt;
        if (ratio && *ratio != r) return std::nullopt;
        ratio = r;
    }
    if (!ratio) ratio = Rat(1);  // both polygons are the single point (0,0)
    return ratio;
}

bool axis_edge(const Poly& f, Axis axis) {
    NewtonPolygon poly = newton_polygon(f);
    const auto& v = poly.vertices;
    std::size_t n = v.size();
    if (n < 2) return false;
    auto on_axis = [axis](const LatticePoint& p) {
        return axis == Axis::x ? p.j == 0 : p.i == 0;
    };
    std::size_t edges = n == 2 ? 1 : n;
    for (std::size_t i = 0; i < edges; ++i) {
        const LatticePoint& p = v[i];
        const LatticePoint& q = v[(i + 1) % n];
        if (on_axis(p) && on_axis(q) && !(p == q)) return true;
    }
    return false;
}

Thm13Result thm13_reduce(const Poly& p, const Poly& q, const Budget& budget) {
    if (!(p.ring() == Ring::xy() && q.ring() == Ring::xy()))
        throw RingError("thm13_reduce: inputs must live in {x,y}");
    Mono xmono;
    xmono.e[0] = 1;
    if (p.coeff(xmono) != 1) throw PrecondError("thm13_reduce: p must have x-coefficient 1");
    for (const auto& [m, c] : p.terms())
        if (m.e[1] == 0 && !(m == xmono))
            throw PrecondError("thm13_reduce: p must have the form x + y*h");

    Thm13Result out;
    out.q_final = q;
    std::vector<Poly> powers{Poly::constant(p.ring(), Rat(1))};
    long steps = 0;
    for (;;) {
        if (++steps > budget.reduction_steps) throw BudgetError("thm13_reduce: step budget exceeded");
        // Highest pure-x monomial of degree >= 1.
        int k = 0;
        Rat c;
        for (const auto& [m, coeff] : out.q_final.terms()) {
            if (m.e[1] == 0 && m.e[0] >= 1 && static_cast<int>(m.e[0]) > k) {
                k = m.e[0];
                c = coeff;
            }
        }
        if (k == 0) break;
        while (static_cast<int>(powers.size()) <= k) {
            powers.push_back(powers.back() * p);
            if (powers.back().degree() > budget.degree_cap)
                throw BudgetError("thm13_reduce: degree cap exceeded");
        }
        out.q_final = out.q_final - powers[static_cast<std::size_t>(k)] * c;
        out.steps.push_back({c, k});
    }

    if (!out.q_final.is_zero()) {
        out.ratio = radial_similarity(newton_polygon(p), newton_polygon(out.q_final));
        out.radially_similar = out.ratio.has_value();
    }
    return out;
}

}  // namespace kxy
