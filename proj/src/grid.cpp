#include "collapseheat/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace collapseheat {

namespace {
constexpr double kMinPsi = 1e-3;
}

GeometryDescriptor GeometryDescriptor::box(double lx, double ly, double lz) {
    GeometryDescriptor g{Shape::Box, lx, ly, lz};
    g.validate();
    return g;
}

GeometryDescriptor GeometryDescriptor::sphere(double radius) {
    GeometryDescriptor g{Shape::Sphere, radius, 0, 0};
    g.validate();
    return g;
}

GeometryDescriptor GeometryDescriptor::finite_cylinder(double radius,
                                                       double height) {
    GeometryDescriptor g{Shape::FiniteCylinder, radius, height, 0};
    g.validate();
    return g;
}

GeometryDescriptor GeometryDescriptor::ellipsoid(double sa, double sb,
                                                 double sc) {
    GeometryDescriptor g{Shape::Ellipsoid, sa, sb, sc};
    g.validate();
    return g;
}

GeometryDescriptor GeometryDescriptor::slab(double half_thickness) {
    GeometryDescriptor g{Shape::Slab, half_thickness, 0, 0};
    g.validate();
    return g;
}

void GeometryDescriptor::validate() const {
    auto pos = [](double v) { return v > 0 && std::isfinite(v); };
    bool ok = false;
    switch (shape) {
        case Shape::Box: ok = pos(a) && pos(b) && pos(c); break;
        case Shape::Sphere: ok = pos(a); break;
        case Shape::FiniteCylinder: ok = pos(a) && pos(b); break;
        case Shape::Ellipsoid: ok = pos(a) && pos(b) && pos(c); break;
        case Shape::Slab: ok = pos(a); break;
        case Shape::CustomMask: ok = true; break;
    }
    if (!ok) throw std::invalid_argument("geometry has degenerate dimensions");
}

double GeometryDescriptor::min_dimension() const {
    switch (shape) {
        case Shape::Box: return std::min({a, b, c});
        case Shape::Sphere: return 2 * a;
        case Shape::FiniteCylinder: return std::min(2 * a, b);
        case Shape::Ellipsoid: return 2 * std::min({a, b, c});
        case Shape::Slab: return 2 * a;
        case Shape::CustomMask: break;
    }
    throw std::invalid_argument("custom mask has no intrinsic dimension");
}

std::array<double, 3> GeometryDescriptor::half_extent() const {
    switch (shape) {
        case Shape::Box: return {a / 2, b / 2, c / 2};
        case Shape::Sphere: return {a, a, a};
        case Shape::FiniteCylinder: return {a, a, b / 2};
        case Shape::Ellipsoid: return {a, b, c};
        case Shape::Slab: return {a, 0, 0};
        case Shape::CustomMask: break;
    }
    throw std::invalid_argument("custom mask has no intrinsic extent");
}

bool GeometryDescriptor::inside(double x, double y, double z) const {
    switch (shape) {
        case Shape::Box:
            return std::abs(x) < a / 2 && std::abs(y) < b / 2 &&
                   std::abs(z) < c / 2;
        case Shape::Sphere:
            return x * x + y * y + z * z < a * a;
        case Shape::FiniteCylinder:
            return x * x + y * y < a * a && std::abs(z) < b / 2;
        case Shape::Ellipsoid: {
            double sx = x / a, sy = y / b, sz = z / c;
            return sx * sx + sy * sy + sz * sz < 1.0;
        }
        case Shape::Slab:
            return std::abs(x) < a;
        case Shape::CustomMask:
            break;
    }
    throw std::invalid_argument("custom mask has no intrinsic inside test");
}

double GeometryDescriptor::axis_exit(const std::array<double, 3>& p, int axis,
                                     int dir) const {
    auto quadratic_exit = [&](const std::array<double, 3>& semi) {
        // ((p + t e)/semi)^2 = 1, inside point => one positive root
        double s = semi[axis];
        double A = 1.0 / (s * s);
        double B = 2.0 * dir * p[axis] / (s * s);
        double C = -1.0;
        for (int k = 0; k < 3; ++k) C += (p[k] / semi[k]) * (p[k] / semi[k]);
        double disc = B * B - 4 * A * C;
        return (-B + std::sqrt(std::max(disc, 0.0))) / (2 * A);
    };
    switch (shape) {
        case Shape::Box: {
            std::array<double, 3> half{a / 2, b / 2, c / 2};
            return half[axis] - dir * p[axis];
        }
        case Shape::Sphere:
            return quadratic_exit({a, a, a});
        case Shape::Ellipsoid:
            return quadratic_exit({a, b, c});
        case Shape::FiniteCylinder: {
            if (axis == 2) return b / 2 - dir * p[2];
            double q = dir * p[axis];
            double other = (axis == 0) ? p[1] : p[0];
            return -q + std::sqrt(std::max(a * a - other * other, 0.0));
        }
        case Shape::Slab:
            return a - dir * p[0];
        case Shape::CustomMask:
            break;
    }
    throw std::invalid_argument("custom mask exit distances need bisection");
}

GeometryDescriptor GeometryDescriptor::scaled(double factor) const {
    if (!(factor > 0)) throw std::invalid_argument("scale factor must be > 0");
    GeometryDescriptor g = *this;
    g.a *= factor;
    if (shape == Shape::Box || shape == Shape::FiniteCylinder ||
        shape == Shape::Ellipsoid)
        g.b *= factor;
    if (shape == Shape::Box || shape == Shape::Ellipsoid) g.c *= factor;
    return g;
}

std::string GeometryDescriptor::describe() const {
    std::ostringstream os;
    switch (shape) {
        case Shape::Box: os << "box(" << a << "," << b << "," << c << " m)"; break;
        case Shape::Sphere: os << "sphere(R=" << a << " m)"; break;
        case Shape::FiniteCylinder:
            os << "finite-cylinder(R=" << a << " m,H=" << b << " m)";
            break;
        case Shape::Ellipsoid:
            os << "ellipsoid(" << a << "," << b << "," << c << " m)";
            break;
        case Shape::Slab: os << "slab(half=" << a << " m)"; break;
        case Shape::CustomMask: os << "custom-mask"; break;
    }
    return os.str();
}

std::array<double, 3> GridDomain::position(int i, int j, int k) const {
    return {origin_[0] + i * h_, origin_[1] + j * h_, origin_[2] + k * h_};
}

std::array<double, 3> GridDomain::position_of(int unknown) const {
    auto [i, j, k] = node_of_[unknown];
    return position(i, j, k);
}

GridDomain GridDomain::build(const GeometryDescriptor& geom, int resolution) {
    geom.validate();
    if (geom.shape == Shape::CustomMask)
        throw std::invalid_argument("use build_masked for custom masks");
    auto inside = [&geom](double x, double y, double z) {
        return geom.inside(x, y, z);
    };
    auto exit = [&geom](const std::array<double, 3>& p, int axis, int dir) {
        return geom.axis_exit(p, axis, dir);
    };
    int dims = geom.shape == Shape::Slab ? 1 : 3;
    GridDomain d = build_impl(geom, resolution, inside, exit,
                              geom.half_extent(), dims);
    return d;
}

GridDomain GridDomain::build_masked(
    const std::function<bool(double, double, double)>& inside,
    const std::array<double, 3>& half_extent, int resolution) {
    for (double he : half_extent)
        if (!(he > 0))
            throw std::invalid_argument("mask bounding box must be positive");
    double h = 2.0 * std::min({half_extent[0], half_extent[1], half_extent[2]}) /
               resolution;
    // bisect the inside-predicate for the surface crossing on each cut link
    auto exit = [&inside, h](const std::array<double, 3>& p, int axis, int dir) {
        double lo = 0.0, hi = h;
        for (int it = 0; it < 50; ++it) {
            double mid = 0.5 * (lo + hi);
            std::array<double, 3> q = p;
            q[axis] += dir * mid;
            (inside(q[0], q[1], q[2]) ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    };
    GeometryDescriptor g;
    g.shape = Shape::CustomMask;
    g.a = half_extent[0];
    g.b = half_extent[1];
    g.c = half_extent[2];
    return build_impl(g, resolution, inside, exit, half_extent, 3);
}

GridDomain GridDomain::build_impl(
    const GeometryDescriptor& geom, int resolution,
    const std::function<bool(double, double, double)>& inside,
    const std::function<double(const std::array<double, 3>&, int, int)>& exit,
    const std::array<double, 3>& half_extent, int dims) {
    if (resolution < 8)
        throw std::invalid_argument(
            "resolution must be >= 8 cells across the smallest dimension");

    GridDomain d;
    d.geom_ = geom;
    d.dims_ = dims;
    double min_dim = (geom.shape == Shape::CustomMask)
                         ? 2.0 * std::min({half_extent[0], half_extent[1],
                                           half_extent[2]})
                         : geom.min_dimension();
    d.h_ = min_dim / resolution;
    const double h = d.h_;

    auto axis_cells = [&](double he) {
        return std::max(1, int(std::ceil(2.0 * he / h - 1e-9)));
    };
    int mx = axis_cells(half_extent[0]);
    int my = dims == 1 ? 1 : axis_cells(half_extent[1]);
    int mz = dims == 1 ? 1 : axis_cells(half_extent[2]);
    // one padding layer per side; cell centers, grid centered on the origin
    d.nx_ = mx + 2;
    d.ny_ = dims == 1 ? 1 : my + 2;
    d.nz_ = dims == 1 ? 1 : mz + 2;
    d.origin_ = {-(mx + 1) * h / 2.0,
                 dims == 1 ? 0.0 : -(my + 1) * h / 2.0,
                 dims == 1 ? 0.0 : -(mz + 1) * h / 2.0};

    d.mask_.assign(d.num_nodes(), NodeKind::Exterior);
    d.unknown_.assign(d.num_nodes(), -1);

    for (int i = 0; i < d.nx_; ++i)
        for (int j = 0; j < d.ny_; ++j)
            for (int k = 0; k < d.nz_; ++k) {
                auto p = d.position(i, j, k);
                if (inside(p[0], p[1], p[2])) {
                    d.mask_[d.index(i, j, k)] = NodeKind::Interior;
                    d.unknown_[d.index(i, j, k)] =
                        static_cast<int>(d.node_of_.size());
                    d.node_of_.push_back({i, j, k});
                }
            }
    if (d.node_of_.empty())
        throw std::invalid_argument("geometry rasterized to an empty domain");

    static constexpr int kDir[6][3] = {{1, 0, 0},  {-1, 0, 0}, {0, 1, 0},
                                       {0, -1, 0}, {0, 0, 1},  {0, 0, -1}};
    const int ndirs = dims == 1 ? 2 : 6;
    const int n = d.num_interior();
    d.nbr_.assign(n, {-1, -1, -1, -1, -1, -1});
    d.diag_.assign(n, 0.0);
    d.bcoef_.assign(n, 0.0);
    const double inv_h2 = 1.0 / (h * h);

    for (int u = 0; u < n; ++u) {
        auto [i, j, k] = d.node_of_[u];
        auto p = d.position(i, j, k);
        for (int s = 0; s < ndirs; ++s) {
            int ni = i + kDir[s][0], nj = j + kDir[s][1], nk = k + kDir[s][2];
            auto idx = d.index(ni, nj, nk);
            if (d.mask_[idx] == NodeKind::Interior) {
                d.nbr_[u][s] = d.unknown_[idx];
                d.diag_[u] += inv_h2;
            } else {
                d.mask_[idx] = NodeKind::Boundary;
                int axis = s / 2;
                int dir = kDir[s][axis];
                double t = exit(p, axis, dir);
                double psi = std::clamp(t / h, kMinPsi, 1.0);
                d.diag_[u] += inv_h2 / psi;
                d.bcoef_[u] += inv_h2 / psi;
            }
        }
    }
    return d;
}

}  // namespace collapseheat
