#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace collapseheat {

enum class Shape { Box, Sphere, FiniteCylinder, Ellipsoid, Slab, CustomMask };

/// Axis-aligned geometry centered at the origin.
///   Box:            a,b,c = full edge lengths Lx, Ly, Lz
///   Sphere:         a = radius
///   FiniteCylinder: a = radius, b = full height (axis = z)
///   Ellipsoid:      a,b,c = semi-axes
///   Slab:           a = half-thickness (1D solve along x)
struct GeometryDescriptor {
    Shape shape = Shape::Box;
    double a = 0, b = 0, c = 0;

    static GeometryDescriptor box(double lx, double ly, double lz);
    static GeometryDescriptor cube(double l) { return box(l, l, l); }
    static GeometryDescriptor sphere(double radius);
    static GeometryDescriptor finite_cylinder(double radius, double height);
    static GeometryDescriptor ellipsoid(double sa, double sb, double sc);
    static GeometryDescriptor slab(double half_thickness);

    void validate() const;
    double min_dimension() const;
    /// Half-extent of the bounding box along each axis.
    std::array<double, 3> half_extent() const;
    bool inside(double x, double y, double z) const;
    /// Distance from an inside point to the surface moving along +-axis.
    double axis_exit(const std::array<double, 3>& p, int axis, int dir) const;
    /// Scale all dimensions by a factor.
    GeometryDescriptor scaled(double factor) const;
    std::string describe() const;
};

enum class NodeKind : std::uint8_t { Exterior = 0, Boundary = 1, Interior = 2 };

/// Cell-centered masked grid with precomputed 7-point stencil data.
/// Interior nodes are cell centers strictly inside the shape; boundary nodes
/// are the adjacent layer and carry the Dirichlet value. Links that cross the
/// surface use the fractional distance psi in (0,1] to the exact surface, so
/// the operator stays symmetric positive definite while the boundary
/// condition is applied at the true surface location.
class GridDomain {
public:
    /// resolution = cells across the smallest dimension; must be >= 8.
    static GridDomain build(const GeometryDescriptor& geom, int resolution);
    /// Custom mask from an inside-predicate over a centered bounding box of
    /// given half-extents. Surface crossings are located by bisection.
    static GridDomain build_masked(
        const std::function<bool(double, double, double)>& inside,
        const std::array<double, 3>& half_extent, int resolution);

    const GeometryDescriptor& descriptor() const { return geom_; }
    double spacing() const { return h_; }
    int dims() const { return dims_; }
    std::array<int, 3> shape() const { return {nx_, ny_, nz_}; }
    int num_interior() const { return static_cast<int>(node_of_.size()); }
    std::int64_t num_nodes() const {
        return std::int64_t(nx_) * ny_ * nz_;
    }

    NodeKind kind(int i, int j, int k) const {
        return mask_[index(i, j, k)];
    }
    int unknown_at(int i, int j, int k) const {
        return unknown_[index(i, j, k)];
    }
    std::array<int, 3> node_of(int unknown) const { return node_of_[unknown]; }
    std::array<double, 3> position(int i, int j, int k) const;
    std::array<double, 3> position_of(int unknown) const;

    // Stencil data, one row per interior unknown:
    //   A x |_i = diag[i] * x_i - (1/h^2) * sum_{j in neighbors[i]} x_j
    //   b_i   = source + boundary_coeff[i] * u_boundary
    const std::vector<std::array<int, 6>>& neighbors() const { return nbr_; }
    const std::vector<double>& diag() const { return diag_; }
    const std::vector<double>& boundary_coeff() const { return bcoef_; }

private:
    std::int64_t index(int i, int j, int k) const {
        return (std::int64_t(i) * ny_ + j) * nz_ + k;
    }
    static GridDomain build_impl(
        const GeometryDescriptor& geom, int resolution,
        const std::function<bool(double, double, double)>& inside,
        const std::function<double(const std::array<double, 3>&, int, int)>& exit,
        const std::array<double, 3>& half_extent, int dims);

    GeometryDescriptor geom_;
    double h_ = 0;
    int nx_ = 0, ny_ = 0, nz_ = 0;
    int dims_ = 3;
    std::array<double, 3> origin_{};  // position of node (0,0,0)
    std::vector<NodeKind> mask_;
    std::vector<int> unknown_;
    std::vector<std::array<int, 3>> node_of_;
    std::vector<std::array<int, 6>> nbr_;
    std::vector<double> diag_;
    std::vector<double> bcoef_;
};

}  // namespace collapseheat
