#ifndef ETOMO_GRID_HPP
#define ETOMO_GRID_HPP

#include "etomo/orbits.hpp"
#include "etomo/tensor.hpp"

#include <Eigen/Dense>
#include <span>
#include <vector>

namespace etomo {

// Uniform n-dimensional sampling grid, row-major linear indexing
// (last axis fastest).
struct Grid {
    int n = 0;
    std::vector<int> samples;    // per axis, >= 1
    std::vector<double> spacing; // per axis, > 0
    std::vector<double> origin;  // per axis

    static Grid cube(int n, int samples_per_axis, double extent, double origin_coord);

    std::int64_t npoints() const;
    double cell_volume() const;
    double extent(int axis) const { return samples[axis] * spacing[axis]; }
    // length of the box diagonal, used to size ray segments
    double diagonal() const;

    std::int64_t index(std::span<const int> iv) const;
    std::vector<int> coords(std::int64_t flat) const;
    Eigen::VectorXd point(std::span<const int> iv) const;

    void validate() const;
    bool operator==(const Grid&) const = default;
};

// A multi-component field sampled on a grid, one contiguous array per
// component. Scalar fields have one component, vector fields n.
struct GridField {
    Grid grid;
    std::vector<Eigen::ArrayXd> comp;

    static GridField zeros(const Grid& g, int ncomp);
    int ncomp() const { return static_cast<int>(comp.size()); }
};

// An elastic m-tensor field: canonical components per grid point.
struct ElasticField {
    Grid grid;
    TensorShape shape;
    std::vector<Eigen::ArrayXd> comp; // dim E^m_n components

    static ElasticField zeros(const Grid& g, TensorShape shape);
    int ncomp() const { return static_cast<int>(comp.size()); }

    // canonical tensor at one grid point
    ElasticTensor at(std::int64_t flat) const;
};

// Discrete L2 inner products (cell volume times pointwise pairing). The
// elastic pairing carries orbit multiplicities so it matches the
// full-index Euclidean inner product.
double l2_inner(const GridField& a, const GridField& b);
double l2_inner(const ElasticField& a, const ElasticField& b);
double l2_norm(const GridField& a);
double l2_norm(const ElasticField& a);

// Multilinear interpolation of every component at point x; zero outside
// the grid hull.
void sample_multilinear(const Grid& grid, std::span<const Eigen::ArrayXd> comp,
                        const Eigen::VectorXd& x, std::span<double> out);

} // namespace etomo

#endif
