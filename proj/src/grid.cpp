#include "etomo/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace etomo {

Grid Grid::cube(int n, int samples_per_axis, double extent, double origin_coord) {
    Grid g;
    g.n = n;
    g.samples.assign(n, samples_per_axis);
    g.spacing.assign(n, extent / samples_per_axis);
    g.origin.assign(n, origin_coord);
    g.validate();
    return g;
}

void Grid::validate() const {
    if (n < 1) throw std::invalid_argument("Grid: n must be >= 1");
    if (static_cast<int>(samples.size()) != n || static_cast<int>(spacing.size()) != n ||
        static_cast<int>(origin.size()) != n)
        throw std::invalid_argument("Grid: per-axis arrays must have length n");
    std::int64_t total = 1;
    for (int a = 0; a < n; ++a) {
        if (samples[a] < 1) throw std::invalid_argument("Grid: samples must be positive");
        if (!(spacing[a] > 0)) throw std::invalid_argument("Grid: spacing must be positive");
        total *= samples[a];
        if (total > (std::int64_t{1} << 40)) throw std::invalid_argument("Grid: too many points");
    }
}

std::int64_t Grid::npoints() const {
    std::int64_t total = 1;
    for (int s : samples) total *= s;
    return total;
}

double Grid::cell_volume() const {
    double v = 1;
    for (double h : spacing) v *= h;
    return v;
}

double Grid::diagonal() const {
    double s = 0;
    for (int a = 0; a < n; ++a) s += extent(a) * extent(a);
    return std::sqrt(s);
}

std::int64_t Grid::index(std::span<const int> iv) const {
    std::int64_t f = 0;
    for (int a = 0; a < n; ++a) f = f * samples[a] + iv[a];
    return f;
}

std::vector<int> Grid::coords(std::int64_t flat) const {
    std::vector<int> iv(n);
    for (int a = n - 1; a >= 0; --a) {
        iv[a] = static_cast<int>(flat % samples[a]);
        flat /= samples[a];
    }
    return iv;
}

Eigen::VectorXd Grid::point(std::span<const int> iv) const {
    Eigen::VectorXd x(n);
    for (int a = 0; a < n; ++a) x[a] = origin[a] + iv[a] * spacing[a];
    return x;
}

GridField GridField::zeros(const Grid& g, int ncomp) {
    GridField f;
    f.grid = g;
    f.comp.assign(ncomp, Eigen::ArrayXd::Zero(g.npoints()));
    return f;
}

ElasticField ElasticField::zeros(const Grid& g, TensorShape shape) {
    ElasticField f;
    f.grid = g;
    f.shape = shape;
    f.comp.assign(orbit_table(shape).dim(), Eigen::ArrayXd::Zero(g.npoints()));
    return f;
}

ElasticTensor ElasticField::at(std::int64_t flat) const {
    Eigen::VectorXd c(ncomp());
    for (int i = 0; i < ncomp(); ++i) c[i] = comp[i][flat];
    return {shape, std::move(c)};
}

double l2_inner(const GridField& a, const GridField& b) {
    if (!(a.grid == b.grid) || a.ncomp() != b.ncomp())
        throw std::invalid_argument("l2_inner: field mismatch");
    double s = 0;
    for (int c = 0; c < a.ncomp(); ++c) s += (a.comp[c] * b.comp[c]).sum();
    return s * a.grid.cell_volume();
}

double l2_inner(const ElasticField& a, const ElasticField& b) {
    if (!(a.grid == b.grid) || !(a.shape == b.shape))
        throw std::invalid_argument("l2_inner: field mismatch");
    const OrbitTable& tab = orbit_table(a.shape);
    double s = 0;
    for (int c = 0; c < a.ncomp(); ++c)
        s += static_cast<double>(tab.orbit(c).multiplicity) * (a.comp[c] * b.comp[c]).sum();
    return s * a.grid.cell_volume();
}

double l2_norm(const GridField& a) { return std::sqrt(l2_inner(a, a)); }
double l2_norm(const ElasticField& a) { return std::sqrt(l2_inner(a, a)); }

void sample_multilinear(const Grid& grid, std::span<const Eigen::ArrayXd> comp,
                        const Eigen::VectorXd& x, std::span<double> out) {
    const int n = grid.n;
    // cell coordinates and interpolation weights per axis
    int base[8];
    double frac[8];
    if (n > 8) throw std::invalid_argument("sample_multilinear: n too large");
    for (int a = 0; a < n; ++a) {
        double t = (x[a] - grid.origin[a]) / grid.spacing[a];
        double fl = std::floor(t);
        base[a] = static_cast<int>(fl);
        frac[a] = t - fl;
        if (base[a] < -1 || base[a] > grid.samples[a] - 1) {
            for (auto& o : out) o = 0.0;
            return;
        }
    }
    for (auto& o : out) o = 0.0;
    const int corners = 1 << n;
    for (int mask = 0; mask < corners; ++mask) {
        double w = 1.0;
        std::int64_t flat = 0;
        bool inside = true;
        for (int a = 0; a < n; ++a) {
            int bit = (mask >> a) & 1;
            int idx = base[a] + bit;
            if (idx < 0 || idx >= grid.samples[a]) {
                inside = false;
                break;
            }
            w *= bit ? frac[a] : 1.0 - frac[a];
            flat = flat * grid.samples[a] + idx;
        }
        if (!inside || w == 0.0) continue;
        for (size_t c = 0; c < comp.size(); ++c) out[c] += w * comp[c][flat];
    }
}

} // namespace etomo
