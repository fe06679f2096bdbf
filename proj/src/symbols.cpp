#include "etomo/symbols.hpp"

#include <cmath>
#include <stdexcept>

namespace etomo {

namespace {

void require_nonzero(const Eigen::VectorXd& p) {
    if (p.size() == 0 || p.norm() == 0.0) throw std::invalid_argument("frequency p must be nonzero");
}

} // namespace

ElasticTensor sigma_K(const Eigen::VectorXd& p, const Eigen::VectorXd& W) {
    require_nonzero(p);
    const int n = static_cast<int>(p.size());
    if (W.size() != n) throw std::invalid_argument("sigma_K: dimension mismatch");
    const OrbitTable& tab = orbit_table(n, 2);
    ElasticTensor out = ElasticTensor::zero({n, 2});
    // the formula is the elastic symmetrization of p (x) W (x) I, hence
    // constant on orbits; evaluate at representatives
    for (int c = 0; c < tab.dim(); ++c) {
        const auto& r = tab.orbit(c).rep;
        int i = r[0], j = r[1], k = r[2], l = r[3];
        double v = 0;
        if (k == l) v += 0.25 * (p[i] * W[j] + p[j] * W[i]);
        if (i == j) v += 0.25 * (p[k] * W[l] + p[l] * W[k]);
        out.comp[c] = v;
    }
    return out;
}

ElasticTensor sigma_H(const Eigen::VectorXd& p, const ElasticTensor& h) {
    require_nonzero(p);
    const int n = static_cast<int>(p.size());
    if (h.shape.n != n || h.shape.m != 1) throw std::invalid_argument("sigma_H: rank-1 input required");
    const OrbitTable& tab = orbit_table(n, 2);
    const OrbitTable& tab1 = orbit_table(n, 1);
    ElasticTensor out = ElasticTensor::zero({n, 2});
    for (int c = 0; c < tab.dim(); ++c) {
        const auto& r = tab.orbit(c).rep;
        int i = r[0], j = r[1], k = r[2], l = r[3];
        out.comp[c] = 0.5 * (p[i] * p[j] * h.comp[tab1.canonical_index({k, l})] +
                             p[k] * p[l] * h.comp[tab1.canonical_index({i, j})]);
    }
    return out;
}

Eigen::VectorXd dual_K(const Eigen::VectorXd& p, const ElasticTensor& T) {
    require_nonzero(p);
    const int n = static_cast<int>(p.size());
    if (T.shape.n != n || T.shape.m != 2) throw std::invalid_argument("dual_K: rank-2 input required");
    const OrbitTable& tab = orbit_table(n, 2);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i)
        for (int b = 0; b < n; ++b) {
            if (p[b] == 0.0) continue;
            double s = 0;
            for (int l = 0; l < n; ++l) s += T.comp[tab.canonical_index({i, b, l, l})];
            out[i] += p[b] * s;
        }
    return out;
}

ElasticTensor dual_H(const Eigen::VectorXd& p, const ElasticTensor& T) {
    require_nonzero(p);
    const int n = static_cast<int>(p.size());
    if (T.shape.n != n || T.shape.m != 2) throw std::invalid_argument("dual_H: rank-2 input required");
    const OrbitTable& tab = orbit_table(n, 2);
    const OrbitTable& tab1 = orbit_table(n, 1);
    ElasticTensor out = ElasticTensor::zero({n, 1});
    for (int c = 0; c < tab1.dim(); ++c) {
        const auto& r = tab1.orbit(c).rep;
        double s = 0;
        for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m)
                s += T.comp[tab.canonical_index({r[0], r[1], l, m})] * p[l] * p[m];
        out.comp[c] = s;
    }
    return out;
}

Eigen::VectorXd lambda_K(const Eigen::VectorXd& p, const ElasticTensor& T) {
    require_nonzero(p);
    const int n = static_cast<int>(p.size());
    if (T.shape.n != n || T.shape.m != 2) throw std::invalid_argument("lambda_K: rank-2 input required");
    const OrbitTable& tab = orbit_table(n, 2);
    const double scale = 4.0 / std::pow(p.squaredNorm(), 2);
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
        double s = 0;
        for (int b = 0; b < n; ++b)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m < n; ++m)
                    s += T.comp[tab.canonical_index({i, b, l, m})] * p[b] * p[l] * p[m];
        out[i] = scale * s;
    }
    return out;
}

ElasticTensor lambda_H(const Eigen::VectorXd& p, const ElasticTensor& T) {
    require_nonzero(p);
    const int n = static_cast<int>(p.size());
    if (T.shape.n != n || T.shape.m != 2) throw std::invalid_argument("lambda_H: rank-2 input required");
    const OrbitTable& tab = orbit_table(n, 2);
    const OrbitTable& tab1 = orbit_table(n, 1);
    const double p2 = p.squaredNorm();
    double quad = 0; // T contracted with p in all four slots
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int l = 0; l < n; ++l)
                for (int m = 0; m < n; ++m)
                    quad += T.comp[tab.canonical_index({a, b, l, m})] * p[a] * p[b] * p[l] * p[m];
    ElasticTensor out = ElasticTensor::zero({n, 1});
    for (int c = 0; c < tab1.dim(); ++c) {
        const auto& r = tab1.orbit(c).rep;
        double s = 0;
        for (int l = 0; l < n; ++l)
            for (int m = 0; m < n; ++m)
                s += T.comp[tab.canonical_index({r[0], r[1], l, m})] * p[l] * p[m];
        out.comp[c] = 2.0 / (p2 * p2) * s - p[r[0]] * p[r[1]] / (p2 * p2 * p2 * p2) * quad;
    }
    return out;
}

Eigen::MatrixXd orthonormal_complement(const Eigen::VectorXd& v) {
    const int n = static_cast<int>(v.size());
    if (v.norm() == 0.0) throw std::invalid_argument("orthonormal_complement: zero vector");
    Eigen::VectorXd vn = v.normalized();
    // Householder reflection sends vn to -s e_1; its images of e_2..e_n
    // are an orthonormal basis of vn^perp.
    double s = vn[0] >= 0 ? 1.0 : -1.0;
    Eigen::VectorXd u = vn;
    u[0] += s;
    const double uu = u.squaredNorm();
    Eigen::MatrixXd basis(n, n - 1);
    for (int k = 1; k < n; ++k) {
        Eigen::VectorXd e = Eigen::VectorXd::Unit(n, k);
        basis.col(k - 1) = e - (2.0 * u[k] / uu) * u;
    }
    return basis;
}

SymbolFrame::SymbolFrame(const Eigen::VectorXd& p) : n_(static_cast<int>(p.size())), p_(p) {
    require_nonzero(p);
    perp_ = orthonormal_complement(p_);
    const OrbitTable& tab = orbit_table(n_, 2);
    const OrbitTable& tab1 = orbit_table(n_, 1);
    const int dim2 = tab.dim();
    const int cols = (n_ - 1) + tab1.dim();

    sqrt_mult_.resize(dim2);
    for (int c = 0; c < dim2; ++c)
        sqrt_mult_[c] = std::sqrt(static_cast<double>(tab.orbit(c).multiplicity));

    phi_weighted_.resize(dim2, cols);
    for (int a = 0; a < n_ - 1; ++a)
        phi_weighted_.col(a) = sigma_K(p_, perp_.col(a)).comp.cwiseProduct(sqrt_mult_);
    for (int e = 0; e < tab1.dim(); ++e) {
        ElasticTensor h = ElasticTensor::zero({n_, 1});
        h.comp[e] = 1.0;
        phi_weighted_.col(n_ - 1 + e) = sigma_H(p_, h).comp.cwiseProduct(sqrt_mult_);
    }
    qr_.compute(phi_weighted_);
    // scale-aware rank decision, matching the rank oracle used in tests
    qr_.setThreshold(1e-10);
    rank_ = static_cast<int>(qr_.rank());
    if (rank_ != cols)
        throw std::logic_error("SymbolFrame: frame lost column rank (implementation bug)");
}

int SymbolFrame::dim_B() const { return static_cast<int>(orbit_table(n_, 1).dim()); }

SymbolFrame::Split SymbolFrame::project(const ElasticTensor& T) const {
    if (T.shape.n != n_ || T.shape.m != 2)
        throw std::invalid_argument("SymbolFrame::project: rank-2 tensor required");
    Eigen::VectorXd rhs = T.comp.cwiseProduct(sqrt_mult_);
    Eigen::VectorXd coef = qr_.solve(rhs);
    Split out;
    out.W = perp_ * coef.head(n_ - 1);
    out.h = ElasticTensor{{n_, 1}, coef.tail(dim_B())};
    out.A = sigma_K(p_, out.W);
    out.B = sigma_H(p_, out.h);
    out.C = ElasticTensor{{n_, 2}, T.comp - out.A.comp - out.B.comp};
    return out;
}

SymbolFrame::ComplexSplit SymbolFrame::project(const Eigen::VectorXcd& T) const {
    const int dim2 = static_cast<int>(sqrt_mult_.size());
    if (T.size() != dim2) throw std::invalid_argument("SymbolFrame::project: bad component count");
    ElasticTensor re{{n_, 2}, T.real()};
    ElasticTensor im{{n_, 2}, T.imag()};
    Split sre = project(re);
    Split sim = project(im);
    ComplexSplit out;
    auto combine = [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
        return (a.cast<std::complex<double>>() +
                std::complex<double>(0, 1) * b.cast<std::complex<double>>())
            .eval();
    };
    out.A = combine(sre.A.comp, sim.A.comp);
    out.B = combine(sre.B.comp, sim.B.comp);
    out.C = combine(sre.C.comp, sim.C.comp);
    out.W = combine(sre.W, sim.W);
    out.h = combine(sre.h.comp, sim.h.comp);
    return out;
}

SymbolFrame::Split project_pointwise(const Eigen::VectorXd& p, const ElasticTensor& T) {
    return SymbolFrame(p).project(T);
}

} // namespace etomo
