#include "etomo/field_ops.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace etomo {

namespace {

// One additive contribution to an output component: weight times the
// (first or second) derivative of one input component.
struct DerivTerm {
    int d1;
    int d2; // -1 for first order
    int in;
    double w;
};

using OpPlan = std::vector<std::vector<DerivTerm>>; // indexed by output component

OpPlan aggregate(std::vector<std::map<std::tuple<int, int, int>, double>>& acc) {
    OpPlan plan(acc.size());
    for (size_t c = 0; c < acc.size(); ++c)
        for (const auto& [key, w] : acc[c])
            plan[c].push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), w});
    return plan;
}

// H_m h = eps(D^2 h): each member (i, j, rest) of an output orbit
// contributes d_i d_j h_rest / multiplicity.
OpPlan plan_H(int n, int m_out) {
    const OrbitTable& out_tab = orbit_table(n, m_out);
    const OrbitTable& in_tab = orbit_table(n, m_out - 1);
    std::vector<std::map<std::tuple<int, int, int>, double>> acc(out_tab.dim());
    for (std::int64_t flat = 0; flat < out_tab.full_size(); ++flat) {
        int c = out_tab.canonical_of_flat(flat);
        auto t = out_tab.tuple_of_flat(flat);
        int d1 = std::min(t[0], t[1]), d2 = std::max(t[0], t[1]);
        int in = in_tab.canonical_index({t.begin() + 2, t.end()});
        acc[c][{d1, d2, in}] += 1.0 / static_cast<double>(out_tab.orbit(c).multiplicity);
    }
    return aggregate(acc);
}

// K W = eps(DW (x) I): members (i, j, k, k) contribute d_i W_j / multiplicity.
OpPlan plan_K(int n) {
    const OrbitTable& out_tab = orbit_table(n, 2);
    std::vector<std::map<std::tuple<int, int, int>, double>> acc(out_tab.dim());
    for (std::int64_t flat = 0; flat < out_tab.full_size(); ++flat) {
        auto t = out_tab.tuple_of_flat(flat);
        if (t[2] != t[3]) continue;
        int c = out_tab.canonical_of_flat(flat);
        acc[c][{t[0], -1, t[1]}] += 1.0 / static_cast<double>(out_tab.orbit(c).multiplicity);
    }
    return aggregate(acc);
}

// (H* f)_R = sum_{k,l} d_k d_l f_{R k l} for output orbits R of rank m-1.
OpPlan plan_H_adjoint(int n, int m_in) {
    const OrbitTable& in_tab = orbit_table(n, m_in);
    const OrbitTable& out_tab = orbit_table(n, m_in - 1);
    std::vector<std::map<std::tuple<int, int, int>, double>> acc(out_tab.dim());
    for (int c = 0; c < out_tab.dim(); ++c) {
        std::vector<int> tuple = out_tab.orbit(c).rep;
        tuple.push_back(0);
        tuple.push_back(0);
        for (int k = 0; k < n; ++k)
            for (int l = 0; l < n; ++l) {
                tuple[tuple.size() - 2] = k;
                tuple[tuple.size() - 1] = l;
                int in = in_tab.canonical_index(tuple);
                acc[c][{std::min(k, l), std::max(k, l), in}] += 1.0;
            }
    }
    return aggregate(acc);
}

// (K* f)_i = -sum_{j,k} d_j f_{i j k k}.
OpPlan plan_K_adjoint(int n) {
    const OrbitTable& in_tab = orbit_table(n, 2);
    std::vector<std::map<std::tuple<int, int, int>, double>> acc(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                acc[i][{j, -1, in_tab.canonical_index({i, j, k, k})}] -= 1.0;
    return aggregate(acc);
}

std::vector<Eigen::ArrayXd> apply_plan(const Grid& grid, const std::vector<Eigen::ArrayXd>& in,
                                       const OpPlan& plan, Backend backend, FieldOpDiag* diag) {
    const std::int64_t npts = grid.npoints();
    std::vector<Eigen::ArrayXd> out;
    out.reserve(plan.size());

    if (backend == Backend::central_diff) {
        for (int a = 0; a < grid.n; ++a)
            if (grid.samples[a] < 3)
                throw std::invalid_argument("central-diff backend needs >= 3 samples per axis");
        for (const auto& terms : plan) {
            Eigen::ArrayXd o = Eigen::ArrayXd::Zero(npts);
            for (const DerivTerm& t : terms)
                o += t.w * central_derivative(grid, in[t.in], t.d1, t.d2);
            out.push_back(std::move(o));
        }
        if (diag) diag->imag_residual = 0.0;
        return out;
    }

    // spectral: transform inputs once, assemble each output in the
    // frequency domain, transform back
    std::vector<ComplexArray> in_hat(in.size());
    for (size_t c = 0; c < in.size(); ++c) in_hat[c] = fft_forward(grid, in[c]);

    double max_in = 0;
    for (const auto& c : in) max_in = std::max(max_in, c.abs().maxCoeff());

    double worst_resid = 0;
    std::vector<int> kcoord(grid.n, 0);
    for (const auto& terms : plan) {
        ComplexArray accum(npts, {0.0, 0.0});
        std::fill(kcoord.begin(), kcoord.end(), 0);
        for (std::int64_t bin = 0; bin < npts; ++bin) {
            std::complex<double> s{0.0, 0.0};
            for (const DerivTerm& t : terms) {
                double p1 = bin_frequency(grid, t.d1, kcoord[t.d1]);
                if (t.d2 < 0) {
                    // i p1 times the bin
                    const std::complex<double>& z = in_hat[t.in][bin];
                    s += t.w * std::complex<double>(-p1 * z.imag(), p1 * z.real());
                } else {
                    double p2 = bin_frequency(grid, t.d2, kcoord[t.d2]);
                    s += (-t.w * p1 * p2) * in_hat[t.in][bin];
                }
            }
            accum[bin] = s;
            for (int a = grid.n - 1; a >= 0; --a) {
                if (++kcoord[a] < grid.samples[a]) break;
                kcoord[a] = 0;
            }
        }
        double resid_abs = 0;
        ComplexArray spatial = fft_inverse(grid, accum);
        Eigen::ArrayXd o(npts);
        for (std::int64_t i = 0; i < npts; ++i) {
            o[i] = spatial[i].real();
            resid_abs = std::max(resid_abs, std::abs(spatial[i].imag()));
        }
        // relative to the output when it carries signal, to the input scale
        // otherwise (an identically zero output has no meaningful ratio)
        double denom = std::max(o.abs().maxCoeff(), 1e-6 * max_in + 1e-300);
        worst_resid = std::max(worst_resid, resid_abs / denom);
        out.push_back(std::move(o));
    }
    if (diag) diag->imag_residual = worst_resid;
    return out;
}

} // namespace

Eigen::ArrayXd central_derivative(const Grid& grid, const Eigen::ArrayXd& f, int d1, int d2) {
    const int n = grid.n;
    const std::int64_t npts = grid.npoints();
    // row-major strides
    std::vector<std::int64_t> stride(n, 1);
    for (int a = n - 2; a >= 0; --a) stride[a] = stride[a + 1] * grid.samples[a + 1];

    auto shifted = [&](std::int64_t flat, const std::vector<int>& iv, int axis, int step) {
        int N = grid.samples[axis];
        int c = iv[axis] + step;
        if (c >= N) c -= N;
        if (c < 0) c += N;
        return flat + (c - iv[axis]) * stride[axis];
    };

    Eigen::ArrayXd out(npts);
    std::vector<int> iv(n, 0);
    for (std::int64_t flat = 0; flat < npts; ++flat) {
        double v;
        if (d2 < 0) {
            v = (f[shifted(flat, iv, d1, +1)] - f[shifted(flat, iv, d1, -1)]) /
                (2.0 * grid.spacing[d1]);
        } else if (d1 == d2) {
            v = (f[shifted(flat, iv, d1, +1)] - 2.0 * f[flat] + f[shifted(flat, iv, d1, -1)]) /
                (grid.spacing[d1] * grid.spacing[d1]);
        } else {
            std::int64_t pp = shifted(shifted(flat, iv, d1, +1), iv, d2, +1);
            std::int64_t pm = shifted(shifted(flat, iv, d1, +1), iv, d2, -1);
            std::int64_t mp = shifted(shifted(flat, iv, d1, -1), iv, d2, +1);
            std::int64_t mm = shifted(shifted(flat, iv, d1, -1), iv, d2, -1);
            v = (f[pp] - f[pm] - f[mp] + f[mm]) / (4.0 * grid.spacing[d1] * grid.spacing[d2]);
        }
        out[flat] = v;
        for (int a = n - 1; a >= 0; --a) {
            if (++iv[a] < grid.samples[a]) break;
            iv[a] = 0;
        }
    }
    return out;
}

ElasticField apply_H(const ElasticField& h, Backend backend, FieldOpDiag* diag) {
    const int n = h.grid.n;
    if (h.shape.n != n) throw std::invalid_argument("apply_H: shape/grid dimension mismatch");
    const int m_out = h.shape.m + 1;
    ElasticField out = ElasticField::zeros(h.grid, {n, m_out});
    out.comp = apply_plan(h.grid, h.comp, plan_H(n, m_out), backend, diag);
    return out;
}

ElasticField apply_K(const GridField& W, Backend backend, FieldOpDiag* diag) {
    const int n = W.grid.n;
    if (W.ncomp() != n) throw std::invalid_argument("apply_K: expected an n-component vector field");
    ElasticField out = ElasticField::zeros(W.grid, {n, 2});
    out.comp = apply_plan(W.grid, W.comp, plan_K(n), backend, diag);
    return out;
}

ElasticField apply_H_adjoint(const ElasticField& f, Backend backend, FieldOpDiag* diag) {
    if (f.shape.m != 1 && f.shape.m != 2)
        throw std::invalid_argument("apply_H_adjoint: only ranks 1 and 2 are supported");
    const int n = f.grid.n;
    ElasticField out = ElasticField::zeros(f.grid, {n, f.shape.m - 1});
    out.comp = apply_plan(f.grid, f.comp, plan_H_adjoint(n, f.shape.m), backend, diag);
    return out;
}

GridField apply_K_adjoint(const ElasticField& f, Backend backend, FieldOpDiag* diag) {
    if (f.shape.m != 2) throw std::invalid_argument("apply_K_adjoint: rank 2 input required");
    const int n = f.grid.n;
    GridField out = GridField::zeros(f.grid, n);
    out.comp = apply_plan(f.grid, f.comp, plan_K_adjoint(n), backend, diag);
    return out;
}

GridField gradient(const GridField& g, Backend backend, FieldOpDiag* diag) {
    if (g.ncomp() != 1) throw std::invalid_argument("gradient: scalar field required");
    const int n = g.grid.n;
    OpPlan plan(n);
    for (int a = 0; a < n; ++a) plan[a].push_back({a, -1, 0, 1.0});
    GridField out = GridField::zeros(g.grid, n);
    out.comp = apply_plan(g.grid, g.comp, plan, backend, diag);
    return out;
}

ElasticField scalar_times_identity(const GridField& g, int n) {
    if (g.ncomp() != 1) throw std::invalid_argument("scalar_times_identity: scalar field required");
    const OrbitTable& tab = orbit_table(n, 1);
    ElasticField out = ElasticField::zeros(g.grid, {n, 1});
    for (int c = 0; c < tab.dim(); ++c) {
        const auto& r = tab.orbit(c).rep;
        if (r[0] == r[1]) out.comp[c] = g.comp[0];
    }
    return out;
}

} // namespace etomo
