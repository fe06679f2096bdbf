#ifndef ETOMO_TESTS_ORACLE_HELPERS_HPP
#define ETOMO_TESTS_ORACLE_HELPERS_HPP

// Brute-force reference implementations used as independent oracles in the
// tests. Everything here works on full n^(2m) index arrays and never calls
// into the canonical-storage code paths it is checking.

#include <Eigen/Dense>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

namespace oracle {

inline std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

inline std::vector<int> decode(std::int64_t flat, int n, int len) {
    std::vector<int> t(len);
    for (int k = len - 1; k >= 0; --k) {
        t[k] = static_cast<int>(flat % n);
        flat /= n;
    }
    return t;
}

inline std::int64_t encode(const std::vector<int>& t, int n) {
    std::int64_t f = 0;
    for (int x : t) f = f * n + x;
    return f;
}

// All members of the elastic symmetry orbit of a tuple: every permutation
// of the m pairs combined with every within-pair swap.
inline std::set<std::vector<int>> orbit_members(const std::vector<int>& tuple) {
    const int m = static_cast<int>(tuple.size()) / 2;
    std::vector<std::vector<int>> pairs(m);
    for (int t = 0; t < m; ++t) pairs[t] = {tuple[2 * t], tuple[2 * t + 1]};
    std::vector<int> perm(m);
    for (int t = 0; t < m; ++t) perm[t] = t;
    std::sort(perm.begin(), perm.end());
    std::set<std::vector<int>> out;
    do {
        for (int mask = 0; mask < (1 << m); ++mask) {
            std::vector<int> full;
            for (int t = 0; t < m; ++t) {
                auto pr = pairs[perm[t]];
                if (mask & (1 << t)) std::swap(pr[0], pr[1]);
                full.push_back(pr[0]);
                full.push_back(pr[1]);
            }
            out.insert(full);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Number of orbits by explicit enumeration over all n^(2m) tuples.
inline int count_orbits(int n, int m) {
    const std::int64_t full = ipow(n, 2 * m);
    std::vector<char> visited(full, 0);
    int count = 0;
    for (std::int64_t f = 0; f < full; ++f) {
        if (visited[f]) continue;
        ++count;
        for (const auto& t : orbit_members(decode(f, n, 2 * m))) visited[encode(t, n)] = 1;
    }
    return count;
}

// Full-index Euclidean inner product of two raw arrays.
inline double full_inner(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// sum over all tuples of raw_{i1 j1 ... im jm} v_{i1} q_{j1} ... v_{im} q_{jm}.
inline double full_contract(const std::vector<double>& raw, int n, int m,
                            const Eigen::VectorXd& v, const Eigen::VectorXd& q) {
    const std::int64_t full = ipow(n, 2 * m);
    double s = 0;
    for (std::int64_t f = 0; f < full; ++f) {
        auto t = decode(f, n, 2 * m);
        double w = raw[f];
        for (int k = 0; k < m; ++k) w *= v[t[2 * k]] * q[t[2 * k + 1]];
        s += w;
    }
    return s;
}

inline std::vector<double> random_raw(int n, int m, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    std::vector<double> raw(ipow(n, 2 * m));
    for (auto& x : raw) x = g(rng);
    return raw;
}

inline Eigen::VectorXd random_unit(int n, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v[i] = g(rng);
    return v.normalized();
}

} // namespace oracle

#endif
