#include "etomo/orbits.hpp"

#include <algorithm>
#include <mutex>

namespace etomo {

namespace {

// Multisets of size m over symbols 0..d-1, in lexicographic order of the
// sorted tuple. This enumeration order defines the canonical indices.
void enumerate_multisets(int d, int m, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out, int start) {
    if (static_cast<int>(cur.size()) == m) {
        out.push_back(cur);
        return;
    }
    for (int s = start; s < d; ++s) {
        cur.push_back(s);
        enumerate_multisets(d, m, cur, out, s);
        cur.pop_back();
    }
}

std::pair<int, int> pair_of_index(int n, int p) {
    for (int a = 0; a < n; ++a) {
        int row = a * n - a * (a + 1) / 2;
        if (p >= row + a && p <= row + n - 1) return {a, p - row};
    }
    throw std::out_of_range("pair index out of range");
}

} // namespace

std::int64_t elastic_dim(int n, int m) {
    std::int64_t d = pair_count(n);
    // C(d + m - 1, m)
    std::int64_t r = 1;
    for (int k = 1; k <= m; ++k) r = r * (d + k - 1) / k;
    return r;
}

OrbitTable::OrbitTable(TensorShape shape) : shape_(shape) {
    if (shape.n < 1 || shape.m < 0)
        throw std::invalid_argument("OrbitTable: need n >= 1, m >= 0");
    const int n = shape.n, m = shape.m;

    full_size_ = 1;
    for (int k = 0; k < 2 * m; ++k) {
        full_size_ *= n;
        if (full_size_ > (std::int64_t{1} << 30))
            throw std::invalid_argument("OrbitTable: full index space too large");
    }

    std::vector<std::vector<int>> multisets;
    std::vector<int> cur;
    enumerate_multisets(pair_count(n), m, cur, multisets, 0);
    orbits_.resize(multisets.size());
    for (size_t c = 0; c < multisets.size(); ++c) {
        Orbit& o = orbits_[c];
        o.pairs = multisets[c];
        key_to_index_[o.pairs] = static_cast<int>(c);
        o.rep.reserve(2 * m);
        for (int p : o.pairs) {
            auto [a, b] = pair_of_index(n, p);
            o.rep.push_back(a);
            o.rep.push_back(b);
        }
        // Distinct orderings of the pair multiset, times an independent
        // within-pair swap for every off-diagonal pair.
        std::int64_t perms = 1;
        for (int k = 2; k <= m; ++k) perms *= k;
        int run = 1;
        for (size_t t = 1; t <= o.pairs.size(); ++t) {
            if (t < o.pairs.size() && o.pairs[t] == o.pairs[t - 1]) {
                ++run;
            } else {
                for (int k = 2; k <= run; ++k) perms /= k;
                run = 1;
            }
        }
        o.perm_count = perms;
        std::int64_t swaps = 1;
        for (int p : o.pairs) {
            auto [a, b] = pair_of_index(n, p);
            if (a != b) swaps *= 2;
        }
        o.multiplicity = perms * swaps;
    }

    // Dense tuple -> canonical map; doubles as an exhaustive check that the
    // multiplicities add up to n^(2m).
    flat_to_canonical_.resize(full_size_);
    std::vector<std::int64_t> seen(orbits_.size(), 0);
    std::vector<int> tuple(2 * m, 0);
    for (std::int64_t flat = 0; flat < full_size_; ++flat) {
        std::int64_t r = flat;
        for (int k = 2 * m - 1; k >= 0; --k) {
            tuple[k] = static_cast<int>(r % n);
            r /= n;
        }
        std::vector<int> key(m);
        for (int t = 0; t < m; ++t) key[t] = pair_index(n, tuple[2 * t], tuple[2 * t + 1]);
        std::sort(key.begin(), key.end());
        int c = key_to_index_.at(key);
        flat_to_canonical_[flat] = c;
        ++seen[c];
    }
    for (size_t c = 0; c < orbits_.size(); ++c)
        if (seen[c] != orbits_[c].multiplicity)
            throw std::logic_error("OrbitTable: multiplicity mismatch");
}

int OrbitTable::canonical_index(const std::vector<int>& tuple) const {
    const int n = shape_.n, m = shape_.m;
    if (static_cast<int>(tuple.size()) != 2 * m)
        throw std::invalid_argument("canonical_index: tuple length != 2m");
    std::vector<int> key(m);
    for (int t = 0; t < m; ++t) {
        int a = tuple[2 * t], b = tuple[2 * t + 1];
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::out_of_range("canonical_index: index out of range");
        key[t] = pair_index(n, a, b);
    }
    std::sort(key.begin(), key.end());
    return key_to_index_.at(key);
}

std::vector<int> OrbitTable::tuple_of_flat(std::int64_t flat) const {
    const int n = shape_.n, m = shape_.m;
    std::vector<int> tuple(2 * m);
    for (int k = 2 * m - 1; k >= 0; --k) {
        tuple[k] = static_cast<int>(flat % n);
        flat /= n;
    }
    return tuple;
}

const OrbitTable& orbit_table(TensorShape shape) {
    static std::mutex mu;
    static std::map<TensorShape, std::unique_ptr<OrbitTable>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(shape);
    if (it == cache.end())
        it = cache.emplace(shape, std::make_unique<OrbitTable>(shape)).first;
    return *it->second;
}

} // namespace etomo
