#ifndef ETOMO_ORBITS_HPP
#define ETOMO_ORBITS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace etomo {

// Shape of an elastic m-tensor over R^n: a symmetric rank-2m tensor built
// from m unordered index pairs. For m = 2 this is the stiffness-tensor
// symmetry a_ijkl = a_jikl = a_klij.
struct TensorShape {
    int n = 0;  // spatial dimension, >= 1
    int m = 0;  // elastic rank, >= 0

    bool operator==(const TensorShape&) const = default;
    bool operator<(const TensorShape& o) const {
        return n != o.n ? n < o.n : m < o.m;
    }
};

// Index of the unordered pair {a, b}, a <= b, in row-major upper-triangular
// order over an n x n symmetric matrix.
inline int pair_index(int n, int a, int b) {
    if (a > b) std::swap(a, b);
    return a * n - a * (a + 1) / 2 + b;
}

inline int pair_count(int n) { return n * (n + 1) / 2; }

// One symmetry orbit of full index tuples (i1 j1 ... im jm) under
// within-pair swaps and pair-block permutations.
struct Orbit {
    std::vector<int> pairs;        // sorted pair indices, one per block
    std::vector<int> rep;          // representative full tuple, length 2m
    std::int64_t multiplicity = 0; // number of distinct tuples in the orbit
    std::int64_t perm_count = 0;   // distinct orderings of the pair multiset
};

// Precomputed orbit structure for one TensorShape. Built once and cached;
// all lookups afterwards are table reads.
class OrbitTable {
public:
    explicit OrbitTable(TensorShape shape);

    const TensorShape& shape() const { return shape_; }
    int dim() const { return static_cast<int>(orbits_.size()); }
    std::int64_t full_size() const { return full_size_; } // n^(2m)

    const Orbit& orbit(int canonical) const { return orbits_[canonical]; }
    const std::vector<Orbit>& orbits() const { return orbits_; }

    // Canonical index of a full tuple (0-based indices, length 2m).
    // Throws std::out_of_range on indices outside [0, n).
    int canonical_index(const std::vector<int>& tuple) const;

    // Canonical index from the linear row-major offset of a full tuple.
    int canonical_of_flat(std::int64_t flat) const { return flat_to_canonical_[flat]; }

    // Decode a row-major flat offset into the full tuple.
    std::vector<int> tuple_of_flat(std::int64_t flat) const;

private:
    TensorShape shape_;
    std::int64_t full_size_;
    std::vector<Orbit> orbits_;
    std::map<std::vector<int>, int> key_to_index_; // sorted pair multiset -> canonical
    std::vector<int> flat_to_canonical_;           // dense map over all n^(2m) tuples
};

// Shared, thread-safe cache of orbit tables keyed by shape.
const OrbitTable& orbit_table(TensorShape shape);
inline const OrbitTable& orbit_table(int n, int m) { return orbit_table(TensorShape{n, m}); }

// dim E^m_n = C(d + m - 1, m) with d = n(n+1)/2.
std::int64_t elastic_dim(int n, int m);

} // namespace etomo

#endif
