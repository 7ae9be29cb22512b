#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cmser/error.hpp"

namespace cmser {

// Dense row-major double tensor. Everything in the model graph is rank 2
// (scalars are 1x1, vectors 1xN); serialization accepts any rank.
struct Tensor {
    std::vector<std::int64_t> shape;
    std::vector<double> data;

    Tensor() = default;

    Tensor(std::int64_t r, std::int64_t c) : shape{r, c}, data(static_cast<std::size_t>(r * c), 0.0) {
        if (r <= 0 || c <= 0) throw DimensionError("tensor dims must be positive, got " + shape_str());
    }

    static Tensor zeros(std::int64_t r, std::int64_t c) { return Tensor(r, c); }

    static Tensor full(std::int64_t r, std::int64_t c, double v) {
        Tensor t(r, c);
        std::fill(t.data.begin(), t.data.end(), v);
        return t;
    }

    static Tensor scalar(double v) {
        Tensor t(1, 1);
        t.data[0] = v;
        return t;
    }

    static Tensor row(std::vector<double> v) {
        Tensor t;
        t.shape = {1, static_cast<std::int64_t>(v.size())};
        t.data = std::move(v);
        return t;
    }

    static Tensor from_rows(std::int64_t r, std::int64_t c, std::vector<double> v) {
        if (static_cast<std::int64_t>(v.size()) != r * c)
            throw DimensionError("data length does not match shape");
        Tensor t;
        t.shape = {r, c};
        t.data = std::move(v);
        return t;
    }

    std::int64_t rows() const { return shape.empty() ? 0 : shape[0]; }
    std::int64_t cols() const { return shape.size() < 2 ? 1 : shape[1]; }

    std::int64_t numel() const {
        std::int64_t n = 1;
        for (auto d : shape) n *= d;
        return shape.empty() ? 0 : n;
    }

    double& at(std::int64_t r, std::int64_t c) { return data[static_cast<std::size_t>(r * cols() + c)]; }
    double at(std::int64_t r, std::int64_t c) const { return data[static_cast<std::size_t>(r * cols() + c)]; }

    bool same_shape(const Tensor& o) const { return shape == o.shape; }

    bool all_finite() const {
        for (double v : data)
            if (!std::isfinite(v)) return false;
        return true;
    }

    std::string shape_str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < shape.size(); ++i) os << (i ? "x" : "") << shape[i];
        os << "]";
        return os.str();
    }
};

inline void check_same_shape(const Tensor& a, const Tensor& b, const char* op) {
    if (!a.same_shape(b))
        throw DimensionError(std::string(op) + ": shape mismatch " + a.shape_str() + " vs " + b.shape_str());
}

// C = A * B with plain ascending-k accumulation per output cell, so the result
// is bit-identical to a naive i,j,k triple loop.
inline Tensor matmul_values(const Tensor& a, const Tensor& b) {
    if (a.cols() != b.rows())
        throw DimensionError("matmul: inner dims disagree " + a.shape_str() + " vs " + b.shape_str());
    const std::int64_t m = a.rows(), k = a.cols(), n = b.cols();
    Tensor c(m, n);
    const double* ap = a.data.data();
    const double* bp = b.data.data();
    double* cp = c.data.data();
    for (std::int64_t i = 0; i < m; ++i) {
        for (std::int64_t t = 0; t < k; ++t) {
            const double aik = ap[i * k + t];
            const double* brow = bp + t * n;
            double* crow = cp + i * n;
            for (std::int64_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
    return c;
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Independent deterministic stream per (base, a, b) triple.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
    return splitmix64(splitmix64(base ^ 0x6a09e667f3bcc908ULL) + splitmix64(a) * 3 + b);
}

inline void fill_uniform(Tensor& t, double lo, double hi, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(lo, hi);
    for (double& v : t.data) v = dist(rng);
}

inline void fill_gaussian(Tensor& t, double mean, double stddev, std::mt19937_64& rng) {
    std::normal_distribution<double> dist(mean, stddev);
    for (double& v : t.data) v = dist(rng);
}

}  // namespace cmser
