#pragma once

#include <cstddef>
#include <vector>

#include "homlie/scalar.hpp"

namespace homlie {

using Vec = std::vector<Scalar>;

bool vec_is_zero(const Vec& x);
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_sub(const Vec& x, const Vec& y);
Vec vec_scale(const Scalar& k, const Vec& x);

// Dense matrix; column j holds the image of basis vector j.
struct LinearMap {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Scalar> a;

    LinearMap() = default;
    LinearMap(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    Scalar& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static LinearMap identity(std::size_t n);
    LinearMap transpose() const;
    bool is_zero() const;
    friend bool operator==(const LinearMap&, const LinearMap&);
    friend LinearMap operator+(const LinearMap&, const LinearMap&);
    friend LinearMap operator-(const LinearMap&, const LinearMap&);
};

Vec apply_map(const LinearMap& f, const Vec& x);
LinearMap compose(const LinearMap& f, const LinearMap& g);   // f after g
LinearMap kron(const LinearMap& f, const LinearMap& g);
LinearMap scale_map(const Scalar& k, const LinearMap& f);
Scalar determinant(const LinearMap& f);                      // square only
LinearMap inverse_map(const LinearMap& f);                   // throws NotInvertible

// Element of L ox L: entry (i,j) is the coefficient of e_i ox e_j.
struct Tensor2 {
    std::size_t dim = 0;
    std::vector<Scalar> c;

    Tensor2() = default;
    explicit Tensor2(std::size_t d) : dim(d), c(d * d) {}

    Scalar& at(std::size_t i, std::size_t j) { return c[i * dim + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return c[i * dim + j]; }

    bool is_zero() const;
    friend bool operator==(const Tensor2&, const Tensor2&);
    friend Tensor2 operator+(const Tensor2&, const Tensor2&);
    friend Tensor2 operator-(const Tensor2&, const Tensor2&);
    friend Tensor2 operator-(const Tensor2&);
};

Tensor2 scale(const Scalar& k, const Tensor2& x);
Tensor2 flip(const Tensor2& x);  // tau(x ox y) = y ox x

// Element of L ox L ox L.
struct Tensor3 {
    std::size_t dim = 0;
    std::vector<Scalar> c;

    Tensor3() = default;
    explicit Tensor3(std::size_t d) : dim(d), c(d * d * d) {}

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
        return c[(i * dim + j) * dim + k];
    }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return c[(i * dim + j) * dim + k];
    }

    bool is_zero() const;
    friend bool operator==(const Tensor3&, const Tensor3&);
    friend Tensor3 operator+(const Tensor3&, const Tensor3&);
    friend Tensor3 operator-(const Tensor3&, const Tensor3&);
    friend Tensor3 operator-(const Tensor3&);
};

Tensor3 scale(const Scalar& k, const Tensor3& x);

// sigma with sigma(1)=2, sigma(2)=3, sigma(3)=1: slot 1 feeds slot 2, so
// cyclic(e1 ox e2 ox e3) = e3 ox e1 ox e2.
Tensor3 cyclic(const Tensor3& x);
Tensor3 cyclic_sum(const Tensor3& x);  // Id + sigma + sigma^2

Tensor2 tensor_power_apply(const LinearMap& f, const Tensor2& x);
Tensor3 tensor_power_apply(const LinearMap& f, const Tensor3& x);

}  // namespace homlie
