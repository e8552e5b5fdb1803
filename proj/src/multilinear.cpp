#include "homlie/multilinear.hpp"

#include "homlie/errors.hpp"

namespace homlie {

bool vec_is_zero(const Vec& x) {
    for (const auto& k : x)
        if (!k.is_zero()) return false;
    return true;
}

Vec vec_add(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector sizes differ");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] + y[i];
    return r;
}

Vec vec_sub(const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw DimensionMismatch("vector sizes differ");
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = x[i] - y[i];
    return r;
}

Vec vec_scale(const Scalar& k, const Vec& x) {
    Vec r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[i] = k * x[i];
    return r;
}

LinearMap LinearMap::identity(std::size_t n) {
    LinearMap f(n, n);
    for (std::size_t i = 0; i < n; ++i) f.at(i, i) = Scalar(1);
    return f;
}

LinearMap LinearMap::transpose() const {
    LinearMap t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool LinearMap::is_zero() const {
    for (const auto& k : a)
        if (!k.is_zero()) return false;
    return true;
}

bool operator==(const LinearMap& f, const LinearMap& g) {
    if (f.rows != g.rows || f.cols != g.cols) return false;
    for (std::size_t i = 0; i < f.a.size(); ++i)
        if (!(f.a[i] == g.a[i])) return false;
    return true;
}

LinearMap operator+(const LinearMap& f, const LinearMap& g) {
    if (f.rows != g.rows || f.cols != g.cols) throw DimensionMismatch("map shapes differ");
    LinearMap r(f.rows, f.cols);
    for (std::size_t i = 0; i < f.a.size(); ++i) r.a[i] = f.a[i] + g.a[i];
    return r;
}

LinearMap operator-(const LinearMap& f, const LinearMap& g) {
    if (f.rows != g.rows || f.cols != g.cols) throw DimensionMismatch("map shapes differ");
    LinearMap r(f.rows, f.cols);
    for (std::size_t i = 0; i < f.a.size(); ++i) r.a[i] = f.a[i] - g.a[i];
    return r;
}

Vec apply_map(const LinearMap& f, const Vec& x) {
    if (x.size() != f.cols) throw DimensionMismatch("map/vector dimensions differ");
    Vec y(f.rows);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j) y[i] += f.at(i, j) * x[j];
    return y;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
    if (f.cols != g.rows) throw DimensionMismatch("inner dimensions differ");
    LinearMap r(f.rows, g.cols);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t k = 0; k < f.cols; ++k) {
            if (f.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < g.cols; ++j)
                r.at(i, j) += f.at(i, k) * g.at(k, j);
        }
    return r;
}

LinearMap kron(const LinearMap& f, const LinearMap& g) {
    LinearMap r(f.rows * g.rows, f.cols * g.cols);
    for (std::size_t i = 0; i < f.rows; ++i)
        for (std::size_t j = 0; j < f.cols; ++j) {
            if (f.at(i, j).is_zero()) continue;
            for (std::size_t p = 0; p < g.rows; ++p)
                for (std::size_t q = 0; q < g.cols; ++q)
                    r.at(i * g.rows + p, j * g.cols + q) = f.at(i, j) * g.at(p, q);
        }
    return r;
}

LinearMap scale_map(const Scalar& k, const LinearMap& f) {
    LinearMap r = f;
    for (auto& e : r.a) e = k * e;
    return r;
}

Scalar determinant(const LinearMap& f) {
    if (f.rows != f.cols) throw DimensionMismatch("determinant of non-square map");
    std::size_t n = f.rows;
    LinearMap m = f;
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) return Scalar(0);
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            det = -det;
        }
        det = det * m.at(col, col);
        Scalar inv = m.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
        }
    }
    return det;
}

LinearMap inverse_map(const LinearMap& f) {
    if (f.rows != f.cols) throw DimensionMismatch("inverse of non-square map");
    std::size_t n = f.rows;
    LinearMap m = f;
    LinearMap inv = LinearMap::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw NotInvertible("matrix is singular");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Scalar d = m.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = d * m.at(col, j);
            inv.at(col, j) = d * inv.at(col, j);
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            Scalar factor = m.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) = m.at(i, j) - factor * m.at(col, j);
                inv.at(i, j) = inv.at(i, j) - factor * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool Tensor2::is_zero() const {
    for (const auto& k : c)
        if (!k.is_zero()) return false;
    return true;
}

bool operator==(const Tensor2& x, const Tensor2& y) {
    if (x.dim != y.dim) return false;
    for (std::size_t i = 0; i < x.c.size(); ++i)
        if (!(x.c[i] == y.c[i])) return false;
    return true;
}

Tensor2 operator+(const Tensor2& x, const Tensor2& y) {
    if (x.dim != y.dim) throw DimensionMismatch("tensor dims differ");
    Tensor2 r(x.dim);
    for (std::size_t i = 0; i < x.c.size(); ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
}

Tensor2 operator-(const Tensor2& x, const Tensor2& y) {
    if (x.dim != y.dim) throw DimensionMismatch("tensor dims differ");
    Tensor2 r(x.dim);
    for (std::size_t i = 0; i < x.c.size(); ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
}

Tensor2 operator-(const Tensor2& x) { return scale(Scalar(-1), x); }

Tensor2 scale(const Scalar& k, const Tensor2& x) {
    Tensor2 r = x;
    for (auto& e : r.c) e = k * e;
    return r;
}

Tensor2 flip(const Tensor2& x) {
    Tensor2 r(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < x.dim; ++j) r.at(j, i) = x.at(i, j);
    return r;
}

bool Tensor3::is_zero() const {
    for (const auto& k : c)
        if (!k.is_zero()) return false;
    return true;
}

bool operator==(const Tensor3& x, const Tensor3& y) {
    if (x.dim != y.dim) return false;
    for (std::size_t i = 0; i < x.c.size(); ++i)
        if (!(x.c[i] == y.c[i])) return false;
    return true;
}

Tensor3 operator+(const Tensor3& x, const Tensor3& y) {
    if (x.dim != y.dim) throw DimensionMismatch("tensor dims differ");
    Tensor3 r(x.dim);
    for (std::size_t i = 0; i < x.c.size(); ++i) r.c[i] = x.c[i] + y.c[i];
    return r;
}

Tensor3 operator-(const Tensor3& x, const Tensor3& y) {
    if (x.dim != y.dim) throw DimensionMismatch("tensor dims differ");
    Tensor3 r(x.dim);
    for (std::size_t i = 0; i < x.c.size(); ++i) r.c[i] = x.c[i] - y.c[i];
    return r;
}

Tensor3 operator-(const Tensor3& x) { return scale(Scalar(-1), x); }

Tensor3 scale(const Scalar& k, const Tensor3& x) {
    Tensor3 r = x;
    for (auto& e : r.c) e = k * e;
    return r;
}

Tensor3 cyclic(const Tensor3& x) {
    Tensor3 r(x.dim);
    for (std::size_t i = 0; i < x.dim; ++i)
        for (std::size_t j = 0; j < x.dim; ++j)
            for (std::size_t k = 0; k < x.dim; ++k) r.at(i, j, k) = x.at(j, k, i);
    return r;
}

Tensor3 cyclic_sum(const Tensor3& x) { return x + cyclic(x) + cyclic(cyclic(x)); }

Tensor2 tensor_power_apply(const LinearMap& f, const Tensor2& x) {
    if (f.rows != f.cols || f.cols != x.dim)
        throw DimensionMismatch("map/tensor dimensions differ");
    Tensor2 r(x.dim);
    for (std::size_t p = 0; p < x.dim; ++p)
        for (std::size_t q = 0; q < x.dim; ++q) {
            if (x.at(p, q).is_zero()) continue;
            for (std::size_t i = 0; i < x.dim; ++i) {
                if (f.at(i, p).is_zero()) continue;
                for (std::size_t j = 0; j < x.dim; ++j)
                    r.at(i, j) += f.at(i, p) * f.at(j, q) * x.at(p, q);
            }
        }
    return r;
}

Tensor3 tensor_power_apply(const LinearMap& f, const Tensor3& x) {
    if (f.rows != f.cols || f.cols != x.dim)
        throw DimensionMismatch("map/tensor dimensions differ");
    Tensor3 r(x.dim);
    for (std::size_t p = 0; p < x.dim; ++p)
        for (std::size_t q = 0; q < x.dim; ++q)
            for (std::size_t s = 0; s < x.dim; ++s) {
                if (x.at(p, q, s).is_zero()) continue;
                for (std::size_t i = 0; i < x.dim; ++i) {
                    if (f.at(i, p).is_zero()) continue;
                    for (std::size_t j = 0; j < x.dim; ++j) {
                        if (f.at(j, q).is_zero()) continue;
                        for (std::size_t k = 0; k < x.dim; ++k)
                            r.at(i, j, k) += f.at(i, p) * f.at(j, q) * f.at(k, s) * x.at(p, q, s);
                    }
                }
            }
    return r;
}

}  // namespace homlie
