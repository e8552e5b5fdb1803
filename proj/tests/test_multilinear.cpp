#include <doctest.h>

#include "testutil.hpp"

using namespace homlie;

TEST_CASE("apply_map and tensor_power_apply basics") {
    LinearMap id = LinearMap::identity(3);
    testutil::Rng rng;
    Tensor2 r = rng.tensor2(3);
    CHECK(tensor_power_apply(id, r) == r);
    LinearMap two = scale_map(Scalar(2), id);
    CHECK(tensor_power_apply(two, r) == scale(Scalar(4), r));
    Vec v = rng.vec(3);
    CHECK_THROWS_AS(apply_map(LinearMap::identity(2), v), DimensionMismatch);
}

TEST_CASE("flip") {
    Tensor2 t(3);
    t.at(0, 1) = Scalar(1);
    Tensor2 ft = flip(t);
    CHECK(ft.at(1, 0) == Scalar(1));
    CHECK(ft.at(0, 1) == Scalar(0));
    testutil::Rng rng;
    Tensor2 x = rng.tensor2(3);
    CHECK(flip(flip(x)) == x);
    // flip(X+ ox X- + 1/4 H ox H) = X- ox X+ + 1/4 H ox H
    Tensor2 r = standard_r();
    Tensor2 fr = flip(r);
    CHECK(fr.at(2, 1) == Scalar(1));
    CHECK(fr.at(0, 0) == Scalar(Rational(1, 4)));
    CHECK(fr.at(1, 2) == Scalar(0));
}

TEST_CASE("cyclic permutation and cyclic sum") {
    Tensor3 t(3);
    t.at(0, 1, 2) = Scalar(1);  // e1 ox e2 ox e3
    Tensor3 ct = cyclic(t);
    CHECK(ct.at(2, 0, 1) == Scalar(1));  // e3 ox e1 ox e2

    testutil::Rng rng;
    Tensor3 x = rng.tensor3(3);
    CHECK(cyclic(cyclic(cyclic(x))) == x);
    CHECK(cyclic(cyclic_sum(x)) == cyclic_sum(x));
    CHECK(cyclic_sum(cyclic(x)) == cyclic_sum(x));
}

TEST_CASE("compose and kron") {
    testutil::Rng rng;
    LinearMap f = rng.map(3), g = rng.map(3);
    LinearMap id = LinearMap::identity(3);
    CHECK(compose(id, f) == f);
    CHECK(kron(id, id) == LinearMap::identity(9));

    // kron(f,g) acts as f(x) ox g(y) on simple tensors.
    Vec x = rng.vec(3), y = rng.vec(3);
    Vec xy(9);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) xy[i * 3 + j] = x[i] * y[j];
    Vec lhs = apply_map(kron(f, g), xy);
    Vec fx = apply_map(f, x), gy = apply_map(g, y);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) CHECK(lhs[i * 3 + j] == fx[i] * gy[j]);
}

TEST_CASE("iterated tensor power equals kron of powers") {
    testutil::Rng rng;
    LinearMap f = rng.map(3);
    Tensor2 x = rng.tensor2(3);
    const int n = 3;
    Tensor2 iter = x;
    LinearMap fn = LinearMap::identity(3);
    for (int s = 0; s < n; ++s) {
        iter = tensor_power_apply(f, iter);
        fn = compose(f, fn);
    }
    // Apply kron(f^n, f^n) to the flattened tensor in one shot.
    Vec flat(9);
    for (std::size_t i = 0; i < 9; ++i) flat[i] = x.c[i];
    Vec once = apply_map(kron(fn, fn), flat);
    for (std::size_t i = 0; i < 9; ++i) CHECK(once[i] == iter.c[i]);
}

TEST_CASE("determinant and inverse") {
    testutil::Rng rng;
    for (int trial = 0; trial < 10; ++trial) {
        LinearMap f = rng.map(3);
        Scalar d = determinant(f);
        if (d.is_zero()) continue;
        LinearMap inv = inverse_map(f);
        CHECK(compose(f, inv) == LinearMap::identity(3));
    }
    LinearMap sing(2, 2);
    sing.at(0, 0) = Scalar(1);
    sing.at(1, 0) = Scalar(1);
    CHECK(determinant(sing).is_zero());
    CHECK_THROWS_AS(inverse_map(sing), NotInvertible);
}
