#pragma once

#include <cstddef>
#include <random>

#include "tannaka/exact/matrix.hpp"

namespace tannaka::testing {

using Rng = std::mt19937_64;

inline long long uniform_int(Rng& rng, long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng);
}

/// Entries p/q with |p| <= bound, 1 <= q <= den_bound; zero with probability
/// `zero_rate` percent.
inline exact::Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long long bound = 5,
                                   long long den_bound = 1, int zero_rate = 20,
                                   exact::Field field = exact::Field::rationals()) {
    exact::Matrix m(rows, cols, field);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (uniform_int(rng, 0, 99) < zero_rate) continue;
            exact::Scalar v(uniform_int(rng, -bound, bound), uniform_int(rng, 1, den_bound));
            m.set(r, c, v);
        }
    return m;
}

/// Random invertible matrix: a product of elementary operations.
inline exact::Matrix random_invertible(Rng& rng, std::size_t n, exact::Field field = exact::Field::rationals()) {
    exact::Matrix m = exact::Matrix::identity(n, field);
    if (n < 2) {
        if (n == 1) m.set(0, 0, exact::Scalar(uniform_int(rng, 1, 4)) * exact::Scalar(uniform_int(rng, 0, 1) ? 1 : -1));
        return m;
    }
    for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
        auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(n) - 1));
        auto j = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(n) - 1));
        if (i == j) continue;
        exact::Scalar k = field.from_int(uniform_int(rng, -2, 2));
        for (std::size_t c = 0; c < n; ++c) m(i, c) += k * m(j, c);
    }
    return m;
}

} // namespace tannaka::testing

#include "tannaka/catpres/category.hpp"

namespace tannaka::testing {

/// A category with up to `max_objects` objects and `max_generators` free
/// generators, and a functor with dimensions in [0, max_dim] and random
/// images. No relations, so any images give a functor.
struct RandomInstance {
    catpres::PresentedCategory category;
    catpres::FiberFunctor functor;
};

inline RandomInstance random_relation_free(Rng& rng, std::size_t max_objects, std::size_t max_generators,
                                           std::size_t max_dim, exact::Field field = exact::Field::rationals()) {
    const auto n_obj = static_cast<std::size_t>(uniform_int(rng, 1, static_cast<long long>(max_objects)));
    const auto n_gen = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(max_generators)));
    std::vector<std::string> objects;
    for (std::size_t i = 0; i < n_obj; ++i) objects.push_back("o" + std::to_string(i));
    catpres::FiberFunctor f;
    f.field = field;
    for (const auto& o : objects) f.on_objects[o] = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(max_dim)));
    std::vector<catpres::Generator> gens;
    for (std::size_t i = 0; i < n_gen; ++i) {
        const auto& src = objects[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(n_obj) - 1))];
        const auto& dst = objects[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long long>(n_obj) - 1))];
        gens.push_back({"g" + std::to_string(i), src, dst});
        f.on_generators[gens.back().name] = random_matrix(rng, f.on_objects[dst], f.on_objects[src], 2, 1, 40, field);
    }
    return {catpres::PresentedCategory(objects, gens), f};
}

} // namespace tannaka::testing
