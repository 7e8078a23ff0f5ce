#pragma once

#include <random>

#include "vres/fan.hpp"
#include "vres/monomial.hpp"

namespace vres {

/// Random B-saturated monomial ideal on the Cox ring of a fan: 3-10
/// generators with exponents uniform in [0, 4], minimalized, then saturated
/// by the irrelevant ideal. Retries until the result is neither zero, unit
/// nor irrelevant and stays at desk scale (at most 12 minimal generators).
MonomialIdeal random_b_saturated_ideal(const Fan& f, std::mt19937_64& rng,
                                       std::size_t max_tries = 200);

}  // namespace vres
