#pragma once

#include <random>

#include "hds/field.hpp"
#include "hds/uhp.hpp"

namespace hds {

// Element with both coordinates uniform in [-bound, bound].
OFElem random_elem(const Field& F, std::mt19937_64& rng, int bound);

// Product of `length` factors T(q) S with random small q, times a random sign. length 0
// gives an upper triangular matrix T(q).
ModMatrix random_modmatrix(const Field& F, std::mt19937_64& rng, int length, int bound = 2);

// Coprime pair (d, c), c != 0, with |N(c)|, |N(d)| <= norm_bound.
std::pair<OFElem, OFElem> random_coprime_pair(const Field& F, std::mt19937_64& rng,
                                              long long norm_bound);

// Point with Re in [-1, 1] and Im in [y_lo, y_hi] at each of m coordinates.
UHPoint random_point(std::mt19937_64& rng, std::size_t m, double y_lo = 0.5, double y_hi = 2.0);

}  // namespace hds
