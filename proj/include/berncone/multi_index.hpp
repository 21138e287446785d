#pragma once

#include <vector>

#include "berncone/rational.hpp"

namespace berncone {

// Exponent vectors. Comparison is std::vector's lexicographic order, which
// fixes the iteration and serialisation order everywhere in the engine.
using MultiIndex = std::vector<int>;

int total_degree(const MultiIndex& index);

/// (|parts|)! / prod(parts[i]!)
Integer multinomial(const MultiIndex& parts);

/// All length-`length` exponent vectors with entries summing to `total`,
/// in ascending lexicographic order.
std::vector<MultiIndex> exponents_with_total(int length, int total);

/// All length-`length` exponent vectors with sum <= `max_total`, ascending
/// lexicographic. Count is C(length + max_total, length).
std::vector<MultiIndex> exponents_up_to_total(int length, int max_total);

}  // namespace berncone
