#pragma once

#include <string>
#include <vector>

#include "schauder/functions.hpp"

namespace schauder {

enum class IndexSetKind { Linear, GradedN0d, GradedZd };

std::string to_string(IndexSetKind kind);

/// |n| = sum of |n_i|, the grade used by the partial sums over |n| <= k.
int grade(const MultiIndex& n);

/// Euclidean |n|^2, used by the s-space weights (1 + |n|^2)^{j/2}.
double euclidean_norm_sq(const MultiIndex& n);

/// All n in N_0^d with |n| <= max_grade, by grade then lexicographically.
std::vector<MultiIndex> enumerate_n0d(int dim, int max_grade);
/// All n in Z^d with |n| <= max_grade, by grade then lexicographically.
std::vector<MultiIndex> enumerate_zd(int dim, int max_grade);

std::string format_index(const MultiIndex& n);

}  // namespace schauder
