#include "schauder/multi_index.hpp"

#include <algorithm>
#include <cstdlib>

#include "schauder/errors.hpp"

namespace schauder {

std::string to_string(IndexSetKind kind) {
  switch (kind) {
    case IndexSetKind::Linear: return "N";
    case IndexSetKind::GradedN0d: return "N0^d";
    case IndexSetKind::GradedZd: return "Z^d";
  }
  return "?";
}

int grade(const MultiIndex& n) {
  int g = 0;
  for (int c : n) g += std::abs(c);
  return g;
}

double euclidean_norm_sq(const MultiIndex& n) {
  double s = 0.0;
  for (int c : n) s += static_cast<double>(c) * static_cast<double>(c);
  return s;
}

namespace {

std::vector<MultiIndex> enumerate_box(int dim, int lo, int hi, int max_grade) {
  if (dim < 1 || dim > 3) throw InputError("multi-index dimension must be 1, 2 or 3");
  if (max_grade < 0) return {};
  std::vector<MultiIndex> out;
  MultiIndex n(static_cast<std::size_t>(dim), lo);
  while (true) {
    if (grade(n) <= max_grade) out.push_back(n);
    int k = dim - 1;
    while (k >= 0 && n[static_cast<std::size_t>(k)] == hi) {
      n[static_cast<std::size_t>(k)] = lo;
      --k;
    }
    if (k < 0) break;
    ++n[static_cast<std::size_t>(k)];
  }
  std::stable_sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    const int ga = grade(a), gb = grade(b);
    if (ga != gb) return ga < gb;
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<MultiIndex> enumerate_n0d(int dim, int max_grade) {
  return enumerate_box(dim, 0, std::max(max_grade, 0), max_grade);
}

std::vector<MultiIndex> enumerate_zd(int dim, int max_grade) {
  return enumerate_box(dim, -std::max(max_grade, 0), std::max(max_grade, 0), max_grade);
}

std::string format_index(const MultiIndex& n) {
  if (n.size() == 1) return std::to_string(n[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(n[i]);
  }
  return s + ")";
}

}  // namespace schauder
