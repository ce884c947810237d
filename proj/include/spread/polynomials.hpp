#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace spread::poly {

/// coef * k^k_exp * t^t_exp * p1^p1_exp * p2^p2_exp
struct Monomial {
  std::int64_t coef;
  int k_exp;
  int t_exp;
  int p1_exp;
  int p2_exp;
};

struct Point {
  std::int64_t k;
  std::int64_t t;
  std::int64_t p1;
  std::int64_t p2;
};

// Cross-group requirement when p1 + p2 >= k - t:
//   2(t+p1)(t+p2)(p2+1) - 2(2k-p2-3)*E > 0, E the second same-group deficit below.
inline constexpr std::array<Monomial, 28> kCrossWide = {{
    {2, 3, 0, 0, 0},  {-4, 2, 1, 0, 0}, {-4, 2, 0, 1, 0}, {-5, 2, 0, 0, 1}, {-9, 2, 0, 0, 0},
    {2, 1, 2, 0, 0},  {4, 1, 1, 1, 0},  {6, 1, 1, 0, 1},  {12, 1, 1, 0, 0}, {2, 1, 0, 2, 0},
    {2, 1, 0, 1, 1},  {8, 1, 0, 1, 0},  {4, 1, 0, 0, 2},  {11, 1, 0, 0, 1}, {9, 1, 0, 0, 0},
    {1, 0, 2, 0, 1},  {-1, 0, 2, 0, 0}, {-4, 0, 1, 1, 0}, {-7, 0, 1, 0, 1}, {-9, 0, 1, 0, 0},
    {-1, 0, 0, 2, 1}, {-3, 0, 0, 2, 0}, {2, 0, 0, 1, 2},  {1, 0, 0, 1, 1},  {-3, 0, 0, 1, 0},
    {-1, 0, 0, 0, 3}, {-4, 0, 0, 0, 2}, {-3, 0, 0, 0, 1},
}};

// Cross-group requirement when p1 + p2 <= k - t (same construction, first deficit).
inline constexpr std::array<Monomial, 28> kCrossNarrow = {{
    {2, 3, 0, 0, 0},  {-4, 2, 1, 0, 0}, {-4, 2, 0, 1, 0}, {-5, 2, 0, 0, 1}, {-5, 2, 0, 0, 0},
    {2, 1, 2, 0, 0},  {4, 1, 1, 1, 0},  {6, 1, 1, 0, 1},  {8, 1, 1, 0, 0},  {2, 1, 0, 2, 0},
    {2, 1, 0, 1, 1},  {4, 1, 0, 1, 0},  {4, 1, 0, 0, 2},  {5, 1, 0, 0, 1},  {3, 1, 0, 0, 0},
    {1, 0, 2, 0, 1},  {-1, 0, 2, 0, 0}, {-4, 0, 1, 1, 0}, {-5, 0, 1, 0, 1}, {-3, 0, 1, 0, 0},
    {-1, 0, 0, 2, 1}, {-3, 0, 0, 2, 0}, {2, 0, 0, 1, 2},  {3, 0, 0, 1, 1},  {3, 0, 0, 1, 0},
    {-1, 0, 0, 0, 3}, {-2, 0, 0, 0, 2}, {3, 0, 0, 0, 1},
}};

// Twice the amount by which same-group pairs may fall short of f0, p1 + p2 <= k - t.
inline constexpr std::array<Monomial, 14> kDeficitNarrow = {{
    {-1, 2, 0, 0, 0}, {2, 1, 0, 1, 0},  {2, 1, 0, 0, 1},  {2, 1, 1, 0, 0},  {1, 1, 0, 0, 0},
    {-1, 0, 0, 2, 0}, {-2, 0, 1, 1, 0}, {1, 0, 0, 1, 0},  {-1, 0, 0, 0, 2}, {-2, 0, 1, 0, 1},
    {1, 0, 0, 0, 1},  {-1, 0, 2, 0, 0}, {-1, 0, 1, 0, 0}, {2, 0, 0, 0, 0},
}};

// Same, p1 + p2 >= k - t.
inline constexpr std::array<Monomial, 14> kDeficitWide = {{
    {-1, 2, 0, 0, 0}, {2, 1, 0, 1, 0},  {2, 1, 0, 0, 1},  {2, 1, 1, 0, 0},  {3, 1, 0, 0, 0},
    {-1, 0, 0, 2, 0}, {-2, 0, 1, 1, 0}, {-1, 0, 0, 1, 0}, {-1, 0, 0, 0, 2}, {-2, 0, 1, 0, 1},
    {-1, 0, 0, 0, 1}, {-1, 0, 2, 0, 0}, {-3, 0, 1, 0, 0}, {2, 0, 0, 0, 0},
}};

std::int64_t evaluate(std::span<const Monomial> poly, const Point& at);

/// Partial derivative in k, evaluated at `at`.
std::int64_t evaluate_dk(std::span<const Monomial> poly, const Point& at);

/// FNV-1a over every table above, in declaration order.
std::uint64_t table_checksum();

}  // namespace spread::poly
