#include "spread/polynomials.hpp"

namespace spread::poly {
namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int j = 0; j < exp; ++j) out *= base;
  return out;
}

void mix(std::uint64_t& h, std::int64_t value) {
  auto bits = static_cast<std::uint64_t>(value);
  for (int byte = 0; byte < 8; ++byte) {
    h ^= (bits >> (8 * byte)) & 0xffU;
    h *= 0x100000001b3ULL;
  }
}

template <std::size_t N>
void mix_table(std::uint64_t& h, const std::array<Monomial, N>& table) {
  mix(h, static_cast<std::int64_t>(N));
  for (const auto& m : table) {
    mix(h, m.coef);
    mix(h, m.k_exp);
    mix(h, m.t_exp);
    mix(h, m.p1_exp);
    mix(h, m.p2_exp);
  }
}

}  // namespace

std::int64_t evaluate(std::span<const Monomial> poly, const Point& at) {
  std::int64_t total = 0;
  for (const auto& m : poly)
    total += m.coef * ipow(at.k, m.k_exp) * ipow(at.t, m.t_exp) * ipow(at.p1, m.p1_exp) * ipow(at.p2, m.p2_exp);
  return total;
}

std::int64_t evaluate_dk(std::span<const Monomial> poly, const Point& at) {
  std::int64_t total = 0;
  for (const auto& m : poly) {
    if (m.k_exp == 0) continue;
    total += m.coef * m.k_exp * ipow(at.k, m.k_exp - 1) * ipow(at.t, m.t_exp) * ipow(at.p1, m.p1_exp) *
             ipow(at.p2, m.p2_exp);
  }
  return total;
}

std::uint64_t table_checksum() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  mix_table(h, kCrossWide);
  mix_table(h, kCrossNarrow);
  mix_table(h, kDeficitNarrow);
  mix_table(h, kDeficitWide);
  return h;
}

}  // namespace spread::poly
