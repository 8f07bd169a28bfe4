#include "dioph/power_equation.hpp"

#include <stdexcept>

namespace dioph {

PowerEqParametrization parametrize(const Int& a, const Int& b) {
  if (a < 1 || b < 1) throw std::invalid_argument("parametrize: a, b must be >= 1");
  PowerEqParametrization p;
  p.a = a;
  p.b = b;
  p.d = gcd(a, b);
  p.a1 = a / p.d;
  p.b1 = b / p.d;
  return p;
}

std::vector<std::pair<Int, Int>> enumerate_solutions(
    const PowerEqParametrization& p, const Int& t_max) {
  if (t_max < 1) throw std::invalid_argument("enumerate_solutions: t_max must be >= 1");
  const unsigned long ea = checked_exponent(p.a1);
  const unsigned long eb = checked_exponent(p.b1);
  std::vector<std::pair<Int, Int>> out;
  for (Int t = 1; t <= t_max; ++t) out.emplace_back(ipow(t, eb), ipow(t, ea));
  return out;
}

std::optional<Int> recover_parameter(const Int& x, const Int& y,
                                     const PowerEqParametrization& p) {
  if (x < 1 || y < 1) return std::nullopt;
  auto t = perfect_root(x, checked_exponent(p.b1));
  if (!t) return std::nullopt;
  if (ipow(*t, checked_exponent(p.a1)) != y) return std::nullopt;
  return t;
}

std::string family_string(const PowerEqParametrization& p) {
  auto power = [](const Int& e) {
    return e == 1 ? std::string("t") : "t^" + e.get_str();
  };
  return "(" + power(p.b1) + ", " + power(p.a1) + ")";
}

}  // namespace dioph
