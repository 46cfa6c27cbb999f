#include "tautring/params.hpp"

#include "tautring/errors.hpp"

namespace tautring {

ModelParams::ModelParams(int n, int d, int b, std::optional<Rational> delta)
    : n_(n), d_(d), b_(b), delta_(delta.value_or(Rational(b - 1))) {
  if (n < 2 || n % 2 != 0) throw StructuralError("n must be even and >= 2, got " + std::to_string(n));
  if (n > 100) throw StructuralError("n must be <= 100, got " + std::to_string(n));
  if (d < 1) throw StructuralError("d must be >= 1, got " + std::to_string(d));
  if (b < 1) throw StructuralError("b must be >= 1, got " + std::to_string(b));
}

std::string to_string(const ModelParams& p) {
  return "n=" + std::to_string(p.n()) + " d=" + std::to_string(p.d()) + " b=" + std::to_string(p.b()) +
         " delta=" + p.delta().to_string();
}

}  // namespace tautring
