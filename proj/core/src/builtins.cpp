#include "symtoep/builtins.hpp"

#include <numbers>

namespace symtoep {
namespace {

MatrixSymbol two_branch_matrix_symbol() {
  // Q diag(10 + 2cos t, 2 - cos t) Q with Q = (1/sqrt 2) [[1,1],[1,-1]],
  // written out entrywise: diagonal 6 + cos(t)/2, off-diagonal 4 + 3cos(t)/2.
  const ScalarSymbol diag = ScalarSymbol::trig_polynomial(
      {{-1, 0.25}, {0, 6.0}, {1, 0.25}});
  const ScalarSymbol off = ScalarSymbol::trig_polynomial(
      {{-1, 0.75}, {0, 4.0}, {1, 0.75}});
  return MatrixSymbol(2, {diag, off, off, diag});
}

ScalarSymbol step_five_two_five() {
  const double pi = std::numbers::pi;
  return ScalarSymbol::piecewise_constant({-pi, -pi / 2.0, pi / 2.0, pi},
                                          {5.0, 2.0, 5.0});
}

}  // namespace

AnySymbol builtin_symbol(const std::string& name) {
  if (name == "ex4.1")
    return ScalarSymbol::trig_polynomial({{-1, -6.0}, {0, 2.0}, {1, -6.0}});
  if (name == "ex4.2")
    return ScalarSymbol::trig_polynomial(
        {{-3, 9.0}, {-2, 2.0}, {-1, 2.0}, {0, 4.0}, {1, 1.0}});
  if (name == "ex4.3" || name == "ex4.7") return ScalarSymbol::theta_squared();
  if (name == "ex4.4" || name == "ex4.8") return step_five_two_five();
  if (name == "ex4.5") return two_branch_matrix_symbol();
  if (name == "ex4.6")
    return ScalarSymbol::trig_polynomial({{-1, -2.0}, {0, 2.0}, {1, -3.0}});
  throw std::invalid_argument("unknown built-in symbol: " + name);
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {
      "ex4.1", "ex4.2", "ex4.3", "ex4.4",
      "ex4.5", "ex4.6", "ex4.7", "ex4.8"};
  return names;
}

}  // namespace symtoep
