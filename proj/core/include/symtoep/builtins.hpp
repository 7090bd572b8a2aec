#pragma once

#include <string>
#include <variant>
#include <vector>

#include "symtoep/symbols.hpp"

namespace symtoep {

using AnySymbol = std::variant<ScalarSymbol, MatrixSymbol>;

/// The built-in experiment symbols, addressable by name:
///
///   ex4.1  trig polynomial 2 - 12 cos(theta)
///   ex4.2  trig polynomial 4 + 2 e^{-i t} + 2 e^{-2i t} + 9 e^{-3i t} + e^{i t}
///   ex4.3  theta^2 (dense Toeplitz, exact series coefficients)
///   ex4.4  piecewise constant 5 / 2 / 5 with jumps at +-pi/2
///   ex4.5  2x2 matrix-valued symbol with branches [1,3] and [8,12]
///   ex4.6  trig polynomial 2 - 2 e^{-i t} - 3 e^{i t}
///   ex4.7  theta^2 (preconditioned runs)
///   ex4.8  the 5 / 2 / 5 piecewise symbol (pseudo-inverse runs)
///
/// Throws std::invalid_argument for unknown names.
AnySymbol builtin_symbol(const std::string& name);

const std::vector<std::string>& builtin_names();

}  // namespace symtoep
