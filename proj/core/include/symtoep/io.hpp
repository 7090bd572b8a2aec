#pragma once

#include <iosfwd>
#include <string>

#include "symtoep/builtins.hpp"
#include "symtoep/precond.hpp"
#include "symtoep/spectral.hpp"

namespace symtoep {

/// One double rendered as scientific notation with 17 significant digits,
/// enough to round-trip exactly. Used by both the CSV and JSON writers.
std::string format_full(double value);

/// One matrix row per line, comma separated.
void write_matrix_csv(std::ostream& out, const DenseMatrix& m);

/// Two columns, one pair per line (eigenvalue, sample).
void write_pairs_csv(std::ostream& out, const RealVector& a,
                     const RealVector& b);

void write_profile_csv(std::ostream& out,
                       const SparselyVanishingProfile& profile);

std::string to_json(const SpectrumReport& report);
std::string to_json(const ClusterReport& report);
std::string to_json(const SparselyVanishingProfile& profile);

/// Parses a symbol definition:
///   {"kind": "trigpoly", "coeffs": {"-1": 2.0, "0": 4.0}}
///   {"kind": "theta2"}
///   {"kind": "piecewise", "breaks": [...], "values": [...]}
///   {"kind": "matrix", "s": 2, "entries": [[{...}, {...}], [{...}, {...}]]}
/// Breakpoint endpoints within 1e-6 of -pi/pi are snapped to the exact
/// values. Throws std::invalid_argument on malformed input.
AnySymbol parse_symbol_json(const std::string& text);

/// Reads and parses a symbol definition file; throws std::invalid_argument
/// if the file cannot be read.
AnySymbol load_symbol_file(const std::string& path);

}  // namespace symtoep
