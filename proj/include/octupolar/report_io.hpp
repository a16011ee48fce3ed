#pragma once

#include <iosfwd>
#include <string>

#include "octupolar/separatrix.hpp"
#include "octupolar/solver.hpp"

namespace octupolar {

/// 17 significant digits, locale-independent; bitwise-stable across runs.
std::string format_double(double v);

/// RFC-4180 field quoting.
std::string csv_escape(const std::string& s);

/// Table in the style of the critical point tables: one row per point with
/// n, theta1, theta2, lambda, Hessian eigenvalues, type and index.
void print_spectrum_table(std::ostream& os, const SpectrumReport& rep, bool degrees = false);

std::string spectrum_to_json(const SpectrumReport& rep);

std::string surface_to_json(const SeparatrixSurface& surf);

/// chi, rho, k_s1, k_s2_inner, k_s2_outer (s1/s2 columns filled per branch).
std::string section_to_csv(const SeparatrixSection& sec);

/// Atomic write: temp file in the same directory, then rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace octupolar
