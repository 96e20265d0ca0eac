#ifndef NONSIN_SERIALIZE_HPP
#define NONSIN_SERIALIZE_HPP

#include <string>

#include <nonsin/analysis.hpp>
#include <nonsin/convert.hpp>
#include <nonsin/ortho.hpp>
#include <nonsin/spectrum.hpp>

namespace nonsin {

// All writers emit floats with 17 significant digits, which round-trips
// doubles exactly and keeps repeated runs byte-identical.

/// {"L": ..., "f0": ..., "a": [...], "b": [...]}
std::string to_json(const SinSpectrum& s);
SinSpectrum sin_spectrum_from_json(const std::string& text);

/// {"f0": ..., "A": [...], "B": [...], "basis": {"even": <spec text or
/// null>, "odd": ..., "g0": ..., "L": ..., "even_coeffs": [...],
/// "odd_coeffs": [...]}}
std::string to_json(const NonSinSpectrum& s);
NonSinSpectrum nonsin_spectrum_from_json(const std::string& text);

/// {"parity": "even"|"odd", "mix": [row-major lower triangle incl.
/// diagonal], "norms_sq": [...], "interval": [a, b], "generator": {...}}
std::string to_json(const OrthoBasis& basis);
OrthoBasis ortho_basis_from_json(const std::string& text);

/// Writes via a temporary file in the same directory plus an atomic
/// rename, so a failed run never leaves a partial output behind.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

/// Basis file: optional '#' comment lines, a '# parity: even|odd' hint,
/// then one piecewise spec.  The hint is verified against the computed
/// spectrum, never trusted.
struct BasisFile {
  std::string parity_hint;  // "even", "odd" or "" when absent
  PiecewiseFunction fn;
};
BasisFile parse_basis_file(const std::string& content);

}  // namespace nonsin

#endif  // NONSIN_SERIALIZE_HPP
