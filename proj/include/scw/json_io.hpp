// JSON serialization for complexes, subcomplexes, and reports.
//
// All output goes through nlohmann::ordered_json so field order is fixed and
// two runs over the same input produce byte-identical documents.  The wire
// format for a complex is
//
//   { "vertices": ["v0", ...],
//     "edges":    [{"id": "...", "src": "...", "dst": "..."}, ...],
//     "faces":    [{"id": "...", "boundary": [{"edge": "...", "dir": 1}, ...]}, ...] }
//
// with dir in {1, -1}.  Parse failures raise IoError carrying a stable
// machine-readable code; callers translate that into exit status 4.

#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "scw/complex.hpp"

namespace scw {

using ordered_json = nlohmann::ordered_json;

/// Error for malformed input documents. `code` is a stable tag such as
/// "bad-json", "bad-schema", or "too-large".
class IoError : public std::runtime_error {
  public:
    IoError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

ordered_json complex_to_json(const CellComplex& x);
CellComplex complex_from_json(const ordered_json& j);

/// Parses a complex from text and enforces the cell-count cap (0 = no cap).
CellComplex parse_complex(const std::string& text, std::size_t max_cells);

ordered_json subcomplex_to_json(const Subcomplex& sub);
Subcomplex subcomplex_from_json(const ordered_json& j);

ordered_json steps_to_json(const std::vector<Step>& steps);
std::vector<Step> steps_from_json(const ordered_json& j);

/// FNV-1a 64-bit over a byte string.
std::uint64_t fnv1a64(const std::string& bytes);

/// Digest of the canonical serialization, formatted "fnv1a64:<16 hex digits>".
std::string complex_digest(const CellComplex& x);

}  // namespace scw
