#ifndef LY_IO_HPP
#define LY_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ly/cohom.hpp"
#include "ly/compat.hpp"
#include "ly/lya.hpp"
#include "ly/rb.hpp"
#include "ly/rep.hpp"

namespace ly {

using Json = nlohmann::json;

/// Raised for any malformed input file (bad JSON, missing keys, index
/// violations). The CLI maps it to exit code 3.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Algebra: { "dim", "basis", "bilinear": [{"i","j","k","v"}] with i<j,
///            "trilinear": [{"i","j","k","l","v"}] with i<j }.
Json to_json(const LyAlgebra& a);
LyAlgebra algebra_from_json(const Json& j);

/// Compatible pair: { "dim", "basis", "structure1": {"bilinear","trilinear"},
///                    "structure2": {...} }.
Json to_json(const CompatibleLy& c);
CompatibleLy compatible_from_json(const Json& j);

/// Representation: algebra keys plus "v_dim", "rho": [{"i","matrix"}],
/// "mu": [{"i","j","matrix"}]; unlisted matrices are zero.
Json rep_to_json(const LyAlgebra& a, const Representation& r);
std::pair<LyAlgebra, Representation> rep_from_json(const Json& j);

/// Matrix: { "rows", "cols", "entries": [["p/q",...],...] }.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Pre-Lie Yamaguti: { "dim", "basis", "star": [{"i","j","k","v"}],
/// "triple": [{"i","j","k","l","v"}] } (no index restrictions), and the
/// compatible version with "pre1"/"pre2".
Json to_json(const PreLy& p);
PreLy prely_from_json(const Json& j);
Json to_json(const CompatPreLy& cp);
CompatPreLy compat_prely_from_json(const Json& j);

/// Deformation generator: same shape as a compatible pair file
/// (structure1 = (mu1, lambda1), structure2 = (mu2, lambda2)).
Json to_json(const DeformationGenerator& g);
DeformationGenerator generator_from_json(const Json& j);

Json report_to_json(const CheckReport& r);

Json load_file(const std::string& path);

}  // namespace ly

#endif
