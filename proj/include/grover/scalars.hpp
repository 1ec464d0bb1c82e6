#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>

namespace grover {

// Scalar precision backends. All kinematics and collision arithmetic for one
// run happens in exactly one of these types.
//
//   standard: 80-bit extended double (64-bit mantissa, 18 significant decimal
//             digits). Wide enough that per-collision conservation drift stays
//             below 1e-12 even for mass ratios up to 1e9, where the heavy
//             ball's alpha granularity dominates the momentum budget.
//   extended: 113-bit binary float (33 significant decimal digits) for the
//             deep relativistic regime, where 1 - v0 = 2/N^2 is no longer
//             representable next to 1 once N grows past ~1e9.
using StandardReal = long double;
using ExtendedReal = boost::multiprecision::cpp_bin_float_quad;

enum class Backend { standard, extended };

template <class R>
struct ScalarTraits;

template <>
struct ScalarTraits<StandardReal> {
  static constexpr Backend backend = Backend::standard;
  static constexpr int significant_digits = 18;
  static constexpr int output_digits = 17;
};

template <>
struct ScalarTraits<ExtendedReal> {
  static constexpr Backend backend = Backend::extended;
  static constexpr int significant_digits = 33;
  static constexpr int output_digits = 34;
};

inline const char* backend_name(Backend b) {
  return b == Backend::standard ? "standard" : "extended";
}

inline Backend backend_from_name(const std::string& name) {
  if (name == "standard") return Backend::standard;
  if (name == "extended") return Backend::extended;
  throw std::invalid_argument("unknown precision backend: " + name);
}

inline int backend_output_digits(Backend b) {
  return b == Backend::standard ? ScalarTraits<StandardReal>::output_digits
                                : ScalarTraits<ExtendedReal>::output_digits;
}

/// Scientific notation with a fixed number of significant digits, so repeated
/// runs emit byte-identical files.
template <class R>
std::string format_scientific(const R& x, int significant_digits) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(significant_digits - 1) << x;
  return os.str();
}

}  // namespace grover
