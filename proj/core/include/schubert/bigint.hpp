#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace schubert {

// Exact integer type for structure constants and polynomial coefficients.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace schubert
