#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace hf {

/// Arbitrary-precision non-negative integer. Coordinates, moduli and matrix
/// entries all live here; values up to ~10^35 occur in the 5x5 pipeline.
using Natural = mpz_class;

inline std::string str(const Natural& n) { return n.get_str(10); }

inline double to_double(const Natural& n) { return n.get_d(); }

/// Narrow to uint64_t; throws std::overflow_error if the value does not fit.
std::uint64_t to_u64(const Natural& n);

}  // namespace hf
