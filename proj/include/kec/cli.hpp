#pragma once

#include <cstdint>
#include <iosfwd>

namespace kec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitVerificationFailed = 3;

inline constexpr std::uint64_t kDefaultSeed = 42;

/// Master seed used when --seed is absent: KEC_SEED if set and numeric,
/// otherwise kDefaultSeed.
std::uint64_t default_seed();

/// Entry point of the `kec` tool. Reports go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kec::cli
