#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "argwb/framework.hpp"
#include "argwb/semantics.hpp"

namespace argwb {

struct OracleOptions {
  std::size_t max_arguments = 16;
};

// Hard ceiling for the subset-mask representation.
inline constexpr std::size_t kOracleHardLimit = 30;

// Per-subset classification bits produced by the subset kernels.
enum SubsetFlag : std::uint8_t {
  kConflictFree = 1u << 0,
  kAdmissible = 1u << 1,
  kComplete = 1u << 2,
  kStable = 1u << 3,
};

struct AttackMasks {
  std::vector<std::uint32_t> attackers;  // bit b of attackers[a] set iff (b,a) attack
  std::vector<std::uint32_t> targets;    // bit t of targets[a] set iff (a,t) attack
};

AttackMasks attack_masks(const ArgumentationFramework& f);

// Classifies every subset of the argument set against the literal
// definitions. Serial reference and OpenMP kernel; outputs are identical.
std::vector<std::uint8_t> classify_subsets_serial(const AttackMasks& masks);
std::vector<std::uint8_t> classify_subsets_parallel(const AttackMasks& masks);

// Enumerates all 2^n subsets and filters by definition. Throws TooLarge when
// the framework exceeds options.max_arguments.
std::vector<Extension> brute_force_oracle(const ArgumentationFramework& f, Semantics sem,
                                          OracleOptions options = {});
std::vector<Extension> brute_force_oracle_parallel(const ArgumentationFramework& f, Semantics sem,
                                                   OracleOptions options = {});

}  // namespace argwb
