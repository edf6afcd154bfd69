#include "argwb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "argwb/error.hpp"

namespace argwb {

AttackMasks attack_masks(const ArgumentationFramework& f) {
  if (f.size() > kOracleHardLimit)
    throw Error(ErrorCode::TooLarge, "framework has " + std::to_string(f.size()) +
                                         " arguments; subset masks support at most " +
                                         std::to_string(kOracleHardLimit));
  AttackMasks m;
  m.attackers.assign(f.size(), 0);
  m.targets.assign(f.size(), 0);
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (auto b : f.attackers_of(a)) m.attackers[a] |= 1u << b;
    for (auto t : f.targets_of(a)) m.targets[a] |= 1u << t;
  }
  return m;
}

namespace {

inline std::uint8_t classify(const AttackMasks& m, std::uint32_t s) {
  const std::size_t n = m.targets.size();
  const std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1u);
  std::uint32_t hit = 0;
  for (std::size_t a = 0; a < n; ++a)
    if (s & (1u << a)) hit |= m.targets[a];
  std::uint32_t defended = 0;
  for (std::size_t a = 0; a < n; ++a)
    if ((m.attackers[a] & ~hit) == 0) defended |= 1u << a;

  std::uint8_t flags = 0;
  if ((hit & s) != 0) return flags;
  flags |= kConflictFree;
  if ((s & ~defended) == 0) flags |= kAdmissible;
  if (defended == s) flags |= kComplete;
  if ((s | hit) == all) flags |= kStable;
  return flags;
}

std::vector<Extension> select(const ArgumentationFramework& f, Semantics sem,
                              const std::vector<std::uint8_t>& flags) {
  const auto count = static_cast<std::uint32_t>(flags.size());
  std::vector<std::uint32_t> chosen;
  switch (sem) {
    case Semantics::Complete:
      for (std::uint32_t s = 0; s < count; ++s)
        if (flags[s] & kComplete) chosen.push_back(s);
      break;
    case Semantics::Stable:
      for (std::uint32_t s = 0; s < count; ++s)
        if (flags[s] & kStable) chosen.push_back(s);
      break;
    case Semantics::Preferred: {
      std::vector<std::uint32_t> admissible;
      for (std::uint32_t s = 0; s < count; ++s)
        if (flags[s] & kAdmissible) admissible.push_back(s);
      std::stable_sort(admissible.begin(), admissible.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) > std::popcount(b);
      });
      for (auto s : admissible) {
        bool maximal = std::none_of(chosen.begin(), chosen.end(), [&](std::uint32_t big) {
          return (s & ~big) == 0;
        });
        if (maximal) chosen.push_back(s);
      }
      break;
    }
    case Semantics::Grounded: {
      // The least complete extension: the one contained in all others.
      std::vector<std::uint32_t> complete;
      for (std::uint32_t s = 0; s < count; ++s)
        if (flags[s] & kComplete) complete.push_back(s);
      for (auto s : complete) {
        if (std::all_of(complete.begin(), complete.end(),
                        [&](std::uint32_t o) { return (s & ~o) == 0; })) {
          chosen.push_back(s);
          break;
        }
      }
      break;
    }
  }

  std::vector<Extension> out;
  out.reserve(chosen.size());
  for (auto s : chosen) {
    IdSet members;
    for (std::size_t a = 0; a < f.size(); ++a)
      if (s & (1u << a)) members.insert(members.end(), f.id_at(a));
    out.push_back(Extension{std::move(members), sem});
  }
  sort_extensions(out);
  return out;
}

void check_size(const ArgumentationFramework& f, const OracleOptions& options) {
  const std::size_t bound = std::min(options.max_arguments, kOracleHardLimit);
  if (f.size() > bound)
    throw Error(ErrorCode::TooLarge, "brute-force oracle bound is " + std::to_string(bound) +
                                         " arguments; framework has " + std::to_string(f.size()));
}

}  // namespace

std::vector<std::uint8_t> classify_subsets_serial(const AttackMasks& masks) {
  const std::uint64_t count = std::uint64_t{1} << masks.targets.size();
  std::vector<std::uint8_t> flags(count);
  for (std::uint64_t s = 0; s < count; ++s)
    flags[s] = classify(masks, static_cast<std::uint32_t>(s));
  return flags;
}

std::vector<std::uint8_t> classify_subsets_parallel(const AttackMasks& masks) {
  const auto count = static_cast<std::int64_t>(std::uint64_t{1} << masks.targets.size());
  std::vector<std::uint8_t> flags(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < count; ++s)
    flags[static_cast<std::size_t>(s)] = classify(masks, static_cast<std::uint32_t>(s));
  return flags;
}

std::vector<Extension> brute_force_oracle(const ArgumentationFramework& f, Semantics sem,
                                          OracleOptions options) {
  check_size(f, options);
  return select(f, sem, classify_subsets_serial(attack_masks(f)));
}

std::vector<Extension> brute_force_oracle_parallel(const ArgumentationFramework& f, Semantics sem,
                                                   OracleOptions options) {
  check_size(f, options);
  return select(f, sem, classify_subsets_parallel(attack_masks(f)));
}

}  // namespace argwb
