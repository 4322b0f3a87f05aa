#pragma once

#include <cstddef>
#include <string>

namespace hdx {

/// Feasibility caps that define "desk scale". Anything beyond them fails with
/// SearchSpaceTooLarge / TooLarge / GroupTooLarge instead of approximating.
struct SearchCaps {
  /// Coset searches up to 2^exhaustive_log2 elements are enumerated directly.
  int exhaustive_log2 = 24;
  /// Above that, meet-in-the-middle handles up to 2^mitm_log2 half-space pairs.
  int mitm_log2 = 40;
  /// Max log2 of the number of classes enumerated by expansion/systole scans.
  int class_log2 = 26;
  std::size_t spectrum_max_n = 4096;
  int cheeger_max_n = 26;
  std::size_t group_max = 200000;
  /// Threads used by exhaustive coset enumeration.
  unsigned workers = 1;

  /// Parses "key=value,key=value" (keys as the member names above).
  /// Throws ConfigError on unknown keys or malformed values.
  static SearchCaps parse(const std::string& spec, const SearchCaps& base);
  static SearchCaps parse(const std::string& spec);
  /// Defaults overridden by the HDX_CAPS environment variable when set.
  static SearchCaps from_env();
};

}  // namespace hdx
