#pragma once

// The polynorm command line: analyze, holes, check, explore, gen.
//
// Exit codes: 0 success, 1 input or usage error, 2 property violation or
// unmet --require-kp.

#include "polynorm/io.hpp"

#include <iosfwd>

namespace polynorm {

/// Runs one command; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Smallest n such that mP is normal for every m >= n. Never exceeds d_P.
int normal_dilate_threshold(const Polytope& p, int d_P);

struct ExploreFlags {
  bool eg_violation = false;        ///< very ample with k_P > Vol - |P cap M| + d + 1
  bool d_P_minimality_gap = false;  ///< normal_dilate_threshold < d_P
  bool oda_gap = false;             ///< smooth with k_P > 1

  bool any() const { return eg_violation || d_P_minimality_gap || oda_gap; }
  friend bool operator==(const ExploreFlags&, const ExploreFlags&) = default;
};

ExploreFlags explore_flags(const InvariantReport& report, int dilate_threshold);

/// One explore sample as a JSON record. Flagged records carry the full
/// report so they can be re-verified without the generator.
nlohmann::ordered_json explore_record(const std::string& spec, const InvariantReport& report, int dilate_threshold,
                                      const ExploreFlags& flags, int max_k);

/// Rebuilds the polytope from a record's stored report, recomputes it, and
/// checks that the report and flags come out identical.
bool reverify_record(const nlohmann::ordered_json& record);

}  // namespace polynorm
