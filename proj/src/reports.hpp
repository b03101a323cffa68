#pragma once

#include "partitions.hpp"
#include "poincare.hpp"
#include "ranks.hpp"
#include "specseq.hpp"
#include "umbrella.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace primrank {

using Json = nlohmann::ordered_json;

// Defaults shared by every command; echoed into each report header.
struct RunConfig {
  int truncation_degree = kDefaultTruncationDegree;
  int grid_height = kDefaultGridHeight;
  int i_max = 11;
  std::size_t sphere_samples = 200;
  std::size_t injectivity_pairs = 10000;
  std::uint64_t seed = 20240917;
  double frame_tolerance = kDefaultFrameTolerance;
  std::size_t partition_memo_limit = kDefaultPartitionMemoLimit;
};

// Integers that fit a signed 64-bit word are numbers, larger ones strings.
Json integer_json(const Integer& n);
Json group_json(const FinAbGroup& g);
Json point_json(const SourcePoint& p);

// {"dimension": d, "betti": [b0, ..., bd]}; malformed input throws InputError.
BettiVector parse_betti_json(std::string_view text);
BettiVector load_betti_file(const std::string& path);

Json config_json(const RunConfig& cfg, const StableStemTable& stems);

Json ranks_report(const RunConfig& cfg, const StableStemTable& stems, Flavor flavor, int k, int r,
                  int max_degree);
Json cobordism_report(const RunConfig& cfg, const StableStemTable& stems, Flavor flavor, int k,
                      int r, const BettiVector& betti);
Json e1_page_report(const RunConfig& cfg, const StableStemTable& stems, int p_max, int q_max,
                    bool include_p0);
Json segal_audit_report(const RunConfig& cfg, const StableStemTable& stems, int p,
                        bool include_p0);
Json odd_torsion_report(const RunConfig& cfg, const StableStemTable& stems, int i_max);
Json umbrella_report(const RunConfig& cfg, const StableStemTable& stems, int height);
Json corollary_compare_report(const RunConfig& cfg, const StableStemTable& stems, int k, int r,
                              int max_degree);

}  // namespace primrank
