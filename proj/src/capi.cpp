#include "primrank/primrank.h"

#include "reports.hpp"

#include <cstring>
#include <memory>
#include <new>
#include <string>

using namespace primrank;

struct prk_context {
  RunConfig config;
  StableStemTable stems = StableStemTable::builtin();
  std::unique_ptr<PartitionCounter> partitions;
};

struct prk_report {
  std::string json;
  prk_status outcome = PRK_OK;
};

namespace {

thread_local std::string last_error;

prk_status fail(prk_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Runs body, translating library exceptions into status codes.
template <typename F>
prk_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const UnsupportedFlavorError& e) {
    return fail(PRK_UNSUPPORTED_FLAVOR, e.what());
  } catch (const InputError& e) {
    return fail(PRK_IO, e.what());
  } catch (const StemUnknownError& e) {
    return fail(PRK_STEM_UNKNOWN, e.what());
  } catch (const SizeLimitError& e) {
    return fail(PRK_SIZE_LIMIT, e.what());
  } catch (const DimensionMismatchError& e) {
    return fail(PRK_DIMENSION_MISMATCH, e.what());
  } catch (const FrameFailureError& e) {
    return fail(PRK_FRAME_FAILURE, e.what());
  } catch (const InvalidArgument& e) {
    return fail(PRK_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(PRK_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(PRK_INTERNAL, e.what());
  } catch (...) {
    return fail(PRK_INTERNAL, "unknown failure");
  }
}

prk_status write_string(const std::string& s, char* buf, size_t cap, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf || cap < s.size() + 1)
    return fail(PRK_BUFFER_TOO_SMALL, "buffer too small: need " + std::to_string(s.size() + 1));
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return PRK_OK;
}

Flavor to_flavor(prk_flavor f) {
  switch (f) {
    case PRK_FLAVOR_ORIENTED: return Flavor::oriented;
    case PRK_FLAVOR_QUATERNIONIC: return Flavor::quaternionic;
    case PRK_FLAVOR_UNORIENTED: return Flavor::unoriented;
  }
  throw InvalidArgument("unknown flavor value " + std::to_string(static_cast<int>(f)));
}

prk_status emit(Json doc, prk_status outcome, prk_report** out) {
  auto report = std::make_unique<prk_report>();
  report->json = doc.dump(2);
  report->json += '\n';
  report->outcome = outcome;
  *out = report.release();
  return PRK_OK;
}

prk_status passed_outcome(const Json& doc) {
  return doc.at("passed").get<bool>() ? PRK_OK : PRK_AUDIT_FAILED;
}

#define PRK_REQUIRE(ptr)                                                   \
  do {                                                                     \
    if (!(ptr)) return fail(PRK_NULL_ARGUMENT, #ptr " must not be NULL"); \
  } while (0)

}  // namespace

extern "C" {

void prk_config_default(prk_config* cfg) {
  if (!cfg) return;
  const RunConfig d;
  cfg->truncation_degree = d.truncation_degree;
  cfg->grid_height = d.grid_height;
  cfg->i_max = d.i_max;
  cfg->sphere_samples = d.sphere_samples;
  cfg->injectivity_pairs = d.injectivity_pairs;
  cfg->seed = d.seed;
  cfg->frame_tolerance = d.frame_tolerance;
  cfg->partition_memo_limit = d.partition_memo_limit;
}

prk_status prk_context_create(const prk_config* cfg, prk_context** out) {
  PRK_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    prk_config c;
    prk_config_default(&c);
    if (cfg) c = *cfg;
    if (c.truncation_degree < 1 || c.grid_height < 1 || c.i_max < 0 || !(c.frame_tolerance > 0))
      throw InvalidArgument("configuration values out of range");
    auto ctx = std::make_unique<prk_context>();
    ctx->config.truncation_degree = c.truncation_degree;
    ctx->config.grid_height = c.grid_height;
    ctx->config.i_max = c.i_max;
    ctx->config.sphere_samples = c.sphere_samples;
    ctx->config.injectivity_pairs = c.injectivity_pairs;
    ctx->config.seed = c.seed;
    ctx->config.frame_tolerance = c.frame_tolerance;
    ctx->config.partition_memo_limit = c.partition_memo_limit;
    ctx->partitions = std::make_unique<PartitionCounter>(c.partition_memo_limit);
    *out = ctx.release();
    return PRK_OK;
  });
}

void prk_context_destroy(prk_context* ctx) { delete ctx; }

prk_status prk_context_config(const prk_context* ctx, prk_config* out) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(out);
  const RunConfig& c = ctx->config;
  out->truncation_degree = c.truncation_degree;
  out->grid_height = c.grid_height;
  out->i_max = c.i_max;
  out->sphere_samples = c.sphere_samples;
  out->injectivity_pairs = c.injectivity_pairs;
  out->seed = c.seed;
  out->frame_tolerance = c.frame_tolerance;
  out->partition_memo_limit = c.partition_memo_limit;
  return PRK_OK;
}

prk_status prk_context_load_stems_file(prk_context* ctx, const char* path) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(path);
  return guarded([&] {
    // Load into a copy so a bad file leaves the context untouched.
    StableStemTable table = ctx->stems;
    table.load_extension_file(path);
    ctx->stems = std::move(table);
    return PRK_OK;
  });
}

prk_status prk_context_load_stems_json(prk_context* ctx, const char* json) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(json);
  return guarded([&] {
    StableStemTable table = ctx->stems;
    table.load_extension_json(json);
    ctx->stems = std::move(table);
    return PRK_OK;
  });
}

const char* prk_last_error(void) { return last_error.c_str(); }

const char* prk_status_name(prk_status status) {
  switch (status) {
    case PRK_OK: return "ok";
    case PRK_INVALID_ARGUMENT: return "invalid argument";
    case PRK_UNSUPPORTED_FLAVOR: return "unsupported flavor";
    case PRK_IO: return "input error";
    case PRK_AUDIT_FAILED: return "audit failed";
    case PRK_STEM_UNKNOWN: return "stem unknown";
    case PRK_SIZE_LIMIT: return "size limit";
    case PRK_DIMENSION_MISMATCH: return "dimension mismatch";
    case PRK_FRAME_FAILURE: return "frame failure";
    case PRK_BUFFER_TOO_SMALL: return "buffer too small";
    case PRK_NULL_ARGUMENT: return "null argument";
    case PRK_INTERNAL: return "internal error";
  }
  return "unknown status";
}

prk_status prk_parse_flavor(const char* name, prk_flavor* out) {
  PRK_REQUIRE(name);
  PRK_REQUIRE(out);
  const std::string s(name);
  if (s == "so" || s == "oriented") {
    *out = PRK_FLAVOR_ORIENTED;
  } else if (s == "sp" || s == "quaternionic") {
    *out = PRK_FLAVOR_QUATERNIONIC;
  } else if (s == "o" || s == "unoriented") {
    *out = PRK_FLAVOR_UNORIENTED;
  } else {
    return fail(PRK_UNSUPPORTED_FLAVOR,
                "unknown flavor '" + s + "'; expected so/oriented, sp/quaternionic or o/unoriented");
  }
  last_error.clear();
  return PRK_OK;
}

prk_status prk_count_partitions(prk_context* ctx, long m_num, long m_den, uint64_t max_part,
                                char* buf, size_t cap, size_t* needed) {
  PRK_REQUIRE(ctx);
  return guarded([&] {
    if (m_den == 0) throw InvalidArgument("zero denominator");
    Rational m(m_num, m_den);
    m.canonicalize();
    return write_string(ctx->partitions->count({m, max_part}).get_str(), buf, cap, needed);
  });
}

prk_status prk_rank_pi(prk_flavor flavor, int k, int r, int j, char* buf, size_t cap,
                       size_t* needed) {
  return guarded([&] {
    return write_string(rank_pi({to_flavor(flavor), k, r, j}).get_str(), buf, cap, needed);
  });
}

prk_status prk_corollary_eval(int k, int r, int j, char* buf, size_t cap, size_t* needed) {
  return guarded([&] { return write_string(corollary_eval(k, r, j).get_str(), buf, cap, needed); });
}

prk_status prk_segal_index(int p, char* buf, size_t cap, size_t* needed) {
  return guarded([&] { return write_string(segal_index(p).get_str(), buf, cap, needed); });
}

prk_status prk_infinite_group_criterion(int r, int n, int* out) {
  PRK_REQUIRE(out);
  return guarded([&] {
    *out = infinite_group_criterion(r, n) ? 1 : 0;
    return PRK_OK;
  });
}

prk_status prk_report_ranks(prk_context* ctx, prk_flavor flavor, int k, int r, int max_degree,
                            prk_report** out) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(out);
  return guarded([&] {
    return emit(ranks_report(ctx->config, ctx->stems, to_flavor(flavor), k, r, max_degree), PRK_OK,
                out);
  });
}

prk_status prk_report_cobordism_rank(prk_context* ctx, prk_flavor flavor, int k, int r,
                                     const char* betti_path, prk_report** out) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(betti_path);
  PRK_REQUIRE(out);
  return guarded([&] {
    const auto betti = load_betti_file(betti_path);
    return emit(cobordism_report(ctx->config, ctx->stems, to_flavor(flavor), k, r, betti), PRK_OK,
                out);
  });
}

prk_status prk_report_cobordism_rank_json(prk_context* ctx, prk_flavor flavor, int k, int r,
                                          const char* betti_json, prk_report** out) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(betti_json);
  PRK_REQUIRE(out);
  return guarded([&] {
    const auto betti = parse_betti_json(betti_json);
    return emit(cobordism_report(ctx->config, ctx->stems, to_flavor(flavor), k, r, betti), PRK_OK,
                out);
  });
}

prk_status prk_report_e1_page(prk_context* ctx, int p_max, int q_max, int include_p0,
                              prk_report** out) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(out);
  return guarded([&] {
    Json doc = e1_page_report(ctx->config, ctx->stems, p_max, q_max, include_p0 != 0);
    const prk_status outcome = doc.at("complete").get<bool>() ? PRK_OK : PRK_STEM_UNKNOWN;
    return emit(std::move(doc), outcome, out);
  });
}

prk_status prk_report_segal_audit(prk_context* ctx, int p, int include_p0, prk_report** out) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(out);
  return guarded([&] {
    Json doc = segal_audit_report(ctx->config, ctx->stems, p, include_p0 != 0);
    const prk_status outcome = passed_outcome(doc);
    return emit(std::move(doc), outcome, out);
  });
}

prk_status prk_report_odd_torsion_audit(prk_context* ctx, int i_max, prk_report** out) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(out);
  return guarded([&] {
    Json doc = odd_torsion_report(ctx->config, ctx->stems, i_max);
    const prk_status outcome = passed_outcome(doc);
    return emit(std::move(doc), outcome, out);
  });
}

prk_status prk_report_umbrella_verify(prk_context* ctx, int height, prk_report** out) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(out);
  return guarded([&] {
    Json doc = umbrella_report(ctx->config, ctx->stems, height);
    const prk_status outcome = passed_outcome(doc);
    return emit(std::move(doc), outcome, out);
  });
}

prk_status prk_report_corollary_compare(prk_context* ctx, int k, int r, int max_degree,
                                        prk_report** out) {
  PRK_REQUIRE(ctx);
  PRK_REQUIRE(out);
  return guarded([&] {
    return emit(corollary_compare_report(ctx->config, ctx->stems, k, r, max_degree), PRK_OK, out);
  });
}

const char* prk_report_json(const prk_report* report) {
  return report ? report->json.c_str() : "";
}

prk_status prk_report_status(const prk_report* report) {
  return report ? report->outcome : PRK_NULL_ARGUMENT;
}

void prk_report_destroy(prk_report* report) { delete report; }

}  // extern "C"
