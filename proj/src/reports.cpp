#include "reports.hpp"

#include <fstream>
#include <sstream>

namespace primrank {

Json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(static_cast<long long>(n.get_si()));
  return Json(n.get_str());
}

Json group_json(const FinAbGroup& g) {
  Json j;
  j["name"] = g.to_string();
  j["free_rank"] = g.free_rank();
  j["torsion"] = g.torsion();
  return j;
}

Json point_json(const SourcePoint& p) {
  return Json::array({p.x.get_str(), p.t[0].get_str(), p.t[1].get_str(), p.t[2].get_str()});
}

BettiVector parse_betti_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("Betti file is not valid JSON: ") + e.what());
  }
  BettiVector b;
  try {
    if (!doc.is_object()) throw InputError("Betti document must be an object");
    const auto& dim = doc.at("dimension");
    const auto& values = doc.at("betti");
    if (!dim.is_number_integer() || !values.is_array())
      throw InputError("Betti document needs an integer \"dimension\" and a \"betti\" array");
    b.dimension = dim.get<int>();
    for (const auto& v : values) {
      if (!v.is_number_integer()) throw InputError("Betti numbers must be integers");
      b.b.emplace_back(v.get<long>());
    }
    b.validate();
  } catch (const Json::exception& e) {
    throw InputError(std::string("Betti document: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw InputError(std::string("Betti document: ") + e.what());
  }
  return b;
}

BettiVector load_betti_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open Betti file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_betti_json(buf.str());
}

Json config_json(const RunConfig& cfg, const StableStemTable& stems) {
  Json j;
  j["truncation_degree"] = cfg.truncation_degree;
  j["grid_height"] = cfg.grid_height;
  j["i_max"] = cfg.i_max;
  j["sphere_samples"] = cfg.sphere_samples;
  j["injectivity_pairs"] = cfg.injectivity_pairs;
  j["seed"] = cfg.seed;
  j["frame_tolerance"] = cfg.frame_tolerance;
  j["partition_memo_limit"] = cfg.partition_memo_limit;
  Json ext = Json::array();
  for (const auto& [n, e] : stems.entries())
    if (n > kBuiltinStemMax) ext.push_back({{"n", n}, {"source", e.source}});
  j["stem_extensions"] = ext;
  return j;
}

namespace {

Json header(const char* command, const RunConfig& cfg, const StableStemTable& stems) {
  Json j;
  j["command"] = command;
  j["config"] = config_json(cfg, stems);
  return j;
}

}  // namespace

Json ranks_report(const RunConfig& cfg, const StableStemTable& stems, Flavor flavor, int k, int r,
                  int max_degree) {
  const auto profile = rank_profile(flavor, k, r, max_degree);
  Json j = header("ranks", cfg, stems);
  j["flavor"] = to_string(flavor);
  j["k"] = k;
  j["r"] = r;
  j["max_degree"] = max_degree;
  Json rows = Json::array();
  Json nonzero = Json::array();
  for (int d = 1; d <= max_degree; ++d) {
    rows.push_back({{"j", d}, {"rank", integer_json(profile.at(d))}});
    if (profile.at(d) != 0) nonzero.push_back(d);
  }
  j["ranks"] = rows;
  j["nonzero_degrees"] = nonzero;
  return j;
}

Json cobordism_report(const RunConfig& cfg, const StableStemTable& stems, Flavor flavor, int k,
                      int r, const BettiVector& betti) {
  betti.validate();
  const auto profile = rank_profile(flavor, k, r, std::max(1, betti.dimension));
  const Integer total = cobordism_rank(profile, betti);
  Json j = header("cobordism-rank", cfg, stems);
  j["flavor"] = to_string(flavor);
  j["k"] = k;
  j["r"] = r;
  Json bj;
  bj["dimension"] = betti.dimension;
  Json values = Json::array();
  for (const auto& b : betti.b) values.push_back(integer_json(b));
  bj["betti"] = values;
  j["betti"] = bj;
  Json rows = Json::array();
  for (int d = 1; d <= betti.dimension; ++d) {
    const Integer contribution = betti.b[d] * profile.at(d);
    rows.push_back({{"j", d},
                    {"betti", integer_json(betti.b[d])},
                    {"rank_pi", integer_json(profile.at(d))},
                    {"contribution", integer_json(contribution)}});
  }
  j["breakdown"] = rows;
  j["rank"] = integer_json(total);
  return j;
}

Json e1_page_report(const RunConfig& cfg, const StableStemTable& stems, int p_max, int q_max,
                    bool include_p0) {
  const auto page = build_e1_page(p_max, q_max, stems, include_p0);
  Json j = header("e1-page", cfg, stems);
  j["p_max"] = p_max;
  j["q_max"] = q_max;
  j["first_column"] = page.first_column();
  Json cells = Json::array();
  for (const auto& c : page.cells()) {
    Json cell{{"p", c.p}, {"q", c.q}, {"stem", c.stem}, {"known", c.known()}};
    cell["group"] = c.known() ? group_json(*c.group) : Json(nullptr);
    cells.push_back(cell);
  }
  j["cells"] = cells;
  j["complete"] = !page.has_unknown();
  return j;
}

Json segal_audit_report(const RunConfig& cfg, const StableStemTable& stems, int p,
                        bool include_p0) {
  if (p < 1) throw InvalidArgument("p must be >= 1");
  const auto page = build_e1_page(p, 4 * p, stems, include_p0);
  const auto audit = segal_audit(p, page, include_p0);
  Json j = header("segal-audit", cfg, stems);
  j["p"] = p;
  j["include_p0"] = include_p0;
  j["index"] = integer_json(audit.index);
  Json targets = Json::array();
  for (const auto& t : audit.targets)
    targets.push_back({{"r", t.r},
                       {"p", t.p},
                       {"q", t.q},
                       {"group", group_json(t.group)},
                       {"order", integer_json(t.group.order())}});
  j["targets"] = targets;
  Json assignments = Json::array();
  for (const auto& a : audit.assignments) {
    Json orders = Json::array();
    for (const auto& o : a.orders) orders.push_back(integer_json(o));
    assignments.push_back(orders);
  }
  j["assignments"] = assignments;
  j["assignment_count"] = audit.assignments.size();
  j["verdict"] = audit.verdict;
  j["passed"] = audit.passed;
  return j;
}

Json odd_torsion_report(const RunConfig& cfg, const StableStemTable& stems, int i_max) {
  const auto page = odd_torsion_audit_page(i_max, stems);
  const auto audit = odd_torsion_audit(i_max, page);
  Json j = header("odd-torsion-audit", cfg, stems);
  j["i_max"] = i_max;
  Json records = Json::array();
  for (const auto& r : audit.records) {
    Json rec{{"p", r.p},
             {"q", r.q},
             {"prime", r.prime},
             {"valuation_needed", r.valuation_needed},
             {"valuation_forced", r.valuation_forced},
             {"valuation_best", r.valuation_best}};
    rec["source_p"] = r.source_p ? Json(*r.source_p) : Json(nullptr);
    rec["differential_r"] = r.differential_r ? Json(*r.differential_r) : Json(nullptr);
    rec["verdict"] = r.verdict;
    records.push_back(rec);
  }
  j["records"] = records;
  j["passed"] = audit.passed;
  j["conclusion"] = audit.conclusion;
  return j;
}

Json umbrella_report(const RunConfig& cfg, const StableStemTable& stems, int height) {
  UmbrellaConfig uc;
  uc.height = height;
  uc.sphere_samples = cfg.sphere_samples;
  uc.injectivity_pairs = cfg.injectivity_pairs;
  uc.seed = cfg.seed;
  uc.tolerance = cfg.frame_tolerance;
  const auto v = verify_umbrella(uc);
  const auto sigma2 = sigma2_check();

  Json j = header("umbrella-verify", cfg, stems);
  j["grid"] = {{"height", height},
               {"scheme", "(a0,a1,a2,a3)/b, 1<=b<=height, |a_i|<=height, gcd=1"},
               {"points", v.grid_points}};
  Json sing = Json::array();
  for (const auto& p : v.singular_points) sing.push_back(point_json(p));
  j["singular_points"] = sing;
  Json zeros = Json::array();
  for (const auto& p : v.s1_zero_points) zeros.push_back(point_json(p));
  j["s1_zero_points"] = zeros;
  j["origin_rank"] = v.origin_rank;
  j["origin_lifted_rank"] = v.origin_lifted_rank;
  j["lifted_rank_failures"] = v.lifted_rank_failures;
  j["s1_rank_mismatches"] = v.s1_rank_mismatches;
  Json kernel = Json::array();
  for (const auto& c : sigma2.kernel) kernel.push_back(c.get_str());
  Json z2 = Json::array();
  for (const auto& c : sigma2.z2) z2.push_back(c.get_str());
  j["sigma2"] = {{"verdict", v.sigma2_empty ? "empty" : "nonempty"},
                 {"sigma2_empty", v.sigma2_empty},
                 {"ds1_rank", v.sigma2_ds1_rank},
                 {"kernel", kernel},
                 {"z2", z2}};
  j["negative_control"] = {{"normal_form", "z4 = x^3"},
                           {"sigma2_empty", v.negative_control_sigma2_empty},
                           {"verdict", v.negative_control_sigma2_empty ? "empty" : "nonempty"}};
  j["injectivity"] = {{"pairs", v.injectivity_pairs},
                      {"failures", v.injectivity_failures},
                      {"seed", cfg.seed}};
  j["sphere"] = {{"points", v.sphere_points}, {"off_boundary", v.sphere_off_boundary}};
  Json failures = Json::array();
  for (const auto& f : v.frame_failures)
    failures.push_back({{"point", point_json(f.point)}, {"reason", f.reason}});
  j["frame_failures"] = failures;
  j["worst_frame_inner_product"] = v.worst_frame_inner_product;
  j["passed"] = v.passed;
  return j;
}

Json corollary_compare_report(const RunConfig& cfg, const StableStemTable& stems, int k, int r,
                              int max_degree) {
  const auto report = corollary_compare(k, r, max_degree);
  Json j = header("corollary-compare", cfg, stems);
  j["k"] = k;
  j["r"] = r;
  j["max_degree"] = max_degree;
  Json rows = Json::array();
  for (const auto& row : report.rows)
    rows.push_back({{"j", row.j},
                    {"derived", integer_json(row.derived)},
                    {"printed", integer_json(row.printed)},
                    {"agree", row.agree}});
  j["rows"] = rows;
  j["disagreements"] = report.disagreements;
  j["first_disagreement"] =
      report.first_disagreement ? Json(*report.first_disagreement) : Json(nullptr);
  return j;
}

}  // namespace primrank
