// Command-line front end over the primrank C API.

#include "primrank/primrank.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::ordered_json;

enum class Format { json, table, csv };

struct Options {
  std::string flavor = "so";
  int k = -1;  // -1: default for the flavor
  int r = 0;
  int max_degree = 64;
  std::string betti;
  int p = 2;
  int p_max = 3;
  int q_max = 10;
  int i_max = 11;
  int height = 8;
  bool include_p0 = false;
  Format format = Format::json;
  std::string stems;
};

int exit_code(prk_status s) {
  switch (s) {
    case PRK_OK: return 0;
    case PRK_UNSUPPORTED_FLAVOR: return 2;
    case PRK_IO: return 3;
    case PRK_AUDIT_FAILED: return 4;
    case PRK_STEM_UNKNOWN: return 5;
    default: return 1;
  }
}

std::string text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

// Plain aligned table; first row is the header.
void print_table(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) return;
  std::vector<std::size_t> width(rows.front().size(), 0);
  for (const auto& row : rows)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line += "  ";
      const std::string pad(width[c] - row[c].size(), ' ');
      line += c == 0 ? row[c] + pad : pad + row[c];
    }
    std::cout << line << '\n';
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void print_csv(const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) std::cout << (c ? "," : "") << csv_field(row[c]);
    std::cout << '\n';
  }
}

void print_rows(Format f, const std::vector<std::vector<std::string>>& rows) {
  if (f == Format::csv) print_csv(rows);
  else print_table(rows);
}

std::string join(const Json& arr, const char* sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += text(v);
  }
  return out;
}

std::string point_text(const Json& p) { return "(" + join(p, ", ") + ")"; }

void render_ranks(const Json& doc, Format f) {
  std::vector<std::vector<std::string>> rows{{"j", "rank"}};
  for (const auto& row : doc["ranks"]) rows.push_back({text(row["j"]), text(row["rank"])});
  if (f == Format::table)
    std::cout << "flavor " << text(doc["flavor"]) << ", k = " << text(doc["k"])
              << ", r = " << text(doc["r"]) << ", max degree " << text(doc["max_degree"]) << "\n";
  print_rows(f, rows);
}

void render_cobordism(const Json& doc, Format f) {
  std::vector<std::vector<std::string>> rows{{"j", "betti", "rank_pi", "contribution"}};
  for (const auto& row : doc["breakdown"])
    rows.push_back({text(row["j"]), text(row["betti"]), text(row["rank_pi"]),
                    text(row["contribution"])});
  if (f == Format::csv) rows.push_back({"total", "", "", text(doc["rank"])});
  print_rows(f, rows);
  if (f == Format::table) std::cout << "rank = " << text(doc["rank"]) << "\n";
}

void render_e1(const Json& doc, Format f) {
  std::map<std::pair<int, int>, std::string> cell;
  for (const auto& c : doc["cells"])
    cell[{c["p"].get<int>(), c["q"].get<int>()}] =
        c["known"].get<bool>() ? c["group"]["name"].get<std::string>() : "?";
  const int p0 = doc["first_column"].get<int>();
  const int p_max = doc["p_max"].get<int>();
  const int q_max = doc["q_max"].get<int>();
  if (f == Format::csv) {
    std::vector<std::vector<std::string>> rows{{"p", "q", "stem", "group"}};
    for (const auto& c : doc["cells"])
      rows.push_back({text(c["p"]), text(c["q"]), text(c["stem"]),
                      c["known"].get<bool>() ? text(c["group"]["name"]) : "?"});
    print_csv(rows);
    return;
  }
  // q grows upward, p to the right.
  std::vector<std::vector<std::string>> rows;
  for (int q = q_max; q >= 0; --q) {
    std::vector<std::string> row{"q=" + std::to_string(q)};
    for (int p = p0; p <= p_max; ++p) row.push_back(cell[{p, q}]);
    rows.push_back(row);
  }
  std::vector<std::string> footer{""};
  for (int p = p0; p <= p_max; ++p) footer.push_back("p=" + std::to_string(p));
  rows.push_back(footer);
  print_table(rows);
  if (!doc["complete"].get<bool>()) std::cout << "unknown stems marked ?\n";
}

void render_segal(const Json& doc, Format f) {
  if (f == Format::csv) {
    std::vector<std::vector<std::string>> rows{{"p", "index", "assignment", "verdict"}};
    for (const auto& a : doc["assignments"])
      rows.push_back({text(doc["p"]), text(doc["index"]), join(a, " "), text(doc["verdict"])});
    print_csv(rows);
    return;
  }
  std::cout << "p = " << text(doc["p"]) << ", index h(p) = " << text(doc["index"]) << "\n";
  std::vector<std::vector<std::string>> targets{{"r", "target", "group", "order"}};
  for (const auto& t : doc["targets"])
    targets.push_back({text(t["r"]), "(" + text(t["p"]) + "," + text(t["q"]) + ")",
                       text(t["group"]["name"]), text(t["order"])});
  print_table(targets);
  std::cout << "consistent assignments (" << text(doc["assignment_count"]) << "):\n";
  for (const auto& a : doc["assignments"]) std::cout << "  (" << join(a, ", ") << ")\n";
  std::cout << "verdict: " << text(doc["verdict"]) << "\n"
            << (doc["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

void render_odd(const Json& doc, Format f) {
  std::vector<std::vector<std::string>> rows{
      {"p", "q", "prime", "needed", "forced", "best", "source_p", "r", "verdict"}};
  for (const auto& r : doc["records"])
    rows.push_back({text(r["p"]), text(r["q"]), text(r["prime"]), text(r["valuation_needed"]),
                    text(r["valuation_forced"]), text(r["valuation_best"]), text(r["source_p"]),
                    text(r["differential_r"]), text(r["verdict"])});
  print_rows(f, rows);
  if (f == Format::table)
    std::cout << text(doc["conclusion"]) << "\n"
              << (doc["passed"].get<bool>() ? "PASS" : "FAIL") << "\n";
}

void render_umbrella(const Json& doc, Format f) {
  std::vector<std::vector<std::string>> rows{{"check", "value"}};
  rows.push_back({"grid height", text(doc["grid"]["height"])});
  rows.push_back({"grid points", text(doc["grid"]["points"])});
  std::string sing;
  for (const auto& p : doc["singular_points"]) sing += (sing.empty() ? "" : " ") + point_text(p);
  std::string zeros;
  for (const auto& p : doc["s1_zero_points"]) zeros += (zeros.empty() ? "" : " ") + point_text(p);
  rows.push_back({"singular points", sing});
  rows.push_back({"s1 zero points", zeros});
  rows.push_back({"origin rank", text(doc["origin_rank"])});
  rows.push_back({"origin lifted rank", text(doc["origin_lifted_rank"])});
  rows.push_back({"lifted rank failures", text(doc["lifted_rank_failures"])});
  rows.push_back({"s1 rank mismatches", text(doc["s1_rank_mismatches"])});
  rows.push_back({"sigma2", text(doc["sigma2"]["verdict"])});
  rows.push_back({"ds1 rank", text(doc["sigma2"]["ds1_rank"])});
  rows.push_back({"negative control sigma2", text(doc["negative_control"]["verdict"])});
  rows.push_back({"injectivity pairs", text(doc["injectivity"]["pairs"])});
  rows.push_back({"injectivity failures", text(doc["injectivity"]["failures"])});
  rows.push_back({"sphere points", text(doc["sphere"]["points"])});
  rows.push_back({"sphere off boundary", text(doc["sphere"]["off_boundary"])});
  rows.push_back({"frame failures", std::to_string(doc["frame_failures"].size())});
  rows.push_back({"worst frame inner product", text(doc["worst_frame_inner_product"])});
  rows.push_back({"result", doc["passed"].get<bool>() ? "PASS" : "FAIL"});
  print_rows(f, rows);
  if (f == Format::table)
    for (const auto& fl : doc["frame_failures"])
      std::cout << "frame failure at " << point_text(fl["point"]) << ": " << text(fl["reason"])
                << "\n";
}

void render_compare(const Json& doc, Format f) {
  std::vector<std::vector<std::string>> rows{{"j", "derived", "printed", "agree"}};
  for (const auto& row : doc["rows"])
    rows.push_back({text(row["j"]), text(row["derived"]), text(row["printed"]),
                    row["agree"].get<bool>() ? "yes" : "NO"});
  print_rows(f, rows);
  if (f == Format::table) {
    std::cout << text(doc["disagreements"]) << " disagreements\n";
    if (!doc["first_disagreement"].is_null())
      std::cout << "first disagreement at j=" << text(doc["first_disagreement"]) << "\n";
  }
}

struct ContextDeleter {
  void operator()(prk_context* c) const { prk_context_destroy(c); }
};
struct ReportDeleter {
  void operator()(prk_report* r) const { prk_report_destroy(r); }
};

int report_error(prk_status s) {
  std::cerr << "error: " << prk_status_name(s);
  if (*prk_last_error()) std::cerr << ": " << prk_last_error();
  std::cerr << "\n";
  return exit_code(s);
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Ranks of prim cobordism groups, singularity spectral sequence audits and umbrella checks"};
  app.require_subcommand(1);
  app.fallthrough();
  std::map<std::string, Format> formats{
      {"json", Format::json}, {"table", Format::table}, {"csv", Format::csv}};
  app.add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--stems", opt.stems, "Stable stem extension file (JSON)");

  auto* ranks = app.add_subcommand("ranks", "Rational homotopy ranks of the classifying space");
  auto* cob = app.add_subcommand("cobordism-rank", "Rank of the cobordism group over a target");
  for (auto* sub : {ranks, cob}) {
    sub->add_option("--flavor", opt.flavor, "so/oriented, sp/quaternionic or o/unoriented");
    sub->add_option("--k", opt.k, "Codimension (3 for sp)")->check(CLI::PositiveNumber);
    sub->add_option("--r", opt.r, "Maximal singularity index")->check(CLI::NonNegativeNumber);
  }
  ranks->add_option("--max-degree", opt.max_degree, "Largest degree j")->check(CLI::PositiveNumber);
  cob->add_option("--betti", opt.betti, "Betti JSON file {\"dimension\", \"betti\"}")->required();

  auto* e1 = app.add_subcommand("e1-page", "E1 page of the skeletal spectral sequence");
  e1->add_option("--p-max", opt.p_max)->check(CLI::NonNegativeNumber);
  e1->add_option("--q-max", opt.q_max)->check(CLI::NonNegativeNumber);
  e1->add_flag("--include-p0", opt.include_p0, "Include the p = 0 column");

  auto* segal = app.add_subcommand("segal-audit", "Differentials leaving the Z line at column p");
  segal->add_option("--p", opt.p)->check(CLI::PositiveNumber);
  segal->add_flag("--include-p0", opt.include_p0, "Let differentials land in column 0");

  auto* odd = app.add_subcommand("odd-torsion-audit", "Odd torsion in the low stems");
  odd->add_option("--i-max", opt.i_max)->check(CLI::NonNegativeNumber);

  auto* umb = app.add_subcommand("umbrella-verify", "Exact checks of the umbrella construction");
  umb->add_option("--height", opt.height, "Rational grid height")->check(CLI::PositiveNumber);

  auto* cmp = app.add_subcommand("corollary-compare", "Closed formula against the derivation");
  cmp->add_option("--k", opt.k)->check(CLI::PositiveNumber);
  cmp->add_option("--r", opt.r)->check(CLI::NonNegativeNumber);
  cmp->add_option("--max-degree", opt.max_degree)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  prk_context* raw_ctx = nullptr;
  prk_config cfg;
  prk_config_default(&cfg);
  cfg.grid_height = opt.height;
  cfg.i_max = opt.i_max;
  if (ranks->parsed()) cfg.truncation_degree = opt.max_degree;
  prk_status s = prk_context_create(&cfg, &raw_ctx);
  if (s != PRK_OK) return report_error(s);
  std::unique_ptr<prk_context, ContextDeleter> ctx(raw_ctx);
  if (!opt.stems.empty()) {
    s = prk_context_load_stems_file(ctx.get(), opt.stems.c_str());
    if (s != PRK_OK) return report_error(s);
  }

  prk_flavor flavor = PRK_FLAVOR_ORIENTED;
  if (ranks->parsed() || cob->parsed()) {
    s = prk_parse_flavor(opt.flavor.c_str(), &flavor);
    if (s != PRK_OK) return report_error(s);
    if (opt.k < 0) opt.k = flavor == PRK_FLAVOR_QUATERNIONIC ? 3 : 1;
  }
  if (opt.k < 0) opt.k = 1;

  prk_report* raw = nullptr;
  void (*render)(const Json&, Format) = nullptr;
  if (ranks->parsed()) {
    s = prk_report_ranks(ctx.get(), flavor, opt.k, opt.r, opt.max_degree, &raw);
    render = render_ranks;
  } else if (cob->parsed()) {
    s = prk_report_cobordism_rank(ctx.get(), flavor, opt.k, opt.r, opt.betti.c_str(), &raw);
    render = render_cobordism;
  } else if (e1->parsed()) {
    s = prk_report_e1_page(ctx.get(), opt.p_max, opt.q_max, opt.include_p0, &raw);
    render = render_e1;
  } else if (segal->parsed()) {
    s = prk_report_segal_audit(ctx.get(), opt.p, opt.include_p0, &raw);
    render = render_segal;
  } else if (odd->parsed()) {
    s = prk_report_odd_torsion_audit(ctx.get(), opt.i_max, &raw);
    render = render_odd;
  } else if (umb->parsed()) {
    s = prk_report_umbrella_verify(ctx.get(), opt.height, &raw);
    render = render_umbrella;
  } else {
    s = prk_report_corollary_compare(ctx.get(), opt.k, opt.r, opt.max_degree, &raw);
    render = render_compare;
  }
  if (s != PRK_OK) return report_error(s);
  std::unique_ptr<prk_report, ReportDeleter> report(raw);

  if (opt.format == Format::json) {
    std::cout << prk_report_json(report.get());
  } else {
    render(Json::parse(prk_report_json(report.get())), opt.format);
  }
  std::cout.flush();

  const prk_status outcome = prk_report_status(report.get());
  if (outcome == PRK_STEM_UNKNOWN) std::cerr << "error: stem unknown in the requested page\n";
  return exit_code(outcome);
}
