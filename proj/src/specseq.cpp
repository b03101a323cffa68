#include "specseq.hpp"

#include "ranks.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace primrank {

namespace {

std::string cell_name(int p, int q) {
  return "(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

// All divisors of a finite group's order, ascending.
std::vector<Integer> order_divisors(const FinAbGroup& g) {
  std::vector<Integer> divs{Integer(1)};
  for (auto [prime, e] : g.torsion_factorization()) {
    const std::size_t base = divs.size();
    Integer power = 1;
    for (unsigned i = 1; i <= e; ++i) {
      power *= static_cast<unsigned long>(prime);
      for (std::size_t k = 0; k < base; ++k) divs.push_back(divs[k] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

void enumerate(const std::vector<std::vector<Integer>>& choices, std::size_t r,
               const Integer& remaining, DifferentialAssignment& current,
               std::vector<DifferentialAssignment>& out) {
  if (r == choices.size()) {
    if (remaining == 1) out.push_back(current);
    return;
  }
  for (const auto& d : choices[r]) {
    if (!mpz_divisible_p(remaining.get_mpz_t(), d.get_mpz_t())) continue;
    current.orders.push_back(d);
    enumerate(choices, r + 1, Integer(remaining / d), current, out);
    current.orders.pop_back();
  }
}

}  // namespace

StableStemTable StableStemTable::builtin() {
  StableStemTable t;
  const std::string src = "built-in";
  t.entries_[0] = {FinAbGroup::integers(), src};
  t.entries_[1] = {FinAbGroup::cyclic(2), src};
  t.entries_[2] = {FinAbGroup::cyclic(2), src};
  t.entries_[3] = {FinAbGroup::cyclic(24), src};
  t.entries_[4] = {FinAbGroup{}, src};
  t.entries_[5] = {FinAbGroup{}, src};
  t.entries_[6] = {FinAbGroup::cyclic(2), src};
  t.entries_[7] = {FinAbGroup::cyclic(240), src};
  return t;
}

void StableStemTable::extend(int n, FinAbGroup group, std::string source) {
  if (n < 0) throw InvalidArgument("stem index must be nonnegative");
  if (source.empty())
    throw InputError("stem extension entry " + std::to_string(n) + " has no source");
  if (contains(n))
    throw InputError("stem " + std::to_string(n) + " is already tabulated and cannot be replaced");
  entries_[n] = {std::move(group), std::move(source)};
}

void StableStemTable::load_extension_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("stem extension is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InputError("stem extension must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    int n = 0;
    std::size_t used = 0;
    try {
      n = std::stoi(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || n < 0) throw InputError("stem key '" + key + "' is not an index");
    if (!value.is_object()) throw InputError("stem " + key + " must be an object");
    try {
      const auto free_rank = value.at("free_rank").get<unsigned>();
      const auto torsion = value.at("torsion").get<std::vector<std::uint64_t>>();
      const auto source = value.at("source").get<std::string>();
      extend(n, FinAbGroup::from_orders(free_rank, torsion), source);
    } catch (const json::exception& e) {
      throw InputError("stem " + key + ": " + e.what());
    } catch (const InvalidArgument& e) {
      throw InputError("stem " + key + ": " + e.what());
    }
  }
}

void StableStemTable::load_extension_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open stem extension file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  load_extension_json(buf.str());
}

const StemEntry* StableStemTable::find(int n) const {
  auto it = entries_.find(n);
  return it == entries_.end() ? nullptr : &it->second;
}

const FinAbGroup& StableStemTable::at(int n) const {
  if (const auto* e = find(n)) return e->group;
  throw StemUnknownError("stable stem pi^s(" + std::to_string(n) +
                         ") is unknown; supply it in a stem extension file");
}

FinAbGroup stable_stem(int n) {
  static const StableStemTable table = StableStemTable::builtin();
  return table.at(n);
}

E1Page::E1Page(int first_column, int p_max, int q_max, std::vector<E1Cell> cells)
    : first_column_(first_column), p_max_(p_max), q_max_(q_max), cells_(std::move(cells)) {
  const auto expected = static_cast<std::size_t>(p_max - first_column + 1) * (q_max + 1);
  if (cells_.size() != expected) throw InternalError("E1 page cell count mismatch");
}

bool E1Page::contains(int p, int q) const {
  return p >= first_column_ && p <= p_max_ && q >= 0 && q <= q_max_;
}

const E1Cell& E1Page::cell(int p, int q) const {
  if (!contains(p, q)) throw InvalidArgument("cell " + cell_name(p, q) + " is outside the page");
  return cells_[static_cast<std::size_t>(p - first_column_) * (q_max_ + 1) + q];
}

const FinAbGroup& E1Page::group(int p, int q) const {
  const auto& c = cell(p, q);
  if (!c.known())
    throw StemUnknownError("E1 cell " + cell_name(p, q) + " needs unknown stem pi^s(" +
                           std::to_string(c.stem) + ")");
  return *c.group;
}

bool E1Page::has_unknown() const {
  return std::any_of(cells_.begin(), cells_.end(), [](const E1Cell& c) { return !c.known(); });
}

E1Page build_e1_page(int p_max, int q_max, const StableStemTable& stems, bool include_p0) {
  if (p_max < 1) throw InvalidArgument("p_max must be >= 1");
  if (q_max < 0) throw InvalidArgument("q_max must be >= 0");
  const int first = include_p0 ? 0 : 1;
  std::vector<E1Cell> cells;
  for (int p = first; p <= p_max; ++p) {
    for (int q = 0; q <= q_max; ++q) {
      E1Cell c{p, q, q - 3 * p, std::nullopt};
      if (c.stem < 0)
        c.group = FinAbGroup{};
      else if (const auto* e = stems.find(c.stem))
        c.group = e->group;
      cells.push_back(std::move(c));
    }
  }
  return E1Page(first, p_max, q_max, std::move(cells));
}

Integer segal_index(int p) {
  if (p < 1) throw InvalidArgument("Segal index needs p >= 1");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), 2UL * static_cast<unsigned long>(p));
  if (p % 2 == 1) f /= 2;
  return f;
}

std::vector<DifferentialTarget> differential_targets(int p, const E1Page& page, bool include_p0) {
  if (p < 1) throw InvalidArgument("source column p must be >= 1");
  const int lowest = include_p0 ? 0 : 1;
  std::vector<DifferentialTarget> targets;
  for (int r = 1; p - r >= lowest; ++r) {
    const int tp = p - r;
    const int tq = 3 * p + r - 1;
    if (!page.contains(tp, tq))
      throw InvalidArgument("differential target " + cell_name(tp, tq) + " lies outside the page");
    const FinAbGroup& g = page.group(tp, tq);
    if (!g.is_finite())
      throw InvalidArgument("differential target " + cell_name(tp, tq) + " is infinite");
    targets.push_back({r, tp, tq, g});
  }
  return targets;
}

std::vector<DifferentialAssignment> consistent_assignments(int p, const E1Page& page,
                                                           bool include_p0) {
  const auto targets = differential_targets(p, page, include_p0);
  std::vector<std::vector<Integer>> choices;
  for (const auto& t : targets) choices.push_back(order_divisors(t.group));
  std::vector<DifferentialAssignment> out;
  DifferentialAssignment current{p, {}};
  enumerate(choices, 0, segal_index(p), current, out);
  return out;
}

SegalAudit segal_audit(int p, const E1Page& page, bool include_p0) {
  SegalAudit audit;
  audit.p = p;
  audit.index = segal_index(p);
  audit.targets = differential_targets(p, page, include_p0);
  audit.assignments = consistent_assignments(p, page, include_p0);
  if (audit.assignments.empty()) {
    audit.verdict = "inconsistent";
    return audit;
  }
  audit.passed = true;
  auto all_assignments = [&](auto&& pred) {
    return std::all_of(audit.assignments.begin(), audit.assignments.end(), [&](const auto& a) {
      for (std::size_t i = 0; i < a.orders.size(); ++i)
        if (!pred(a.orders[i], audit.targets[i].group.order())) return false;
      return true;
    });
  };
  if (all_assignments([](const Integer& o, const Integer& n) { return o == n; }))
    audit.verdict = "surjective";
  else if (all_assignments(
               [](const Integer& o, const Integer& n) { return odd_part(o) == odd_part(n); }))
    audit.verdict = "surjective modulo 2-primary torsion";
  else
    audit.verdict = "consistent";
  return audit;
}

E1Page odd_torsion_audit_page(int i_max, const StableStemTable& stems) {
  if (i_max < 0) throw InvalidArgument("i_max must be >= 0");
  return build_e1_page(std::max(1, (i_max + 1) / 4), std::max(0, i_max), stems);
}

OddTorsionAudit odd_torsion_audit(int i_max, const E1Page& page) {
  if (i_max < 0) throw InvalidArgument("i_max must be >= 0");
  const int needed_p = std::max(1, (i_max + 1) / 4);
  if (page.first_column() > 1 || page.p_max() < needed_p || page.q_max() < i_max)
    throw InvalidArgument("page does not cover total degree " + std::to_string(i_max + 1));

  // Every nontrivial cell up to total degree i_max has to be known, as do the
  // Z-line sources one degree higher.
  for (int p = 1; p <= needed_p; ++p) {
    for (int q = 3 * p; p + q <= i_max; ++q) (void)page.group(p, q);
    (void)page.group(p, 3 * p);
  }

  OddTorsionAudit audit;
  audit.i_max = i_max;
  audit.passed = true;
  for (int p = 1; p <= page.p_max(); ++p) {
    for (int q = 3 * p; p + q <= i_max && q <= page.q_max(); ++q) {
      const FinAbGroup& g = page.group(p, q);
      for (std::uint64_t prime : g.odd_torsion_primes()) {
        OddTorsionRecord rec;
        rec.p = p;
        rec.q = q;
        rec.prime = prime;
        rec.valuation_needed = g.valuation(prime);
        const int stem = q - 3 * p;
        // Only cells with stem 4r - 1 are hit from the Z line, by d^r from (p+r, 3(p+r)).
        if ((stem + 1) % 4 != 0 || stem < 3) {
          rec.verdict = "not-annihilated";
        } else {
          const int r = (stem + 1) / 4;
          rec.source_p = p + r;
          rec.differential_r = r;
          const auto assignments = consistent_assignments(p + r, page);
          if (assignments.empty()) {
            rec.verdict = "inconsistent";
          } else {
            unsigned lo = ~0u;
            unsigned hi = 0;
            for (const auto& a : assignments) {
              const unsigned v = valuation(a.orders[static_cast<std::size_t>(r - 1)], prime);
              lo = std::min(lo, v);
              hi = std::max(hi, v);
            }
            rec.valuation_forced = lo;
            rec.valuation_best = hi;
            if (lo >= rec.valuation_needed)
              rec.verdict = "forced";
            else if (hi >= rec.valuation_needed)
              rec.verdict = "consistent-but-not-forced";
            else
              rec.verdict = "not-annihilated";
          }
        }
        if (rec.verdict != "forced") audit.passed = false;
        audit.records.push_back(std::move(rec));
      }
    }
  }
  audit.conclusion = audit.passed ? "odd torsion of pi^s_i(HP^infinity) vanishes for i <= " +
                                        std::to_string(i_max)
                                  : "odd torsion of pi^s_i(HP^infinity) not shown to vanish for i <= " +
                                        std::to_string(i_max);
  return audit;
}

bool infinite_group_criterion(int r, int n) {
  if (r < 0) throw InvalidArgument("singularity bound r must be >= 0");
  if (n + 3 < 1) return false;
  return rank_pi_quaternionic(r, n + 3) > 0;
}

}  // namespace primrank
