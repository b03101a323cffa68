#pragma once

#include "errors.hpp"
#include "fin_ab_group.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace primrank {

struct StemEntry {
  FinAbGroup group;
  std::string source;
};

// pi^s(n). The built-in entries n = 0..7 are frozen; anything further comes
// from an extension with a provenance string per entry.
class StableStemTable {
 public:
  static StableStemTable builtin();

  // Rejects n already present and empty provenance.
  void extend(int n, FinAbGroup group, std::string source);
  // {"8": {"free_rank": 0, "torsion": [2, 2], "source": "..."}, ...}
  void load_extension_json(std::string_view text);
  void load_extension_file(const std::string& path);

  bool contains(int n) const { return entries_.count(n) != 0; }
  const StemEntry* find(int n) const;
  // Throws StemUnknownError.
  const FinAbGroup& at(int n) const;
  const std::map<int, StemEntry>& entries() const { return entries_; }

 private:
  std::map<int, StemEntry> entries_;
};

inline constexpr int kBuiltinStemMax = 7;

// Built-in table lookup; StemUnknownError outside 0..7.
FinAbGroup stable_stem(int n);

struct E1Cell {
  int p = 0;
  int q = 0;
  int stem = 0;                     // q - 3p
  std::optional<FinAbGroup> group;  // nullopt: stem not tabulated

  bool known() const { return group.has_value(); }
};

// E^1_{p,q} = pi^s(q - 3p) of the HP^infinity skeletal filtration, for
// first_column <= p <= p_max and 0 <= q <= q_max. first_column is 1 unless the
// point column p = 0 was requested.
class E1Page {
 public:
  E1Page(int first_column, int p_max, int q_max, std::vector<E1Cell> cells);

  int first_column() const { return first_column_; }
  int p_max() const { return p_max_; }
  int q_max() const { return q_max_; }

  bool contains(int p, int q) const;
  // Throws InvalidArgument outside the page.
  const E1Cell& cell(int p, int q) const;
  // Throws StemUnknownError on an unknown cell.
  const FinAbGroup& group(int p, int q) const;
  bool has_unknown() const;
  const std::vector<E1Cell>& cells() const { return cells_; }

 private:
  int first_column_;
  int p_max_;
  int q_max_;
  std::vector<E1Cell> cells_;  // column-major over p, then q
};

E1Page build_e1_page(int p_max, int q_max,
                     const StableStemTable& stems = StableStemTable::builtin(),
                     bool include_p0 = false);

// Index of the stable Hurewicz image in H_{4p}(HP^infinity): (2p)! for even p,
// (2p)!/2 for odd p.
Integer segal_index(int p);

// orders[r-1] = |im d^r_{p,3p}| for r = 1..(number of targets).
struct DifferentialAssignment {
  int p = 0;
  std::vector<Integer> orders;

  bool operator==(const DifferentialAssignment&) const = default;
};

struct DifferentialTarget {
  int r;
  int p;
  int q;
  FinAbGroup group;
};

// Targets (p-r, 3p+r-1) of the differentials leaving the Z-line cell (p, 3p).
// Columns below 1 are skipped unless include_p0 is set.
std::vector<DifferentialTarget> differential_targets(int p, const E1Page& page,
                                                     bool include_p0 = false);

// Every tuple with o_r dividing the E^1 order of its target and product equal
// to segal_index(p), in lexicographic order. Empty means no tuple fits.
std::vector<DifferentialAssignment> consistent_assignments(int p, const E1Page& page,
                                                           bool include_p0 = false);

struct SegalAudit {
  int p = 0;
  Integer index;
  std::vector<DifferentialTarget> targets;
  std::vector<DifferentialAssignment> assignments;
  // "surjective", "surjective modulo 2-primary torsion", "consistent", "inconsistent"
  std::string verdict;
  bool passed = false;
};

SegalAudit segal_audit(int p, const E1Page& page, bool include_p0 = false);

struct OddTorsionRecord {
  int p = 0;
  int q = 0;
  std::uint64_t prime = 0;
  unsigned valuation_needed = 0;
  // Minimum and maximum over consistent assignments of the prime's valuation
  // in the incoming differential's image order.
  unsigned valuation_forced = 0;
  unsigned valuation_best = 0;
  std::optional<int> source_p;
  std::optional<int> differential_r;
  // "forced", "consistent-but-not-forced", "not-annihilated", "inconsistent"
  std::string verdict;
};

struct OddTorsionAudit {
  int i_max = 0;
  std::vector<OddTorsionRecord> records;
  bool passed = false;
  std::string conclusion;
};

// Smallest page that odd_torsion_audit(i_max, .) accepts.
E1Page odd_torsion_audit_page(int i_max,
                              const StableStemTable& stems = StableStemTable::builtin());

OddTorsionAudit odd_torsion_audit(int i_max, const E1Page& page);

// pi_{n+3} of the quaternionic classifying space has positive rank.
bool infinite_group_criterion(int r, int n);

}  // namespace primrank
