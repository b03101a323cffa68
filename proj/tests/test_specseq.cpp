#include "doctest.h"

#include "specseq.hpp"

#include <fstream>

using namespace primrank;

TEST_CASE("finite abelian groups") {
  const auto z24 = FinAbGroup::cyclic(24);
  CHECK(z24.torsion() == std::vector<std::uint64_t>{8, 3});
  CHECK(z24.order() == 24);
  CHECK(z24.valuation(2) == 3);
  CHECK(z24.odd_torsion_primes() == std::vector<std::uint64_t>{3});
  CHECK(z24.to_string() == "Z_24");
  CHECK(FinAbGroup::cyclic(1).is_trivial());
  CHECK(FinAbGroup::cyclic(1).to_string() == "0");
  const auto mixed = FinAbGroup::from_orders(2, {2, 6});
  CHECK(mixed.to_string() == "Z^2 + Z_2 + Z_6");
  CHECK(mixed.torsion_order() == 12);
  CHECK_FALSE(mixed.is_finite());
  CHECK_THROWS(mixed.order());
  CHECK(factorize(360) == std::map<std::uint64_t, unsigned>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(odd_part(Integer(360)) == 45);
}

TEST_CASE("built-in stems") {
  const char* names[] = {"Z", "Z_2", "Z_2", "Z_24", "0", "0", "Z_2", "Z_240"};
  for (int n = 0; n <= 7; ++n) CHECK(stable_stem(n).to_string() == names[n]);
  CHECK_THROWS_AS(stable_stem(8), StemUnknownError);
  CHECK_THROWS_AS(stable_stem(-1), StemUnknownError);
}

TEST_CASE("E1 page cells") {
  const auto page = build_e1_page(3, 10);
  CHECK(page.first_column() == 1);
  for (int p = 1; p <= 3; ++p) CHECK(page.group(p, 3 * p) == FinAbGroup::integers());
  CHECK(page.group(1, 6).to_string() == "Z_24");
  CHECK(page.group(2, 9).to_string() == "Z_24");
  CHECK(page.group(1, 10).to_string() == "Z_240");
  CHECK(page.group(1, 4).to_string() == "Z_2");
  CHECK(page.group(3, 10).to_string() == "Z_2");
  CHECK(page.group(1, 2).is_trivial());
  CHECK(page.group(3, 8).is_trivial());
  CHECK_FALSE(page.has_unknown());
  CHECK_THROWS_AS(page.cell(4, 0), InvalidArgument);

  const auto tall = build_e1_page(1, 12);
  CHECK(tall.has_unknown());
  CHECK_FALSE(tall.cell(1, 11).known());
  CHECK_THROWS_AS(tall.group(1, 11), StemUnknownError);

  const auto with_point = build_e1_page(1, 3, StableStemTable::builtin(), true);
  CHECK(with_point.first_column() == 0);
  CHECK(with_point.group(0, 0) == FinAbGroup::integers());
}

TEST_CASE("Segal index") {
  CHECK(segal_index(1) == 1);
  CHECK(segal_index(2) == 24);
  CHECK(segal_index(3) == 360);
  CHECK(segal_index(4) == 40320);
}

TEST_CASE("differential assignments") {
  const auto page = build_e1_page(3, 12);
  CHECK(consistent_assignments(1, page).size() == 1);
  CHECK(consistent_assignments(1, page).front().orders.empty());

  const auto two = consistent_assignments(2, page);
  REQUIRE(two.size() == 1);
  CHECK(two.front().orders == std::vector<Integer>{24});

  const auto three = consistent_assignments(3, page);
  REQUIRE(three.size() == 4);
  const std::vector<std::vector<Integer>> expected{{3, 120}, {6, 60}, {12, 30}, {24, 15}};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(three[i].orders == expected[i]);
    CHECK(odd_part(three[i].orders[0]) == 3);
    CHECK(odd_part(three[i].orders[1]) == 15);
  }

  const auto targets = differential_targets(3, page);
  REQUIRE(targets.size() == 2);
  CHECK(targets[0].p == 2);
  CHECK(targets[0].q == 9);
  CHECK(targets[1].p == 1);
  CHECK(targets[1].q == 10);
}

TEST_CASE("Segal audits") {
  const auto page = build_e1_page(3, 12);
  const auto a2 = segal_audit(2, page);
  CHECK(a2.verdict == "surjective");
  CHECK(a2.passed);
  const auto a3 = segal_audit(3, page);
  CHECK(a3.verdict == "surjective modulo 2-primary torsion");
  CHECK(a3.passed);
  const auto big = build_e1_page(4, 16);
  CHECK_THROWS_AS(segal_audit(4, big), StemUnknownError);
}

TEST_CASE("odd torsion audit") {
  const auto audit = odd_torsion_audit(11, odd_torsion_audit_page(11));
  CHECK(audit.passed);
  CHECK(audit.records.size() == 4);
  for (const auto& r : audit.records) CHECK(r.verdict == "forced");
  CHECK(audit.conclusion.find("i <= 11") != std::string::npos);
  CHECK_THROWS_AS(odd_torsion_audit(12, odd_torsion_audit_page(12)), StemUnknownError);
}

TEST_CASE("stem extensions") {
  auto table = StableStemTable::builtin();
  table.load_extension_json(
      R"({"8": {"free_rank": 0, "torsion": [2, 2], "source": "table"},
          "9": {"free_rank": 0, "torsion": [2, 2, 2], "source": "table"}})");
  CHECK(table.at(8).to_string() == "Z_2 + Z_2");
  CHECK(table.find(9)->source == "table");

  auto dup = StableStemTable::builtin();
  CHECK_THROWS_AS(dup.load_extension_json(R"({"3": {"free_rank": 0, "torsion": [24], "source": "x"}})"),
                  InputError);
  CHECK_THROWS_AS(dup.load_extension_json(R"({"8": {"free_rank": 0, "torsion": [2]}})"), InputError);
  CHECK_THROWS_AS(dup.load_extension_json("{not json"), InputError);
  CHECK_THROWS_AS(dup.load_extension_file("/nonexistent/stems.json"), InputError);
  CHECK_FALSE(dup.contains(8));
  CHECK_THROWS_AS(dup.extend(8, FinAbGroup::cyclic(2), ""), InputError);
  CHECK_THROWS_AS(dup.extend(-1, FinAbGroup::cyclic(2), "x"), InvalidArgument);
}

TEST_CASE("odd torsion audit with extended stems") {
  auto table = StableStemTable::builtin();
  table.load_extension_json(
      R"({"8": {"free_rank": 0, "torsion": [2, 2], "source": "table"},
          "9": {"free_rank": 0, "torsion": [2, 2, 2], "source": "table"}})");
  const auto audit = odd_torsion_audit(12, odd_torsion_audit_page(12, table));
  CHECK(audit.passed);
}

TEST_CASE("infinitude criterion") {
  for (int r = 0; r <= 5; ++r)
    for (int n = 0; n <= 20; ++n)
      CHECK(infinite_group_criterion(r, n) == (n % 4 == 0 && n <= 4 * r));
}
