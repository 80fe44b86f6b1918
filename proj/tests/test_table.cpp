#include <doctest.h>

#include <json.hpp>

#include "spin9/table.hpp"
#include "spin9/verify.hpp"

using namespace spin9;

TEST_CASE("reference table loads 351 entries plus stars") {
  KForm half = reference_table_half();
  CHECK(half.term_count() == 351);
  KForm full = reference_table();
  CHECK(full.term_count() == 702);
  CHECK(full == half + hodge_star(half));
  CHECK(table_diff(full).empty());
}

TEST_CASE("json rendering round-trips") {
  KForm full = reference_table();
  auto parsed = nlohmann::json::parse(render_table(full, TableFormat::Json));
  REQUIRE(parsed.is_array());
  CHECK(parsed.size() == 702);
  KForm rebuilt(16, 8);
  for (const auto& entry : parsed) {
    std::uint32_t bits = 0;
    for (int idx : entry.at("blade").get<std::vector<int>>())
      bits |= 1u << (idx - 1);
    rebuilt.add_term(bits, Scalar(entry.at("coeff").get<long>()));
  }
  CHECK(rebuilt == full);
  CHECK(table_diff(rebuilt).empty());
}

TEST_CASE("text and csv rendering") {
  KForm small(16, 8);
  small.add_term(Blade(16, {1, 2, 3, 4, 5, 6, 7, 8}).bits, -14);
  small.add_term(Blade(16, {1, 2, 3, 4, 5, 6, 9, 10}).bits, 1);
  std::string text = render_table(small, TableFormat::Text);
  CHECK(text.find("-14 d12345678") != std::string::npos);
  CHECK(text.find("+1 d1234561'2'") != std::string::npos);
  std::string csv = render_table(small, TableFormat::Csv);
  CHECK(csv.rfind("blade,coeff", 0) == 0);
  CHECK(csv.find("1234561'2',1") != std::string::npos);
}
