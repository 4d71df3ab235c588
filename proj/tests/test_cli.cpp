#include <gtest/gtest.h>

#include "hilbertkit/jobspec.hpp"
#include "hilbertkit/report.hpp"

using namespace hk;

namespace {

constexpr const char* kBinomialFile =
    "# binomial example\n"
    "ring { char = 32003; vars = x, y; }\n"
    "ideal I = x^6, y^6, x^5*y + x^2*y^4;\n";

ParseError parse_error(const std::string& text) {
  try {
    parse_input(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << text;
  return ParseError("none", 0, 0);
}

const BuiltinExample& builtin(const std::string& name) {
  for (const auto& e : builtin_examples())
    if (e.name == name) return e;
  throw std::runtime_error("no example " + name);
}

IdealReport run(const BuiltinExample& ex, AnalyzeOptions opt = {}) {
  const auto R = make_ring(32003, ex.vars);
  std::vector<NamedReduction> named;
  for (const auto& [n, g] : ex.named) named.push_back({n, Ideal::parse(R, g)});
  opt.trials = ex.min_trials;
  return analyze_ideal(ex.name, Ideal::parse(R, ex.gens), named, opt);
}

}  // namespace

TEST(ParseInput, BinomialFile) {
  const JobSpec spec = parse_input(kBinomialFile);
  EXPECT_EQ(spec.characteristic, 32003u);
  EXPECT_EQ(spec.vars, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(spec.ideals.size(), 1u);
  EXPECT_EQ(spec.ideals[0].name, "I");
  ASSERT_EQ(spec.ideals[0].gens.size(), 3u);
  EXPECT_EQ(spec.ideals[0].gens[2].text, "x^5*y + x^2*y^4");
  EXPECT_EQ(spec.ideals[0].gens[2].line, 3u);
}

TEST(ParseInput, ReductionsAttachToThePrecedingIdeal) {
  const JobSpec spec = parse_input(
      "ring { vars = x, y; }\n"
      "ideal A = x^2, y^2;\n"
      "ideal I = x^6, y^6, x^5*y, x^2*y^4, x*y^5;\n"
      "reduction J1 = x^6, x^5*y + y^6;\n"
      "reduction J2 = x^6, y^6;\n");
  EXPECT_FALSE(spec.characteristic);
  ASSERT_EQ(spec.ideals.size(), 2u);
  EXPECT_TRUE(spec.ideals[0].reductions.empty());
  ASSERT_EQ(spec.ideals[1].reductions.size(), 2u);
  EXPECT_EQ(spec.ideals[1].reductions[1].name, "J2");
  const auto loaded = instantiate(spec, 101);
  EXPECT_EQ(loaded[1].ideal.ring()->characteristic(), 101u);
  EXPECT_EQ(loaded[1].reductions[0].second.gens().size(), 2u);
}

TEST(ParseInput, GeneratorsMaySpanLinesAndNestParentheses) {
  const JobSpec spec = parse_input("ring { vars = x, y, z; }\nideal I = x^4, x*(y^3 + z^3),\n  y^5, z^5;\n");
  ASSERT_EQ(spec.ideals[0].gens.size(), 4u);
  EXPECT_EQ(spec.ideals[0].gens[1].text, "x*(y^3 + z^3)");
  EXPECT_EQ(spec.ideals[0].gens[2].line, 3u);
}

TEST(ParseInput, EmptyIdealBody) {
  const auto e = parse_error("ring { vars = x, y; }\nideal I = ;\n");
  EXPECT_NE(std::string(e.what()).find("no generators"), std::string::npos);
  EXPECT_EQ(e.line(), 2u);
}

TEST(ParseInput, UnknownVariableIsNamedWithPosition) {
  const auto e = parse_error("ring { vars = x, y; }\nideal I = x^2, z^3;\n");
  EXPECT_NE(std::string(e.what()).find("unknown variable 'z'"), std::string::npos);
  EXPECT_EQ(e.line(), 2u);
  EXPECT_EQ(e.column(), 16u);
}

TEST(ParseInput, StructuralErrors) {
  EXPECT_NE(std::string(parse_error("ideal I = x;").what()).find("expected 'ring'"), std::string::npos);
  EXPECT_NE(std::string(parse_error("ring { vars = x; }\n").what()).find("no ideal"), std::string::npos);
  EXPECT_NE(std::string(parse_error("ring { vars = x; }\nideal I = x^2\n").what()).find("missing ';'"),
            std::string::npos);
  EXPECT_NE(std::string(parse_error("ring { vars = x; }\nreduction J = x;\n").what()).find("before any ideal"),
            std::string::npos);
  EXPECT_NE(std::string(parse_error("ring { char = 12; vars = x; }\nideal I = x;\n").what()).find("prime"),
            std::string::npos);
  EXPECT_NE(std::string(parse_error("ring { vars = x; }\nideal I = x, , x^2;\n").what()).find("empty generator"),
            std::string::npos);
}

TEST(Report, TableCarriesCoefficientLine) {
  const auto rep = run(builtin("x6-y6-binomial"));
  EXPECT_NE(render_table(rep).find("e0=36 e1=15 e2=11"), std::string::npos);
}

TEST(Report, JsonRoundTripsByteIdentically) {
  const auto rep = run(builtin("staircase-24"));
  Json doc;
  doc["meta"] = to_json(RunMeta{"analyze", 1, 32003, 3, 30});
  doc["ideals"] = Json::array({to_json(rep)});
  const std::string text = dump(doc);
  EXPECT_EQ(dump(Json::parse(text)), text);
  EXPECT_EQ(doc["ideals"][0]["hilbert"]["e"][1], 15);
  EXPECT_EQ(doc["ideals"][0]["independence"]["verdict"], "NOT-independent");
}

TEST(Report, EmptyDocumentIsValid) {
  Json doc;
  doc["meta"] = to_json(RunMeta{});
  doc["ideals"] = Json::array();
  const std::string text = dump(doc);
  EXPECT_EQ(dump(Json::parse(text)), text);
  EXPECT_EQ(dump(to_json(SearchSummary{})), dump(Json::parse(dump(to_json(SearchSummary{})))));
}

TEST(Report, DeterministicForFixedSeed) {
  const auto& ex = builtin("x6-y6-binomial");
  EXPECT_EQ(dump(to_json(run(ex))), dump(to_json(run(ex))));
}

TEST(Report, TableAndJsonCarryTheSameNumbers) {
  const auto rep = run(builtin("staircase-22"));
  const Json j = to_json(rep);
  const std::string table = render_table(rep);
  EXPECT_NE(table.find("colength=" + std::to_string(j["colength"].get<std::size_t>())), std::string::npos);
  EXPECT_NE(table.find("e1_deficit=" + std::to_string(j["reductions"][0]["e1_deficit"].get<std::int64_t>())),
            std::string::npos);
}

TEST(PaperExamples, FastExamplesMatchTheirTables) {
  for (const auto& ex : builtin_examples()) {
    if (ex.name == "cubic-cone-m5") continue;
    for (const auto& row : check_example(ex, run(ex)))
      EXPECT_TRUE(row.pass) << ex.name << " " << row.field << ": expected " << row.expected << ", got " << row.got;
  }
}

TEST(PaperExamples, TinyRMaxFailsTheSecondNamedReduction) {
  AnalyzeOptions opt;
  opt.r_max = 1;
  const auto& ex = builtin("staircase-24");
  bool seen = false;
  for (const auto& row : check_example(ex, run(ex, opt)))
    if (row.field == "r_J J2") {
      seen = true;
      EXPECT_FALSE(row.pass);
      EXPECT_NE(row.got.find("not a reduction up to r_max"), std::string::npos);
    }
  EXPECT_TRUE(seen);
}

TEST(Search, CountZeroGivesEmptyReport) {
  SearchOptions so;
  so.count = 0;
  const auto s = run_search(so, 32003);
  EXPECT_EQ(s.samples, 0u);
  EXPECT_TRUE(s.violations.empty());
  for (const auto& t : s.tallies) EXPECT_EQ(t.applicable + t.vacuous + t.verified, 0u);
}

TEST(Search, SamplesAreMPrimaryAndReproducible) {
  std::mt19937_64 a(5), b(5);
  for (int k = 0; k < 50; ++k) {
    const auto s = random_search_ideal(2, 6, a);
    EXPECT_EQ(s.gens, random_search_ideal(2, 6, b).gens);
    const JobSpec spec = parse_input(search_input_text(s, 32003));
    EXPECT_TRUE(is_m_primary(instantiate(spec, 32003)[0].ideal));
  }
}

TEST(Search, GapClaimHoldsOnSmallCorpus) {
  SearchOptions so;
  so.count = 40;
  so.claims = {ClaimId::Rem39Gap};
  so.analyze.trials = 2;
  const auto s = run_search(so, 32003);
  ASSERT_EQ(s.tallies.size(), 1u);
  EXPECT_EQ(s.tallies[0].violated, 0u);
  EXPECT_EQ(s.tallies[0].verified, 40u);
}
