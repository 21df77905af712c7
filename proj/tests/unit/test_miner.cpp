#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "../oracle/bridge.hpp"
#include "prereq/miner.hpp"
#include "prereq/model_io.hpp"

using namespace prereq;

namespace {

const FuzzyThresholds kRef = FuzzyThresholds::reference();
const AlphaCut kHalf = AlphaCut::validate(0.5);

Course chain_course(std::vector<std::string> ids, std::vector<PrerequisiteLink> links) {
  Course c;
  c.id = "c";
  for (auto& id : ids) c.concepts.push_back({id, id});
  c.initial_links = std::move(links);
  return c;
}

GradeMatrix matrix_of(const Course& c, const std::vector<std::vector<Grade>>& rows) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < rows.size(); ++i) ids.push_back("s" + std::to_string(i));
  GradeMatrix m(c.id, ids, c.concepts.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < rows[r].size(); ++k) m.set(r, k, rows[r][k]);
  }
  return m;
}

LinkStrength strength(double cpr, double rpr, std::size_t support) {
  LinkStrength s;
  s.cpr = cpr;
  s.rpr = rpr;
  s.support_count = support;
  return s;
}

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(PREREQ_DATA_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<PrerequisiteLink> non_dropped(const FinalDomainModel& m) {
  std::set<PrerequisiteLink> out;
  for (const auto& v : m.verdicts) {
    if (v.verdict != Verdict::Dropped) out.insert(v.link);
  }
  return out;
}

}  // namespace

TEST_CASE("link_deltas") {
  const Course c = chain_course({"A", "B"}, {{"A", "B"}});
  const auto m = matrix_of(c, {{10, 12}, {12, 12}, {8, 6}});
  CHECK(link_deltas(m, {"A", "B"}, c) == std::vector<Delta>{2, 0, -2});
  CHECK(link_deltas(m, {"B", "A"}, c) == std::vector<Delta>{-2, 0, 2});

  const auto partial = matrix_of(c, {{4, 7}, {4, std::nullopt}});
  CHECK(link_deltas(partial, {"A", "B"}, c) == std::vector<Delta>{3});
  CHECK(link_deltas(GradeMatrix("c", {}, 2), {"A", "B"}, c).empty());
}

TEST_CASE("link_strength") {
  auto s = link_strength(std::vector<Delta>{0, 0, 0}, kRef);
  CHECK(s.cpr == 1.0);
  CHECK(s.rpr == 0.0);
  CHECK(s.support_count == 3);

  s = link_strength(std::vector<Delta>{5, 5}, kRef);
  CHECK(s.cpr == 0.0);
  CHECK(s.rpr == 1.0);

  s = link_strength(std::vector<Delta>{0, 5}, kRef);
  CHECK(s.cpr == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.rpr == doctest::Approx(0.5).epsilon(1e-12));

  // Mean of memberships, not membership of the mean delta.
  s = link_strength(std::vector<Delta>{5, -5}, kRef);
  CHECK(s.cpr == 0.0);
  CHECK(s.rpr == 0.5);

  s = link_strength(std::vector<Delta>{}, kRef);
  CHECK(s == LinkStrength{});
}

TEST_CASE("classify") {
  CHECK(classify(strength(0.6, 0.1, 48), kHalf) == Verdict::Kept);
  CHECK(classify(strength(0.1, 0.7, 48), kHalf) == Verdict::Reversed);
  CHECK(classify(strength(0.3, 0.2, 48), kHalf) == Verdict::Dropped);
  CHECK(classify(strength(0.6, 0.6, 48), kHalf) == Verdict::Kept);
  CHECK(classify(strength(0.9, 0.9, 0), kHalf) == Verdict::InsufficientData);
  CHECK(classify(strength(0.5, 0.0, 3), kHalf) == Verdict::Kept);
  CHECK(classify(strength(0.4, 0.5, 3), kHalf) == Verdict::Reversed);
  CHECK(classify(strength(0.45, 0.45, 3), kHalf) == Verdict::Dropped);
  CHECK(classify(strength(0.49, 0.0, 3), kHalf) == Verdict::Dropped);
  // At alpha = 0 every supported link is kept or reversed.
  CHECK(classify(strength(0.0, 0.0, 1), AlphaCut::validate(0)) == Verdict::Kept);
}

TEST_CASE("verdict names") {
  for (auto v : {Verdict::Kept, Verdict::Reversed, Verdict::Dropped, Verdict::InsufficientData}) {
    CHECK(parse_verdict(to_string(v)) == v);
  }
  CHECK_THROWS_AS(parse_verdict("maybe"), Error);
}

TEST_CASE("refine_model examples") {
  SUBCASE("identical scores keep the initial model") {
    const Course c = chain_course({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}});
    const auto m = refine_model(c, matrix_of(c, {{12, 12, 12}, {7, 7, 7}, {15, 15, 15}}), kRef, kHalf);
    CHECK(m.count(Verdict::Kept) == 2);
    CHECK(m.final_links == c.initial_links);
  }
  SUBCASE("five points higher on the target reverses the link") {
    const Course c = chain_course({"A", "B"}, {{"A", "B"}});
    const auto m = refine_model(c, matrix_of(c, {{10, 15}, {3, 8}, {12, 17}}), kRef, kHalf);
    REQUIRE(m.verdicts.size() == 1);
    CHECK(m.verdicts[0].verdict == Verdict::Reversed);
    CHECK(m.verdicts[0].strength.cpr == 0.0);
    CHECK(m.verdicts[0].strength.rpr == 1.0);
    CHECK(m.final_links == std::vector<PrerequisiteLink>{{"B", "A"}});
  }
  SUBCASE("fifteen points higher drops the link") {
    const Course c = chain_course({"A", "B"}, {{"A", "B"}});
    const auto m = refine_model(c, matrix_of(c, {{0, 15}, {5, 20}}), kRef, kHalf);
    CHECK(m.verdicts[0].verdict == Verdict::Dropped);
    CHECK(m.verdicts[0].strength == strength(0, 0, 2));
    CHECK(m.final_links.empty());
  }
  SUBCASE("no overlapping grades keeps the link with a diagnostic") {
    const Course c = chain_course({"A", "B"}, {{"A", "B"}});
    const auto m = refine_model(c, matrix_of(c, {{10, std::nullopt}, {std::nullopt, 4}}), kRef, kHalf);
    CHECK(m.verdicts[0].verdict == Verdict::InsufficientData);
    CHECK(m.final_links == c.initial_links);
    REQUIRE(m.diagnostics.size() == 1);
    CHECK(m.diagnostics[0].find("insufficient_data") != std::string::npos);
  }
  SUBCASE("low support is flagged") {
    const Course c = chain_course({"A", "B"}, {{"A", "B"}});
    const auto m = refine_model(c, matrix_of(c, {{10, 10}}), kRef, kHalf);
    REQUIRE(m.diagnostics.size() == 1);
    CHECK(m.diagnostics[0].find("only 1 learners") != std::string::npos);
  }
}

TEST_CASE("refine_model errors") {
  const Course c = chain_course({"A", "B"}, {{"A", "B"}});
  try {
    refine_model(c, GradeMatrix("other", {"s"}, 2), kRef, kHalf);
    FAIL("expected CourseMatrixMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CourseMatrixMismatch);
  }
  try {
    refine_model(c, GradeMatrix("c", {"s"}, 3), kRef, kHalf);
    FAIL("expected CourseMatrixMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CourseMatrixMismatch);
  }
  Course small = c;
  small.grade_scale_max = 8;
  try {
    refine_model(small, GradeMatrix("c", {"s"}, 2), kRef, kHalf);
    FAIL("expected ThresholdOutOfScale");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ThresholdOutOfScale);
  }
}

TEST_CASE("reversal that closes a cycle is revoked") {
  // A->B->C kept (deltas 2), shortcut A->C has delta 4 = s2: reversed into C->A.
  const Course c = chain_course({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"A", "C"}});
  const auto t = FuzzyThresholds::validate(-4, 4, 8);
  const auto m = refine_model(c, matrix_of(c, {{10, 12, 14}}), t, kHalf);
  CHECK(m.verdicts[0].verdict == Verdict::Kept);
  CHECK(m.verdicts[1].verdict == Verdict::Kept);
  CHECK(m.verdicts[2].verdict == Verdict::Dropped);
  CHECK(classify(m.verdicts[2].strength, kHalf) == Verdict::Reversed);
  CHECK(m.final_links == std::vector<PrerequisiteLink>{{"A", "B"}, {"B", "C"}});
  const bool mentioned = std::any_of(m.diagnostics.begin(), m.diagnostics.end(), [](const std::string& d) {
    return d.find("link A->C: reversal revoked") != std::string::npos;
  });
  CHECK(mentioned);
}

TEST_CASE("cycle repair revokes reversals in lexicographic order") {
  // A->B and C->D reverse; with A->D and C->B kept the flips form
  // A->D->C->B->A. Revoking A->B (the smaller link) is enough.
  const Course c = chain_course({"A", "B", "C", "D"}, {{"C", "D"}, {"A", "D"}, {"C", "B"}, {"A", "B"}});
  const std::optional<double> none;
  const auto m = refine_model(c,
                              matrix_of(c, {{5, 10, none, none},
                                            {none, none, 5, 10},
                                            {5, none, none, 5},
                                            {none, 5, 5, none}}),
                              kRef, kHalf);
  CHECK(m.verdicts[0].verdict == Verdict::Reversed);  // C->D
  CHECK(m.verdicts[3].verdict == Verdict::Dropped);   // A->B revoked
  CHECK(m.final_links == std::vector<PrerequisiteLink>{{"A", "D"}, {"C", "B"}, {"D", "C"}});
  CHECK_FALSE(find_cycle({{"A", "B", "C", "D"}, m.final_links}));
}

TEST_CASE("invariants on random instances") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    auto inst = trial % 3 == 0 ? oracle::adversarial_instance(rng) : oracle::random_instance(rng);
    const Course course = oracle::to_course(inst);
    const GradeMatrix matrix = oracle::to_matrix(inst);
    const auto t = FuzzyThresholds::validate(inst.s1, inst.s2, inst.s3);
    const auto cut = AlphaCut::validate(inst.alpha);
    const auto model = refine_model(course, matrix, t, cut);

    // Oracle equivalence and acyclicity.
    CHECK_FALSE(find_cycle({{}, model.final_links}));
    for (std::size_t i = 0; i < inst.links.size(); ++i) {
      const auto expected = oracle::strength(inst, inst.links[i].first, inst.links[i].second);
      const auto& got = model.verdicts[i].strength;
      CHECK(std::abs(got.cpr - expected.cpr) <= 1e-12);
      CHECK(std::abs(got.rpr - expected.rpr) <= 1e-12);
      CHECK(got.support_count == expected.support);
      CHECK(to_string(classify(got, cut)) == oracle::verdict(expected, inst.alpha));
    }

    // Determinism.
    CHECK(export_model_json(refine_model(course, matrix, t, cut)) == export_model_json(model));

    // Learner permutation invariance of the strengths (up to summation order).
    auto shuffled = inst;
    std::shuffle(shuffled.grades.begin(), shuffled.grades.end(), rng);
    const auto permuted = refine_model(course, oracle::to_matrix(shuffled), t, cut);
    for (std::size_t i = 0; i < model.verdicts.size(); ++i) {
      CHECK(permuted.verdicts[i].strength.cpr == doctest::Approx(model.verdicts[i].strength.cpr).epsilon(1e-12));
      CHECK(permuted.verdicts[i].strength.rpr == doctest::Approx(model.verdicts[i].strength.rpr).epsilon(1e-12));
    }

    // Alpha monotonicity of the classification.
    const double higher = std::uniform_real_distribution<double>(inst.alpha, 1.0)(rng);
    const auto strict = refine_model(course, matrix, t, AlphaCut::validate(higher));
    for (std::size_t i = 0; i < model.verdicts.size(); ++i) {
      const auto loose_v = classify(model.verdicts[i].strength, cut);
      const auto strict_v = classify(strict.verdicts[i].strength, AlphaCut::validate(higher));
      if (strict_v != Verdict::Dropped) CHECK(loose_v == strict_v);
    }
  }
}

TEST_CASE("shift invariance") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    auto inst = oracle::random_instance(rng);
    if (inst.links.empty()) continue;
    const auto [s, t] = inst.links.front();
    const auto before = oracle::to_matrix(inst);
    for (auto& row : inst.grades) {
      // Shift both endpoints by the same amount, staying within [0, 20].
      if (!row[s] || !row[t]) continue;
      const int room = 20 - std::max(*row[s], *row[t]);
      const int c = room > 0 ? std::uniform_int_distribution<int>(0, room)(rng) : 0;
      *row[s] += c;
      *row[t] += c;
    }
    const Course course = oracle::to_course(inst);
    const PrerequisiteLink link{oracle::concept_id(s), oracle::concept_id(t)};
    const auto th = FuzzyThresholds::validate(inst.s1, inst.s2, inst.s3);
    CHECK(link_deltas(before, link, course) == link_deltas(oracle::to_matrix(inst), link, course));
    CHECK(link_strength(link_deltas(before, link, course), th) ==
          link_strength(link_deltas(oracle::to_matrix(inst), link, course), th));
  }
}

TEST_CASE("sweep_alpha on the Java fixture") {
  const Course course = parse_course(read_fixture("java-101.course.json"));
  const GradeMatrix matrix = parse_grades_csv(read_fixture("java-101.grades.csv"), course);
  const std::vector<AlphaCut> alphas{AlphaCut::validate(0.0), AlphaCut::validate(0.2), AlphaCut::validate(0.5),
                                     AlphaCut::validate(1.0)};
  const auto models = sweep_alpha(course, matrix, kRef, alphas);
  REQUIRE(models.size() == 4);
  for (std::size_t i = 0; i < models.size(); ++i) {
    CHECK(models[i] == refine_model(course, matrix, kRef, alphas[i]));
  }
  CHECK(models[0].count(Verdict::Dropped) == 0);
  const auto at02 = std::set<PrerequisiteLink>(models[1].final_links.begin(), models[1].final_links.end());
  for (const auto& e : models[2].final_links) CHECK(at02.count(e) == 1);
  CHECK(models[3].final_links.empty());
  for (std::size_t i = 1; i < models.size(); ++i) {
    const auto loose = non_dropped(models[i - 1]);
    for (const auto& l : non_dropped(models[i])) CHECK(loose.count(l) == 1);
  }

  CHECK_THROWS_AS(sweep_alpha(course, matrix, kRef, std::vector<AlphaCut>{}), Error);
  try {
    sweep_alpha(course, matrix, kRef, std::vector<AlphaCut>{AlphaCut::validate(0.5), AlphaCut::validate(0.2)});
    FAIL("expected AlphasNotAscending");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlphasNotAscending);
  }
}

TEST_CASE("reference configuration on the Java fixture") {
  const Course course = parse_course(read_fixture("java-101.course.json"));
  const GradeMatrix matrix = parse_grades_csv(read_fixture("java-101.grades.csv"), course);
  const auto model = refine_model(course, matrix, kRef, kHalf);
  CHECK(model.count(Verdict::Kept) > 0);
  CHECK(model.count(Verdict::Reversed) > 0);
  CHECK(model.count(Verdict::Dropped) > 0);
  CHECK(model.count(Verdict::InsufficientData) == 0);
  CHECK_FALSE(model.final_links.empty());
  CHECK(model.diagnostics.empty());
}
