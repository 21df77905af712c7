#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prereq/course.hpp"
#include "prereq/fuzzy.hpp"
#include "prereq/grades.hpp"

namespace prereq {

/// Cohort-level fuzzy support of one link in the CPR and RPR sets.
struct LinkStrength {
  MembershipValue cpr = 0.0;
  MembershipValue rpr = 0.0;
  std::size_t support_count = 0;  // learners with both grades present

  friend bool operator==(const LinkStrength&, const LinkStrength&) = default;
};

enum class Verdict { Kept, Reversed, Dropped, InsufficientData };

std::string_view to_string(Verdict verdict) noexcept;
/// Inverse of to_string; throws MalformedDocument on unknown names.
Verdict parse_verdict(std::string_view name);

struct LinkVerdict {
  PrerequisiteLink link;  // as authored in the initial model
  LinkStrength strength;
  Verdict verdict;

  friend bool operator==(const LinkVerdict&, const LinkVerdict&) = default;
};

struct FinalDomainModel {
  std::string course_id;
  std::vector<Concept> concepts;               // course order
  FuzzyThresholds thresholds = FuzzyThresholds::reference();
  AlphaCut cut = AlphaCut::validate(0.5);
  std::vector<LinkVerdict> verdicts;           // initial link order
  std::vector<PrerequisiteLink> final_links;   // sorted
  std::vector<std::string> diagnostics;

  std::size_t count(Verdict v) const noexcept;

  friend bool operator==(const FinalDomainModel&, const FinalDomainModel&) = default;
};

/// Learners below this support count get a diagnostic on the link.
inline constexpr std::size_t kLowSupportWarning = 10;

/// Per-learner grade variation grade(target) - grade(source), skipping
/// learners missing either grade. Order follows the matrix rows.
std::vector<Delta> link_deltas(const GradeMatrix& matrix, const PrerequisiteLink& link, const Course& course);

/// Mean membership of the deltas in CPR and RPR. Empty input yields zeros.
LinkStrength link_strength(std::span<const Delta> deltas, const FuzzyThresholds& t);

/// Alpha-cut decision, first matching rule wins:
/// no support -> InsufficientData; cpr >= alpha and cpr >= rpr -> Kept;
/// rpr >= alpha and rpr > cpr -> Reversed; otherwise Dropped.
Verdict classify(const LinkStrength& strength, const AlphaCut& cut) noexcept;

/// Runs the full pipeline over every initial link and assembles an acyclic
/// final model. Reversals that would close a cycle are revoked (demoted to
/// Dropped, with a diagnostic) one at a time, always choosing the
/// lexicographically smallest original link among the reversals on the
/// current witness cycle. Throws CourseMatrixMismatch and
/// ThresholdOutOfScale.
FinalDomainModel refine_model(const Course& course, const GradeMatrix& matrix, const FuzzyThresholds& t,
                              const AlphaCut& cut);

/// One model per alpha, sharing the alpha-independent link strengths.
/// Alphas must be non-empty and ascending.
std::vector<FinalDomainModel> sweep_alpha(const Course& course, const GradeMatrix& matrix,
                                          const FuzzyThresholds& t, std::span<const AlphaCut> alphas);

}  // namespace prereq
