#pragma once

#include <limits>

namespace prereq {

/// Grade variation for one learner across a link: grade(target) - grade(source).
using Delta = double;

/// Degree of membership in a fuzzy set, always within [0, 1].
using MembershipValue = double;

/// Breakpoints of the two membership functions, in grade points.
/// Only constructible through validate(), which enforces s1 < 0 < s2 < s3.
class FuzzyThresholds {
 public:
  /// Throws prereq::Error (NonFinite, NonNegativeS1, NonPositiveS2,
  /// S3NotAboveS2) when the ordering does not hold.
  static FuzzyThresholds validate(double s1, double s2, double s3);

  /// Reference configuration: (-5, 5, 10).
  static FuzzyThresholds reference();

  double s1() const noexcept { return s1_; }
  double s2() const noexcept { return s2_; }
  double s3() const noexcept { return s3_; }

  /// Throws ThresholdOutOfScale unless every breakpoint lies within
  /// +/- grade_scale_max.
  void check_scale(double grade_scale_max) const;

  friend bool operator==(const FuzzyThresholds&, const FuzzyThresholds&) = default;

 private:
  FuzzyThresholds(double s1, double s2, double s3) : s1_(s1), s2_(s2), s3_(s3) {}

  double s1_;
  double s2_;
  double s3_;
};

/// Membership in the set of correct prerequisite relationships.
/// Triangle with apex 1 at delta = 0, zero outside (s1, s2).
MembershipValue mu_cpr(Delta delta, const FuzzyThresholds& t) noexcept;

/// Membership in the set of reversed prerequisite relationships.
/// Triangle with apex 1 at delta = s2, zero outside (0, s3).
MembershipValue mu_rpr(Delta delta, const FuzzyThresholds& t) noexcept;

/// Minimum strength for a relationship to count as meaningful.
class AlphaCut {
 public:
  /// Throws NonFinite or AlphaOutOfRange unless 0 <= alpha <= 1.
  static AlphaCut validate(double alpha);

  double alpha() const noexcept { return alpha_; }

  friend bool operator==(const AlphaCut&, const AlphaCut&) = default;
  friend auto operator<=>(const AlphaCut&, const AlphaCut&) = default;

 private:
  explicit AlphaCut(double alpha) : alpha_(alpha) {}

  double alpha_;
};

}  // namespace prereq
