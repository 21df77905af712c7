#include "prereq/fuzzy.hpp"

#include <cmath>
#include <sstream>

#include "prereq/error.hpp"

namespace prereq {

FuzzyThresholds FuzzyThresholds::validate(double s1, double s2, double s3) {
  if (!std::isfinite(s1) || !std::isfinite(s2) || !std::isfinite(s3)) {
    throw Error(ErrorCode::NonFinite, "thresholds must be finite numbers");
  }
  if (s1 >= 0.0) {
    std::ostringstream os;
    os << "s1 must be strictly negative (got " << s1 << ")";
    throw Error(ErrorCode::NonNegativeS1, os.str());
  }
  if (s2 <= 0.0) {
    std::ostringstream os;
    os << "s2 must be strictly positive (got " << s2 << ")";
    throw Error(ErrorCode::NonPositiveS2, os.str());
  }
  if (s3 <= s2) {
    std::ostringstream os;
    os << "s3 must be greater than s2 (got s2=" << s2 << ", s3=" << s3 << ")";
    throw Error(ErrorCode::S3NotAboveS2, os.str());
  }
  return FuzzyThresholds(s1, s2, s3);
}

FuzzyThresholds FuzzyThresholds::reference() { return FuzzyThresholds(-5.0, 5.0, 10.0); }

void FuzzyThresholds::check_scale(double grade_scale_max) const {
  if (-s1_ > grade_scale_max || s3_ > grade_scale_max) {
    std::ostringstream os;
    os << "thresholds (" << s1_ << ", " << s2_ << ", " << s3_
       << ") exceed the grade scale of " << grade_scale_max << " points";
    throw Error(ErrorCode::ThresholdOutOfScale, os.str());
  }
}

// Segments are closed on the side written first, so a breakpoint is always
// evaluated by the formula of the segment that contains it on the left.
// Adjacent segments agree at every breakpoint.

MembershipValue mu_cpr(Delta delta, const FuzzyThresholds& t) noexcept {
  if (delta < t.s1()) return 0.0;
  if (delta <= 0.0) return 1.0 - delta / t.s1();
  if (delta <= t.s2()) return 1.0 - delta / t.s2();
  return 0.0;
}

MembershipValue mu_rpr(Delta delta, const FuzzyThresholds& t) noexcept {
  if (delta < 0.0) return 0.0;
  if (delta <= t.s2()) return delta / t.s2();
  if (delta <= t.s3()) return (t.s3() - delta) / (t.s3() - t.s2());
  return 0.0;
}

AlphaCut AlphaCut::validate(double alpha) {
  if (!std::isfinite(alpha)) {
    throw Error(ErrorCode::NonFinite, "alpha must be a finite number");
  }
  if (alpha < 0.0 || alpha > 1.0) {
    std::ostringstream os;
    os << "alpha must lie in [0, 1] (got " << alpha << ")";
    throw Error(ErrorCode::AlphaOutOfRange, os.str());
  }
  return AlphaCut(alpha);
}

}  // namespace prereq
