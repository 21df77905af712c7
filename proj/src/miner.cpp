#include "prereq/miner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace prereq {

std::string_view to_string(Verdict verdict) noexcept {
  switch (verdict) {
    case Verdict::Kept: return "kept";
    case Verdict::Reversed: return "reversed";
    case Verdict::Dropped: return "dropped";
    case Verdict::InsufficientData: return "insufficient_data";
  }
  return "dropped";
}

Verdict parse_verdict(std::string_view name) {
  for (auto v : {Verdict::Kept, Verdict::Reversed, Verdict::Dropped, Verdict::InsufficientData}) {
    if (to_string(v) == name) return v;
  }
  throw Error(ErrorCode::MalformedDocument, "unknown verdict '" + std::string(name) + "'");
}

std::size_t FinalDomainModel::count(Verdict v) const noexcept {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [v](const LinkVerdict& lv) { return lv.verdict == v; }));
}

std::vector<Delta> link_deltas(const GradeMatrix& matrix, const PrerequisiteLink& link, const Course& course) {
  const auto source = course.index_of(link.source);
  const auto target = course.index_of(link.target);
  if (!source || !target) {
    throw Error(ErrorCode::UnknownLinkEndpoint, "link " + to_string(link) + " names an unknown concept");
  }
  std::vector<Delta> deltas;
  deltas.reserve(matrix.learner_count());
  for (std::size_t l = 0; l < matrix.learner_count(); ++l) {
    const auto& from = matrix.at(l, *source);
    const auto& to = matrix.at(l, *target);
    if (from && to) deltas.push_back(*to - *from);
  }
  return deltas;
}

LinkStrength link_strength(std::span<const Delta> deltas, const FuzzyThresholds& t) {
  LinkStrength s;
  s.support_count = deltas.size();
  if (deltas.empty()) return s;
  double cpr_sum = 0.0;
  double rpr_sum = 0.0;
  for (Delta d : deltas) {
    cpr_sum += mu_cpr(d, t);
    rpr_sum += mu_rpr(d, t);
  }
  const auto n = static_cast<double>(deltas.size());
  s.cpr = cpr_sum / n;
  s.rpr = rpr_sum / n;
  return s;
}

Verdict classify(const LinkStrength& strength, const AlphaCut& cut) noexcept {
  const double alpha = cut.alpha();
  if (strength.support_count == 0) return Verdict::InsufficientData;
  if (strength.cpr >= alpha && strength.cpr >= strength.rpr) return Verdict::Kept;
  if (strength.rpr >= alpha && strength.rpr > strength.cpr) return Verdict::Reversed;
  return Verdict::Dropped;
}

namespace {

void check_alignment(const Course& course, const GradeMatrix& matrix) {
  if (matrix.course_id() != course.id) {
    throw Error(ErrorCode::CourseMatrixMismatch,
                "grades belong to course '" + matrix.course_id() + "', not '" + course.id + "'");
  }
  if (matrix.concept_count() != course.concepts.size()) {
    throw Error(ErrorCode::CourseMatrixMismatch,
                "grade matrix has " + std::to_string(matrix.concept_count()) + " concept columns, course has " +
                    std::to_string(course.concepts.size()));
  }
}

std::vector<LinkStrength> all_strengths(const Course& course, const GradeMatrix& matrix, const FuzzyThresholds& t) {
  std::vector<LinkStrength> strengths;
  strengths.reserve(course.initial_links.size());
  for (const auto& link : course.initial_links) {
    strengths.push_back(link_strength(link_deltas(matrix, link, course), t));
  }
  return strengths;
}

FinalDomainModel assemble(const Course& course, const std::vector<LinkStrength>& strengths,
                          const FuzzyThresholds& t, const AlphaCut& cut) {
  FinalDomainModel model;
  model.course_id = course.id;
  model.concepts = course.concepts;
  model.thresholds = t;
  model.cut = cut;

  for (std::size_t i = 0; i < course.initial_links.size(); ++i) {
    const auto& link = course.initial_links[i];
    const auto& s = strengths[i];
    model.verdicts.push_back({link, s, classify(s, cut)});
    if (s.support_count == 0) {
      model.diagnostics.push_back("link " + to_string(link) +
                                  ": no learner has both grades; original link kept as insufficient_data");
    } else if (s.support_count < kLowSupportWarning) {
      model.diagnostics.push_back("link " + to_string(link) + ": only " + std::to_string(s.support_count) +
                                  " learners support this link");
    }
  }

  // Edge in the final graph -> index of the originating verdict.
  auto build_graph = [&](std::map<PrerequisiteLink, std::size_t>& origin) {
    ConceptGraph g;
    for (const auto& c : model.concepts) g.nodes.push_back(c.id);
    origin.clear();
    for (std::size_t i = 0; i < model.verdicts.size(); ++i) {
      const auto& v = model.verdicts[i];
      switch (v.verdict) {
        case Verdict::Kept:
        case Verdict::InsufficientData:
          origin[v.link] = i;
          break;
        case Verdict::Reversed:
          origin[v.link.flipped()] = i;
          break;
        case Verdict::Dropped:
          break;
      }
    }
    for (const auto& [edge, _] : origin) g.edges.push_back(edge);
    return g;
  };

  // Kept and InsufficientData edges are a subset of the acyclic initial
  // model, so every cycle contains at least one reversed edge and each pass
  // strictly shrinks the set of reversals.
  std::map<PrerequisiteLink, std::size_t> origin;
  while (true) {
    ConceptGraph g = build_graph(origin);
    auto cycle = find_cycle(g);
    if (!cycle) {
      model.final_links = std::move(g.edges);
      break;
    }
    std::optional<std::size_t> revoke;
    for (std::size_t k = 0; k + 1 < cycle->size(); ++k) {
      const PrerequisiteLink edge{(*cycle)[k], (*cycle)[k + 1]};
      const std::size_t i = origin.at(edge);
      if (model.verdicts[i].verdict != Verdict::Reversed) continue;
      if (!revoke || model.verdicts[i].link < model.verdicts[*revoke].link) revoke = i;
    }
    if (!revoke) {
      throw Error(ErrorCode::Internal, "cycle without a reversed edge: " + format_cycle(*cycle));
    }
    auto& demoted = model.verdicts[*revoke];
    demoted.verdict = Verdict::Dropped;
    model.diagnostics.push_back("link " + to_string(demoted.link) + ": reversal revoked because " +
                                to_string(demoted.link.flipped()) + " would close the cycle " +
                                format_cycle(*cycle) + "; link dropped");
  }
  return model;
}

}  // namespace

FinalDomainModel refine_model(const Course& course, const GradeMatrix& matrix, const FuzzyThresholds& t,
                              const AlphaCut& cut) {
  check_alignment(course, matrix);
  t.check_scale(course.grade_scale_max);
  return assemble(course, all_strengths(course, matrix, t), t, cut);
}

std::vector<FinalDomainModel> sweep_alpha(const Course& course, const GradeMatrix& matrix,
                                          const FuzzyThresholds& t, std::span<const AlphaCut> alphas) {
  if (alphas.empty()) throw Error(ErrorCode::EmptyAlphaList, "at least one alpha is required");
  if (!std::is_sorted(alphas.begin(), alphas.end())) {
    throw Error(ErrorCode::AlphasNotAscending, "alphas must be given in ascending order");
  }
  check_alignment(course, matrix);
  t.check_scale(course.grade_scale_max);
  const auto strengths = all_strengths(course, matrix, t);
  std::vector<FinalDomainModel> models;
  models.reserve(alphas.size());
  for (const auto& cut : alphas) models.push_back(assemble(course, strengths, t, cut));
  return models;
}

}  // namespace prereq
