#pragma once

#include <string>
#include <string_view>

#include "prereq/course.hpp"
#include "prereq/miner.hpp"

namespace prereq {

/// Identifier written into every model document.
inline constexpr std::string_view kModelSchemaId = "prereq-final-model/1";

/// Stable JSON document for a final model. Keys appear in a fixed order:
/// schema, course_id, concepts, parameters, summary, links, final_links,
/// levels, diagnostics. Output ends with a newline.
std::string export_model_json(const FinalDomainModel& model);

/// Strict inverse of export_model_json. Derived sections (summary, levels)
/// must agree with the link records. Throws MalformedDocument or the
/// threshold/alpha validation errors.
FinalDomainModel parse_model_json(std::string_view document);

struct DotOptions {
  bool show_dropped = false;  // emit dropped links as dashed ghosts
};

/// Graphviz digraph of the final model. Nodes carry concept names as
/// labels; edges are emitted in lexicographic (source, target) order.
/// Styles: kept solid black, insufficient_data dotted black, reversed bold
/// red (drawn in the flipped direction), dropped dashed gray.
std::string export_dot(const FinalDomainModel& model, const Course& course, const DotOptions& options = {});

}  // namespace prereq
