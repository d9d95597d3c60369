#pragma once

#include <string>
#include <vector>

#include "localelab/classify.hpp"
#include "localelab/space.hpp"
#include "localelab/theorems.hpp"

namespace localelab {

// Frame document: {"elements": ["0","a","1"], "leq": [[0,1],[1,2]]}.
// The listed pairs may be any generating relation; their reflexive-transitive
// closure is validated as a partial order.
FramePtr parse_frame_text(const std::string& text, const std::string& origin = "<input>");
FramePtr parse_frame_file(const std::string& path);

// Space document: {"points": 2, "opens": [[], [0], [0,1]]}.
FiniteSpace parse_space_text(const std::string& text, const std::string& origin = "<input>");
FiniteSpace parse_space_file(const std::string& path);

std::string frame_to_json(const FiniteFrame& f);

std::vector<Elem> sorted_members(const Sublocale& s);

// Report schema:
// {id, anchor, instances, hypothesisSatisfied, failures:[{instance,witness}], elapsedMs}
std::string report_to_json(const CheckReport& r);
std::string reports_to_json(const std::vector<CheckReport>& rs);
CheckReport report_from_json(const std::string& text);
std::vector<CheckReport> reports_from_json(const std::string& text);
std::string report_to_text(const CheckReport& r);

std::string classification_to_json(const Classification& c, const Universe& u,
                                   const Sublocale& subject);
std::string classification_to_text(const Classification& c, const Universe& u,
                                   const Sublocale& subject);

}  // namespace localelab
