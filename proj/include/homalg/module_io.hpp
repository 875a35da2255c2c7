#pragma once

#include <string>

#include "homalg/module.hpp"

namespace homalg {

/// Canonical text form of a module document: generators and relations
/// ordered graded-lexicographically, scalars in their field text forms.
std::string serialize(const Presentation& V);
Presentation parse_presentation(const std::string& text);

std::string degree_to_json(const Degree& d);

}  // namespace homalg
