#ifndef FUZZYCAT_FORMATS_HPP
#define FUZZYCAT_FORMATS_HPP

#include <string>
#include <string_view>

#include "fuzzycat/category.hpp"
#include "fuzzycat/constructions.hpp"
#include "fuzzycat/graph.hpp"

namespace fuzzycat {

/// .fcat category files. Line oriented; `#` starts a comment.
///
///   mode strict
///   tnorm min
///   object A
///   arrow f : A -> B @ 0.7
///   identity A = f
///   compose g . f = h
///
/// Identities default to auto-generated `1_<object>` arrows at degree 1 when
/// not declared, and identity compositions are filled in.
FuzzyCategory parse_category_file(std::string_view text);

/// Canonical rendering; parse_category_file(render_category(c)) == c for any
/// well-formed category.
std::string render_category(const FuzzyCategory& c);

/// Graph files: `node <id>` and `arrow <id> : <dom> -> <cod> @ <degree>`.
FuzzyGraph parse_graph_file(std::string_view text);

/// Relation files: header `elements: x y z`, then `rel <x> <y> = <degree>`.
/// Unspecified pairs default to 0, the diagonal to 1.
FuzzyRelation parse_relation_file(std::string_view text);

/// Sostak annotation files: `star min`, `omega <object> = <degree>`,
/// `mu <arrow> = <degree>`.
SostakAnnotation parse_annotation_file(std::string_view text);

} // namespace fuzzycat

#endif
