#pragma once

#include "skeincore/skein.hpp"

#include <string>

namespace skeincore {

// Manifold document, e.g.
//   {n:2, generators:1, markings:1, relators:["g1*g1"], circles:[{w:"g1", h:0}]}
// Keys may appear in any order; relators and circles default to empty.
// Errors carry 1-based line/column positions.
MarkedManifoldSpec parse_manifold(const std::string& text);

// Web expression: whitespace- or comma-separated components.
//   arc(e<src>->e<dst>; w=<word>; s=(<i>,<j>); h=<0|1>)
//   knot(w=<word>; h=<0|1>)
//   sink((w=<word> -> e<idx>:<state>), ..., (w=<word> -> v<id>))
//   source(...)
// "v<id>" refers to the id-th vertex component of the expression, counting
// from 0 in order of appearance; paired cross-references match by order.
// h clauses are optional and default to 0; empty words are written "w=" or
// "w=e".
Web parse_web(const std::string& text);

// Round-trip serialization of a web in the grammar above.
std::string web_str(const Web& web);
std::string manifold_str(const MarkedManifoldSpec& spec);

} // namespace skeincore
