#pragma once

#include <string>

#include "skeinym/spine.hpp"
#include "skeinym/torus.hpp"

namespace skeinym {

// JSON forms:
//   spine    {"genus": g, "edges": [c0, ...], "vertices": [[e,e,e], ...]}
//   torus    {"empty": <value>, "terms": [{"p":, "q":, "re":, "im":}, ...]}
// where <value> is a number, {"re","im"} or {"re","im","log2_scale"}.
// Parse errors throw std::runtime_error; spine invariant violations throw
// SpineError.

ColoredSpine spine_from_json(const std::string& text);
std::string spine_to_json(const ColoredSpine& s);
ColoredSpine load_spine(const std::string& path);

TorusElement torus_from_json(const std::string& text);
std::string torus_to_json(const TorusElement& x);
TorusElement load_torus_element(const std::string& path);

// Scalar <-> JSON text used by both serializers and the CLI: a plain number
// when the value is real and in double range, {"re","im"} when complex, and
// {"re","im","log2_scale"} (significand parts plus binary exponent) when the
// magnitude leaves double range.
std::string scalar_to_json(const ScaledScalar& v);
ScaledScalar scalar_from_json(const std::string& text);

}  // namespace skeinym
