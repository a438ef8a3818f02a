#pragma once

#include "su3coh/classify.hpp"

#include <string>

namespace su3coh {

// Text grammar for tubes and slices:
//   tube:  S | L | P(m) | F(p,q) | Squot(h) | Lquot3
//   slice: SU2 | SO3 | U2 m | T2 p q   (parenthesized forms also accepted)
// Whitespace is ignored inside parentheses. Parse errors name the offending
// token.

TubeDescriptor parse_tube(const std::string& text);
SliceRep parse_slice(const std::string& text);

std::string to_text(const TubeDescriptor& t);  // matches the grammar above
std::string to_text(const SliceRep& s);

std::string circle_summary(const CircleSubgroup& c);  // "(k,l) triple (...) Class"

} // namespace su3coh
