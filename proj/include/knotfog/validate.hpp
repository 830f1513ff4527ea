#pragma once

#include <string>
#include <vector>

#include "knotfog/knot_expr.hpp"

namespace knotfog {

/// One warning per exactness guard that cannot be established anywhere in
/// the tree: a Whitehead double whose companion is not known to be
/// nontrivial and noncable, or a K(J,L,m,n) whose companions are not known
/// to lie in class R. Warnings never block evaluation; they explain why a
/// closed form was not applied.
std::vector<std::string> validate(const KnotExpr& e);

} // namespace knotfog
