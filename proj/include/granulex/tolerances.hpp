#pragma once

namespace granulex::tol {

// Uniform numeric policy for the whole project. Strict inequalities are
// verified with a safety margin; exact identities with a tighter tolerance.
inline constexpr double strict_margin = 1e-9;    // gap required by strict claims
inline constexpr double equality = 1e-9;         // co-entropy equality checks
inline constexpr double identity = 1e-12;        // algebraic identities
// A sweep whose smallest observed strict gap falls below this multiple of the
// margin is reported as a policy violation rather than silently passing.
inline constexpr double margin_headroom = 10.0;

}  // namespace granulex::tol
