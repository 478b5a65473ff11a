#pragma once

#include <string>

#include "alphacalc/builder.hpp"

namespace alphacalc {

/// Parses a surface description. The format is line oriented; '#' starts a
/// comment. Directives:
///
///   base hirzebruch <n>
///   rename <old> <new>
///   curve <label> = <integer combination of existing curves>
///   blowup <label> through <curve>[*<mult>][, <curve>[*<mult>]...]
///   blowup <label>                      (blow up a general point)
///   divisor <label> = <rational combination of final curves>
///   invariant_curves <label> ...
///   report_basis <label> ...
///   assert <free text>
///
/// Construction directives (base/rename/curve/blowup) execute in order;
/// divisor combinations always refer to the finished surface. Errors carry
/// a 1-based line and column.
SurfaceBundle parse_surface_spec(const std::string& text);

/// Canonical serialization; parse_surface_spec(print_surface(b)) == b.
std::string print_surface(const SurfaceBundle& bundle);

}  // namespace alphacalc
