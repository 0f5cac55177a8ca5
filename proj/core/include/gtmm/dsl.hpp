#pragma once

#include <string>

#include "gtmm/group.hpp"

namespace gtmm {

/// Parses the group DSL:
///
///   expr := term (" x " term)*        direct product
///   term := atom ("^" INT)?           INT-fold direct power
///   atom := "cyc(" INT ")" | "sym(" INT ")"
///         | "wr(" expr "," INT ")"    wreath product with Sym_INT on top
///         | "(" expr ")"
///
/// Whitespace is ignored. Group::name() prints the canonical form, and
/// parse_group(g.name()) is structurally equal to g.
Group parse_group(const std::string& text);

}  // namespace gtmm
