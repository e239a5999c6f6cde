#pragma once

#include <optional>
#include <string>

#include "jacbound/interval.hpp"

namespace jacbound {

/// Fixed-point rendering with `places` digits after the point, round half
/// to even. Exact integer arithmetic throughout.
std::string rat_to_fixed(const Rat& x, int places);

/// Rendering with `sig` significant digits; positional notation when the
/// exponent is moderate, otherwise "m.mmme+k" style.
std::string rat_to_sig(const Rat& x, int sig);

/// The common rendering of both interval endpoints, when they agree — the
/// printed digits are then correct for every value in the interval.
std::optional<std::string> decimal_from_interval(const Interval& iv, int sig);

/// Fixed-point analogue of decimal_from_interval.
std::optional<std::string> fixed_from_interval(const Interval& iv, int places);

} // namespace jacbound
