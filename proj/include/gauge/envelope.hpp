#pragma once

#include <string_view>

#include "gauge/bundle.hpp"
#include "gauge/groupoid.hpp"

namespace gauge {

/// Name of the extra object of the enveloping groupoid.
inline constexpr std::string_view kEnvelopeBasepoint = "*";

/// The transitive groupoid on M + {*} whose arrows *->a are the points over a,
/// *->* the group, a->b the fractions [y,x], and a->* the formal inverses.
///
/// Arrow names: "[y,x]" for a->b, "[y,*]" for *->a, "[*,x]" for a->*, and
/// "<g>" for *->*. Requires a valid bundle with no base point or point
/// named "*".
FiniteGroupoid envelope(const PrincipalBundle& b);

}  // namespace gauge
