#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gauge {

/// One failed axiom instance. Validators return these as data.
struct Violation {
  std::string axiom;
  std::string witness;

  friend bool operator==(const Violation&, const Violation&) = default;
};

using Report = std::vector<Violation>;

/// Outcome of a universally quantified property check; on failure the first
/// counterexample found in canonical order.
struct PropertyCheck {
  bool holds = true;
  std::string counterexample;

  explicit operator bool() const { return holds; }

  static PropertyCheck ok() { return {}; }
  static PropertyCheck fail(std::string witness) { return {false, std::move(witness)}; }
};

inline bool has_axiom(const Report& report, const std::string& axiom) {
  for (const auto& v : report) {
    if (v.axiom == axiom) return true;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const Violation& v);

}  // namespace gauge
