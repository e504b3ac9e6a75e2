#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gnepdeg/degrees.hpp"
#include "gnepdeg/fjsys.hpp"
#include "gnepdeg/polynomial.hpp"

namespace gnepdeg {

// One objective or constraint slot of an instance document.  At least one of
// `declared` / `polynomial` must be present; when both are, the polynomial's
// multi-degree must equal the declared one.  `check_declared` optionally pins
// the gradient multi-degree used by the bound command.
struct SlotSpec {
  std::optional<MultiDegree> declared;         // "multidegree"
  std::optional<IntPolynomial> polynomial;     // "polynomial" (parsed)
  std::optional<MultiDegree> check_declared;   // "check_multidegree"
  std::optional<ConstraintKind> kind;          // "kind", constraints only
};

// Parsed instance document: block dimensions plus one slot per objective and
// constraint.
struct InstanceSpec {
  std::vector<int> dims;
  std::vector<SlotSpec> objectives;                 // one per player
  std::vector<std::vector<SlotSpec>> constraints;   // per player, in order
};

InstanceSpec parse_instance_spec(const std::string& json_text);
InstanceSpec load_instance_spec(const std::string& path);
// Deterministic serialization (sorted keys, two-space indent, LF endings).
std::string write_instance_spec(const InstanceSpec& spec);

// Shape with every slot's multi-degree resolved (declared, or computed from
// the polynomial; both must agree when present).
GnepShape spec_shape(const InstanceSpec& spec);

// Complete polynomial data, when every slot carries one.
std::optional<GnepInstance> spec_instance(const InstanceSpec& spec);

struct ResolvedGradients {
  GradientDegrees grads;
  // True when at least one slot supplied a polynomial or an explicit
  // check_multidegree; a bound computed without any such data would just
  // repeat the generic count.
  bool any_sharpening = false;
};

// Per-slot gradient degrees for the bound: explicit check_multidegree first,
// else computed from the polynomial, else hat of the resolved multi-degree.
ResolvedGradients spec_gradient_degrees(const InstanceSpec& spec);

// Active-tuple syntax "1:{1,2};2:{}": every player exactly once, 1-based
// constraint indices inside braces.
ActiveTuple parse_active_tuple(const std::string& text, std::size_t num_players);
std::string format_active_tuple(const ActiveTuple& tuple);

}  // namespace gnepdeg
