#pragma once

#include "wittlab/annihilator.hpp"

namespace wittlab {

/// Monomial families spanning the cross-section candidates.
enum class JPattern { c_pattern, b_pattern, il_pattern, sl2_pattern };

bool pattern_matches(JPattern p, const PBWMono& m);

/// Configuration of one cross-section verification at fixed cutoffs.
struct MachineConfig {
  std::string label;
  std::vector<int> degrees;        // ascending generation degrees d_1 < ... < d_r
  std::vector<SubalgebraId> J;     // parallel to degrees; descending containment
  JPattern pattern = JPattern::c_pattern;

  enum class IKind { closure_gens, ann_of_module, explicit_span };
  IKind i_kind = IKind::closure_gens;
  std::vector<UEAElt> i_gens;      // closure_gens / explicit_span

  ModuleSpec module = ModuleSpec::poly(Rat(0));
  int max_degree = 3;
  int max_weight = 8;
  SubalgebraId ambient = SubalgebraId::full;
};

struct MachineResult {
  bool pass = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
};

/// Verifies, slice by slice within the cutoffs:
///   (a) the module action is injective on the pattern span;
///   (b) every monomial of degree < d_1 matches the pattern;
///   (c) top symbols of the degree-k pattern monomials exhaust
///       S^{k-d_1+1}(J_s) S^{d_1-1}(g);
///   (d) top symbols of the I-slices complement them in S^{d_s}(g),
///       with injectivity of the J-coset symbol map at the first stage;
///   (e) for later stages, I cap U_{d_s - 1} = I cap U_{d_{s-1}};
/// plus I subseteq Ann, Ann cap U_{d_1 - 1} = 0, and the cross-section
/// direct sum Ann + span(pattern) = U at every weight.
MachineResult machine_check(const MachineConfig& cfg);

}  // namespace wittlab
