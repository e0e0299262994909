#pragma once

#include <optional>
#include <string>
#include <vector>

#include "altalg/commuting.hpp"
#include "altalg/peirce.hpp"
#include "altalg/report.hpp"

namespace altalg {

enum class LemmaStatus { pass, fail, not_applicable };

std::string to_string(LemmaStatus s);

struct LemmaReport {
  std::string id;  // "L1" ... "L9"
  LemmaStatus status = LemmaStatus::pass;
  std::optional<Witness> witness;
  std::string notes;
  /// Number of basis-level equations evaluated.
  std::size_t instances = 0;
};

inline constexpr int kLemmaCount = 9;

/// Reason the suite cannot run on (pd, phi), or nullopt when the algebra is
/// alternative, the hypothesis holds for e1 and e2, and phi is commuting.
std::optional<std::string> lemma_gate(const PeirceData& pd, const LinearMap& phi);

/// Evaluates one lemma (id in 1..9) on basis instances. Every universally
/// quantified statement is checked on component basis vectors (polarized
/// where the statement is quadratic); existential statements are solved as
/// linear feasibility problems over center-basis coefficients.
LemmaReport run_lemma(int id, const PeirceData& pd, const LinearMap& phi);

/// Same evaluation without lemma_gate, for probing what breaks when a
/// precondition is dropped. L1 throws UsageError when the hypothesis fails.
LemmaReport run_lemma_ungated(int id, const PeirceData& pd, const LinearMap& phi);

/// L1 ... L9 in order, all evaluated.
std::vector<LemmaReport> run_all(const PeirceData& pd, const LinearMap& phi);

}  // namespace altalg
