#pragma once
// Deciding f = g: a common holonomic equation plus matching initial values.
#include <optional>
#include <string>
#include <vector>

#include "holo/expr.hpp"
#include "holo/operator_eq.hpp"

namespace holo {

enum class VerdictKind { Proved, Refuted, Inconclusive };
const char* verdict_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::string var;
  bool discrete = false;
  std::optional<LinearOperatorEq> common;  // annihilates both sides
  std::string method;                      // how the common equation was obtained
  Rat point = 0;                           // continuous: expansion point
  long start = 0;                          // discrete: first index compared
  std::vector<std::string> initial;        // compared values, "index: value"
  // Refuted: first disagreeing coefficient (continuous) or index (discrete).
  long witness_index = -1;
  std::string witness_f, witness_g;
  std::string reason;  // Inconclusive
  std::vector<std::string> trace;
};

struct ProveOptions {
  std::optional<bool> discrete;  // default: guessed from how var occurs
  int depth = 30;                // oracle depth for derivation checks
  int max_recursion = -1;        // default: number of free symbols
  int jobs = 1;                  // > 1: derive the two sides concurrently
};

Verdict prove_equal(const Expr& f, const Expr& g, const std::string& var, const ProveOptions& opt = {});

// Replays a Proved verdict from the oracles alone: the common equation annihilates both
// prefixes and the compared initial values agree.
bool recheck(const Verdict& v, const Expr& f, const Expr& g, int depth = 30);

// True if var occurs as a sequence index (factorial argument, exponent, sum bound, ...).
bool looks_discrete(const Expr& e, const std::string& var);

}  // namespace holo
