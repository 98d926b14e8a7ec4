#pragma once

#include <climits>
#include <cstdint>
#include <optional>

#include "dcat/sset.hpp"

namespace dcat {

constexpr long long kDefaultBudget = 10'000'000;

/// Search node budget. A run that exhausts it reports BudgetExceeded, which
/// is never conflated with a proven negative answer.
struct Budget {
  long long limit = kDefaultBudget;
  long long used = 0;
  bool tick() { return ++used <= limit; }
};

enum class SearchStatus { Complete, BudgetExceeded };

struct MapList {
  SearchStatus status = SearchStatus::Complete;
  std::vector<SMap> maps;  // canonical order
  bool complete() const { return status == SearchStatus::Complete; }
};

/// Three-valued answer for semi-decidable questions.
enum class Answer { Yes, No, Inconclusive };

inline Answer answer_of(bool b) { return b ? Answer::Yes : Answer::No; }

/// A map extension problem: extend a partial assignment on some of B's
/// nondegenerate simplices to a full simplicial map B -> X, optionally over a
/// base (p . h = q).
struct ExtensionProblem {
  SSetPtr big;
  SSetPtr target;
  std::vector<std::pair<SimplexId, SimplexRef>> pinned;  // in B / in X
  const SMap* fiber_p = nullptr;                         // X -> D
  const SMap* fiber_q = nullptr;                         // B -> D

  static ExtensionProblem extend(const Inclusion& a_in_b, const SMap& partial);
};

/// All solutions (or the first) in canonical order.
MapList solve(const ExtensionProblem& p, bool first_only, Budget& budget);

/// All simplicial maps K -> X.
MapList enumerate_maps(const SSetPtr& k, const SSetPtr& x, Budget& budget);

/// Dense encoding of an SMap for canonical ordering and hashing: interned
/// target ref indices over the source's nondegenerate simplices in canonical
/// order.
struct Encoded {
  std::vector<std::int32_t> vals;
  friend auto operator<=>(const Encoded&, const Encoded&) = default;
};
Encoded encode(const SMap& m);
SMap decode(const SSetPtr& src, const SSetPtr& dst, const Encoded& e);

/// Lifting problem data: a commuting square (top, bottom) against incl:
/// U -> V, asking for a diagonal V -> C over p.
struct LiftingSquare {
  const SMap* p;       // C -> D
  const SMap* top;     // U -> C
  const SMap* bottom;  // V -> D
  const Inclusion* incl;
};
Answer has_rlp(const LiftingSquare& sq, Budget& budget);

struct HornCounterexample {
  Dim n = 0;
  int i = 0;
  SMap horn_map;
};

/// Quasi-category certificate: X's inner horns fill through qc_bound, and the
/// nondegenerate presentation of X is complete through complete_through (a
/// capped nerve is only trustworthy up to its cap).
struct Quasicat {
  SSetPtr sset;
  Dim qc_bound = 0;
  Dim complete_through = INT_MAX;
  std::string method;  // "exhaustive" or "nerve"
};

/// Exhaustive inner-horn check in dimensions 2..m.
Answer is_quasicategory_up_to(const SSetPtr& x, Dim m, Budget& budget,
                              HornCounterexample* cx = nullptr);
/// All horns, including outer ones.
Answer is_kan_up_to(const SSetPtr& x, Dim m, Budget& budget, HornCounterexample* cx = nullptr);

/// Certificate constructors. `certify` runs the exhaustive check and throws
/// CertificationError when it fails or stalls; `nerve_certificate` records
/// that X was built as the nerve of a validated category (inner fillers exist
/// in every dimension by construction).
Quasicat certify(const SSetPtr& x, Dim m, Budget& budget);
Quasicat nerve_certificate(const SSetPtr& x, Dim complete_through);

/// Inner fibration check for p against all inner horns in dimensions 2..m.
Answer is_inner_fibration_up_to(const SMap& p, Dim m, Budget& budget,
                                HornCounterexample* cx = nullptr);

/// Initial-horn criterion for a p-coCartesian edge, 2 <= n <= m.
Answer is_cocartesian_edge(const SMap& p, const SimplexRef& e, Dim m, Budget& budget);

/// Vertex partition generated by the edges.
std::vector<std::vector<int>> pi0(const SSetPtr& x);

}  // namespace dcat
