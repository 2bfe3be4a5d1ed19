#pragma once

#include "probund/json_io.hpp"

namespace probund {

/// Closed enumeration of the verifiable results; unknown names are rejected.
enum class TheoremId {
    abelianisation_coproduct,
    free_module_coproduct,
    tensor_coproduct,
    tor_coproduct,
    induction_coproduct,
    restriction_coproduct,
    duality_involution,
    duality_equivalence,
    colimit_coequaliser,
    discrete_colimit_agreement,
    relative_adjunction,
    four_square,
};

std::string theorem_name(TheoremId id);
TheoremId theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorems();

/// Instance size knobs. Hard safety caps: base <= 6, fibre order <= 64,
/// ring n <= 12, test-object order <= 24.
struct Bounds {
    int max_base = 4;
    int max_fibre_order = 24;
    i64 max_ring_n = 8;
    int max_test_order = 12;
    u64 enumeration_cap = 1u << 16;
};
void validate_bounds(const Bounds& b);
json to_json(const Bounds& b);
Bounds bounds_from_json(const json& j);

/// Deterministically regenerable instance: the payload is a pure function
/// of (theorem, seed, bounds).
struct CheckInstance {
    TheoremId theorem;
    u64 seed = 0;
    Bounds bounds;
    json payload;
};
CheckInstance gen_instance(TheoremId id, u64 seed, const Bounds& bounds);

enum class Verdict { pass, fail, inconclusive };
std::string verdict_name(Verdict v);

struct Report {
    TheoremId theorem;
    u64 seed = 0;
    Verdict verdict = Verdict::inconclusive;
    json witness;       // isomorphism/bijection data on pass, counterexample on fail
    json instance;      // replayable payload
    std::string digest; // of the instance payload
    long long timing_ms = 0;
};
/// Serialized reports normalize timing_ms to 0 so byte-identical outputs
/// stay byte-identical across runs; wall-clock timing goes to the console.
json report_to_json(const Report& r);

Report check(TheoremId id, const CheckInstance& instance);

/// Re-verify a pass report's witness independently of the check that
/// produced it (isomorphism matrices are re-checked as homomorphisms plus
/// bijectivity, bijections are re-counted).
bool verify_witness(const Report& r);

struct SuiteReport {
    std::vector<Report> reports;
    Verdict overall = Verdict::pass;
};
/// Runs `trials` instances per theorem with derived seeds mix64(seed, i).
/// Reports are merged in (theorem, trial) order regardless of scheduling.
SuiteReport run_suite(const std::vector<TheoremId>& theorems, int trials, u64 seed,
                      const Bounds& bounds, int jobs = 1);
json suite_report_to_json(const SuiteReport& s);

/// Greedy fibre-removal shrinking: repeatedly drop base points while the
/// predicate (the failing check) still fails. Used before reporting bundle
/// counterexamples.
GroupBundle minimize_group_bundle(const GroupBundle& B,
                                  const std::function<bool(const GroupBundle&)>& still_fails);
ModuleBundle minimize_module_bundle(const ModuleBundle& B,
                                    const std::function<bool(const ModuleBundle&)>& still_fails);

/// Test-object set for group-valued checks: all abelian groups of order
/// <= min(12, cap) plus S3, D4, Q8 under the cap.
std::vector<FiniteGroup> probe_groups(int max_order);

} // namespace probund
