#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "covsys/ecs.hpp"

namespace covsys {

/// One split: the class `parent` of the coarser system is cut into `prime`
/// classes of modulus parent.modulus() * prime.
struct SplitStep {
    ResidueClass parent;
    i64 prime;

    friend bool operator==(const SplitStep&, const SplitStep&) = default;
};

/// Ordered record of splits, coarse to fine: replaying the steps from the
/// trivial system rebuilds the fine system, staying exact at every prefix.
struct ReductionTrace {
    std::vector<SplitStep> steps;

    friend bool operator==(const ReductionTrace&, const ReductionTrace&) = default;
};

/// Apply a trace starting from the trivial system.
Ecs replay(const ReductionTrace& trace);

/// A mergeable coset inside a host system: the `prime` classes
/// {shift + j*(modulus/prime) (modulus)} are all present and can be
/// consolidated into one class shift(modulus/prime).
struct MergeCandidate {
    i64 modulus;
    i64 prime;
    i64 shift;

    friend bool operator==(const MergeCandidate&, const MergeCandidate&) = default;
};

/// Replace one occurrence of `target` = a(t) by the n classes {a + i*t (t*n)}.
/// Exactness is preserved in both directions.
Ecs split(const Ecs& system, const ResidueClass& target, i64 parts);

/// Inverse of split for prime arity: consolidate the candidate's classes into
/// one class. split(merge(A, c), ...) returns A.
Ecs merge(const Ecs& system, const MergeCandidate& candidate);

/// All mergeable cosets, sorted by (modulus, prime, shift). Empty exactly
/// when the system splits no coarser system.
std::vector<MergeCandidate> merge_candidates(const Ecs& system);

/// True iff `fine` arises from `coarse` by splitting one class into p parts,
/// p prime.
bool is_prime_split(const Ecs& fine, const Ecs& coarse);

/// True iff the system is non-trivial and has no mergeable coset.
/// Throws NotExact when the input is not an exact cover.
bool is_irreducible(const Ecs& system);

/// One reduction step on an exact non-trivial system: picks the numerically
/// smallest division-maximal modulus with at most two distinct prime factors,
/// finds a full prime-order coset among the residues at that modulus, and
/// merges it. The caller guarantees exactness.
/// Returns the coarser system and the split that recovers the input.
std::pair<Ecs, SplitStep> reduce_step(const Ecs& system);

/// Iterate reduce_step down to the trivial system; always succeeds when every
/// modulus has at most two distinct prime factors. The trace is recorded
/// coarse to fine, so replay(trace) rebuilds the input.
ReductionTrace reduce_to_trivial(const Ecs& system);

struct NaturalResult {
    bool natural = false;
    std::optional<ReductionTrace> trace; // witnessing splits when natural
};

/// Decide whether the system can be built from the trivial system by iterated
/// splitting. Uses the direct reduction when every modulus has at most two
/// distinct prime factors; otherwise falls back to a backtracking search over
/// merge candidates with memoization on canonical form.
/// Throws NotExact when the input is not an exact cover.
NaturalResult is_natural(const Ecs& system);

/// Result of the three-prime divisibility check: whether some moduli triple
/// (n1, n2, n3) satisfies p1|n1n2, p2|n1n3, p3|n2n3 with p1∤n3, p2∤n2, p3∤n1,
/// and whether some modulus is divisible by p1*p2*p3. For exact systems whose
/// lcm has exactly these three prime factors, the first forces the second.
struct ThreePrimeReport {
    bool hypothesis_met = false;
    std::optional<std::array<i64, 3>> witness; // first (n1, n2, n3) found
    bool has_triple_modulus = false;
    bool implication_holds = true; // !hypothesis_met || has_triple_modulus
};

/// Requires distinct primes and an exact system whose lcm has exactly the
/// prime factors {p1, p2, p3}; throws WrongPrimeSupport otherwise.
ThreePrimeReport three_prime_report(const Ecs& system, i64 p1, i64 p2, i64 p3);

/// splitmix64: stable across platforms and releases; all library randomness
/// funnels through this generator.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t bound); // uniform in [0, bound), unbiased

private:
    std::uint64_t state_;
};

struct GeneratedEcs {
    Ecs system;
    ReductionTrace trace;
};

/// Build a natural system by `steps` random prime splits starting from the
/// trivial system: each step picks a class and a pool prime uniformly among
/// the choices that keep the lcm within `lcm_cap` (when given), and splits.
/// Deterministic for a fixed seed. Stops early only when the cap blocks
/// every possible split.
GeneratedEcs generate_natural(std::uint64_t seed, i64 steps, const std::vector<i64>& prime_pool,
                              std::optional<i64> lcm_cap = std::nullopt);

inline constexpr i64 kDefaultEnumerationLimit = 60;
inline constexpr i64 kEnumerationCeiling = 127; // bitmask-based search bound

/// Visit every exact system whose moduli all divide `period`, each exactly
/// once, by exhaustive partition of the residues of one period into
/// progression cosets. Deterministic order.
void for_each_ecs(i64 period, const std::function<void(const Ecs&)>& visit,
                  i64 limit = kDefaultEnumerationLimit);

/// Same walk, but the visitor returns false to stop early.
/// Returns true when the whole corpus was visited.
bool for_each_ecs_while(i64 period, const std::function<bool(const Ecs&)>& visit,
                        i64 limit = kDefaultEnumerationLimit);

/// Collect the systems visited by for_each_ecs, sorted in canonical order.
std::vector<Ecs> enumerate_ecs(i64 period, i64 limit = kDefaultEnumerationLimit);

} // namespace covsys
