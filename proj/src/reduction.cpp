#include "covsys/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "covsys/cyclotomic.hpp"
#include "covsys/error.hpp"

namespace covsys {

namespace {

i64 checked_mul(i64 a, i64 b) {
    __int128 v = static_cast<__int128>(a) * b;
    if (v > INT64_MAX)
        throw Error(ErrorCode::Overflow, "modulus product exceeds 64 bits");
    return static_cast<i64>(v);
}

// lcm(a, b), saturating at INT64_MAX instead of overflowing.
i64 saturating_lcm(i64 a, i64 b) {
    i64 g = std::gcd(a, b);
    __int128 v = static_cast<__int128>(a / g) * b;
    return v > INT64_MAX ? INT64_MAX : static_cast<i64>(v);
}

void require_exact(const Ecs& system) {
    if (!verify_crt(system))
        throw Error(ErrorCode::NotExact, "system is not an exact cover");
}

std::string canonical_key(const Ecs& system) {
    std::string key;
    for (const auto& c : system.classes()) {
        key += std::to_string(c.residue());
        key += ',';
        key += std::to_string(c.modulus());
        key += ';';
    }
    return key;
}

} // namespace

Ecs replay(const ReductionTrace& trace) {
    Ecs current = Ecs::trivial();
    for (const auto& step : trace.steps) current = split(current, step.parent, step.prime);
    return current;
}

Ecs split(const Ecs& system, const ResidueClass& target, i64 parts) {
    if (parts < 2)
        throw Error(ErrorCode::InvalidArgument, "split needs at least two parts");
    if (!system.contains(target))
        throw Error(ErrorCode::TargetNotPresent, "class to split is not in the system");
    i64 fine_modulus = checked_mul(target.modulus(), parts);

    std::vector<ResidueClass> classes = system.classes();
    classes.erase(std::find(classes.begin(), classes.end(), target));
    for (i64 i = 0; i < parts; i++)
        classes.emplace_back(target.residue() + i * target.modulus(), fine_modulus);
    return Ecs(std::move(classes));
}

Ecs merge(const Ecs& system, const MergeCandidate& candidate) {
    if (candidate.modulus < 2 || !is_prime(candidate.prime) ||
        candidate.modulus % candidate.prime != 0)
        throw Error(ErrorCode::InvalidArgument, "merge prime must divide the modulus");
    i64 coarse_modulus = candidate.modulus / candidate.prime;
    if (candidate.shift < 0 || candidate.shift >= coarse_modulus)
        throw Error(ErrorCode::InvalidArgument, "merge shift out of range");

    std::vector<ResidueClass> classes = system.classes();
    for (i64 j = 0; j < candidate.prime; j++) {
        ResidueClass member(candidate.shift + j * coarse_modulus, candidate.modulus);
        auto it = std::find(classes.begin(), classes.end(), member);
        if (it == classes.end())
            throw Error(ErrorCode::CosetNotPresent, "coset class missing from the system");
        classes.erase(it);
    }
    classes.emplace_back(candidate.shift, coarse_modulus);
    return Ecs(std::move(classes));
}

std::vector<MergeCandidate> merge_candidates(const Ecs& system) {
    std::vector<MergeCandidate> out;
    for (i64 n : system.distinct_moduli()) {
        if (n < 2) continue;
        for (const auto& [p, exp] : factorize(n).factors) {
            i64 step = n / p;
            for (i64 d = 0; d < step; d++) {
                bool full = true;
                for (i64 j = 0; j < p && full; j++)
                    full = system.contains(ResidueClass(d + j * step, n));
                if (full) out.push_back(MergeCandidate{n, p, d});
            }
        }
    }
    return out; // loop order is already (modulus, prime, shift) ascending
}

bool is_prime_split(const Ecs& fine, const Ecs& coarse) {
    for (const auto& candidate : merge_candidates(fine)) {
        if (fine.size() == coarse.size() + static_cast<std::size_t>(candidate.prime) - 1 &&
            merge(fine, candidate) == coarse)
            return true;
    }
    return false;
}

bool is_irreducible(const Ecs& system) {
    require_exact(system);
    if (system.is_trivial()) return false;
    return merge_candidates(system).empty();
}

std::pair<Ecs, SplitStep> reduce_step(const Ecs& system) {
    if (system.is_trivial())
        throw Error(ErrorCode::AlreadyTrivial, "trivial system has no coarser system");

    const auto moduli = system.distinct_moduli();
    i64 target_modulus = 0;
    for (i64 m : moduli) {
        bool maximal = true;
        for (i64 other : moduli)
            if (other != m && other % m == 0) {
                maximal = false;
                break;
            }
        if (maximal && count_distinct_prime_factors(m) <= 2) {
            target_modulus = m; // moduli ascending: first hit is the smallest
            break;
        }
    }
    if (target_modulus == 0)
        throw Error(ErrorCode::NoEligibleMaximalModulus,
                    "every division-maximal modulus has three or more distinct prime factors");

    std::vector<i64> residues;
    for (const auto& c : system.classes())
        if (c.modulus() == target_modulus) residues.push_back(c.residue());

    // The residues at a maximal modulus of an exact system form a vanishing
    // sum, so a full prime-order coset sits inside them.
    CosetTerm coset = find_coset(from_exponents(target_modulus, residues));
    Ecs coarse = merge(system, MergeCandidate{target_modulus, coset.prime, coset.shift});
    SplitStep step{ResidueClass(coset.shift, target_modulus / coset.prime), coset.prime};
    return {std::move(coarse), step};
}

ReductionTrace reduce_to_trivial(const Ecs& system) {
    std::vector<SplitStep> steps;
    Ecs current = system;
    while (!current.is_trivial()) {
        auto [coarser, step] = reduce_step(current);
        steps.push_back(step);
        current = std::move(coarser);
    }
    std::reverse(steps.begin(), steps.end()); // recorded fine-to-coarse above
    return ReductionTrace{std::move(steps)};
}

namespace {

// Backtracking search for a merge chain down to the trivial system.
// `dead` memoizes canonical forms that cannot reach it.
std::optional<std::vector<SplitStep>> natural_search(const Ecs& system,
                                                     std::unordered_set<std::string>& dead) {
    if (system.is_trivial()) return std::vector<SplitStep>{};
    std::string key = canonical_key(system);
    if (dead.contains(key)) return std::nullopt;
    for (const auto& candidate : merge_candidates(system)) {
        Ecs coarser = merge(system, candidate);
        if (auto steps = natural_search(coarser, dead)) {
            steps->push_back(SplitStep{
                ResidueClass(candidate.shift, candidate.modulus / candidate.prime),
                candidate.prime});
            return steps;
        }
    }
    dead.insert(std::move(key));
    return std::nullopt;
}

} // namespace

NaturalResult is_natural(const Ecs& system) {
    require_exact(system);
    const auto moduli = system.distinct_moduli();
    bool two_prime = std::all_of(moduli.begin(), moduli.end(), [](i64 m) {
        return count_distinct_prime_factors(m) <= 2;
    });
    if (two_prime) return NaturalResult{true, reduce_to_trivial(system)};

    std::unordered_set<std::string> dead;
    if (auto steps = natural_search(system, dead))
        return NaturalResult{true, ReductionTrace{std::move(*steps)}};
    return NaturalResult{false, std::nullopt};
}

ThreePrimeReport three_prime_report(const Ecs& system, i64 p1, i64 p2, i64 p3) {
    if (!is_prime(p1) || !is_prime(p2) || !is_prime(p3) || p1 == p2 || p1 == p3 || p2 == p3)
        throw Error(ErrorCode::InvalidArgument, "need three distinct primes");
    require_exact(system);

    const auto moduli = system.distinct_moduli();
    // The lcm's prime support is the union of the moduli's supports.
    std::unordered_set<i64> support;
    for (i64 m : moduli)
        for (const auto& [p, exp] : factorize(m).factors) support.insert(p);
    if (support.size() != 3 || !support.contains(p1) || !support.contains(p2) ||
        !support.contains(p3))
        throw Error(ErrorCode::WrongPrimeSupport,
                    "lcm of the moduli must have exactly the given three prime factors");

    ThreePrimeReport report;
    // a prime divides a product iff it divides one of the factors
    auto divides_either = [](i64 p, i64 a, i64 b) { return a % p == 0 || b % p == 0; };
    for (i64 n1 : moduli) {
        for (i64 n2 : moduli) {
            for (i64 n3 : moduli) {
                if (divides_either(p1, n1, n2) && divides_either(p2, n1, n3) &&
                    divides_either(p3, n2, n3) && n3 % p1 != 0 && n2 % p2 != 0 &&
                    n1 % p3 != 0) {
                    report.hypothesis_met = true;
                    report.witness = {n1, n2, n3};
                    break;
                }
            }
            if (report.hypothesis_met) break;
        }
        if (report.hypothesis_met) break;
    }
    __int128 product = static_cast<__int128>(p1) * p2 * p3;
    report.has_triple_modulus =
        product <= INT64_MAX &&
        std::any_of(moduli.begin(), moduli.end(),
                    [&](i64 m) { return m % static_cast<i64>(product) == 0; });
    report.implication_holds = !report.hypothesis_met || report.has_triple_modulus;
    return report;
}

std::uint64_t SplitMix64::next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0)
        throw Error(ErrorCode::InvalidArgument, "empty range");
    std::uint64_t threshold = (0 - bound) % bound; // rejection keeps the draw unbiased
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % bound;
    }
}

GeneratedEcs generate_natural(std::uint64_t seed, i64 steps, const std::vector<i64>& prime_pool,
                              std::optional<i64> lcm_cap) {
    if (steps < 0)
        throw Error(ErrorCode::InvalidArgument, "step count must be non-negative");
    if (prime_pool.empty())
        throw Error(ErrorCode::InvalidArgument, "prime pool must be non-empty");
    for (i64 p : prime_pool)
        if (!is_prime(p))
            throw Error(ErrorCode::InvalidArgument,
                        std::to_string(p) + " in the prime pool is not prime");
    if (lcm_cap && *lcm_cap < 1)
        throw Error(ErrorCode::InvalidArgument, "lcm cap must be positive");

    SplitMix64 rng(seed);
    Ecs current = Ecs::trivial();
    i64 current_lcm = 1;
    std::vector<SplitStep> trace;
    for (i64 s = 0; s < steps; s++) {
        // Uniform over the (class, prime) pairs that keep the lcm in bounds.
        std::vector<std::pair<std::size_t, i64>> feasible;
        for (std::size_t i = 0; i < current.size(); i++) {
            for (i64 p : prime_pool) {
                if (lcm_cap) {
                    i64 fine = checked_mul(current.classes()[i].modulus(), p);
                    if (saturating_lcm(current_lcm, fine) > *lcm_cap) continue;
                }
                feasible.emplace_back(i, p);
            }
        }
        if (feasible.empty()) break; // the cap blocks every split
        auto [index, prime] = feasible[rng.below(feasible.size())];
        ResidueClass target = current.classes()[index];
        current = split(current, target, prime);
        if (lcm_cap) current_lcm = saturating_lcm(current_lcm, checked_mul(target.modulus(), prime));
        trace.push_back(SplitStep{target, prime});
    }
    return GeneratedEcs{std::move(current), ReductionTrace{std::move(trace)}};
}

namespace {

using Mask = unsigned __int128;

struct EnumerationContext {
    i64 period = 1;
    // blocks_at[r]: for each block whose least element is r, the pair of
    // (modulus, bitmask over one period), in ascending modulus order.
    std::vector<std::vector<std::pair<i64, Mask>>> blocks_at;
    const std::function<bool(const Ecs&)>* visit = nullptr;
    std::vector<ResidueClass> stack;
};

bool enumerate_rec(EnumerationContext& ctx, Mask covered, Mask full) {
    if (covered == full) return (*ctx.visit)(Ecs(ctx.stack));
    int r = 0;
    while ((covered >> r) & 1) r++;
    for (const auto& [modulus, mask] : ctx.blocks_at[static_cast<std::size_t>(r)]) {
        if ((covered & mask) != 0) continue;
        ctx.stack.emplace_back(r, modulus);
        bool keep_going = enumerate_rec(ctx, covered | mask, full);
        ctx.stack.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

} // namespace

bool for_each_ecs_while(i64 period, const std::function<bool(const Ecs&)>& visit, i64 limit) {
    if (period < 1)
        throw Error(ErrorCode::InvalidArgument, "period must be positive");
    if (period > std::min(limit, kEnumerationCeiling))
        throw Error(ErrorCode::EnumerationLimitExceeded,
                    "period " + std::to_string(period) + " exceeds the enumeration limit");

    EnumerationContext ctx;
    ctx.period = period;
    ctx.visit = &visit;
    ctx.blocks_at.assign(static_cast<std::size_t>(period), {});
    for (i64 n = 1; n <= period; n++) {
        if (period % n != 0) continue;
        for (i64 a = 0; a < n; a++) {
            Mask mask = 0;
            for (i64 j = a; j < period; j += n) mask |= Mask(1) << j;
            // a block's least element is its residue, so it roots the search at a
            ctx.blocks_at[static_cast<std::size_t>(a)].emplace_back(n, mask);
        }
    }
    Mask full = (period == 127) ? ~Mask(0) >> 1 : (Mask(1) << period) - 1;
    return enumerate_rec(ctx, 0, full);
}

void for_each_ecs(i64 period, const std::function<void(const Ecs&)>& visit, i64 limit) {
    for_each_ecs_while(
        period,
        [&](const Ecs& system) {
            visit(system);
            return true;
        },
        limit);
}

std::vector<Ecs> enumerate_ecs(i64 period, i64 limit) {
    std::vector<Ecs> out;
    for_each_ecs(period, [&](const Ecs& system) { out.push_back(system); }, limit);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace covsys
