#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tfstar/group.hpp"

namespace tfstar {

struct CheckConfig {
    Int samples = 1000;
    std::uint64_t seed = 1;
    Int max_len = 8;
    Int max_coeff = 5;
    Int max_dinf = 3;
    std::vector<PrismKind> kinds{PrismKind::transversal, PrismKind::crystalline};

    /// Throws ContractViolation unless every bound is at least 1 and kinds is nonempty.
    void validate() const;
};

/// The representation drawn for sample `index`; depends only on (seed, index) and the bounds.
VirtualRep sample_rep(const CheckConfig& cfg, Int index);

struct CheckFailure {
    Int index = 0;
    VirtualRep rep;
    PrismKind kind = PrismKind::transversal;
    std::string category;  // "mismatch", "degree", "padding", "length", "error"
    std::string detail;
};

struct CheckReport {
    std::uint64_t seed = 0;
    Int samples = 0;
    Int comparisons = 0;
    Int mismatches = 0;
    Int summands_checked = 0;
    Int degree_failures = 0;
    Int padding_checks = 0;
    Int padding_failures = 0;
    Int length_checks = 0;
    Int length_failures = 0;
    Int errors = 0;
    std::vector<CheckFailure> failures;

    bool ok() const noexcept
    {
        return mismatches == 0 && degree_failures == 0 && padding_failures == 0 && length_failures == 0 &&
               errors == 0;
    }
};

/// Engine against closed form on cfg.samples random representations, both shifts
/// and every configured kind, plus the degree, padding and crystalline length checks.
CheckReport crosscheck_serial(const CheckConfig& cfg);
/// Same report, samples sharded over OpenMP threads.
CheckReport crosscheck_parallel(const CheckConfig& cfg);
CheckReport crosscheck(const CheckConfig& cfg);

/// Find A: source -> target and U: target -> source between sums of cyclic groups
/// Z/p^e with AU = diag(p^{composite_au}) and UA = diag(p^{composite_ua}).
struct ObstructionProblem {
    Int p = 2;
    std::vector<Int> source;
    std::vector<Int> target;
    std::vector<Int> composite_au;
    std::vector<Int> composite_ua;
    /// When set, every exponent is first truncated to min(e, modulus_exponent).
    std::optional<Int> modulus_exponent;
    double ceiling = 4e9;

    /// Every composite is multiplication by p.
    static ObstructionProblem mult_by_p(Int p, std::vector<Int> source, std::vector<Int> target);
    void validate() const;
};

/// A homomorphism between cyclic summands is stored as the image of 1.
struct ObstructionWitness {
    std::vector<std::vector<Int>> a;  // target x source
    std::vector<std::vector<Int>> u;  // source x target
};

struct ObstructionResult {
    bool feasible = false;
    std::optional<ObstructionWitness> witness;
    /// "exhaustive", "diagonal" (all exponents equal, U in Smith normal form) or
    /// "reduction mod p^t" (infeasibility proved after truncation).
    std::string method;
    Int working_exponent = 0;
    double search_space = 0;
};

/// Size of the exhaustive search the problem would need, as the number of
/// (U, A-row) checks. Used for the resource ceiling.
double obstruction_search_space(const ObstructionProblem& prob);

ObstructionResult obstruction_search_serial(const ObstructionProblem& prob);
ObstructionResult obstruction_search_parallel(const ObstructionProblem& prob);
ObstructionResult obstruction_search(const ObstructionProblem& prob);

/// True when AU and UA are the required diagonals.
bool verify_witness(const ObstructionProblem& prob, const ObstructionWitness& w);

} // namespace tfstar
