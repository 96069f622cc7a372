#pragma once

#include <optional>
#include <variant>

#include "ueda/atlas.hpp"

namespace ueda {

/// A system of defining functions of claimed type n: the derived transition
/// expansion is normalized (c1 ≡ 1) and f_ν ≡ 0 for 2 ≤ ν ≤ n.
struct SystemN {
    Atlas atlas;
    TransitionExpansion expansion;
    int claimed_type = 1;

    static SystemN from_atlas(Atlas a, int claimed_type = 1);
};

/// Obstruction of order n: the class of {f_{n+1}} with its scalar value under
/// H¹(C, 𝒪_C) ≅ ℂ. value = 0 ⟺ the representative is a coboundary.
struct ObstructionReport {
    int order = 0;
    Cocycle representative;
    Scalar value;
};

struct FiniteType {
    int order;
    ObstructionReport report;
};
struct InfiniteUpTo {
    int max_order;
};

struct Classification {
    std::variant<FiniteType, InfiniteUpTo> verdict;

    bool finite() const { return std::holds_alternative<FiniteType>(verdict); }
    const FiniteType& finite_type() const { return std::get<FiniteType>(verdict); }
    const InfiniteUpTo& infinite_up_to() const { return std::get<InfiniteUpTo>(verdict); }
};

/// Raised when an upgrade or linearization step meets a nonzero obstruction.
struct finite_type_error : domain_error {
    ObstructionReport report;
    explicit finite_type_error(ObstructionReport r)
        : domain_error("finite type detected at order " + std::to_string(r.order) +
                       " with obstruction value " + r.value.str()),
          report(std::move(r)) {}
};

/// True iff f_ν ≡ 0 for 2 ≤ ν ≤ claimed_type (every system is of type 1).
bool verify_type(const SystemN& s);

/// The type-n obstruction: representative {f_{n+1}} and its S-value.
ObstructionReport obstruction(const SystemN& s);

/// Rebuilds 1/w₀ⁿ − 1/w₁ⁿ from the expansion, restricts to w₁ = 0 and checks
/// it equals n·f_{n+1} with the stored orientation (w₀ expanded in w₁).
bool cocycle_identity_check(const SystemN& s);

/// Coordinate change v_k = w_k − G_k·w_k^{n+1} killing a vanishing
/// obstruction; returns a system of type n+1.
SystemN upgrade(const SystemN& s);

/// Runs obstruction/upgrade from n = 1. FiniteType at the first nonzero
/// value, else InfiniteUpTo(N_max). Requires a (normalizable) atlas with
/// holomorphically trivial normal bundle and N_max ≤ N_w − 1.
Classification classify(const Atlas& a, int N_max);

/// Test helper for well-definedness: replaces the defining functions by
/// v_k = w_k + ∑_{ν=2..n} c_ν·w_k^ν + h_k·w_k^(n+1) with common constants and
/// per-chart series h₀ (cusp chart) and h₁(z₁), returning the new atlas.
Atlas reparametrize_system(const Atlas& a, const std::vector<Scalar>& constants,
                           const BSeries& h0, const LSeries& h1, int n);

}  // namespace ueda
