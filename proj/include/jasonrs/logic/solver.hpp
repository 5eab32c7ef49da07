#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "jasonrs/logic/formula.hpp"

namespace jasonrs::logic {

struct SolveOptions {
    /// Successful clause resolutions allowed per query.
    std::size_t max_steps = 10'000;
};

/// Receives each solution; return false to stop the enumeration.
using SolutionSink = std::function<bool(const Substitution&)>;

/// Depth-first, source-order SLD resolution with negation as failure.
/// Facts are tried before rules for each literal. Solutions are produced
/// lazily: enumeration stops as soon as `sink` returns false.
///
/// Throws DepthExceeded, UnboundArithmetic, UnboundNegation, TypeMismatch,
/// DivisionByZero.
void solve(const Formula& goal, std::span<const Literal> beliefs, std::span<const Rule> rules,
           const Substitution& initial, const SolutionSink& sink, const SolveOptions& options = {});

std::vector<Substitution> solve_all(const Formula& goal, std::span<const Literal> beliefs,
                                    std::span<const Rule> rules, const Substitution& initial = {},
                                    const SolveOptions& options = {});

std::optional<Substitution> solve_first(const Formula& goal, std::span<const Literal> beliefs,
                                        std::span<const Rule> rules, const Substitution& initial = {},
                                        const SolveOptions& options = {});

} // namespace jasonrs::logic
