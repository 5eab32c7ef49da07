#pragma once

// Generators and a ground-enumeration oracle for unification properties.

#include <random>
#include <set>
#include <string>
#include <vector>

#include "jasonrs/logic/substitution.hpp"

namespace jasonrs::testing {

using logic::Substitution;
using logic::Term;

inline const std::vector<std::string>& oracle_vars() {
    static const std::vector<std::string> vars{"X", "Y", "Z"};
    return vars;
}

/// Random term of depth <= max_depth over {X,Y,Z}, {a,b}, f/1, g/2.
inline Term random_term(std::mt19937_64& rng, int max_depth) {
    std::uniform_int_distribution<int> pick(0, max_depth > 0 ? 6 : 4);
    switch (pick(rng)) {
    case 0:
    case 1:
    case 2:
        return Term::var(oracle_vars()[std::uniform_int_distribution<std::size_t>(0, 2)(rng)]);
    case 3:
        return Term::atom("a");
    case 4:
        return Term::atom("b");
    case 5:
        return Term::structure("f", {random_term(rng, max_depth - 1)});
    default:
        return Term::structure("g", {random_term(rng, max_depth - 1), random_term(rng, max_depth - 1)});
    }
}

/// Replaces random subterms of `t` by variables or fresh random terms, so
/// pairs are often (but not always) unifiable.
inline Term perturb(const Term& t, std::mt19937_64& rng, int depth) {
    std::uniform_int_distribution<int> pick(0, 9);
    int roll = pick(rng);
    if (roll == 0) {
        return Term::var(oracle_vars()[std::uniform_int_distribution<std::size_t>(0, 2)(rng)]);
    }
    if (roll == 1) {
        return random_term(rng, depth);
    }
    if (!t.is_struct()) {
        return t;
    }
    std::vector<Term> args;
    for (const auto& a : t.args()) {
        args.push_back(perturb(a, rng, depth > 0 ? depth - 1 : 0));
    }
    return Term::structure(t.text(), std::move(args));
}

/// Ground terms of depth <= 1.
inline const std::vector<Term>& ground_universe() {
    static const std::vector<Term> universe = [] {
        std::vector<Term> base{Term::atom("a"), Term::atom("b")};
        std::vector<Term> out = base;
        for (const auto& x : base) {
            out.push_back(Term::structure("f", {x}));
        }
        for (const auto& x : base) {
            for (const auto& y : base) {
                out.push_back(Term::structure("g", {x, y}));
            }
        }
        return out;
    }();
    return universe;
}

/// Plain simultaneous substitution; independent of Substitution::apply.
inline Term ground_apply(const Term& t, const std::vector<std::string>& names, const std::vector<Term>& values) {
    if (t.is_var()) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (names[i] == t.text()) {
                return values[i];
            }
        }
        return t;
    }
    if (!t.is_struct()) {
        return t;
    }
    std::vector<Term> args;
    for (const auto& a : t.args()) {
        args.push_back(ground_apply(a, names, values));
    }
    return Term::structure(t.text(), std::move(args));
}

/// Checks soundness, idempotence, occurs-freedom and MGU factoring of
/// unify(a, b) against every ground assignment over ground_universe().
/// Returns an empty string on success, else a description of the failure.
inline std::string check_unifier(const Term& a, const Term& b) {
    using logic::to_string;
    auto sigma = logic::unify(a, b);
    std::set<std::string> var_set;
    a.collect_vars(var_set);
    b.collect_vars(var_set);
    std::vector<std::string> names(var_set.begin(), var_set.end());
    const std::string where = to_string(a) + " =? " + to_string(b) + ": ";

    if (sigma) {
        if (sigma->apply(a) != sigma->apply(b)) {
            return where + "result does not equate both sides";
        }
        for (const auto& t : {a, b}) {
            if (sigma->apply(sigma->apply(t)) != sigma->apply(t)) {
                return where + "substitution is not idempotent";
            }
        }
        for (const auto& [name, value] : sigma->resolved()) {
            if (value.contains_var(name)) {
                return where + "binding of " + name + " contains itself";
            }
        }
    }

    const auto& universe = ground_universe();
    std::vector<std::size_t> idx(names.size(), 0);
    std::vector<Term> values(names.size());
    for (;;) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            values[i] = universe[idx[i]];
        }
        if (ground_apply(a, names, values) == ground_apply(b, names, values)) {
            if (!sigma) {
                return where + "unify failed but a ground unifier exists";
            }
            for (const auto& n : names) {
                Term through = ground_apply(sigma->apply(Term::var(n)), names, values);
                if (through != ground_apply(Term::var(n), names, values)) {
                    return where + "ground unifier does not factor through the result at " + n;
                }
            }
        }
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == universe.size()) {
            idx[k++] = 0;
        }
        if (k == idx.size()) {
            break;
        }
    }
    return {};
}

} // namespace jasonrs::testing
