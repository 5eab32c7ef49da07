#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jasonrs/logic/term.hpp"

namespace jasonrs::logic {

/// Triangular variable bindings. `apply` dereferences chains fully, so
/// apply(apply(t)) == apply(t) always holds.
class Substitution {
public:
    using Map = std::map<std::string, Term>;

    const Term* lookup(const std::string& name) const;
    bool contains(const std::string& name) const { return bindings_.count(name) != 0; }

    /// Follows variable chains at the top level only.
    const Term& walk(const Term& t) const;
    Term apply(const Term& t) const;
    Literal apply(const Literal& l) const;

    /// Binds an unbound variable. Caller guarantees the occurs-check.
    void bind(const std::string& name, Term value) { bindings_.insert_or_assign(name, std::move(value)); }
    void unbind(const std::string& name) { bindings_.erase(name); }

    /// Fully dereferenced view, suitable for display and comparison.
    Map resolved() const;

    std::size_t size() const { return bindings_.size(); }
    bool empty() const { return bindings_.empty(); }
    const Map& bindings() const { return bindings_; }

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    Map bindings_;
};

std::string to_string(const Substitution& s);

/// Most general unifier extending `s`, with occurs-check. nullopt on failure.
std::optional<Substitution> unify(const Term& a, const Term& b, Substitution s = {});

/// Unifies sign, predicate and arguments. Every annotation on `pattern` must
/// unify with some annotation on `target`; extra target annotations are fine.
std::optional<Substitution> unify_literal(const Literal& pattern, const Literal& target, Substitution s = {});

/// Names bound since some mark; lets a search undo bindings on backtracking.
using Trail = std::vector<std::string>;

/// In-place variants used by the solver. On failure the substitution is
/// left exactly as it was.
bool unify_trailed(const Term& a, const Term& b, Substitution& s, Trail& trail);
bool unify_literal_trailed(const Literal& pattern, const Literal& target, Substitution& s, Trail& trail);
void undo_to(Substitution& s, Trail& trail, std::size_t mark);

bool occurs_in(const std::string& var, const Term& t, const Substitution& s);

} // namespace jasonrs::logic
