#include "jasonrs/logic/substitution.hpp"

#include <sstream>

namespace jasonrs::logic {

const Term* Substitution::lookup(const std::string& name) const {
    auto it = bindings_.find(name);
    return it == bindings_.end() ? nullptr : &it->second;
}

const Term& Substitution::walk(const Term& t) const {
    const Term* cur = &t;
    while (cur->is_var()) {
        const Term* next = lookup(cur->text());
        if (next == nullptr) {
            break;
        }
        cur = next;
    }
    return *cur;
}

Term Substitution::apply(const Term& t) const {
    const Term& w = walk(t);
    if (!w.is_struct()) {
        return w;
    }
    std::vector<Term> args;
    args.reserve(w.arity());
    for (const auto& a : w.args()) {
        args.push_back(apply(a));
    }
    return Term::structure(w.text(), std::move(args));
}

Literal Substitution::apply(const Literal& l) const {
    Literal out;
    out.negated = l.negated;
    out.predicate = l.predicate;
    out.args.reserve(l.args.size());
    for (const auto& a : l.args) {
        out.args.push_back(apply(a));
    }
    out.annotations.reserve(l.annotations.size());
    for (const auto& a : l.annotations) {
        out.annotations.push_back(apply(a));
    }
    out.normalize_annotations();
    return out;
}

Substitution::Map Substitution::resolved() const {
    Map out;
    for (const auto& [name, value] : bindings_) {
        out.emplace(name, apply(value));
    }
    return out;
}

std::string to_string(const Substitution& s) {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (const auto& [name, value] : s.resolved()) {
        if (!first) {
            os << ", ";
        }
        first = false;
        os << name << " -> " << value;
    }
    os << '}';
    return os.str();
}

bool occurs_in(const std::string& var, const Term& t, const Substitution& s) {
    const Term& w = s.walk(t);
    if (w.is_var()) {
        return w.text() == var;
    }
    for (const auto& a : w.args()) {
        if (occurs_in(var, a, s)) {
            return true;
        }
    }
    return false;
}

namespace {

bool unify_into(const Term& a, const Term& b, Substitution& s, Trail& trail) {
    const Term& x = s.walk(a);
    const Term& y = s.walk(b);
    if (x.is_var() && y.is_var() && x.text() == y.text()) {
        return true;
    }
    if (x.is_var()) {
        if (occurs_in(x.text(), y, s)) {
            return false;
        }
        trail.push_back(x.text());
        s.bind(x.text(), y);
        return true;
    }
    if (y.is_var()) {
        if (occurs_in(y.text(), x, s)) {
            return false;
        }
        trail.push_back(y.text());
        s.bind(y.text(), x);
        return true;
    }
    if (x.kind() != y.kind()) {
        return false;
    }
    switch (x.kind()) {
    case TermKind::Num:
        return x.number() == y.number();
    case TermKind::Atom:
    case TermKind::Str:
        return x.text() == y.text();
    case TermKind::Struct: {
        if (x.text() != y.text() || x.arity() != y.arity()) {
            return false;
        }
        // Only unbound variables get bound, so map nodes (and these
        // references) stay valid.
        const std::vector<Term>& xs = x.args();
        const std::vector<Term>& ys = y.args();
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (!unify_into(xs[i], ys[i], s, trail)) {
                return false;
            }
        }
        return true;
    }
    case TermKind::Var:
        break;
    }
    return false;
}

bool unify_literal_into(const Literal& pattern, const Literal& target, Substitution& s, Trail& trail) {
    if (!pattern.same_signature(target)) {
        return false;
    }
    for (std::size_t i = 0; i < pattern.args.size(); ++i) {
        if (!unify_into(pattern.args[i], target.args[i], s, trail)) {
            return false;
        }
    }
    for (const auto& want : pattern.annotations) {
        bool matched = false;
        for (const auto& have : target.annotations) {
            std::size_t mark = trail.size();
            if (unify_into(want, have, s, trail)) {
                matched = true;
                break;
            }
            undo_to(s, trail, mark);
        }
        if (!matched) {
            return false;
        }
    }
    return true;
}

} // namespace

void undo_to(Substitution& s, Trail& trail, std::size_t mark) {
    while (trail.size() > mark) {
        s.unbind(trail.back());
        trail.pop_back();
    }
}

bool unify_trailed(const Term& a, const Term& b, Substitution& s, Trail& trail) {
    std::size_t mark = trail.size();
    if (unify_into(a, b, s, trail)) {
        return true;
    }
    undo_to(s, trail, mark);
    return false;
}

bool unify_literal_trailed(const Literal& pattern, const Literal& target, Substitution& s, Trail& trail) {
    std::size_t mark = trail.size();
    if (unify_literal_into(pattern, target, s, trail)) {
        return true;
    }
    undo_to(s, trail, mark);
    return false;
}

std::optional<Substitution> unify(const Term& a, const Term& b, Substitution s) {
    Trail trail;
    if (!unify_into(a, b, s, trail)) {
        return std::nullopt;
    }
    return s;
}

std::optional<Substitution> unify_literal(const Literal& pattern, const Literal& target, Substitution s) {
    Trail trail;
    if (!unify_literal_into(pattern, target, s, trail)) {
        return std::nullopt;
    }
    return s;
}

} // namespace jasonrs::logic
