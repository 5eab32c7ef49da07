#pragma once

#include <compare>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "jasonrs/logic/decimal.hpp"

namespace jasonrs::logic {

enum class TermKind { Atom, Var, Num, Str, Struct };

/// First-order term. Structures own their arguments by value.
class Term {
public:
    Term() = default;

    static Term atom(std::string name);
    static Term var(std::string name);
    static Term num(Decimal value);
    static Term num(std::int64_t value) { return num(Decimal::from_int(value)); }
    static Term str(std::string value);
    /// Zero arguments collapse to an atom.
    static Term structure(std::string functor, std::vector<Term> args);

    TermKind kind() const { return kind_; }
    bool is_atom() const { return kind_ == TermKind::Atom; }
    bool is_var() const { return kind_ == TermKind::Var; }
    bool is_num() const { return kind_ == TermKind::Num; }
    bool is_str() const { return kind_ == TermKind::Str; }
    bool is_struct() const { return kind_ == TermKind::Struct; }

    /// Atom name, variable name, functor, or string payload.
    const std::string& text() const { return text_; }
    Decimal number() const { return number_; }
    const std::vector<Term>& args() const { return args_; }
    std::size_t arity() const { return args_.size(); }

    bool is_ground() const;
    bool contains_var(std::string_view name) const;
    void collect_vars(std::set<std::string>& out) const;

    friend bool operator==(const Term&, const Term&) = default;
    /// Standard order: Var < Num < Atom < Str < Struct, then by content.
    friend std::strong_ordering operator<=>(const Term& a, const Term& b);

private:
    TermKind kind_ = TermKind::Atom;
    std::string text_;
    Decimal number_;
    std::vector<Term> args_;
};

bool is_identifier(std::string_view text);
bool is_variable_name(std::string_view text);

/// Literal: possibly strongly negated predicate with source annotations.
struct Literal {
    bool negated = false;
    std::string predicate;
    std::vector<Term> args;
    /// Kept sorted and duplicate-free.
    std::vector<Term> annotations;

    Literal() = default;
    Literal(std::string predicate_, std::vector<Term> args_ = {}, std::vector<Term> annotations_ = {},
            bool negated_ = false);

    std::size_t arity() const { return args.size(); }
    bool is_ground() const;
    void collect_vars(std::set<std::string>& out) const;

    /// Argument of the `source(_)` annotation, if any.
    const Term* source() const;
    Literal with_source(const Term& source) const;
    Literal without_annotations() const;
    bool same_signature(const Literal& other) const {
        return negated == other.negated && predicate == other.predicate && arity() == other.arity();
    }
    void normalize_annotations();

    /// The literal viewed as a term (annotations dropped).
    Term as_term() const;
    static Literal from_term(const Term& t);

    friend bool operator==(const Literal&, const Literal&) = default;
    friend std::strong_ordering operator<=>(const Literal& a, const Literal& b);
};

Term source_annotation(const Term& source);

std::string to_string(const Term& t);
std::string to_string(const Literal& l);
std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Literal& l);

} // namespace jasonrs::logic
