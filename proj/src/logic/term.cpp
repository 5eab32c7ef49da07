#include "jasonrs/logic/term.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace jasonrs::logic {
namespace {

int kind_rank(TermKind k) {
    switch (k) {
    case TermKind::Var: return 0;
    case TermKind::Num: return 1;
    case TermKind::Atom: return 2;
    case TermKind::Str: return 3;
    case TermKind::Struct: return 4;
    }
    return 5;
}

std::strong_ordering compare_terms(const std::vector<Term>& a, const std::vector<Term>& b) {
    if (auto c = a.size() <=> b.size(); c != 0) {
        return c;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (auto c = a[i] <=> b[i]; c != 0) {
            return c;
        }
    }
    return std::strong_ordering::equal;
}

void write_quoted(std::ostream& os, const std::string& text, char quote) {
    os << quote;
    for (char c : text) {
        switch (c) {
        case '\\': os << "\\\\"; break;
        case '\n': os << "\\n"; break;
        case '\t': os << "\\t"; break;
        default:
            if (c == quote) {
                os << '\\';
            }
            os << c;
        }
    }
    os << quote;
}

void write_args(std::ostream& os, const std::vector<Term>& args) {
    os << '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (i != 0) {
            os << ',';
        }
        os << args[i];
    }
    os << ')';
}

void write_name(std::ostream& os, const std::string& name) {
    if (is_identifier(name)) {
        os << name;
    } else {
        write_quoted(os, name, '\'');
    }
}

} // namespace

bool is_identifier(std::string_view text) {
    if (text.empty() || !std::islower(static_cast<unsigned char>(text.front()))) {
        return false;
    }
    return std::all_of(text.begin(), text.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

bool is_variable_name(std::string_view text) {
    if (text.empty()) {
        return false;
    }
    char first = text.front();
    if (!std::isupper(static_cast<unsigned char>(first)) && first != '_') {
        return false;
    }
    return std::all_of(text.begin(), text.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

Term Term::atom(std::string name) {
    Term t;
    t.kind_ = TermKind::Atom;
    t.text_ = std::move(name);
    return t;
}

Term Term::var(std::string name) {
    Term t;
    t.kind_ = TermKind::Var;
    t.text_ = std::move(name);
    return t;
}

Term Term::num(Decimal value) {
    Term t;
    t.kind_ = TermKind::Num;
    t.number_ = value;
    return t;
}

Term Term::str(std::string value) {
    Term t;
    t.kind_ = TermKind::Str;
    t.text_ = std::move(value);
    return t;
}

Term Term::structure(std::string functor, std::vector<Term> args) {
    if (args.empty()) {
        return atom(std::move(functor));
    }
    Term t;
    t.kind_ = TermKind::Struct;
    t.text_ = std::move(functor);
    t.args_ = std::move(args);
    return t;
}

bool Term::is_ground() const {
    if (kind_ == TermKind::Var) {
        return false;
    }
    return std::all_of(args_.begin(), args_.end(), [](const Term& a) { return a.is_ground(); });
}

bool Term::contains_var(std::string_view name) const {
    if (kind_ == TermKind::Var) {
        return text_ == name;
    }
    return std::any_of(args_.begin(), args_.end(), [&](const Term& a) { return a.contains_var(name); });
}

void Term::collect_vars(std::set<std::string>& out) const {
    if (kind_ == TermKind::Var) {
        out.insert(text_);
        return;
    }
    for (const auto& a : args_) {
        a.collect_vars(out);
    }
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
    if (auto c = kind_rank(a.kind_) <=> kind_rank(b.kind_); c != 0) {
        return c;
    }
    switch (a.kind_) {
    case TermKind::Num:
        return a.number_ <=> b.number_;
    case TermKind::Struct:
        if (auto c = a.args_.size() <=> b.args_.size(); c != 0) {
            return c;
        }
        if (auto c = a.text_ <=> b.text_; c != 0) {
            return c;
        }
        return compare_terms(a.args_, b.args_);
    default:
        return a.text_ <=> b.text_;
    }
}

Literal::Literal(std::string predicate_, std::vector<Term> args_, std::vector<Term> annotations_, bool negated_)
    : negated(negated_), predicate(std::move(predicate_)), args(std::move(args_)),
      annotations(std::move(annotations_)) {
    normalize_annotations();
}

bool Literal::is_ground() const {
    return std::all_of(args.begin(), args.end(), [](const Term& a) { return a.is_ground(); }) &&
           std::all_of(annotations.begin(), annotations.end(), [](const Term& a) { return a.is_ground(); });
}

void Literal::collect_vars(std::set<std::string>& out) const {
    for (const auto& a : args) {
        a.collect_vars(out);
    }
    for (const auto& a : annotations) {
        a.collect_vars(out);
    }
}

const Term* Literal::source() const {
    for (const auto& a : annotations) {
        if (a.is_struct() && a.text() == "source" && a.arity() == 1) {
            return &a.args().front();
        }
    }
    return nullptr;
}

Literal Literal::with_source(const Term& source) const {
    Literal out = *this;
    std::erase_if(out.annotations,
                  [](const Term& a) { return a.is_struct() && a.text() == "source" && a.arity() == 1; });
    out.annotations.push_back(source_annotation(source));
    out.normalize_annotations();
    return out;
}

Literal Literal::without_annotations() const {
    Literal out = *this;
    out.annotations.clear();
    return out;
}

void Literal::normalize_annotations() {
    std::sort(annotations.begin(), annotations.end());
    annotations.erase(std::unique(annotations.begin(), annotations.end()), annotations.end());
}

Term Literal::as_term() const {
    return Term::structure(predicate, args);
}

Literal Literal::from_term(const Term& t) {
    Literal l;
    l.predicate = t.text();
    l.args = t.args();
    return l;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.predicate <=> b.predicate; c != 0) {
        return c;
    }
    if (auto c = a.negated <=> b.negated; c != 0) {
        return c;
    }
    if (auto c = compare_terms(a.args, b.args); c != 0) {
        return c;
    }
    return compare_terms(a.annotations, b.annotations);
}

Term source_annotation(const Term& source) {
    return Term::structure("source", {source});
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
    switch (t.kind()) {
    case TermKind::Atom:
        write_name(os, t.text());
        break;
    case TermKind::Var:
        os << t.text();
        break;
    case TermKind::Num:
        os << t.number().to_string();
        break;
    case TermKind::Str:
        write_quoted(os, t.text(), '"');
        break;
    case TermKind::Struct:
        write_name(os, t.text());
        write_args(os, t.args());
        break;
    }
    return os;
}

std::ostream& operator<<(std::ostream& os, const Literal& l) {
    if (l.negated) {
        os << '~';
    }
    write_name(os, l.predicate);
    if (!l.args.empty()) {
        write_args(os, l.args);
    }
    if (!l.annotations.empty()) {
        os << '[';
        for (std::size_t i = 0; i < l.annotations.size(); ++i) {
            if (i != 0) {
                os << ',';
            }
            os << l.annotations[i];
        }
        os << ']';
    }
    return os;
}

std::string to_string(const Term& t) {
    std::ostringstream os;
    os << t;
    return os.str();
}

std::string to_string(const Literal& l) {
    std::ostringstream os;
    os << l;
    return os.str();
}

} // namespace jasonrs::logic
