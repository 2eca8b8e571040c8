/*
First-order term algebra.

Symbols carry a kind tag: constructors, defined symbols, their marked
(dependency pair) versions and the compound symbols c_0, c_1, ... used to
group several calls in a single right-hand side. Terms are immutable and
structurally shared; copying a Term copies a pointer, and equality is
structural.

Positions are sequences of 1-based argument indices; the root is the empty
sequence.
*/

#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace tcomb {

enum class SymbolKind { Constructor, Defined, Marked, Compound };

std::string_view to_string(SymbolKind kind);

class Symbol {
public:
    Symbol(std::string name, std::size_t arity, SymbolKind kind);

    static Symbol constructor(std::string name, std::size_t arity);
    static Symbol defined(std::string name, std::size_t arity);
    /// The compound symbol c_n.
    static Symbol compound(std::size_t arity);

    /// f -> f#; only defined symbols can be marked.
    Symbol marked() const;
    /// f# -> f
    Symbol unmarked() const;

    const std::string& name() const noexcept { return name_; }
    std::size_t arity() const noexcept { return arity_; }
    SymbolKind kind() const noexcept { return kind_; }

    bool is_constructor() const noexcept { return kind_ == SymbolKind::Constructor; }
    bool is_defined() const noexcept { return kind_ == SymbolKind::Defined; }
    bool is_marked() const noexcept { return kind_ == SymbolKind::Marked; }
    bool is_compound() const noexcept { return kind_ == SymbolKind::Compound; }

    /// Rendered name: `f#` for marked symbols, `c_n` for compounds.
    std::string display_name() const;

    friend bool operator==(const Symbol& a, const Symbol& b) noexcept {
        return a.arity_ == b.arity_ && a.kind_ == b.kind_ && a.name_ == b.name_;
    }
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) noexcept;

private:
    std::string name_;
    std::size_t arity_;
    SymbolKind kind_;
};

using Position = std::vector<std::size_t>;

class Term {
public:
    static Term variable(std::string name);
    /// Throws ArityMismatch when args.size() != f.arity().
    static Term apply(Symbol f, std::vector<Term> args = {});

    bool is_variable() const noexcept;
    const std::string& variable_name() const;
    const Symbol& symbol() const;
    const std::vector<Term>& args() const;

    /// Number of symbol and variable occurrences.
    std::size_t size() const noexcept;
    std::size_t hash() const noexcept;

    bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

    friend bool operator==(const Term& a, const Term& b) noexcept;
    friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

private:
    struct Node;
    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct TermHash {
    std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

// positions and subterms ----------------------------------------------------

/// All positions of t in leftmost-outermost (preorder) order.
std::vector<Position> positions(const Term& t);
Term subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, Term replacement);

/// Variables of t in order of first occurrence.
std::vector<std::string> variables(const Term& t);
bool occurs(std::string_view var, const Term& t);
bool is_ground(const Term& t);
bool contains_kind(const Term& t, SymbolKind kind);
/// Every function symbol of t, in order of first occurrence.
std::vector<Symbol> function_symbols(const Term& t);

// substitutions ---------------------------------------------------------------

class Substitution {
public:
    Substitution() = default;

    std::optional<Term> lookup(std::string_view var) const;
    void bind(std::string var, Term t);
    bool empty() const noexcept { return bindings_.empty(); }
    std::size_t size() const noexcept { return bindings_.size(); }
    const std::map<std::string, Term, std::less<>>& bindings() const noexcept { return bindings_; }

    /// Simultaneous replacement of every bound variable.
    Term apply(const Term& t) const;

    friend bool operator==(const Substitution&, const Substitution&) = default;

private:
    std::map<std::string, Term, std::less<>> bindings_;
};

/// sigma with pattern*sigma == subject and dom(sigma) within vars(pattern).
std::optional<Substitution> match_term(const Term& pattern, const Term& subject);
/// Most general unifier with occurs check; callers rename apart.
std::optional<Substitution> unify_terms(const Term& s, const Term& t);

// fresh variables -------------------------------------------------------------

/// Variables named `?<n>`; `?` is not accepted by the problem parser, so these
/// never clash with user variables. Thread-safe.
Term fresh_variable();
/// Consistently renames every variable of t to a fresh one.
Term rename_fresh(const Term& t);

// dependency pair notation ------------------------------------------------------

/// f(t1..tn) -> f#(t1..tn) for defined f; identity otherwise.
Term mark(const Term& t);
/// f#(t1..tn) -> f(t1..tn); identity otherwise.
Term unmark(const Term& t);
/// com([t]) = t, otherwise c_n(t1..tn).
Term com(std::vector<Term> ts);
/// Inverse of com on its image: arguments of a compound root, otherwise {t}.
std::vector<Term> com_components(const Term& t);
/// Root is defined or marked and all arguments are built from constructors
/// and variables.
bool is_basic(const Term& t);

// replacement maps ---------------------------------------------------------------

class ReplacementMap {
public:
    /// Every argument position of every symbol.
    static ReplacementMap full();
    /// Argument positions of compound symbols only.
    static ReplacementMap compound_only();
    static ReplacementMap none();

    /// Throws std::invalid_argument for an index outside 1..arity.
    ReplacementMap& set(const Symbol& f, std::set<std::size_t> argument_positions);

    std::set<std::size_t> positions(const Symbol& f) const;
    bool contains(const Symbol& f, std::size_t index) const;

private:
    enum class Default { All, None, CompoundsOnly };
    explicit ReplacementMap(Default d) : default_(d) {}
    Default default_;
    std::map<Symbol, std::set<std::size_t>> overrides_;
};

std::set<Position> mu_positions(const ReplacementMap& mu, const Term& t);

// printing -------------------------------------------------------------------------

/// Prefix rendering `f(a,b)` except for binary symbols whose (base) name is in
/// `infix`, which render as `(a op b)` below the root and `a op b` at the root.
std::string to_string(const Term& t, const std::set<std::string>& infix = {});
std::string to_string(const Position& p);

} // namespace tcomb
