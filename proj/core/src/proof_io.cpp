#include "tcomb/proof_io.hpp"

#include "tcomb/errors.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace tcomb {

using nlohmann::json;

namespace {

// text -----------------------------------------------------------------------

std::string labels(const LabelSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& l : s) {
        out += (first ? "" : ", ") + l;
        first = false;
    }
    return out + "}";
}

void text_node(std::ostream& os, const ProofTree& pt, const std::string& path) {
    const auto& j = pt.conclusion();
    const auto infix = j.problem.signature.infix_set();
    os << "[" << (path.empty() ? "root" : path) << "] ";
    switch (pt.kind()) {
    case ProofTree::Kind::Axiom: os << "Empty\n"; break;
    case ProofTree::Kind::Assumption:
        os << "Assumption" << (pt.note().empty() ? "" : " (" + pt.note() + ")") << "\n";
        break;
    case ProofTree::Kind::Inference: os << to_string(pt.processor()) << "\n"; break;
    }
    os << "  judgement: " << to_string(j.problem) << " : " << to_string(j.bound) << "\n";
    for (const auto& r : j.problem.strict) os << "    " << to_string(r, infix) << "\n";
    for (const auto& r : j.problem.weak) os << "    " << to_string(r, infix, true) << "\n";

    std::visit(
        [&](const auto& params) {
            using P = std::decay_t<decltype(params)>;
            if constexpr (std::is_same_v<P, CPParams>) {
                os << "  degree " << params.degree << ", coefficients <= " << params.coeff_max << "\n";
                for (const auto& line : params.interp.to_lines()) os << "    " << line << "\n";
            } else if constexpr (std::is_same_v<P, SubsetParams>) {
                os << "  rules: " << labels(params.labels) << "\n";
            } else if constexpr (std::is_same_v<P, DGDParams>) {
                os << "  strict down: " << labels(params.s_down) << ", weak down: " << labels(params.w_down) << "\n";
            }
        },
        pt.params());

    const auto& premises = pt.premises();
    if (!premises.empty()) {
        os << "  sub-judgements:\n";
        for (std::size_t i = 0; i < premises.size(); ++i) {
            const auto& c = premises[i].conclusion();
            os << "    " << (path.empty() ? "" : path + ".") << i + 1 << ": " << to_string(c.problem) << " : "
               << to_string(c.bound) << "\n";
        }
    }
    os << "\n";
    for (std::size_t i = 0; i < premises.size(); ++i)
        text_node(os, premises[i], path.empty() ? std::to_string(i + 1) : path + "." + std::to_string(i + 1));
}

// json out ----------------------------------------------------------------------

json symbols_json(const std::vector<Symbol>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back({{"name", f.name()}, {"arity", f.arity()}});
    return out;
}

json trs_json(const Trs& trs) {
    json out = json::array();
    for (const auto& r : trs) out.push_back({{"label", r.label()}, {"lhs", to_string(r.lhs())}, {"rhs", to_string(r.rhs())}});
    return out;
}

json problem_json(const Problem& p) {
    json start = {{"kind", std::string(to_string(p.start.kind))}};
    if (p.start.kind == StartKind::Explicit) {
        start["terms"] = json::array();
        for (const auto& t : p.start.terms) start["terms"].push_back(to_string(t));
    }
    return {{"signature",
             {{"constructors", symbols_json(p.signature.constructors)},
              {"defined", symbols_json(p.signature.defined)},
              {"infix", p.signature.infix}}},
            {"strict", trs_json(p.strict)},
            {"weak", trs_json(p.weak)},
            {"q", trs_json(p.q)},
            {"start", start}};
}

json bound_json(const Bound& b) { return b.is_poly() ? json(b.degree()) : json(nullptr); }

json interp_json(const PolyInterp& interp) {
    json out = json::array();
    for (const auto& [f, poly] : interp.entries()) {
        json monomials = json::array();
        for (const auto& [m, c] : poly.terms()) {
            std::vector<unsigned> exps;
            for (std::size_t i = 0; i < f.arity(); ++i) exps.push_back(Polynomial::exponent(m, i));
            monomials.push_back({{"coeff", c}, {"exponents", exps}});
        }
        out.push_back({{"symbol", f.name()},
                       {"kind", std::string(to_string(f.kind()))},
                       {"arity", f.arity()},
                       {"monomials", monomials}});
    }
    return out;
}

json params_json(const ProcessorParams& params) {
    return std::visit(
        [](const auto& p) -> json {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, CPParams>)
                return {{"degree", p.degree}, {"coeff_max", p.coeff_max}, {"interpretation", interp_json(p.interp)}};
            else if constexpr (std::is_same_v<P, SubsetParams>)
                return {{"labels", p.labels}};
            else if constexpr (std::is_same_v<P, DGDParams>)
                return {{"s_down", p.s_down}, {"w_down", p.w_down}};
            else
                return json::object();
        },
        params);
}

json node_json(const ProofTree& pt) {
    json out;
    switch (pt.kind()) {
    case ProofTree::Kind::Axiom: out["kind"] = "axiom"; break;
    case ProofTree::Kind::Assumption:
        out["kind"] = "assumption";
        out["note"] = pt.note();
        break;
    case ProofTree::Kind::Inference:
        out["kind"] = "inference";
        out["processor"] = std::string(to_string(pt.processor()));
        out["params"] = params_json(pt.params());
        break;
    }
    out["conclusion"] = {{"problem", problem_json(pt.conclusion().problem)}, {"bound", bound_json(pt.conclusion().bound)}};
    out["premises"] = json::array();
    for (const auto& p : pt.premises()) out["premises"].push_back(node_json(p));
    return out;
}

// json in --------------------------------------------------------------------------

[[noreturn]] void bad(const std::string& what) { throw ProofFormatError("proof json: " + what); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

template <class T>
T get(const json& j, const char* name) {
    try {
        return field(j, name).get<T>();
    } catch (const json::exception& e) {
        bad(std::string("field '") + name + "': " + e.what());
    }
}

std::optional<SymbolKind> kind_from_string(std::string_view s) {
    for (auto k : {SymbolKind::Constructor, SymbolKind::Defined, SymbolKind::Marked, SymbolKind::Compound})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

std::vector<Symbol> symbols_from(const json& arr, SymbolKind kind) {
    std::vector<Symbol> out;
    for (const auto& f : arr) out.emplace_back(get<std::string>(f, "name"), get<std::size_t>(f, "arity"), kind);
    return out;
}

Trs trs_from(const json& arr, const Signature& sig) {
    Trs out;
    try {
        for (const auto& r : arr)
            out.add(Rule(parse_prefix_term(get<std::string>(r, "lhs"), sig),
                         parse_prefix_term(get<std::string>(r, "rhs"), sig), get<std::string>(r, "label")));
    } catch (const std::invalid_argument& e) {
        bad(e.what());
    } catch (const ArityMismatch& e) {
        bad(e.what());
    }
    return out;
}

Problem problem_from(const json& j) {
    Problem p;
    const json& sig = field(j, "signature");
    p.signature.constructors = symbols_from(field(sig, "constructors"), SymbolKind::Constructor);
    p.signature.defined = symbols_from(field(sig, "defined"), SymbolKind::Defined);
    p.signature.infix = get<std::vector<std::string>>(sig, "infix");
    p.strict = trs_from(field(j, "strict"), p.signature);
    p.weak = trs_from(field(j, "weak"), p.signature);
    p.q = trs_from(field(j, "q"), p.signature);
    const json& start = field(j, "start");
    const auto kind = start_kind_from_string(get<std::string>(start, "kind"));
    if (!kind) bad("unknown start kind");
    p.start.kind = *kind;
    if (*kind == StartKind::Explicit)
        for (const auto& t : field(start, "terms")) p.start.terms.push_back(parse_prefix_term(t.get<std::string>(), p.signature));
    return p;
}

Bound bound_from(const json& j) {
    if (j.is_null()) return Bound::unknown();
    if (!j.is_number_unsigned()) bad("bound must be a degree or null");
    return Bound::poly(j.get<unsigned>());
}

PolyInterp interp_from(const json& arr) {
    PolyInterp out;
    for (const auto& e : arr) {
        const auto kind = kind_from_string(get<std::string>(e, "kind"));
        if (!kind) bad("unknown symbol kind");
        const auto arity = get<std::size_t>(e, "arity");
        const Symbol f(get<std::string>(e, "symbol"), arity, *kind);
        Polynomial poly;
        for (const auto& m : field(e, "monomials")) {
            const auto exps = get<std::vector<unsigned>>(m, "exponents");
            if (exps.size() != arity) bad("monomial of " + f.display_name() + " has the wrong number of exponents");
            poly += Polynomial::monomial(get<std::int64_t>(m, "coeff"), exps);
        }
        out.set(f, std::move(poly));
    }
    return out;
}

ProcessorParams params_from(ProcessorId id, const json& j) {
    switch (id) {
    case ProcessorId::ComplexityPair:
        return CPParams{get<unsigned>(j, "degree"), get<unsigned>(j, "coeff_max"), interp_from(field(j, "interpretation"))};
    case ProcessorId::Decompose:
    case ProcessorId::PredecessorEstimation:
    case ProcessorId::RemoveWeakSuffix: return SubsetParams{get<LabelSet>(j, "labels")};
    case ProcessorId::DGDecomposition: return DGDParams{get<LabelSet>(j, "s_down"), get<LabelSet>(j, "w_down")};
    default: return NoParams{};
    }
}

ProofTree node_from(const json& j) {
    const auto kind = get<std::string>(j, "kind");
    const json& c = field(j, "conclusion");
    Judgement conclusion{problem_from(field(c, "problem")), bound_from(field(c, "bound"))};
    std::vector<ProofTree> premises;
    for (const auto& p : field(j, "premises")) premises.push_back(node_from(p));
    if (kind == "axiom") {
        ProofTree pt = ProofTree::axiom(conclusion.problem);
        pt.mutable_conclusion() = std::move(conclusion);
        pt.mutable_premises() = std::move(premises);
        return pt;
    }
    if (kind == "assumption") {
        ProofTree pt = ProofTree::assumption(std::move(conclusion), j.value("note", ""));
        pt.mutable_premises() = std::move(premises);
        return pt;
    }
    if (kind != "inference") bad("unknown node kind " + kind);
    const auto id = processor_from_string(get<std::string>(j, "processor"));
    if (!id) bad("unknown processor " + get<std::string>(j, "processor"));
    return ProofTree::inference(*id, params_from(*id, field(j, "params")), std::move(conclusion), std::move(premises));
}

// prefix terms ------------------------------------------------------------------------

class PrefixParser {
public:
    PrefixParser(std::string_view s, const Signature& sig) : s_(s), sig_(sig) {}

    Term parse() {
        Term t = term();
        if (i_ != s_.size()) fail("trailing input");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        bad(what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
    }

    static bool delim(char c) { return c == '(' || c == ')' || c == ',' || std::isspace(static_cast<unsigned char>(c)); }

    Term term() {
        const std::size_t start = i_;
        while (i_ < s_.size() && !delim(s_[i_])) ++i_;
        if (i_ == start) fail("expected a symbol");
        const std::string name(s_.substr(start, i_ - start));
        std::vector<Term> args;
        const bool call = i_ < s_.size() && s_[i_] == '(';
        if (call) {
            ++i_;
            if (i_ < s_.size() && s_[i_] == ')') {
                ++i_;
            } else {
                for (;;) {
                    args.push_back(term());
                    if (i_ >= s_.size()) fail("unterminated argument list");
                    if (s_[i_] == ')') {
                        ++i_;
                        break;
                    }
                    if (s_[i_] != ',') fail("expected ',' or ')'");
                    ++i_;
                }
            }
        }
        if (auto f = symbol(name)) return Term::apply(*f, std::move(args));
        if (call) fail("unknown symbol " + name);
        return Term::variable(name);
    }

    std::optional<Symbol> symbol(const std::string& name) const {
        if (name.size() > 2 && name.compare(0, 2, "c_") == 0 &&
            std::all_of(name.begin() + 2, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return Symbol::compound(std::stoul(name.substr(2)));
        if (name.size() > 1 && name.back() == '#') {
            auto f = sig_.lookup(name.substr(0, name.size() - 1));
            if (f && f->is_defined()) return f->marked();
            return std::nullopt;
        }
        return sig_.lookup(name);
    }

    std::string_view s_;
    const Signature& sig_;
    std::size_t i_ = 0;
};

} // namespace

std::string proof_to_text(const ProofTree& pt) {
    std::ostringstream os;
    text_node(os, pt, "");
    return os.str();
}

std::string proof_to_json(const ProofTree& pt, int indent) {
    json doc = {{"schema", 1}, {"proof", node_json(pt)}};
    return doc.dump(indent);
}

ProofTree parse_proof_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        bad(e.what());
    }
    if (get<int>(doc, "schema") != 1) bad("unsupported schema version");
    try {
        return node_from(field(doc, "proof"));
    } catch (const ArityMismatch& e) {
        bad(e.what());
    }
}

Term parse_prefix_term(std::string_view text, const Signature& sig) {
    try {
        return PrefixParser(text, sig).parse();
    } catch (const ArityMismatch& e) {
        bad(e.what());
    }
}

} // namespace tcomb
