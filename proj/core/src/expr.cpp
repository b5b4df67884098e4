#include "charp/expr.hpp"

#include <cctype>
#include <variant>

namespace charp {

namespace {

struct Token {
    enum Kind { Int, Ident, Op, End } kind;
    std::string text;
    std::int64_t num = 0;
    char op = 0;
    size_t pos = 0;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Token t;
            t.kind = Token::Int;
            t.text = s.substr(i, j - i);
            t.num = std::stoll(t.text);
            t.pos = i;
            out.push_back(t);
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            Token t;
            t.kind = Token::Ident;
            t.text = s.substr(i, j - i);
            t.pos = i;
            out.push_back(t);
            i = j;
            continue;
        }
        if (std::string("+-*/^(),[]=").find(c) != std::string::npos) {
            Token t;
            t.kind = Token::Op;
            t.op = c;
            t.text = std::string(1, c);
            t.pos = i;
            out.push_back(t);
            ++i;
            continue;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
    }
    Token end;
    end.kind = Token::End;
    end.pos = s.size();
    out.push_back(end);
    return out;
}

struct Cursor {
    const std::vector<Token>& toks;
    size_t i = 0;
    const Token& peek() const { return toks[i]; }
    const Token& next() { return toks[i++]; }
    bool at_op(char c) const { return toks[i].kind == Token::Op && toks[i].op == c; }
    void expect_op(char c) {
        if (!at_op(c))
            throw ParseError(std::string("expected '") + c + "'", toks[i].pos);
        ++i;
    }
    std::string expect_ident() {
        if (toks[i].kind != Token::Ident) throw ParseError("expected a name", toks[i].pos);
        return toks[i++].text;
    }
    std::int64_t expect_int() {
        if (toks[i].kind != Token::Int) throw ParseError("expected an integer", toks[i].pos);
        return toks[i++].num;
    }
    void expect_end() const {
        if (toks[i].kind != Token::End)
            throw ParseError("unexpected trailing input", toks[i].pos);
    }
};

// ---------------------------------------------------------------------------
// Domains: what identifiers mean and which operations exist.

struct TowerDomain {
    TowerPtr tower;
    std::string poly_var;  // empty when polynomials are not allowed
    using Scalar = FieldElement;
    using FormT = DifferentialForm;
    static constexpr bool has_forms = true;
    Scalar from_int(std::int64_t n) const { return tower->from_int(n); }
    std::optional<Scalar> ident(const std::string& name) const {
        if (name == "w" && tower->base_is_finite() && tower->finite_base()->degree() >= 2)
            return tower->generator();
        if (auto i = tower->basis_index(name)) return tower->basis_element(*i);
        return std::nullopt;
    }
    Scalar big_o(const std::string& var, std::int64_t k, size_t pos) const {
        for (std::uint32_t j = 0; j < tower->laurent_count(); ++j)
            if (tower->laurent_vars()[j] == var) return tower->big_o(j + 1, k);
        throw ParseError("O() expects a Laurent variable, got '" + var + "'", pos);
    }
    FormT dlog(const Scalar& x) const { return charp::dlog(x); }
    FormT form_of(const Scalar& x) const {
        return FormT::from_terms(TowerFormContext{tower}, 0, {{BasisSubset{}, x}});
    }
    Scalar div(const Scalar& a, const Scalar& b) const { return FieldElement::div(a, b); }
    Scalar pow(const Scalar& a, std::int64_t n) const { return a.pow(n); }
};

struct ExtDomain {
    ExtensionPtr ext;
    std::string poly_var;
    using Scalar = ExtElem;
    using FormT = ExtensionForm;
    static constexpr bool has_forms = true;
    Scalar from_int(std::int64_t n) const { return ext->from_int(n); }
    std::optional<Scalar> ident(const std::string& name) const {
        if (name == ext->gen_name()) return ext->generator();
        for (std::uint32_t i = 0; i < ext->rank(); ++i)
            if (ext->basis_name(i) == name) return ext->basis_element(i);
        TowerDomain base{ext->base(), ""};
        if (auto s = base.ident(name)) return lift_element(ext, *s);
        return std::nullopt;
    }
    Scalar big_o(const std::string&, std::int64_t, size_t pos) const {
        throw ParseError("O() tags are not available over extensions", pos);
    }
    FormT dlog(const Scalar& x) const {
        return FormT::dlog(ExtFormContext<FieldElement>{ext}, x);
    }
    FormT form_of(const Scalar& x) const {
        return FormT::from_terms(ExtFormContext<FieldElement>{ext}, 0, {{BasisSubset{}, x}});
    }
    Scalar div(const Scalar& a, const Scalar& b) const { return a * b.inv(); }
    Scalar pow(const Scalar& a, std::int64_t n) const {
        if (n >= 0) return a.pow(std::uint64_t(n));
        return a.inv().pow(std::uint64_t(-n));
    }
};

struct NoForm {
    bool is_zero() const { return true; }
};

struct SeriesDomain {
    SeriesRingPtr ring;
    std::string poly_var;
    using Scalar = TruncatedSeries;
    using FormT = NoForm;
    static constexpr bool has_forms = false;
    Scalar from_int(std::int64_t n) const { return TruncatedSeries::from_int(ring, n); }
    std::optional<Scalar> ident(const std::string& name) const {
        if (name == "w" && ring->coeff_field()->degree() >= 2)
            return TruncatedSeries::constant(ring, ring->coeff_field()->generator());
        if (auto i = ring->find_var(name)) return TruncatedSeries::variable(ring, *i);
        return std::nullopt;
    }
    Scalar big_o(const std::string&, std::int64_t, size_t pos) const {
        throw ParseError("O() tags are not available in series contexts", pos);
    }
    NoForm dlog(const Scalar&) const { return {}; }
    NoForm form_of(const Scalar&) const { return {}; }
    Scalar div(const Scalar& a, const Scalar& b) const { return a * b.inverse(); }
    Scalar pow(const Scalar& a, std::int64_t n) const {
        if (n < 0) throw DomainError("negative powers are not available in series contexts");
        return a.pow(std::uint32_t(n));
    }
};

template <class Dom>
struct Evaluator {
    using S = typename Dom::Scalar;
    using F = typename Dom::FormT;
    using Poly = std::vector<S>;
    struct Val {
        std::variant<std::int64_t, S, F, Poly> v;
        size_t pos = 0;
    };

    Dom dom;
    Cursor& cur;

    S to_scalar(const Val& x) const {
        if (auto* n = std::get_if<std::int64_t>(&x.v)) return dom.from_int(*n);
        if (auto* s = std::get_if<S>(&x.v)) return *s;
        throw ParseError("expected a ring element here", x.pos);
    }
    F to_form(const Val& x) const {
        if constexpr (Dom::has_forms) {
            if (auto* f = std::get_if<F>(&x.v)) return *f;
            return dom.form_of(to_scalar(x));
        } else {
            throw ParseError("forms are not available in this context", x.pos);
        }
    }
    Poly to_poly(const Val& x) const {
        if (auto* p = std::get_if<Poly>(&x.v)) return *p;
        return Poly{to_scalar(x)};
    }
    static bool is_form(const Val& x) { return std::holds_alternative<F>(x.v); }
    static bool is_poly(const Val& x) { return std::holds_alternative<Poly>(x.v); }
    static bool is_int(const Val& x) { return std::holds_alternative<std::int64_t>(x.v); }

    Val add(const Val& a, const Val& b, bool subtract) {
        if constexpr (Dom::has_forms) {
            if (is_form(a) || is_form(b)) {
                F fa = to_form(a), fb = to_form(b);
                return {subtract ? fa - fb : fa + fb, a.pos};
            }
        }
        if (is_poly(a) || is_poly(b)) {
            Poly pa = to_poly(a), pb = to_poly(b);
            Poly out = pa;
            if (out.size() < pb.size()) out.resize(pb.size(), dom.from_int(0));
            for (size_t i = 0; i < pb.size(); ++i)
                out[i] = subtract ? out[i] - pb[i] : out[i] + pb[i];
            return {std::move(out), a.pos};
        }
        if (is_int(a) && is_int(b)) {
            std::int64_t x = std::get<std::int64_t>(a.v), y = std::get<std::int64_t>(b.v);
            return {subtract ? x - y : x + y, a.pos};
        }
        S sa = to_scalar(a), sb = to_scalar(b);
        return {subtract ? sa - sb : sa + sb, a.pos};
    }

    Val mul(const Val& a, const Val& b) {
        if constexpr (Dom::has_forms) {
            if (is_form(a) && is_form(b))
                throw ParseError("use '^' to wedge two forms", b.pos);
            if (is_form(a)) return {std::get<F>(a.v).scale(to_scalar(b)), a.pos};
            if (is_form(b)) return {std::get<F>(b.v).scale(to_scalar(a)), a.pos};
        }
        if (is_poly(a) || is_poly(b)) {
            Poly pa = to_poly(a), pb = to_poly(b);
            Poly out(pa.size() + pb.size() - 1, dom.from_int(0));
            for (size_t i = 0; i < pa.size(); ++i)
                for (size_t j = 0; j < pb.size(); ++j) out[i + j] = out[i + j] + pa[i] * pb[j];
            return {std::move(out), a.pos};
        }
        if (is_int(a) && is_int(b))
            return {std::get<std::int64_t>(a.v) * std::get<std::int64_t>(b.v), a.pos};
        return {to_scalar(a) * to_scalar(b), a.pos};
    }

    Val divide(const Val& a, const Val& b) {
        if (is_form(a) || is_form(b)) throw ParseError("cannot divide forms", b.pos);
        if (is_poly(a) || is_poly(b)) throw ParseError("cannot divide polynomials", b.pos);
        return {dom.div(to_scalar(a), to_scalar(b)), a.pos};
    }

    Val power(const Val& a, const Val& b) {
        if constexpr (Dom::has_forms) {
            if (is_form(a) && is_form(b))
                return {wedge(std::get<F>(a.v), std::get<F>(b.v)), a.pos};
            if (is_form(a) || is_form(b))
                throw ParseError("wedge needs forms on both sides", b.pos);
        }
        if (!is_int(b)) throw ParseError("exponent must be an integer", b.pos);
        std::int64_t n = std::get<std::int64_t>(b.v);
        if (is_poly(a)) {
            if (n < 0) throw ParseError("negative power of a polynomial", b.pos);
            Poly base = std::get<Poly>(a.v);
            Val acc{Poly{dom.from_int(1)}, a.pos};
            Val bb{base, a.pos};
            for (std::int64_t i = 0; i < n; ++i) acc = mul(acc, bb);
            return acc;
        }
        if (is_int(a)) {
            std::int64_t base = std::get<std::int64_t>(a.v), r = 1;
            if (n < 0) throw ParseError("negative power of an integer", b.pos);
            for (std::int64_t i = 0; i < n; ++i) r *= base;
            return {r, a.pos};
        }
        return {dom.pow(to_scalar(a), n), a.pos};
    }

    Val negate(const Val& a) {
        if constexpr (Dom::has_forms) {
            if (is_form(a)) return {-std::get<F>(a.v), a.pos};
        }
        if (is_poly(a)) {
            Poly p = std::get<Poly>(a.v);
            for (auto& c : p) c = -c;
            return {std::move(p), a.pos};
        }
        if (is_int(a)) return {-std::get<std::int64_t>(a.v), a.pos};
        return {-to_scalar(a), a.pos};
    }

    Val expr() {
        Val v = term();
        while (cur.at_op('+') || cur.at_op('-')) {
            bool sub = cur.next().op == '-';
            v = add(v, term(), sub);
        }
        return v;
    }

    Val term() {
        Val v = factor();
        while (cur.at_op('*') || cur.at_op('/')) {
            char op = cur.next().op;
            Val rhs = factor();
            v = op == '*' ? mul(v, rhs) : divide(v, rhs);
        }
        return v;
    }

    Val factor() {
        if (cur.at_op('-')) {
            cur.next();
            return negate(factor());
        }
        return power_chain();
    }

    Val power_chain() {
        Val v = atom();
        while (cur.at_op('^')) {
            cur.next();
            bool neg = false;
            if (cur.at_op('-')) {
                cur.next();
                neg = true;
            }
            Val rhs = atom();
            if (neg) rhs = negate(rhs);
            v = power(v, rhs);
        }
        return v;
    }

    Val atom() {
        const Token& t = cur.peek();
        if (t.kind == Token::Int) {
            cur.next();
            return {t.num, t.pos};
        }
        if (t.kind == Token::Op && t.op == '(') {
            cur.next();
            Val v = expr();
            cur.expect_op(')');
            return v;
        }
        if (t.kind == Token::Ident) {
            cur.next();
            if (t.text == "O" && cur.at_op('(')) {
                cur.next();
                std::string var = cur.expect_ident();
                std::int64_t k = 1;
                if (cur.at_op('^')) {
                    cur.next();
                    bool neg = false;
                    if (cur.at_op('-')) {
                        cur.next();
                        neg = true;
                    }
                    k = cur.expect_int();
                    if (neg) k = -k;
                }
                cur.expect_op(')');
                return {dom.big_o(var, k, t.pos), t.pos};
            }
            if (t.text == "dlog" && cur.at_op('(')) {
                cur.next();
                Val v = expr();
                cur.expect_op(')');
                if constexpr (Dom::has_forms) {
                    return {dom.dlog(to_scalar(v)), t.pos};
                } else {
                    throw ParseError("dlog is not available in this context", t.pos);
                }
            }
            if (cur.at_op('(')) throw ParseError("unknown function '" + t.text + "'", t.pos);
            if (!dom.poly_var.empty() && t.text == dom.poly_var) {
                Poly p{dom.from_int(0), dom.from_int(1)};
                return {std::move(p), t.pos};
            }
            if (auto s = dom.ident(t.text)) return {*s, t.pos};
            throw ParseError("unbound variable '" + t.text + "'", t.pos);
        }
        throw ParseError("expected an expression", t.pos);
    }
};

template <class Dom>
typename Evaluator<Dom>::Val eval_full(Dom dom, const std::string& text) {
    auto toks = lex(text);
    Cursor cur{toks};
    Evaluator<Dom> ev{std::move(dom), cur};
    auto v = ev.expr();
    cur.expect_end();
    return v;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::int64_t q, size_t pos) {
    if (q < 2) throw ParseError("field size must be >= 2", pos);
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; std::int64_t(d) * d <= q; ++d)
        if (q % d == 0) {
            p = d;
            break;
        }
    if (p == 0) return {std::uint32_t(q), 1};
    std::uint32_t e = 0;
    std::int64_t m = q;
    while (m % p == 0) {
        m /= p;
        ++e;
    }
    if (m != 1)
        throw ParseError("field size " + std::to_string(q) + " is not a prime power", pos);
    return {p, e};
}

}  // namespace

TowerPtr parse_tower(const std::string& text) {
    auto toks = lex(text);
    Cursor cur{toks};
    std::string head = cur.expect_ident();
    BaseDescriptor base;
    std::uint32_t p = 0;
    if (head == "Frac") {
        std::string gf = cur.expect_ident();
        if (gf != "GF") throw ParseError("expected GF after Frac", cur.peek().pos);
        cur.expect_op('(');
        auto [pp, e] = prime_power_split(cur.expect_int(), cur.peek().pos);
        if (e != 1)
            throw ParseError("rational-function bases live over the prime field", cur.peek().pos);
        p = pp;
        cur.expect_op(')');
        cur.expect_op('[');
        std::vector<std::string> vars;
        vars.push_back(cur.expect_ident());
        while (cur.at_op(',')) {
            cur.next();
            vars.push_back(cur.expect_ident());
        }
        cur.expect_op(']');
        base = RationalFunctionBase{std::move(vars)};
    } else if (head == "GF") {
        cur.expect_op('(');
        auto [pp, e] = prime_power_split(cur.expect_int(), cur.peek().pos);
        p = pp;
        cur.expect_op(')');
        base = FiniteFieldBase{FqField::make(p, e)};
    } else {
        throw ParseError("expected GF(...) or Frac GF(...)", toks[0].pos);
    }
    std::vector<std::string> layers;
    while (cur.at_op('(')) {
        cur.next();
        cur.expect_op('(');
        layers.push_back(cur.expect_ident());
        cur.expect_op(')');
        cur.expect_op(')');
    }
    std::int64_t prec = 16;
    if (cur.peek().kind == Token::Ident && cur.peek().text == "P") {
        cur.next();
        cur.expect_op('=');
        prec = cur.expect_int();
    }
    cur.expect_end();
    return FieldTower::make(p, std::move(base), std::move(layers), prec);
}

SeriesRingPtr parse_series_ring(const std::string& text) {
    auto toks = lex(text);
    Cursor cur{toks};
    std::string gf = cur.expect_ident();
    if (gf != "GF") throw ParseError("expected GF(...)", toks[0].pos);
    cur.expect_op('(');
    auto [p, e] = prime_power_split(cur.expect_int(), cur.peek().pos);
    cur.expect_op(')');
    std::vector<std::vector<std::string>> groups;
    while (cur.at_op('[')) {
        cur.next();
        cur.expect_op('[');
        std::vector<std::string> g;
        g.push_back(cur.expect_ident());
        while (cur.at_op(',')) {
            cur.next();
            g.push_back(cur.expect_ident());
        }
        cur.expect_op(']');
        cur.expect_op(']');
        groups.push_back(std::move(g));
    }
    if (groups.empty()) throw ParseError("expected at least one [[...]] group", cur.peek().pos);
    std::uint32_t trunc = 12;
    if (cur.peek().kind == Token::Ident && cur.peek().text == "D") {
        cur.next();
        cur.expect_op('=');
        trunc = std::uint32_t(cur.expect_int());
    }
    cur.expect_end();
    std::optional<std::string> u_name;
    std::vector<std::string> rest;
    if (groups.size() >= 2) {
        if (groups[0].size() != 1)
            throw ParseError("the coefficient-ring group must hold a single variable", 0);
        u_name = groups[0][0];
        for (size_t i = 1; i < groups.size(); ++i)
            rest.insert(rest.end(), groups[i].begin(), groups[i].end());
    } else {
        rest = groups[0];
    }
    if (rest.empty()) throw ParseError("missing the distinguished variable", 0);
    std::string t_name = rest.back();
    rest.pop_back();
    return SeriesRing::make(FqField::make(p, e), u_name, rest, t_name, trunc);
}

ExtensionPtr parse_extension(const std::string& text, const TowerPtr& tower) {
    auto toks = lex(text);
    Cursor cur{toks};
    std::string kind = cur.expect_ident();
    cur.expect_op('(');
    std::string gen = cur.expect_ident();
    cur.expect_op(',');
    if (kind == "radicial") {
        std::string b = cur.expect_ident();
        cur.expect_op(')');
        cur.expect_end();
        auto idx = tower->basis_index(b);
        if (!idx) throw ParseError("'" + b + "' is not a p-basis member", 0);
        return Extension::make_radicial(tower, *idx, gen);
    }
    if (kind != "etale") throw ParseError("expected radicial(...) or etale(...)", toks[0].pos);
    // The minimal polynomial is the rest of the argument list, up to the
    // matching close paren.
    size_t depth = 1;
    size_t start = cur.peek().pos;
    size_t end = start;
    while (cur.peek().kind != Token::End) {
        const Token& t = cur.peek();
        if (t.kind == Token::Op && t.op == '(') ++depth;
        if (t.kind == Token::Op && t.op == ')') {
            --depth;
            if (depth == 0) {
                end = t.pos;
                cur.next();
                break;
            }
        }
        cur.next();
    }
    if (depth != 0) throw ParseError("unbalanced parentheses in etale descriptor", start);
    cur.expect_end();
    auto poly = parse_element_poly(text.substr(start, end - start), tower, gen);
    return Extension::make_etale(tower, std::move(poly), gen);
}

FieldElement parse_element(const std::string& text, const TowerPtr& tower) {
    auto v = eval_full(TowerDomain{tower, ""}, text);
    if (std::holds_alternative<DifferentialForm>(v.v))
        throw ParseError("expected an element, got a form", v.pos);
    if (auto* n = std::get_if<std::int64_t>(&v.v)) return tower->from_int(*n);
    return std::get<FieldElement>(v.v);
}

DifferentialForm parse_form(const std::string& text, const TowerPtr& tower) {
    auto v = eval_full(TowerDomain{tower, ""}, text);
    if (auto* f = std::get_if<DifferentialForm>(&v.v)) return *f;
    FieldElement x = std::holds_alternative<std::int64_t>(v.v)
                         ? tower->from_int(std::get<std::int64_t>(v.v))
                         : std::get<FieldElement>(v.v);
    return DifferentialForm::from_terms(TowerFormContext{tower}, 0, {{BasisSubset{}, x}});
}

ExtElem parse_ext_element(const std::string& text, const ExtensionPtr& ext) {
    auto v = eval_full(ExtDomain{ext, ""}, text);
    if (auto* n = std::get_if<std::int64_t>(&v.v)) return ext->from_int(*n);
    if (auto* s = std::get_if<ExtElem>(&v.v)) return *s;
    throw ParseError("expected an element of the extension", v.pos);
}

ExtensionForm parse_ext_form(const std::string& text, const ExtensionPtr& ext) {
    auto v = eval_full(ExtDomain{ext, ""}, text);
    if (auto* f = std::get_if<ExtensionForm>(&v.v)) return *f;
    ExtElem x = std::holds_alternative<std::int64_t>(v.v)
                    ? ext->from_int(std::get<std::int64_t>(v.v))
                    : std::get<ExtElem>(v.v);
    return ExtensionForm::from_terms(ExtFormContext<FieldElement>{ext}, 0,
                                     {{BasisSubset{}, x}});
}

TruncatedSeries parse_series(const std::string& text, const SeriesRingPtr& ring) {
    auto v = eval_full(SeriesDomain{ring, ""}, text);
    if (auto* n = std::get_if<std::int64_t>(&v.v)) return TruncatedSeries::from_int(ring, *n);
    if (auto* s = std::get_if<TruncatedSeries>(&v.v)) return *s;
    throw ParseError("expected a series", v.pos);
}

std::vector<TruncatedSeries> parse_series_poly(const std::string& text,
                                               const SeriesRingPtr& ring,
                                               const std::string& var) {
    if (ring->find_var(var))
        throw ParseError("polynomial variable '" + var + "' collides with a ring variable", 0);
    auto v = eval_full(SeriesDomain{ring, var}, text);
    if (auto* p = std::get_if<std::vector<TruncatedSeries>>(&v.v)) return *p;
    if (auto* n = std::get_if<std::int64_t>(&v.v)) return {TruncatedSeries::from_int(ring, *n)};
    if (auto* s = std::get_if<TruncatedSeries>(&v.v)) return {*s};
    throw ParseError("expected a polynomial", v.pos);
}

std::vector<FieldElement> parse_element_poly(const std::string& text, const TowerPtr& tower,
                                             const std::string& var) {
    auto v = eval_full(TowerDomain{tower, var}, text);
    if (auto* p = std::get_if<std::vector<FieldElement>>(&v.v)) return *p;
    if (auto* n = std::get_if<std::int64_t>(&v.v)) return {tower->from_int(*n)};
    if (auto* s = std::get_if<FieldElement>(&v.v)) return {*s};
    throw ParseError("expected a polynomial", v.pos);
}

std::string tower_to_string(const FieldTower& tower) {
    std::string s;
    if (tower.base_is_finite()) {
        s = "GF(" + std::to_string(tower.finite_base()->q()) + ")";
    } else {
        s = "Frac GF(" + std::to_string(tower.p()) + ")[";
        const auto& vars = std::get<RationalFunctionBase>(tower.base()).vars;
        for (size_t i = 0; i < vars.size(); ++i) {
            if (i) s += ",";
            s += vars[i];
        }
        s += "]";
    }
    for (auto& v : tower.laurent_vars()) s += "((" + v + "))";
    s += " P=" + std::to_string(tower.default_precision());
    return s;
}

std::string series_ring_to_string(const SeriesRing& ring) {
    std::string s = "GF(" + std::to_string(ring.coeff_field()->q()) + ")";
    std::uint32_t i = 0;
    if (ring.has_u()) {
        s += "[[" + ring.var_name(0) + "]]";
        i = 1;
    }
    s += "[[";
    for (std::uint32_t j = i; j < ring.nvars(); ++j) {
        if (j > i) s += ",";
        s += ring.var_name(j);
    }
    s += "]] D=" + std::to_string(ring.truncation());
    return s;
}

}  // namespace charp
