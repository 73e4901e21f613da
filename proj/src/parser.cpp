#include "monideal/parser.hpp"

#include <cctype>
#include <cstdint>
#include <limits>

#include <json.hpp>

namespace monideal {

namespace {

struct Token {
    enum class Kind { ident, integer, comma, star, caret, lparen, rparen, end };
    Kind kind;
    std::string text;
    std::int64_t value = 0;
    int line = 1;
    int col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < s_.size() &&
               std::isspace(static_cast<unsigned char>(s_[pos_])))
            bump();
        tok_.line = line_;
        tok_.col = col_;
        tok_.text.clear();
        tok_.value = 0;
        if (pos_ >= s_.size()) {
            tok_.kind = Token::Kind::end;
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Kind::ident;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                    s_[pos_] == '_')) {
                tok_.text += s_[pos_];
                bump();
            }
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            tok_.kind = Token::Kind::integer;
            std::int64_t v = 0;
            while (pos_ < s_.size() &&
                   std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                int d = s_[pos_] - '0';
                if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10)
                    throw parse_error("integer literal overflows 64 bits",
                                      tok_.line, tok_.col);
                v = v * 10 + d;
                tok_.text += s_[pos_];
                bump();
            }
            tok_.value = v;
            return;
        }
        switch (c) {
        case ',': tok_.kind = Token::Kind::comma; break;
        case '*': tok_.kind = Token::Kind::star; break;
        case '^': tok_.kind = Token::Kind::caret; break;
        case '(': tok_.kind = Token::Kind::lparen; break;
        case ')': tok_.kind = Token::Kind::rparen; break;
        default:
            throw parse_error(std::string("unexpected character '") + c + "'",
                              line_, col_);
        }
        tok_.text = c;
        bump();
    }

    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token tok_;
};

[[noreturn]] void fail(const Token& t, const std::string& what) {
    std::string got = t.kind == Token::Kind::end
                          ? "end of input"
                          : "'" + t.text + "'";
    throw parse_error("expected " + what + ", got " + got, t.line, t.col);
}

void expect_end(Lexer& lx) {
    if (lx.peek().kind != Token::Kind::end)
        fail(lx.peek(), "end of input");
}

std::size_t variable_index(const Ring& ring, const Token& t) {
    auto idx = ring.index_of(t.text);
    if (!idx)
        throw parse_error("unknown variable '" + t.text + "'", t.line, t.col);
    return *idx;
}

// factor ("*" factor)*, or the literal "1"
Monomial parse_monom_body(Lexer& lx, const Ring& ring) {
    if (lx.peek().kind == Token::Kind::integer) {
        Token t = lx.take();
        if (t.value != 1)
            throw parse_error("a monomial is '1' or a product of factors",
                              t.line, t.col);
        if (lx.peek().kind == Token::Kind::star)
            fail(lx.peek(), "',' or end of monomial after '1'");
        return Monomial::unit(ring.size());
    }
    std::vector<std::int64_t> exps(ring.size(), 0);
    for (;;) {
        if (lx.peek().kind != Token::Kind::ident)
            fail(lx.peek(), "variable name");
        Token name = lx.take();
        std::size_t idx = variable_index(ring, name);
        std::int64_t e = 1;
        if (lx.peek().kind == Token::Kind::caret) {
            lx.take();
            if (lx.peek().kind != Token::Kind::integer)
                fail(lx.peek(), "exponent");
            e = lx.take().value;
        }
        try {
            exps[idx] = checked_add(exps[idx], e);
        } catch (const overflow_error&) {
            throw parse_error("exponent overflow for variable '" + name.text +
                                  "'",
                              name.line, name.col);
        }
        if (lx.peek().kind != Token::Kind::star)
            break;
        lx.take();
    }
    return Monomial(std::move(exps));
}

} // namespace

Ring parse_ring(std::string_view text) {
    Lexer lx(text);
    std::vector<std::string> names;
    for (;;) {
        if (lx.peek().kind != Token::Kind::ident)
            fail(lx.peek(), "variable name");
        Token t = lx.take();
        for (const auto& seen : names)
            if (seen == t.text)
                throw parse_error("duplicate variable '" + t.text + "'",
                                  t.line, t.col);
        names.push_back(t.text);
        if (lx.peek().kind != Token::Kind::comma)
            break;
        lx.take();
    }
    expect_end(lx);
    return Ring(std::move(names));
}

Monomial parse_monomial(std::string_view text, const Ring& ring) {
    Lexer lx(text);
    Monomial m = parse_monom_body(lx, ring);
    expect_end(lx);
    return m;
}

MonomialIdeal parse_ideal(std::string_view text, const Ring& ring) {
    Lexer lx(text);
    bool wrapped = false;
    if (lx.peek().kind == Token::Kind::lparen) {
        wrapped = true;
        lx.take();
    }
    if (lx.peek().kind == Token::Kind::integer && lx.peek().value == 0) {
        Token t = lx.take();
        (void)t;
        if (wrapped) {
            if (lx.peek().kind != Token::Kind::rparen)
                fail(lx.peek(), "')'");
            lx.take();
        }
        expect_end(lx);
        return MonomialIdeal::zero(ring);
    }
    std::vector<Monomial> gens;
    for (;;) {
        gens.push_back(parse_monom_body(lx, ring));
        if (lx.peek().kind != Token::Kind::comma)
            break;
        lx.take();
    }
    if (wrapped) {
        if (lx.peek().kind != Token::Kind::rparen)
            fail(lx.peek(), "')'");
        lx.take();
    }
    expect_end(lx);
    return MonomialIdeal::from_generators(ring, std::move(gens));
}

MonomialPrime parse_prime(std::string_view text, const Ring& ring) {
    Lexer lx(text);
    if (lx.peek().kind != Token::Kind::lparen)
        fail(lx.peek(), "'('");
    lx.take();
    std::vector<std::size_t> vars;
    for (;;) {
        if (lx.peek().kind != Token::Kind::ident)
            fail(lx.peek(), "variable name");
        Token t = lx.take();
        std::size_t idx = variable_index(ring, t);
        for (std::size_t seen : vars)
            if (seen == idx)
                throw parse_error("duplicate variable '" + t.text + "'",
                                  t.line, t.col);
        vars.push_back(idx);
        if (lx.peek().kind != Token::Kind::comma)
            break;
        lx.take();
    }
    if (lx.peek().kind != Token::Kind::rparen)
        fail(lx.peek(), "')'");
    lx.take();
    expect_end(lx);
    return MonomialPrime(ring, std::move(vars));
}

std::string print_canonical(const Ring& ring) {
    std::string out;
    for (std::size_t i = 0; i < ring.size(); ++i) {
        if (i)
            out += ", ";
        out += ring.name(i);
    }
    return out;
}

std::string print_canonical(const Monomial& m, const Ring& ring) {
    if (m.size() != ring.size())
        throw ring_mismatch("monomial does not fit the ring");
    if (m.is_unit())
        return "1";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!first)
            out += "*";
        first = false;
        out += ring.name(i);
        if (m[i] != 1) {
            out += "^";
            out += std::to_string(m[i]);
        }
    }
    return out;
}

std::string print_canonical(const MonomialIdeal& I) {
    if (I.is_zero())
        return "0";
    std::string out;
    for (std::size_t i = 0; i < I.generators().size(); ++i) {
        if (i)
            out += ", ";
        out += print_canonical(I.generators()[i], I.ring());
    }
    return out;
}

std::string print_canonical(const MonomialPrime& p) {
    std::string out = "(";
    for (std::size_t i = 0; i < p.variables().size(); ++i) {
        if (i)
            out += ", ";
        out += p.ring().name(p.variables()[i]);
    }
    out += ")";
    return out;
}

namespace {

using nlohmann::json;

[[noreturn]] void json_fail(std::string_view text, std::size_t byte,
                            const std::string& msg) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    throw parse_error(msg, line, col);
}

json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        json_fail(text, e.byte > 0 ? e.byte - 1 : 0,
                  std::string("malformed JSON: ") + e.what());
    }
}

void check_format(const json& j, std::string_view text) {
    if (!j.is_object())
        json_fail(text, 0, "JSON document must be an object");
    if (!j.contains("format") || !j["format"].is_number_integer() ||
        j["format"].get<std::int64_t>() != 1)
        json_fail(text, 0, "missing or unsupported \"format\" (expected 1)");
}

Ring ring_from_json_field(const json& j, std::string_view text) {
    if (!j.contains("ring") || !j["ring"].is_array())
        json_fail(text, 0, "missing \"ring\" array");
    std::vector<std::string> names;
    for (const auto& v : j["ring"]) {
        if (!v.is_string())
            json_fail(text, 0, "ring entries must be strings");
        names.push_back(v.get<std::string>());
    }
    try {
        return Ring(std::move(names));
    } catch (const domain_error& e) {
        json_fail(text, 0, std::string("invalid ring: ") + e.what());
    }
}

} // namespace

std::string to_json(const MonomialIdeal& I) {
    json j;
    j["format"] = 1;
    j["ring"] = I.ring().variables();
    json gens = json::array();
    for (const auto& g : I.generators())
        gens.push_back(g.exponents());
    j["generators"] = std::move(gens);
    return j.dump(2);
}

MonomialIdeal ideal_from_json(std::string_view text) {
    json j = parse_document(text);
    check_format(j, text);
    Ring ring = ring_from_json_field(j, text);
    if (!j.contains("generators") || !j["generators"].is_array())
        json_fail(text, 0, "missing \"generators\" array");
    std::vector<Monomial> gens;
    for (const auto& row : j["generators"]) {
        if (!row.is_array() || row.size() != ring.size())
            json_fail(text, 0, "generator rows must have one exponent per "
                               "ring variable");
        std::vector<std::int64_t> exps;
        for (const auto& v : row) {
            if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
                json_fail(text, 0,
                          "exponents must be non-negative 64-bit integers");
            exps.push_back(v.get<std::int64_t>());
        }
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::from_generators(std::move(ring), std::move(gens));
}

std::string to_json(const MonomialPrime& p) {
    json j;
    j["format"] = 1;
    j["ring"] = p.ring().variables();
    json vars = json::array();
    for (std::size_t v : p.variables())
        vars.push_back(p.ring().name(v));
    j["prime"] = std::move(vars);
    return j.dump(2);
}

namespace {

json prime_names(const MonomialPrime& p) {
    json names = json::array();
    for (std::size_t v : p.variables())
        names.push_back(p.ring().name(v));
    return names;
}

json pattern_entries(const ColonPattern& pattern) {
    json entries = json::array();
    for (ColonEq e : pattern.entries)
        entries.push_back(e == ColonEq::equal ? "eq" : "neq");
    return entries;
}

json witness_or_null(const std::optional<Witness>& w) {
    if (!w)
        return nullptr;
    return json::array({w->a, w->b, w->c});
}

} // namespace

std::string to_json(const ColonPattern& pattern) {
    json j;
    j["format"] = 1;
    j["fingerprint"] = pattern.fingerprint;
    j["horizon"] = pattern.horizon;
    j["entries"] = pattern_entries(pattern);
    return j.dump(2);
}

std::string to_json(const SpiReport& report) {
    json j;
    j["format"] = 1;
    j["observed_spi"] = report.observed_spi;
    j["all_equal_from_1"] = report.all_equal_from_1;
    j["horizon"] = report.horizon;
    j["certified"] = report.certified;
    j["trailing_equal_run"] = report.trailing_equal_run;
    return j.dump(2);
}

std::string to_json(const FluctuationVerdict& verdict) {
    json j;
    j["format"] = 1;
    switch (verdict.verdict) {
    case FluctuationKind::none: j["verdict"] = "none"; break;
    case FluctuationKind::case_i: j["verdict"] = "case_i"; break;
    case FluctuationKind::case_ii: j["verdict"] = "case_ii"; break;
    case FluctuationKind::both: j["verdict"] = "both"; break;
    }
    j["case_i"] = witness_or_null(verdict.case_i);
    j["case_ii"] = witness_or_null(verdict.case_ii);
    return j.dump(2);
}

std::string to_json(const Decomposition& dec) {
    json j;
    j["format"] = 1;
    j["ring"] = dec.source.ring().variables();
    json comps = json::array();
    for (const auto& c : dec.components) {
        json comp = json::array();
        for (const auto& [var, exp] : c.pure_powers())
            comp.push_back(json::array({c.ring().name(var), exp}));
        comps.push_back(std::move(comp));
    }
    j["components"] = std::move(comps);
    return j.dump(2);
}

std::string
to_json(const std::vector<std::pair<std::int64_t, std::vector<MonomialPrime>>>&
            ass_by_power,
        const Ring& ring) {
    json j;
    j["format"] = 1;
    j["ring"] = ring.variables();
    json powers = json::array();
    for (const auto& [s, primes] : ass_by_power) {
        json entry;
        entry["s"] = s;
        json ass = json::array();
        for (const auto& p : primes)
            ass.push_back(prime_names(p));
        entry["ass"] = std::move(ass);
        powers.push_back(std::move(entry));
    }
    j["powers"] = std::move(powers);
    return j.dump(2);
}

MonomialPrime prime_from_json(std::string_view text) {
    json j = parse_document(text);
    check_format(j, text);
    Ring ring = ring_from_json_field(j, text);
    if (!j.contains("prime") || !j["prime"].is_array())
        json_fail(text, 0, "missing \"prime\" array");
    std::vector<std::size_t> vars;
    for (const auto& v : j["prime"]) {
        if (!v.is_string())
            json_fail(text, 0, "prime entries must be variable names");
        auto idx = ring.index_of(v.get<std::string>());
        if (!idx)
            json_fail(text, 0,
                      "unknown variable '" + v.get<std::string>() + "'");
        vars.push_back(*idx);
    }
    try {
        return MonomialPrime(std::move(ring), std::move(vars));
    } catch (const domain_error& e) {
        json_fail(text, 0, std::string("invalid prime: ") + e.what());
    }
}

} // namespace monideal
