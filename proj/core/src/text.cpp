#include "vernon/text.hpp"

#include <cctype>
#include <vector>

#include "vernon/error.hpp"

namespace vernon {

std::optional<Decoration> Workspace::find(const std::string& name) const {
    if (const auto* d = signature.find(name)) return *d;
    if (auto it = trees.find(name); it != trees.end()) return Decoration::tree(it->second);
    return std::nullopt;
}

namespace {

enum class Tok { Ident, Punct, End };

struct Token {
    Tok kind;
    std::string text;
    int line;
    int column;
    std::size_t offset;
};

class Lexer {
public:
    Lexer(std::string_view text, std::size_t offset) : text_(text), pos_(0) {
        for (std::size_t i = 0; i < offset && i < text.size(); ++i) advance_position(text[i]);
        pos_ = offset;
    }

    std::vector<Token> run() {
        std::vector<Token> out;
        for (;;) {
            skip_space();
            if (pos_ >= text_.size()) {
                out.push_back({Tok::End, "", line_, column_, pos_});
                return out;
            }
            const int line = line_, column = column_;
            const std::size_t start = pos_;
            const char c = text_[pos_];
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                                               text_[pos_] == '\'')) {
                    step();
                }
                if (pos_ < text_.size() && text_[pos_] == '#') {
                    step();
                    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                        throw ParseError("'#' must be followed by digits", line_, column_);
                    }
                    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) step();
                }
                out.push_back({Tok::Ident, std::string(text_.substr(start, pos_ - start)), line, column, start});
                continue;
            }
            if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
                step();
                step();
                out.push_back({Tok::Punct, "->", line, column, start});
                continue;
            }
            // The Greek mu, UTF-8 encoded.
            if (static_cast<unsigned char>(c) == 0xCE && pos_ + 1 < text_.size() &&
                static_cast<unsigned char>(text_[pos_ + 1]) == 0xBC) {
                pos_ += 2;
                ++column_;
                out.push_back({Tok::Ident, "mu", line, column, start});
                continue;
            }
            if (std::string_view("{}()[]<>|,;~:=.*").find(c) != std::string_view::npos) {
                step();
                out.push_back({Tok::Punct, std::string(1, c), line, column, start});
                continue;
            }
            throw ParseError(std::string("unexpected character '") + c + "'", line, column);
        }
    }

private:
    void advance_position(char c) {
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
    }

    void step() { advance_position(text_[pos_++]); }

    void skip_space() {
        while (pos_ < text_.size()) {
            if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                step();
            } else if (text_.substr(pos_, 2) == "//") {
                while (pos_ < text_.size() && text_[pos_] != '\n') step();
            } else {
                return;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
public:
    Parser(std::string_view text, const Workspace& ws, std::size_t offset = 0) : tokens_(Lexer(text, offset).run()), ws_(ws) {}

    const Token& peek(std::size_t ahead = 0) const { return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)]; }
    bool at(const char* punct, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Punct && peek(ahead).text == punct;
    }
    bool at_ident(std::size_t ahead = 0) const { return peek(ahead).kind == Tok::Ident; }
    bool at_keyword(const char* word, std::size_t ahead = 0) const { return at_ident(ahead) && peek(ahead).text == word; }
    bool at_end() const { return peek().kind == Tok::End; }

    [[noreturn]] void fail(const std::string& message, const Token& where) const {
        throw ParseError(message, where.line, where.column);
    }
    [[noreturn]] void fail(const std::string& message) const { fail(message, peek()); }

    Token next() {
        Token t = peek();
        if (t.kind != Tok::End) ++pos_;
        return t;
    }

    void expect(const char* punct) {
        if (!at(punct)) fail(std::string("expected '") + punct + "', found " + describe(peek()));
        next();
    }

    bool accept(const char* punct) {
        if (!at(punct)) return false;
        next();
        return true;
    }

    void expect_end() {
        if (!at_end()) fail("unexpected " + describe(peek()) + " after the end of the object");
    }

    static std::string describe(const Token& t) {
        if (t.kind == Tok::End) return "end of input";
        return "'" + t.text + "'";
    }

    std::string ident(const char* what) {
        if (!at_ident()) fail(std::string("expected ") + what + ", found " + describe(peek()));
        return next().text;
    }

    Variable variable() {
        const Token t = peek();
        std::string name = ident("a variable");
        try {
            return Variable(std::move(name));
        } catch (const DomainError& e) {
            fail(e.what(), t);
        }
    }

    // -- signature ----------------------------------------------------------

    bool at_signature_line() const { return at_ident() && at(":", 1); }

    void signature_line(Signature& sig) {
        const Token start = peek();
        std::string name = ident("a parameter name");
        expect(":");
        expect("{");
        std::vector<Variable> profile;
        if (!at("}")) {
            do {
                profile.push_back(variable());
            } while (accept(","));
        }
        expect("}");
        try {
            sig.add(std::move(name), std::move(profile));
        } catch (const Error& e) {
            fail(e.what(), start);
        }
    }

    // -- trees --------------------------------------------------------------

    Decoration head() {
        const Token start = peek();
        if (accept("[")) {
            VernonGraph inner = tree();
            expect("]");
            try {
                return Decoration::tree(canonicalize(inner));
            } catch (const Error& e) {
                fail(e.what(), start);
            }
        }
        std::string name = ident("a parameter name");
        auto d = ws_.find(name);
        if (!d) fail("unknown parameter '" + name + "'", start);
        return *d;
    }

    Corolla corolla() {
        if (at("(")) {
            const Token start = next();
            Variable a = variable();
            expect(",");
            Variable b = variable();
            expect(")");
            if (a == b) fail("special corolla needs two distinct variables", start);
            return Corolla::special(std::move(a), std::move(b));
        }
        const Token start = peek();
        Decoration d = head();
        expect("(");
        std::vector<std::pair<Variable, Variable>> pairs;
        if (!at(")")) {
            const bool named = at_ident() && at("=", 1);
            std::size_t i = 0;
            do {
                if (named) {
                    const Token pt = peek();
                    Variable p = variable();
                    expect("=");
                    Variable x = variable();
                    if (d.profile().count(p) == 0) fail("'" + p.name() + "' is not an entry of " + d.key(), pt);
                    pairs.emplace_back(std::move(x), std::move(p));
                } else {
                    Variable x = variable();
                    if (i >= d.profile_order().size()) fail("too many arguments for " + d.key(), start);
                    pairs.emplace_back(std::move(x), d.profile_order()[i]);
                }
                ++i;
            } while (accept(","));
        }
        expect(")");
        if (pairs.size() != d.profile().size()) {
            fail(d.key() + " expects " + std::to_string(d.profile().size()) + " arguments, got " + std::to_string(pairs.size()), start);
        }
        try {
            return Corolla::ordinary(DecoratedInstance(d, Bijection(pairs)));
        } catch (const Error& e) {
            fail(e.what(), start);
        }
    }

    VernonGraph tree() {
        const Token start = peek();
        expect("{");
        std::vector<Corolla> corollas;
        if (!at(";") && !at("}")) {
            do {
                corollas.push_back(corolla());
            } while (accept(","));
        }
        std::vector<Edge> edges;
        if (accept(";")) {
            while (at("(")) {
                const Token et = next();
                Variable a = variable();
                expect("~");
                Variable b = variable();
                expect(")");
                if (a == b) fail("edge endpoints must differ", et);
                edges.emplace_back(std::move(a), std::move(b));
                accept(",");
            }
        }
        expect("}");
        try {
            return VernonGraph(std::move(corollas), std::move(edges));
        } catch (const ValidationError& e) {
            throw ValidationError(std::to_string(start.line) + ":" + std::to_string(start.column) + ": " + e.what());
        }
    }

    // -- mu-syntax ----------------------------------------------------------

    MuTerm mu_term() {
        if (at_keyword("mu") && at_ident(1) && at(".", 2)) {
            next();
            Variable b = variable();
            expect(".");
            return MuTerm::mu(std::move(b), mu_command());
        }
        return MuTerm::var(variable());
    }

    MuCommand mu_command() {
        if (accept("<")) {
            MuTerm l = mu_term();
            expect("|");
            MuTerm r = mu_term();
            expect(">");
            return MuCommand::pair(std::move(l), std::move(r));
        }
        const Token start = peek();
        Decoration d = head();
        expect("{");
        std::map<Variable, MuTerm> args;
        if (!at("}")) {
            const bool named = at_ident() && at(":", 1);
            std::size_t i = 0;
            do {
                const Token at_tok = peek();
                Variable p;
                if (named) {
                    p = variable();
                    expect(":");
                    if (d.profile().count(p) == 0) fail("'" + p.name() + "' is not an entry of " + d.key(), at_tok);
                } else {
                    if (i >= d.profile_order().size()) fail("too many arguments for " + d.key(), start);
                    p = d.profile_order()[i];
                }
                if (!args.emplace(p, mu_term()).second) fail("entry '" + p.name() + "' given twice", at_tok);
                ++i;
            } while (accept(","));
        }
        expect("}");
        try {
            return MuCommand::apply_profile(d, std::move(args));
        } catch (const Error& e) {
            fail(e.what(), start);
        }
    }

    // -- combinators --------------------------------------------------------

    std::vector<std::pair<Variable, Variable>> renaming_pairs() {
        std::vector<std::pair<Variable, Variable>> pairs;
        expect("[");
        if (!at("]")) {
            do {
                Variable from = variable();
                expect("->");
                Variable to = variable();
                pairs.emplace_back(std::move(from), std::move(to));
            } while (accept(","));
        }
        expect("]");
        return pairs;
    }

    /// Completes a partial renaming by the identity on the untouched part of `target`.
    Bijection complete(std::vector<std::pair<Variable, Variable>> pairs, const VarSet& target, const Token& where) {
        VarSet hit, used;
        for (const auto& [from, to] : pairs) {
            hit.insert(to);
            used.insert(from);
        }
        for (const auto& v : target) {
            if (hit.count(v) != 0) continue;
            if (used.count(v) != 0) fail("renaming: '" + v.name() + "' is both renamed and kept", where);
            pairs.emplace_back(v, v);
        }
        try {
            Bijection b(pairs);
            if (b.codomain() != target) fail("renaming targets " + to_string(b.codomain()) + ", expected " + to_string(target), where);
            return b;
        } catch (const ClashError& e) {
            fail(e.what(), where);
        }
    }

    Combinator combinator() {
        const Token start = peek();
        if (at_keyword("id") && at("{", 1)) {
            next();
            next();
            Variable x = variable();
            expect(",");
            Variable y = variable();
            expect("}");
            if (x == y) fail("id needs two distinct variables", start);
            return Combinator::id(std::move(x), std::move(y));
        }
        if (at_keyword("act") && at("[", 1)) {
            next();
            auto pairs = renaming_pairs();
            expect("(");
            Combinator body = combinator();
            expect(")");
            VarSet type;
            try {
                type = type_of(body);
            } catch (const TypeError& e) {
                fail(e.what(), start);
            }
            return Combinator::act(std::move(body), complete(std::move(pairs), type, start));
        }
        if (accept("(")) {
            Combinator l = combinator();
            Variable x = variable();
            expect("*");
            Variable y = variable();
            Combinator r = combinator();
            expect(")");
            return Combinator::comp(std::move(l), std::move(x), std::move(y), std::move(r));
        }
        Decoration d = head();
        if (at("[")) {
            Bijection b = complete(renaming_pairs(), d.profile(), start);
            return Combinator::param(DecoratedInstance(std::move(d), std::move(b)));
        }
        return Combinator::param(DecoratedInstance(std::move(d)));
    }

    // -- documents ----------------------------------------------------------

    std::size_t offset() const { return peek().offset; }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
    const Workspace& ws_;
};

}  // namespace

bool Document::has_body() const {
    for (std::size_t i = body_offset; i < text.size(); ++i) {
        if (text.compare(i, 2, "//") == 0) {
            while (i < text.size() && text[i] != '\n') ++i;
        } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            return true;
        }
    }
    return false;
}

Document parse_document(std::string_view text) {
    Document doc;
    doc.text = std::string(text);
    Parser p(doc.text, doc.workspace);
    for (;;) {
        if (p.at_signature_line()) {
            p.signature_line(doc.workspace.signature);
            continue;
        }
        if (p.at_keyword("let") && p.at_ident(1) && p.at("=", 2)) {
            p.next();
            const Token name_tok = p.peek();
            std::string name = p.ident("a binding name");
            p.expect("=");
            VernonGraph t = p.tree();
            p.accept(";");
            if (doc.workspace.trees.count(name) || doc.workspace.signature.find(name)) {
                p.fail("'" + name + "' is already defined", name_tok);
            }
            try {
                doc.workspace.trees.emplace(std::move(name), canonicalize(t));
            } catch (const ValidationError& e) {
                throw ValidationError(std::to_string(name_tok.line) + ":" + std::to_string(name_tok.column) + ": " + e.what());
            }
            continue;
        }
        break;
    }
    doc.body_offset = p.offset();
    return doc;
}

Signature parse_signature(std::string_view text) {
    Signature sig;
    Workspace none;
    Parser p(text, none);
    while (!p.at_end()) p.signature_line(sig);
    return sig;
}

VernonGraph parse_tree(std::string_view text, const Workspace& ws) {
    Parser p(text, ws);
    VernonGraph t = p.tree();
    p.expect_end();
    return t;
}

MuCommand parse_mu_command(std::string_view text, const Workspace& ws) {
    Parser p(text, ws);
    MuCommand c = p.mu_command();
    p.expect_end();
    return c;
}

MuTerm parse_mu_term(std::string_view text, const Workspace& ws) {
    Parser p(text, ws);
    MuTerm t = p.mu_term();
    p.expect_end();
    return t;
}

Combinator parse_combinator(std::string_view text, const Workspace& ws) {
    Parser p(text, ws);
    Combinator c = p.combinator();
    p.expect_end();
    return c;
}

VernonGraph parse_tree(const Document& doc) {
    Parser p(doc.text, doc.workspace, doc.body_offset);
    VernonGraph t = p.tree();
    p.expect_end();
    return t;
}

MuCommand parse_mu_command(const Document& doc) {
    Parser p(doc.text, doc.workspace, doc.body_offset);
    MuCommand c = p.mu_command();
    p.expect_end();
    return c;
}

Combinator parse_combinator(const Document& doc) {
    Parser p(doc.text, doc.workspace, doc.body_offset);
    Combinator c = p.combinator();
    p.expect_end();
    return c;
}

std::string to_string(const Signature& sig) {
    std::string out;
    for (const auto& [name, d] : sig.entries()) {
        out += name + " : {";
        bool first = true;
        for (const auto& v : d.profile_order()) {
            if (!first) out += ", ";
            out += v.name();
            first = false;
        }
        out += "}\n";
    }
    return out;
}

}  // namespace vernon
