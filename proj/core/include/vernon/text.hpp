#pragma once

#include <map>
#include <string>
#include <string_view>

#include "vernon/combinators.hpp"
#include "vernon/mu.hpp"
#include "vernon/signature.hpp"
#include "vernon/trees.hpp"

namespace vernon {

/// Parameters and named tree classes visible to the parsers.
struct Workspace {
    Signature signature;
    std::map<std::string, TreeClass> trees;

    /// Base parameter or let-bound class; nullopt if unknown.
    std::optional<Decoration> find(const std::string& name) const;
};

/// A file: signature lines `f : {x, y}`, bindings `let T = {...}`, then
/// one object whose text starts at `body_offset`.
struct Document {
    Workspace workspace;
    std::string text;
    std::size_t body_offset = 0;

    bool has_body() const;
};

/// All parsers throw ParseError (with line and column) on malformed input.
Document parse_document(std::string_view text);

Signature parse_signature(std::string_view text);
VernonGraph parse_tree(std::string_view text, const Workspace& ws = {});
MuCommand parse_mu_command(std::string_view text, const Workspace& ws = {});
MuTerm parse_mu_term(std::string_view text, const Workspace& ws = {});
Combinator parse_combinator(std::string_view text, const Workspace& ws = {});

/// Parse the body of a document.
VernonGraph parse_tree(const Document& doc);
MuCommand parse_mu_command(const Document& doc);
Combinator parse_combinator(const Document& doc);

std::string to_string(const Signature& sig);

}  // namespace vernon
