#pragma once

#include <ostream>
#include <string>

#include "vernon/text.hpp"

namespace fixtures {

/// Parameters of the running three-corolla example.
inline const char* fgh_signature = "f : {x, y, z, u}\ng : {a, b, c, d}\nh : {p, q}\n";

inline vernon::Document fgh(const std::string& body) { return vernon::parse_document(std::string(fgh_signature) + body); }

inline const char* fgh_tree = "{ f(x,y,z,u), g(a,b,c,d), h(p,q) ; (x~a)(y~p) }";

/// The same tree with the free variable u called w, matching the commands below.
inline const char* fgh_tree_w = "{ f(x,y,z,w), g(a,b,c,d), h(p,q) ; (x~a)(y~p) }";

inline const char* star = "<mu y. f{mu a. g{a,b,c,d}, y, z, w} | mu p. h{p,q}>";

/// The five normal forms of the example, with f's arguments always listed
/// in the order of its profile x, y, z, u.
inline const char* normal_forms[5] = {
    "f{mu a. g{a,b,c,d}, mu p. h{p,q}, z, w}",
    "g{mu x. f{x, mu p. h{p,q}, z, w}, b, c, d}",
    "g{mu x. h{mu y. f{x,y,z,w}, q}, b, c, d}",
    "h{mu y. f{mu a. g{a,b,c,d}, y, z, w}, q}",
    "h{mu y. g{mu x. f{x,y,z,w}, b, c, d}, q}",
};

/// Parameters for the graphs with five-, four- and three-element corollas.
inline const char* graph_signature = "k5 : {e1, e2, e3, e4, e5}\nk4 : {e1, e2, e3, e4}\nk3 : {e1, e2, e3}\n";

inline vernon::Document graphs(const std::string& body) { return vernon::parse_document(std::string(graph_signature) + body); }

}  // namespace fixtures

namespace vernon {

// Readable gtest messages.
inline void PrintTo(const TreeClass& c, std::ostream* os) { *os << c.key(); }
inline void PrintTo(const VernonGraph& g, std::ostream* os) { *os << to_string(g); }

}  // namespace vernon
