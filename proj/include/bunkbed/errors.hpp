#ifndef BUNKBED_ERRORS_HPP
#define BUNKBED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bunkbed {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DuplicateEdgeError : Error {
    explicit DuplicateEdgeError(const std::string& w) : Error("duplicate edge: " + w) {}
};
struct SelfLoopError : Error {
    explicit SelfLoopError(const std::string& w) : Error("self loop: " + w) {}
};
struct UnknownEndpointError : Error {
    explicit UnknownEndpointError(const std::string& w) : Error("unknown endpoint: " + w) {}
};
struct UnknownVertexError : Error {
    explicit UnknownVertexError(const std::string& w) : Error("unknown vertex: " + w) {}
};
struct NotABijectionError : Error {
    explicit NotABijectionError(const std::string& w) : Error("relabel map is not a bijection: " + w) {}
};
struct AdjacentBlowupVerticesError : Error {
    explicit AdjacentBlowupVerticesError(const std::string& w)
        : Error("blow-up vertices are adjacent: " + w) {}
};
struct TooManyFreeEdgesError : Error {
    explicit TooManyFreeEdgesError(const std::string& w) : Error("too many free edges: " + w) {}
};
struct BaseNotAcyclicError : Error {
    explicit BaseNotAcyclicError(const std::string& w) : Error("base graph is not acyclic: " + w) {}
};
struct UnboundReferenceError : Error {
    explicit UnboundReferenceError(const std::string& w) : Error("unbound reference: " + w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error("parse error: " + w) {}
};

} // namespace bunkbed

#endif
