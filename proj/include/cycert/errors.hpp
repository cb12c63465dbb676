#ifndef CYCERT_ERRORS_HPP
#define CYCERT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace cycert {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input graph fails a structural requirement (e.g. must be connected).
struct DisconnectedInput : Error {
    using Error::Error;
};

// Enumeration oracle invoked beyond its configured size cap.
struct SizeCapExceeded : Error {
    using Error::Error;
};

// A stated hypothesis of an operation does not hold; carries a witness
// (a low-degree vertex, an oversized independent set, ...) when available.
struct HypothesisViolated : Error {
    std::vector<int> witness;
    explicit HypothesisViolated(const std::string& msg, std::vector<int> w = {})
        : Error(msg), witness(std::move(w)) {}
};

struct PreconditionViolated : Error {
    using Error::Error;
};

// Search exhausted without a qualifying object.
struct NotFound : Error {
    using Error::Error;
};

// chop() was given an invalid independence bound; payload is an
// independent set of size alpha+1 extracted from the chordless prefix.
struct NoChord : Error {
    std::vector<int> independent_set;
    explicit NoChord(const std::string& msg, std::vector<int> is)
        : Error(msg), independent_set(std::move(is)) {}
};

// reduction_in_interval() found no ladder step in the window.
struct NotCovered : Error {
    using Error::Error;
};

struct OutOfRange : Error {
    using Error::Error;
};

// An OrderFamily handed to collate() violates its invariant.
struct BadFamily : Error {
    using Error::Error;
};

struct SawNotFound : Error {
    using Error::Error;
};

struct PairNotFound : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace cycert

#endif
