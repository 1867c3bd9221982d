#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgrag {

// Base for all engine errors. Subclasses map onto the failure classes the
// public operations document; the CLI maps them to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (JSON lines, playbooks, config). Carries the 1-based
// line number when the input is line-oriented.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Structurally inconsistent data that parsed fine (dangling references).
class IntegrityError : public Error {
public:
    using Error::Error;
};

// Caller violated an operation precondition.
class DomainError : public Error {
public:
    using Error::Error;
};

// A component broke its declared contract (wrong dimension, bad norm).
class ContractError : public Error {
public:
    using Error::Error;
};

// Query against an empty index or store; distinct from "no matches".
class EmptyResultError : public Error {
public:
    using Error::Error;
};

// Network / provider transport failure after retries were exhausted.
class TransportError : public Error {
public:
    using Error::Error;
};

// Mock playbook exhausted or no entry matched the pending message.
class ScriptError : public Error {
public:
    using Error::Error;
};

// Tag-protocol violation in a model transcript. offset is the byte position
// where the violation was detected.
class ProtocolError : public Error {
public:
    ProtocolError(const std::string& what, std::size_t offset)
        : Error(what + " (byte offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Judge reply did not contain a parseable score even after the retry.
class JudgeFormatError : public Error {
public:
    using Error::Error;
};

// Agent exhausted its tool-call budget without producing an answer.
class AgentTimeoutError : public Error {
public:
    AgentTimeoutError(const std::string& what, std::string partial_transcript)
        : Error(what), partial_transcript_(std::move(partial_transcript)) {}
    const std::string& partial_transcript() const { return partial_transcript_; }

private:
    std::string partial_transcript_;
};

// The host environment is unusable (runner cannot spawn); never counted as a
// case or task failure.
class EnvironmentError : public Error {
public:
    using Error::Error;
};

// Generator returned nothing to extract code from.
class EmptyGenerationError : public Error {
public:
    using Error::Error;
};

// Bad command line or unusable config path; exit code 2 in the CLI.
class UsageError : public Error {
public:
    using Error::Error;
};

} // namespace kgrag
