#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace affect {

// Fatal problems with user-supplied configuration (bad region file,
// empty generator profile, unknown emotion name, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Unreadable or unwritable files / streams.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an emotion does not have enough documents to sample the
// requested subcorpus size.  Carries the counts so callers can report
// exactly which emotion fell short and where.
class InsufficientDocumentsError : public std::runtime_error {
public:
    InsufficientDocumentsError(std::string emotion, std::size_t have,
                               std::size_t need, std::string scope = "");

    const std::string& emotion() const { return emotion_; }
    std::size_t have() const { return have_; }
    std::size_t need() const { return need_; }
    const std::string& scope() const { return scope_; }

private:
    std::string emotion_;
    std::size_t have_;
    std::size_t need_;
    std::string scope_;
};

// Every document of a corpus tokenized to nothing; there is no matrix
// to decompose.
class EmptyCorpusError : public std::runtime_error {
public:
    explicit EmptyCorpusError(const std::string& what) : std::runtime_error(what) {}
};

// The iterative SVD failed to stabilize within its round budget.
class SvdConvergenceError : public std::runtime_error {
public:
    explicit SvdConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace affect
