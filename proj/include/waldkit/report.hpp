#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace waldkit {

// Malformed input: unresolved names, shape mismatches, bad files.
class StructuralError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A construction whose preconditions fail on otherwise well-formed data
// (missing witness, non-unique mediating morphism, cap shortfall, ...).
class ConstructionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string kind;
    std::string detail;
};

class ValidationReport {
public:
    void add(std::string kind, std::string detail) {
        violations_.push_back({std::move(kind), std::move(detail)});
    }
    void note(std::string line) { notes_.push_back(std::move(line)); }
    void merge(const ValidationReport& other, const std::string& prefix = {});

    bool ok() const { return violations_.empty(); }
    const std::vector<Violation>& violations() const { return violations_; }
    const std::vector<std::string>& notes() const { return notes_; }
    bool has_kind(const std::string& kind) const;
    std::size_t count(const std::string& kind) const;

    std::string to_string() const;

private:
    std::vector<Violation> violations_;
    std::vector<std::string> notes_;
};

}  // namespace waldkit
