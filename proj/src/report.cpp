#include "waldkit/report.hpp"

#include <algorithm>
#include <sstream>

namespace waldkit {

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix) {
    for (const auto& v : other.violations_)
        violations_.push_back({v.kind, prefix.empty() ? v.detail : prefix + ": " + v.detail});
    for (const auto& n : other.notes_)
        notes_.push_back(prefix.empty() ? n : prefix + ": " + n);
}

bool ValidationReport::has_kind(const std::string& kind) const {
    return count(kind) > 0;
}

std::size_t ValidationReport::count(const std::string& kind) const {
    return static_cast<std::size_t>(std::count_if(violations_.begin(), violations_.end(),
                                                  [&](const Violation& v) { return v.kind == kind; }));
}

std::string ValidationReport::to_string() const {
    std::ostringstream os;
    if (ok())
        os << "valid\n";
    for (const auto& v : violations_)
        os << "violation [" << v.kind << "] " << v.detail << '\n';
    for (const auto& n : notes_)
        os << "note: " << n << '\n';
    return os.str();
}

}  // namespace waldkit
