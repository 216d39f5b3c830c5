#include "graycat/report.hpp"

#include <algorithm>
#include <sstream>

namespace graycat {

namespace {
int g_jobs = 0;
}

void set_jobs(int n) { g_jobs = n < 0 ? 0 : n; }
int jobs() { return g_jobs; }

bool ValidationReport::has_structural() const
{
    for (const auto& v : violations)
        if (v.structural)
            return true;
    return false;
}

std::size_t ValidationReport::count(const std::string& axiom) const
{
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; }));
}

void ValidationReport::add(std::string axiom, std::vector<std::string> witness, std::string expected,
                           std::string actual, bool structural)
{
    violations.push_back({std::move(axiom), std::move(witness), std::move(expected), std::move(actual), structural});
}

void ValidationReport::merge(const ValidationReport& other)
{
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    for (const auto& [k, v] : other.instances)
        instances[k] += v;
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

void ValidationReport::merge(const ValidationReport& other, const std::string& prefix)
{
    for (auto v : other.violations) {
        v.axiom = prefix + v.axiom;
        violations.push_back(std::move(v));
    }
    for (const auto& [k, v] : other.instances)
        instances[prefix + k] += v;
    for (const auto& n : other.notes)
        notes.push_back(prefix + n);
}

std::string format_report(const ValidationReport& r, const std::string& title, std::size_t max_violations)
{
    std::ostringstream os;
    std::size_t total = 0;
    for (const auto& [k, v] : r.instances)
        total += v;
    os << title << ": " << (r.ok() ? "ok" : "FAILED") << " (" << total << " instances, " << r.violations.size()
       << " violations)\n";
    for (const auto& n : r.notes)
        os << "  note: " << n << "\n";
    std::size_t shown = 0;
    for (const auto& v : r.violations) {
        if (shown++ == max_violations) {
            os << "  ... " << (r.violations.size() - max_violations) << " more\n";
            break;
        }
        os << "  " << (v.structural ? "structural" : "violation") << " [" << v.axiom << "] at (";
        for (std::size_t i = 0; i < v.witness.size(); ++i)
            os << (i ? ", " : "") << v.witness[i];
        os << "): expected " << v.expected << ", got " << v.actual << "\n";
    }
    return os.str();
}

} // namespace graycat
