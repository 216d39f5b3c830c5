#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace graycat {

enum class Exec { serial, parallel };

struct Violation {
    std::string axiom;
    std::vector<std::string> witness;
    std::string expected;
    std::string actual;
    bool structural = false;
    std::uint64_t seq = 0;

    bool operator==(const Violation& o) const
    {
        return axiom == o.axiom && witness == o.witness && expected == o.expected && actual == o.actual &&
               structural == o.structural;
    }
};

struct ValidationReport {
    std::vector<Violation> violations;
    // Number of axiom instances evaluated, keyed by axiom name.
    std::map<std::string, std::size_t> instances;
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }
    bool has_structural() const;
    // Number of violations of that axiom.
    std::size_t count(const std::string& axiom) const;
    void add(std::string axiom, std::vector<std::string> witness, std::string expected, std::string actual,
             bool structural = false);
    void merge(const ValidationReport& other);
    void merge(const ValidationReport& other, const std::string& prefix);
};

// Human-readable rendering; output is deterministic.
std::string format_report(const ValidationReport& r, const std::string& title, std::size_t max_violations = 20);

// Thread count used by Exec::parallel; 0 means the OpenMP default.
void set_jobs(int n);
int jobs();

} // namespace graycat
