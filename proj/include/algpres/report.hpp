#pragma once

#include <string>
#include <vector>

namespace algpres {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  ///< evidence for a failure, or a short note
};

/// An ordered list of named pass/fail checks.
struct Report {
    std::string title;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    void add(std::string name, bool pass, std::string witness = {}) {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

} // namespace algpres
