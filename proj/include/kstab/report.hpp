#pragma once

#include <string>
#include <vector>

namespace kstab {

// One verified hypothesis: name, verdict, and a witness (the inequality or
// value that was checked, rendered exactly).
struct CheckItem {
    std::string name;
    bool ok = false;
    std::string witness;
};

struct VerificationReport {
    std::vector<CheckItem> checks;
    std::vector<std::string> notes;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.ok)
                return false;
        return true;
    }

    void add(std::string name, bool ok, std::string witness) {
        checks.push_back({std::move(name), ok, std::move(witness)});
    }
    void note(std::string n) { notes.push_back(std::move(n)); }
};

}  // namespace kstab
