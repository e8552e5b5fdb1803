#pragma once

#include <string>
#include <vector>

namespace homlie {

struct CheckItem {
    std::string name;
    bool pass = true;
    std::string witness;  // basis labels + residual rendering on failure
};

struct AxiomReport {
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, std::string witness = "") {
        items.push_back({std::move(name), pass, std::move(witness)});
    }
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::string summary() const {
        std::string s;
        for (const auto& it : items) {
            if (it.pass) continue;
            if (!s.empty()) s += "; ";
            s += it.name;
            if (!it.witness.empty()) s += " (" + it.witness + ")";
        }
        return s.empty() ? "all checks passed" : s;
    }
};

}  // namespace homlie
