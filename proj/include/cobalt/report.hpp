#pragma once

#include <string>
#include <vector>

namespace cobalt {

// One validated clause.  "required" clauses gate overall validity; the rest
// are informational (e.g. unitarity of a braiding that is allowed to be
// non-unitary).
struct CheckItem {
    std::string name;
    bool pass = false;
    bool required = true;
    std::string detail;  // first offending entry / witness, empty when passing
};

struct Report {
    std::vector<CheckItem> items;

    bool valid() const {
        for (const auto& it : items)
            if (it.required && !it.pass) return false;
        return true;
    }

    void add(std::string name, bool pass, std::string detail = "", bool required = true) {
        items.push_back(CheckItem{std::move(name), pass, required, std::move(detail)});
    }

    const CheckItem* find(const std::string& name) const {
        for (const auto& it : items)
            if (it.name == name) return &it;
        return nullptr;
    }
};

}  // namespace cobalt
