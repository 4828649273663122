#pragma once

#include <string>
#include <vector>

namespace hopfcyc {

/// One verified identity: named, optionally located at (degree, index).
struct CheckItem {
    std::string name;
    int degree = -1;
    int index = -1;
    enum class Status { Pass, Fail, Skipped } status = Status::Pass;

    bool passed() const { return status != Status::Fail; }
};

struct Report {
    std::vector<CheckItem> items;

    void add(std::string name, bool pass, int degree = -1, int index = -1) {
        items.push_back({std::move(name), degree, index,
                         pass ? CheckItem::Status::Pass : CheckItem::Status::Fail});
    }
    void addSkipped(std::string name, int degree = -1, int index = -1) {
        items.push_back({std::move(name), degree, index, CheckItem::Status::Skipped});
    }
    void append(const Report& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }

    bool allPass() const {
        for (const auto& it : items)
            if (!it.passed()) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& it : items)
            if (!it.passed()) out.push_back(it.name);
        return out;
    }
};

}  // namespace hopfcyc
