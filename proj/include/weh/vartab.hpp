#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weh/errors.hpp"

namespace weh {

// Ordered variable table for one computation context. Index order is fixed
// at construction and defines the graded-lexicographic monomial order.
class VarTable {
  public:
    explicit VarTable(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.size() > 16) throw usage_error("too many variables for one context");
        for (size_t i = 0; i < names_.size(); ++i) {
            auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
            if (!fresh) throw usage_error("duplicate variable name: " + names_[i]);
        }
    }

    static std::shared_ptr<const VarTable> make(std::vector<std::string> names) {
        return std::make_shared<const VarTable>(std::move(names));
    }

    int size() const { return static_cast<int>(names_.size()); }

    const std::string& name(int i) const { return names_.at(i); }

    int index(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw usage_error("unknown variable: " + name);
        return it->second;
    }

    bool contains(const std::string& name) const { return index_.count(name) > 0; }

    const std::vector<std::string>& names() const { return names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, int> index_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

} // namespace weh
