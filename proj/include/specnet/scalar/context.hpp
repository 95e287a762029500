#pragma once

#include "specnet/errors.hpp"
#include "specnet/scalar/rational.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace specnet {

// Ordered list of generator names; fixes the variable order (and hence the
// graded-lex monomial order) for all exact scalars built over it.
class ExactContext {
  public:
    explicit ExactContext(std::vector<std::string> names) : names_(std::move(names)) {
        for (size_t i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], i).second)
                throw BadInput("duplicate generator name: " + names_[i]);
        }
    }

    size_t arity() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

    size_t index_of(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) throw UnboundGenerator("unknown generator: " + name);
        return it->second;
    }

    bool has(const std::string& name) const { return index_.count(name) != 0; }

    bool operator==(const ExactContext& o) const { return names_ == o.names_; }

  private:
    std::vector<std::string> names_;
    std::map<std::string, size_t> index_;
};

using ContextPtr = std::shared_ptr<const ExactContext>;

inline ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const ExactContext>(std::move(names));
}

// Numeric assignment used when evaluating exact scalars.
class GeneratorTable {
  public:
    GeneratorTable() = default;

    void assign(const std::string& name, Complex value) { values_[name] = value; }

    bool has(const std::string& name) const { return values_.count(name) != 0; }

    Complex value(const std::string& name) const {
        auto it = values_.find(name);
        if (it == values_.end()) throw UnboundGenerator("unassigned generator: " + name);
        return it->second;
    }

    const std::map<std::string, Complex>& values() const { return values_; }

  private:
    std::map<std::string, Complex> values_;
};

} // namespace specnet
