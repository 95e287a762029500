#pragma once

#include "specnet/errors.hpp"
#include "specnet/surface/chart.hpp"

#include <string>
#include <vector>

namespace specnet {

struct PathStep {
    std::string gen;
    int exp = 1;  // +1 or -1
};

// Word in the path groupoid: consecutive steps must compose end-to-start.
class PathWord {
  public:
    PathWord() = default;
    PathWord(std::initializer_list<PathStep> steps) : steps_(steps) {}
    explicit PathWord(std::vector<PathStep> steps) : steps_(std::move(steps)) {}

    const std::vector<PathStep>& steps() const { return steps_; }
    bool empty() const { return steps_.empty(); }
    size_t size() const { return steps_.size(); }

    void push(std::string gen, int exp = 1) { steps_.push_back({std::move(gen), exp}); }

    // free reduction: cancel adjacent g g^-1
    PathWord reduced() const {
        std::vector<PathStep> out;
        for (const auto& s : steps_) {
            if (!out.empty() && out.back().gen == s.gen && out.back().exp == -s.exp)
                out.pop_back();
            else
                out.push_back(s);
        }
        return PathWord(std::move(out));
    }

    PathWord inverted() const {
        std::vector<PathStep> out;
        out.reserve(steps_.size());
        for (auto it = steps_.rbegin(); it != steps_.rend(); ++it)
            out.push_back({it->gen, -it->exp});
        return PathWord(std::move(out));
    }

    friend PathWord compose(const PathWord& a, const PathWord& b) {
        std::vector<PathStep> out = a.steps_;
        out.insert(out.end(), b.steps_.begin(), b.steps_.end());
        return PathWord(std::move(out)).reduced();
    }

    std::string start(const SurfaceChart& chart) const {
        if (steps_.empty()) throw BadInput("empty path has no canonical endpoints");
        const auto& g = chart.generator(steps_.front().gen);
        return steps_.front().exp == 1 ? g.from : g.to;
    }
    std::string end(const SurfaceChart& chart) const {
        if (steps_.empty()) throw BadInput("empty path has no canonical endpoints");
        const auto& g = chart.generator(steps_.back().gen);
        return steps_.back().exp == 1 ? g.to : g.from;
    }

    void check(const SurfaceChart& chart) const {
        std::string cur;
        for (const auto& s : steps_) {
            const auto& g = chart.generator(s.gen);
            const std::string a = s.exp == 1 ? g.from : g.to;
            const std::string b = s.exp == 1 ? g.to : g.from;
            if (!cur.empty() && cur != a)
                throw EndpointMismatch("path breaks at " + s.gen + ": at " + cur +
                                       ", generator starts at " + a);
            cur = b;
        }
    }

    bool is_closed(const SurfaceChart& chart) const {
        if (steps_.empty()) return true;
        check(chart);
        return start(chart) == end(chart);
    }

  private:
    std::vector<PathStep> steps_;
};

inline PathWord checked_compose(const SurfaceChart& chart, const PathWord& a, const PathWord& b) {
    if (!a.empty() && !b.empty() && a.end(chart) != b.start(chart))
        throw EndpointMismatch("compose: " + a.end(chart) + " != " + b.start(chart));
    return compose(a, b);
}

} // namespace specnet
