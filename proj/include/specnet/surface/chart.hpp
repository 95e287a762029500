#pragma once

#include "specnet/errors.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace specnet {

// One item met when crossing a street transversally: a wall lane (carrying an
// S-matrix in the spliced representation) or a branch cut (sheet swap).
struct CrossItem {
    enum class Kind { Lane, Cut };
    Kind kind = Kind::Lane;
    std::string lane;   // lane id when kind == Lane

    static CrossItem make_lane(std::string id) { return {Kind::Lane, std::move(id)}; }
    static CrossItem make_cut() { return {Kind::Cut, {}}; }
};

// A wall (single network wall: one lane) or double wall (two lanes, possibly a
// cut between them). `seq` lists what a path meets crossing from side '-' to '+'.
struct Street {
    std::string id;
    std::vector<CrossItem> seq;
    std::map<std::string, std::string> lane_label;  // lane id -> "12" | "21" at basepoint
};

struct BasepointData {
    std::string id;
    std::optional<std::string> street;  // boundary basepoints have none
};

// Short-path generator of the path groupoid. Sides are relative to the streets
// carrying the endpoint basepoints; `cut_parity` counts interior cut crossings.
struct GeneratorData {
    std::string id;
    std::string from, to;
    char from_side = '+';
    char to_side = '+';
    int cut_parity = 0;
};

class SurfaceChart {
  public:
    int genus = 0;
    std::vector<std::string> punctures;
    std::vector<std::string> boundaries;   // each with one marked point
    std::vector<std::string> branch_points;
    // cut id -> endpoints (branch point or puncture ids)
    std::vector<std::pair<std::string, std::pair<std::string, std::string>>> cuts;

    void add_basepoint(std::string id, std::optional<std::string> street = std::nullopt) {
        if (bp_index_.count(id)) throw BadInput("duplicate basepoint " + id);
        bp_index_[id] = basepoints_.size();
        basepoints_.push_back({std::move(id), std::move(street)});
    }

    void add_street(Street s) {
        if (street_index_.count(s.id)) throw BadInput("duplicate street " + s.id);
        street_index_[s.id] = streets_.size();
        streets_.push_back(std::move(s));
    }

    void add_generator(GeneratorData g) {
        if (gen_index_.count(g.id)) throw BadInput("duplicate generator " + g.id);
        basepoint(g.from);
        basepoint(g.to);
        gen_index_[g.id] = generators_.size();
        generators_.push_back(std::move(g));
    }

    const std::vector<BasepointData>& basepoints() const { return basepoints_; }
    const std::vector<Street>& streets() const { return streets_; }
    const std::vector<GeneratorData>& generators() const { return generators_; }

    const BasepointData& basepoint(const std::string& id) const {
        auto it = bp_index_.find(id);
        if (it == bp_index_.end()) throw UnknownName("basepoint " + id);
        return basepoints_[it->second];
    }
    const Street& street(const std::string& id) const {
        auto it = street_index_.find(id);
        if (it == street_index_.end()) throw UnknownName("street " + id);
        return streets_[it->second];
    }
    const GeneratorData& generator(const std::string& id) const {
        auto it = gen_index_.find(id);
        if (it == gen_index_.end()) throw UnknownName("generator " + id);
        return generators_[it->second];
    }
    bool has_generator(const std::string& id) const { return gen_index_.count(id) != 0; }

    int euler_characteristic() const {
        return 2 - 2 * genus - static_cast<int>(punctures.size()) -
               static_cast<int>(boundaries.size());
    }

  private:
    std::vector<BasepointData> basepoints_;
    std::vector<Street> streets_;
    std::vector<GeneratorData> generators_;
    std::map<std::string, size_t> bp_index_, street_index_, gen_index_;
};

} // namespace specnet
