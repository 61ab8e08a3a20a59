#pragma once

#include "gtamforge/io.hpp"

namespace gtam {

// One scripted assembly step: either build a supertile from explicit tile
// placements, or attach a previously built step to another at a pinned
// tile-level offset (offset optional: a unique planner result is then
// required).
struct ScriptStep {
    std::vector<std::pair<Pos, std::string>> build;
    int ref = -1, attach_to = -1;
    std::optional<Pos> offset; // canonical-frame shift of `ref` relative to `attach_to`
    bool is_build() const { return !build.empty(); }
};

struct Script {
    std::vector<ScriptStep> steps;
};

inline json script_to_json(const Script& sc) {
    json steps = json::array();
    for (auto& st : sc.steps) {
        json js;
        if (st.is_build()) {
            json b = json::array();
            for (auto& [p, name] : st.build) b.push_back({{"x", p.x}, {"y", p.y}, {"tile", name}});
            js["build"] = b;
        } else {
            js["ref"] = st.ref;
            js["attach_to"] = st.attach_to;
            if (st.offset) js["offset"] = {st.offset->x, st.offset->y};
        }
        steps.push_back(js);
    }
    return json{{"steps", steps}};
}

inline Script script_from_json(const json& j) {
    Script sc;
    for (auto& js : j.at("steps")) {
        ScriptStep st;
        if (js.contains("build")) {
            for (auto& b : js["build"])
                st.build.push_back({Pos{b.at("x").get<int>(), b.at("y").get<int>()},
                                    b.at("tile").get<std::string>()});
        } else {
            st.ref = js.at("ref").get<int>();
            st.attach_to = js.at("attach_to").get<int>();
            if (js.contains("offset")) st.offset = Pos{js["offset"][0].get<int>(), js["offset"][1].get<int>()};
        }
        sc.steps.push_back(std::move(st));
    }
    return sc;
}

} // namespace gtam
