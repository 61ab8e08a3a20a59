#pragma once

#include "gtamforge/script.hpp"
#include "gtamforge/twoham.hpp"

namespace gtam {

struct GuidedStepReport {
    size_t step = 0;
    std::string kind;        // "build" or "attach"
    size_t size = 0;         // tiles in the step result
    int seam_strength = 0;   // attach steps
    size_t path_length = 0;  // attach steps
};

struct GuidedResult {
    Supertile final;
    std::vector<GuidedStepReport> reports;
    std::vector<Combination> attachments; // planner certificates, one per attach step
};

// Deterministic replay of a scripted assembly. Build steps are validated as
// well-formed supertiles (connected, geometry-consistent at every internal
// seam, tau-stable); attach steps must be certified by the planner. Any
// invalid step raises an error naming its index.
inline GuidedResult guided_assembly(const TileSystem& sys, const Script& script,
                                    const AttachOptions& opt = {}) {
    if (script.steps.empty()) throw InputError("guided_assembly: empty script");
    std::vector<Supertile> results;
    GuidedResult out;
    for (size_t k = 0; k < script.steps.size(); ++k) {
        const auto& st = script.steps[k];
        auto fail = [&](const std::string& why) {
            throw InputError("guided_assembly: step " + std::to_string(k) + ": " + why);
        };
        GuidedStepReport rep;
        rep.step = k;
        if (st.is_build()) {
            rep.kind = "build";
            std::vector<std::pair<Pos, int>> cells;
            for (auto& [p, name] : st.build) cells.push_back({p, sys.index_of(name)});
            Supertile built(std::move(cells));
            if (!built.connected()) fail("recipe is not connected");
            if (!geometry_consistent(sys, built)) fail("recipe has colliding face geometries");
            if (!is_tau_stable_fast(sys, built, sys.temperature)) fail("recipe is not tau-stable");
            rep.size = built.size();
            results.push_back(std::move(built));
        } else {
            rep.kind = "attach";
            if (st.ref < 0 || st.ref >= static_cast<int>(results.size()) || st.attach_to < 0 ||
                st.attach_to >= static_cast<int>(results.size()))
                fail("step reference out of range");
            const Supertile& alpha = results[st.ref];
            const Supertile& beta = results[st.attach_to];
            std::optional<Combination> combo;
            if (st.offset) {
                combo = collision_free_attach_to(sys, alpha, beta, sys.temperature, *st.offset, opt);
                if (!combo) fail("pinned docking is invalid or unreachable");
            } else {
                auto r = collision_free_attach(sys, alpha, beta, sys.temperature, opt);
                if (r.combos.empty()) fail("no valid combination exists");
                if (r.combos.size() > 1) fail("combination is ambiguous; pin an offset");
                combo = std::move(r.combos[0]);
            }
            rep.size = combo->result.size();
            rep.seam_strength = combo->seam_strength;
            rep.path_length = combo->path.size();
            results.push_back(combo->result);
            out.attachments.push_back(std::move(*combo));
        }
        out.reports.push_back(rep);
    }
    out.final = results.back();
    return out;
}

} // namespace gtam
