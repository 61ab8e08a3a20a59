#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gtamforge/compat.hpp"
#include "gtamforge/core.hpp"
#include "gtamforge/design.hpp"

namespace gtam {

using json = nlohmann::json;

// Geometry run-length encoding: comma-separated run lengths over the
// row-major cell sequence, alternating empty/filled and starting with empty.
inline std::string rle_encode(const FaceGeometry& g) {
    std::string out;
    int total = g.grid.cols() * g.grid.rows();
    int i = 0;
    bool cur = false;
    while (i < total) {
        int run = 0;
        while (i < total && g.filled(i % g.grid.cols(), i / g.grid.cols()) == cur) { ++run; ++i; }
        if (!out.empty()) out += ',';
        out += std::to_string(run);
        cur = !cur;
    }
    return out;
}

inline FaceGeometry rle_decode(const std::string& s, int cols, int rows) {
    FaceGeometry g(cols, rows);
    int i = 0;
    bool cur = false;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        int run = std::stoi(tok);
        if (run < 0 || i + run > cols * rows) throw InputError("rle_decode: run out of bounds");
        if (cur)
            for (int k = 0; k < run; ++k, ++i) g.fill(i % cols, i / cols);
        else
            i += run;
        cur = !cur;
    }
    if (i != cols * rows) throw InputError("rle_decode: wrong total length");
    return g;
}

inline json system_to_json(const TileSystem& sys) {
    json j;
    j["w"] = sys.w;
    j["l"] = sys.l;
    j["temperature"] = sys.temperature;
    if (sys.seed) j["seed"] = sys.tiles[*sys.seed].name;
    json tiles = json::array();
    for (size_t i = 0; i < sys.tiles.size(); ++i) {
        const auto& t = sys.tiles[i];
        json jt;
        jt["name"] = t.name;
        json glues;
        for (auto s : kSides)
            if (!t.glue[s].is_null())
                glues[side_name(s)] = {{"label", t.glue[s].label}, {"strength", t.glue[s].strength}};
        jt["glues"] = glues;
        json geoms;
        for (auto s : kSides) {
            auto g = sys.face(static_cast<int>(i), s);
            if (!g.empty()) geoms[side_name(s)] = rle_encode(g);
        }
        if (!geoms.empty()) jt["geoms"] = geoms;
        tiles.push_back(jt);
    }
    j["tiles"] = tiles;
    return j;
}

inline TileSystem system_from_json(const json& j) {
    TileSystem sys;
    sys.w = j.at("w").get<int>();
    sys.l = j.at("l").get<int>();
    sys.temperature = j.at("temperature").get<int>();
    if (sys.w < 1 || sys.l < 1) throw InputError("system: w, l must be positive");
    if (sys.temperature != 1 && sys.temperature != 2) throw InputError("system: temperature must be 1 or 2");
    for (auto& jt : j.at("tiles")) {
        GeometricTileType t;
        t.name = jt.at("name").get<std::string>();
        if (jt.contains("glues"))
            for (auto s : kSides)
                if (jt["glues"].contains(side_name(s))) {
                    auto& g = jt["glues"][side_name(s)];
                    t.glue[s] = Glue(g.at("label").get<std::string>(), g.at("strength").get<int>());
                }
        if (jt.contains("geoms"))
            for (auto s : kSides)
                if (jt["geoms"].contains(side_name(s))) {
                    int cols = (s == N || s == S) ? sys.l : sys.w;
                    int rows = (s == N || s == S) ? sys.w : sys.l;
                    t.geom[s] = rle_decode(jt["geoms"][side_name(s)].get<std::string>(), cols, rows);
                }
        sys.add(std::move(t));
    }
    if (j.contains("seed")) sys.seed = sys.index_of(j.at("seed").get<std::string>());
    return sys;
}

// Assembly file: a system (inline) plus a placement list.
inline json assembly_to_json(const TileSystem& sys, const Supertile& st) {
    json j;
    j["system"] = system_to_json(sys);
    json pl = json::array();
    for (auto& [p, t] : st.cells) pl.push_back({{"x", p.x}, {"y", p.y}, {"tile", sys.tiles[t].name}});
    j["placements"] = pl;
    return j;
}

inline std::pair<TileSystem, Supertile> assembly_from_json(const json& j) {
    TileSystem sys = system_from_json(j.at("system"));
    std::vector<std::pair<Pos, int>> cells;
    for (auto& p : j.at("placements"))
        cells.push_back({Pos{p.at("x").get<int>(), p.at("y").get<int>()}, sys.index_of(p.at("tile").get<std::string>())});
    return {std::move(sys), Supertile(std::move(cells))};
}

inline void write_json_file(const std::string& path, const json& j) {
    std::ofstream f(path);
    if (!f) throw InputError("cannot write " + path);
    f << j.dump(1) << "\n";
}

inline json read_json_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot read " + path);
    json j;
    f >> j;
    return j;
}

// Matrix CSV: one row per line, entries 0/1 separated by commas.
inline std::string matrix_to_csv(const BitMatrix& M) {
    std::string out;
    for (int i = 0; i < M.m; ++i) {
        for (int j = 0; j < M.n; ++j) {
            if (j) out += ',';
            out += M.at(i, j) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

inline BitMatrix matrix_from_csv(const std::string& text) {
    std::vector<std::vector<uint8_t>> rows;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty()) continue;
        std::vector<uint8_t> row;
        std::stringstream ls(line);
        std::string tok;
        while (std::getline(ls, tok, ',')) {
            if (tok != "0" && tok != "1") throw InputError("matrix csv: entries must be 0 or 1");
            row.push_back(tok == "1");
        }
        if (!rows.empty() && row.size() != rows[0].size()) throw InputError("matrix csv: ragged rows");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw InputError("matrix csv: empty");
    BitMatrix M(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
    for (int i = 0; i < M.m; ++i)
        for (int j = 0; j < M.n; ++j) M.at(i, j) = rows[i][j];
    return M;
}

// Solution text: l, then m and the E rows, then n and the W rows.
inline std::string solution_to_text(const CompatibilitySolution& sol) {
    std::string out = std::to_string(sol.length) + "\n" + std::to_string(sol.E.size()) + "\n";
    auto emit = [&](const std::vector<BitVec>& vs) {
        for (auto& v : vs) {
            for (auto b : v) out += b ? '1' : '0';
            if (v.empty()) out += '-'; // explicit marker for length-0 vectors
            out += '\n';
        }
    };
    emit(sol.E);
    out += std::to_string(sol.W.size()) + "\n";
    emit(sol.W);
    return out;
}

inline CompatibilitySolution solution_from_text(const std::string& text) {
    std::stringstream ss(text);
    CompatibilitySolution sol;
    int m, n;
    ss >> sol.length >> m;
    auto read_vecs = [&](int count, std::vector<BitVec>& out) {
        for (int i = 0; i < count; ++i) {
            std::string s;
            ss >> s;
            BitVec v;
            if (s != "-")
                for (char c : s) {
                    if (c != '0' && c != '1') throw InputError("solution text: bad bit");
                    v.push_back(c == '1');
                }
            if (static_cast<int>(v.size()) != sol.length) throw InputError("solution text: length mismatch");
            out.push_back(std::move(v));
        }
    };
    read_vecs(m, sol.E);
    ss >> n;
    read_vecs(n, sol.W);
    return sol;
}

} // namespace gtam
