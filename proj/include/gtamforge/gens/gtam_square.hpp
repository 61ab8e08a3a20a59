#pragma once

#include <map>
#include <memory>

#include "gtamforge/rotate.hpp"
#include "gtamforge/zigzag.hpp"

namespace gtam {

// Parameter block for the temperature-1 square pipeline.
struct GtamSquareParams {
    int n = 0;
    int np = 0;     // ceil(log2((n+1)/2))
    int r = 0;      // two-digit counter base, >= ceil(sqrt(np/2 + 1/2))
    long long B = 0; // 2^np - n/2 - 1
};

inline GtamSquareParams gtam_square_params(int n) {
    if (n < 16 || n % 2) throw InputError("gtam square: n must be even and at least 16");
    GtamSquareParams p;
    p.n = n;
    p.np = ceil_log2((n + 1 + 1) / 2); // ceil(log2((n+1)/2)) for integer n
    while ((1LL << p.np) < (n + 1 + 1) / 2) ++p.np;
    p.r = static_cast<int>(std::ceil(std::sqrt(p.np / 2.0 + 0.5)));
    // The counter base must give the decoder room for np bits and the bed
    // room for np+2-ish columns; bump r when the square-root formula falls
    // one short (it does for a sparse family of np values).
    while (2 * p.r * p.r - 2 < p.np || 2 * p.r * p.r < p.np + 2) ++p.r;
    p.B = (1LL << p.np) - n / 2 - 1;
    if ((1LL << (p.np + 1)) - 2 * p.B - 2 != n) throw VerifyError("gtam square: height identity failed");
    return p;
}

struct GtamSquareInfo {
    GtamSquareParams params;
    int tile_count = 0;
    int geometry_length = 0;
    std::map<std::string, int> counts; // per component
    int pipe_width[3] = {0, 0, 0};     // cross-section of each border pipeline
};

namespace gsq {

// Index registry for the glue-identity bump family of one pipeline.
struct FamilyBook {
    std::map<std::string, int> idx;
    int at(const std::string& name) {
        auto [it, fresh] = idx.try_emplace(name, static_cast<int>(idx.size()));
        return it->second;
    }
};

struct PipelinePlan {
    int height;    // extent along the growth axis
    int width;     // cross-section: bed length L (odd: counter bits + 2 walls... L = w + 2)
    int bits;      // counter bit width w = L - 2
    int roof_rows; // 1 or 2
    long long seed_value; // decoded counter start B_k
    int bed_seed;  // base-r start value
};

// Choose the cross-section for a pipeline of the given height: counter bits w
// (odd so the bed's two-columns-per-count extent works out), roof rows fixing
// parity, and the start values. Rows: bed (2), decoder, echo, counter, roofs.
inline PipelinePlan plan_pipeline(int height, int r, int min_bits) {
    PipelinePlan pl;
    pl.height = height;
    pl.roof_rows = (height % 2 == 0) ? 1 : 2;
    int hc = height - 4 - pl.roof_rows; // counter rows; odd by construction
    if (hc < 1 || hc % 2 != 1) throw InputError("gtam square: pipeline height infeasible");
    int w = std::max(min_bits, 1);
    if (w % 2 == 0) ++w;
    while ((1LL << (w + 1)) - 3 < hc) w += 2;
    pl.bits = w;
    pl.width = w + 2;
    pl.seed_value = (1LL << w) - 1 - (hc + 1) / 2;
    if (pl.seed_value < 0) throw VerifyError("gtam square: negative counter seed");
    int bed_cols = pl.width - 1; // even; the last bed column is the cap pair
    if (bed_cols % 2 || 2 * r * r < bed_cols) throw InputError("gtam square: bed capacity exceeded");
    pl.bed_seed = r * r - bed_cols / 2;
    return pl;
}

// All tiles of one pipeline in its logical frame (bed rows 0-1 growing east,
// decoder row 2, converted binary counter above, roof rows on top).
struct PipelineTiles {
    std::vector<GeometricTileType> tiles;
    std::string seed_name;  // only meaningful for the first pipeline
};

class PipelineBuilder {
public:
    PipelineBuilder(const PipelinePlan& pl, int r, int fam_count_hint, const std::string& prefix)
        : pl_(pl), r_(r), prefix_(prefix) {}

    // Geometry layout along the face length:
    //   [0, fam_len)                identity bumps (glue equality)
    //   [fam_len, fam_len+2)        roof discrimination marks D0, D1
    //   [fam_len+2, fam_len+2+r)    decoder epoch positions
    //   [chain_off, chain_off+...)  decoder chain patterns (east/west faces)
    void build() {
        // Pass 1 registers family indices; pass 2 sizes the grids. Run the
        // emission twice: first with a throwaway geometry length to collect
        // indices, then for real.
        collect_indices();
        fam_ = std::make_unique<detail::IdentityBumps>(static_cast<int>(book_.idx.size()));
        chain_ = std::make_unique<detail::IdentityBumps>(2 * r_);
        fam_len_ = fam_->len;
        d0_ = fam_len_;
        d1_ = fam_len_ + 1;
        xg_off_ = fam_len_ + 2;
        chain_off_ = xg_off_ + r_;
        face_len_ = chain_off_ + chain_->len;
        emit();
    }

    int face_len() const { return face_len_; }
    PipelineTiles take() { return {std::move(out_), prefix_ + "S1"}; }

    // Interface hooks configured by the caller before build().
    std::string entry_glue;           // bond on the bed seed's outward face
    std::string exit_glue;            // bond on the top roof's east face
    bool interior_wall = false;       // inject filler-facing glues ("fa") east
    bool bottom_seed = false;         // bed cap seeds the bottom filler row

private:
    PipelinePlan pl_;
    int r_;
    std::string prefix_;
    FamilyBook book_;
    std::unique_ptr<detail::IdentityBumps> fam_, chain_;
    int fam_len_ = 0, d0_ = 0, d1_ = 0, xg_off_ = 0, chain_off_ = 0, face_len_ = 0;
    std::vector<GeometricTileType> out_;

    void collect_indices() {
        for (int d = 0; d < r_; ++d) {
            book_.at("a0:" + std::to_string(d));
            book_.at("b0n:" + std::to_string(d));
            book_.at("b1:" + std::to_string(d));
            book_.at("d1:" + std::to_string(d));
        }
        book_.at("bedcap");
        for (auto* s : {"b0", "b1", "n0", "n1", "ww", "wwi", "we", "wei", "r1s", "ew", "dse"}) book_.at(s);
    }

    // -- small helpers ------------------------------------------------------
    Glue g1(const std::string& label) { return Glue(prefix_ + label, 1); }

    FaceGeometry ns_face(std::initializer_list<std::pair<bool, int>> parts,
                         std::initializer_list<int> extra = {}) {
        // parts: (outward?, family index) bumps; extra: raw positions.
        FaceGeometry g(face_len_, 1);
        for (auto [outward, k] : parts) {
            const BitVec& v = outward ? fam_->outs[k] : fam_->ins[k];
            for (int i = 0; i < fam_->len; ++i)
                if (v[i]) g.fill(i, 0);
        }
        for (int p : extra) g.fill(p, 0);
        return g;
    }

    FaceGeometry ew_face(std::initializer_list<std::pair<bool, int>> parts,
                         std::initializer_list<int> extra = {}) {
        FaceGeometry g(1, face_len_);
        for (auto [outward, k] : parts) {
            const BitVec& v = outward ? fam_->outs[k] : fam_->ins[k];
            for (int i = 0; i < fam_->len; ++i)
                if (v[i]) g.fill(0, i);
        }
        for (int p : extra) g.fill(0, p);
        return g;
    }

    FaceGeometry chain_east(int j) {
        FaceGeometry g(1, face_len_);
        for (int i = 0; i < chain_->len; ++i)
            if (chain_->outs[j][i]) g.fill(0, chain_off_ + i);
        return g;
    }
    FaceGeometry chain_west(int j) {
        int k = (j - 1 + 2 * r_) % (2 * r_);
        FaceGeometry g(1, face_len_);
        for (int i = 0; i < chain_->len; ++i)
            if (chain_->ins[k][i]) g.fill(0, chain_off_ + i);
        return g;
    }

    int fam(const std::string& s) { return book_.idx.at(s); }
    int epoch_of_col(int c) const {
        return static_cast<int>((pl_.bed_seed + c / 2) / r_);
    }
    int bit_of_col(int c) const { // decoder column c in [1, width-2], msb first
        return static_cast<int>((pl_.seed_value >> (pl_.bits - c)) & 1);
    }

    void add(GeometricTileType t) {
        t.name = prefix_ + t.name;
        out_.push_back(std::move(t));
    }

    // -- emission ------------------------------------------------------------
    void emit() {
        emit_bed();
        emit_decoder();
        emit_echo();
        emit_counter();
        emit_roofs();
    }

    // Vertical-frame bed tiles (two-digit base-r counter at temperature 1,
    // glue identity through bumps), then one clockwise turn into the logical
    // frame. The vertical west faces carry the epoch marks the decoder reads.
    void emit_bed() {
        auto x_mark = [&](int e) {
            FaceGeometry g(1, face_len_);
            g.fill(0, xg_off_ + e);
            return g;
        };
        std::vector<GeometricTileType> bed;
        int d1b = pl_.bed_seed / r_, d0b = pl_.bed_seed % r_;
        auto num = [](int v) { return std::to_string(v); };
        {
            auto t = build::tile("S1");
            t.glue[E] = g1("seed");
            t.geom[N] = ns_face({{true, fam("d1:" + num(d1b))}});
            t.geom[W] = x_mark(d1b);
            bed.push_back(t);
        }
        {
            auto t = build::tile("S2");
            t.glue[W] = g1("seed");
            t.glue[N] = g1("a0:" + num(d0b));
            t.geom[N] = ns_face({{true, fam("a0:" + num(d0b))}});
            if (!entry_glue.empty()) t.glue[E] = Glue(entry_glue, 1);
            bed.push_back(t);
        }
        for (int d = 0; d < r_; ++d) {
            auto t = build::tile("A0:" + num(d));
            t.glue[W] = g1("row");
            t.geom[S] = ns_face({{false, fam("b0n:" + num(d))}});
            t.glue[N] = g1("a0:" + num(d));
            t.geom[N] = ns_face({{true, fam("a0:" + num(d))}});
            bed.push_back(t);
        }
        for (int d = 0; d < r_; ++d) {
            auto t = build::tile("B0:" + num(d));
            t.glue[S] = g1("a0:" + num(d));
            t.geom[S] = ns_face({{false, fam("a0:" + num(d))}});
            t.geom[N] = ns_face({{true, fam("b0n:" + num((d + 1) % r_))}});
            t.glue[W] = g1(d == r_ - 1 ? "c1" : "c0");
            bed.push_back(t);
        }
        for (int d = 0; d < r_; ++d) {
            auto t = build::tile("B1k:" + num(d));
            t.glue[E] = g1("c0");
            t.geom[S] = ns_face({{false, fam("d1:" + num(d))}});
            t.glue[N] = g1("b1:" + num(d));
            t.geom[N] = ns_face({{true, fam("b1:" + num(d))}});
            t.geom[W] = x_mark(d);
            bed.push_back(t);
        }
        for (int d = 0; d < r_; ++d) {
            auto t = build::tile("B1i:" + num(d));
            t.glue[E] = g1("c1");
            t.geom[S] = ns_face({{false, fam("d1:" + num(d))}});
            if (d != r_ - 1) {
                t.glue[N] = g1("b1:" + num(d + 1));
                t.geom[N] = ns_face({{true, fam("b1:" + num(d + 1))}});
            } else {
                t.glue[N] = g1("bedcap");
                t.geom[N] = ns_face({{true, fam("bedcap")}});
            }
            t.geom[W] = x_mark(d);
            bed.push_back(t);
        }
        for (int d = 0; d < r_; ++d) {
            auto t = build::tile("A1:" + num(d));
            t.glue[S] = g1("b1:" + num(d));
            t.geom[S] = ns_face({{false, fam("b1:" + num(d))}});
            t.geom[N] = ns_face({{true, fam("d1:" + num(d))}});
            t.glue[E] = g1("row");
            t.geom[W] = x_mark(d);
            bed.push_back(t);
        }
        {
            auto t = build::tile("bcW"); // cap pair: the bed's final column
            t.glue[S] = g1("bedcap");
            t.geom[S] = ns_face({{false, fam("bedcap")}});
            t.glue[E] = g1("bedcapE");
            t.glue[W] = g1("dseed");
            if (interior_wall) t.glue[N] = g1("fa");
            bed.push_back(t);
        }
        {
            auto t = build::tile("bcE");
            t.glue[W] = g1("bedcapE");
            if (interior_wall) t.glue[N] = g1("fa");
            if (bottom_seed) t.glue[N] = g1("fb"); // starts the bottom filler row
            bed.push_back(t);
        }
        for (auto& t : bed) add(rotate_tile_cw(t, 1, face_len_));
    }

    void emit_decoder() {
        int L = pl_.width;
        // Blocked epochs per (label j, color): a generic tile may not sit on
        // the wall column and may not pick the wrong bit.
        for (int j = 0; j < 2 * r_; ++j)
            for (int color = 0; color < 2; ++color) {
                auto t = build::tile("dec:" + std::to_string(j) + ":" + std::to_string(color));
                t.glue[E] = g1("dch");
                t.glue[W] = g1("dch");
                FaceGeometry south(face_len_, 1);
                if (j == 0) south.fill(xg_off_ + epoch_of_col(0), 0);
                for (int c = 1; c <= L - 2; ++c)
                    if (c % (2 * r_) == j && bit_of_col(c) != color)
                        south.fill(xg_off_ + epoch_of_col(c), 0);
                t.geom[S] = south;
                t.geom[E] = chain_east(j);
                t.geom[W] = chain_west(j);
                t.geom[N] = ns_face({{true, fam(color ? "b1" : "b0")}});
                add(t);
            }
        {
            auto t = build::tile("dwall");
            t.glue[E] = g1("dch");
            t.geom[E] = chain_east(0);
            FaceGeometry south(face_len_, 1);
            for (int e = 0; e < r_; ++e)
                if (e != epoch_of_col(0)) south.fill(xg_off_ + e, 0);
            t.geom[S] = south;
            t.glue[N] = g1("ew"); // starts the echo row once the decoder is done
            t.geom[N] = ns_face({{true, fam("ew")}});
            add(t);
        }
        {
            auto t = build::tile("dseedt");
            t.glue[S] = g1("dseed");
            t.glue[W] = g1("dch");
            t.geom[W] = chain_west((L - 1) % (2 * r_));
            t.geom[N] = ns_face({{true, fam("dse")}});
            if (interior_wall) t.glue[E] = g1("fa");
            add(t);
        }
    }

    // Echo row: replays the decoded bits west to east so the counter's first
    // increment row cannot outrun the decoder (it is seeded at the echo's
    // east end only after every bit is in place).
    void emit_echo() {
        {
            auto t = build::tile("eW");
            t.glue[S] = g1("ew");
            t.geom[S] = ns_face({{false, fam("ew")}});
            t.glue[E] = g1("ech");
            t.geom[N] = ns_face({{true, fam("ww")}});
            add(t);
        }
        for (int b = 0; b < 2; ++b) {
            auto t = build::tile("e" + std::to_string(b));
            t.glue[W] = g1("ech");
            t.glue[E] = g1("ech");
            t.geom[S] = ns_face({{false, fam(b ? "b1" : "b0")}});
            t.geom[N] = ns_face({{true, fam(b ? "b1" : "b0")}});
            add(t);
        }
        {
            auto t = build::tile("eE");
            t.glue[W] = g1("ech");
            t.geom[S] = ns_face({{false, fam("dse")}});
            t.glue[N] = g1("we");
            t.geom[N] = ns_face({{true, fam("we")}});
            if (interior_wall) t.glue[E] = g1("fa");
            add(t);
        }
    }

    // Binary counter in converted form: increment rows assemble east to west
    // carrying (carry, all-ones flag), copy rows west to east. The all-ones
    // increment row seeds the roof instead of another copy row.
    void emit_counter() {
        auto cf = [&](int c, int g) { return g1("cf" + std::to_string(c) + std::to_string(g)); };
        {
            auto t = build::tile("EI");
            t.glue[S] = g1("we");
            t.geom[S] = ns_face({{false, fam("we")}});
            t.glue[W] = cf(1, 1);
            t.geom[N] = ns_face({{true, fam("wei")}}, {d1_});
            if (interior_wall) t.glue[E] = g1("fa");
            add(t);
        }
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int g = 0; g < 2; ++g) {
                    auto t = build::tile("I" + std::to_string(b) + std::to_string(c) + std::to_string(g));
                    t.geom[S] = ns_face({{false, fam(b ? "b1" : "b0")}});
                    t.glue[E] = cf(c, g);
                    t.glue[W] = cf(b & c, g & (b ^ c));
                    t.geom[N] = ns_face({{true, fam((b ^ c) ? "n1" : "n0")}}, {d0_});
                    add(t);
                }
        {
            auto t = build::tile("WI");
            t.glue[E] = cf(0, 0);
            t.geom[S] = ns_face({{false, fam("ww")}});
            t.glue[N] = g1("wwi");
            t.geom[N] = ns_face({{true, fam("wwi")}});
            add(t);
        }
        {
            auto t = build::tile("WIfin");
            t.glue[E] = cf(0, 1);
            t.geom[S] = ns_face({{false, fam("ww")}});
            t.glue[N] = g1("r1seed");
            t.geom[N] = ns_face({{true, fam("r1s")}});
            add(t);
        }
        {
            auto t = build::tile("WC");
            t.glue[S] = g1("wwi");
            t.geom[S] = ns_face({{false, fam("wwi")}});
            t.glue[E] = g1("fl");
            t.geom[N] = ns_face({{true, fam("ww")}});
            add(t);
        }
        for (int b = 0; b < 2; ++b) {
            auto t = build::tile("C" + std::to_string(b));
            t.geom[S] = ns_face({{false, fam(b ? "n1" : "n0")}});
            t.glue[W] = g1("fl");
            t.glue[E] = g1("fl");
            t.geom[N] = ns_face({{true, fam(b ? "b1" : "b0")}});
            add(t);
        }
        {
            auto t = build::tile("EC");
            t.geom[S] = ns_face({{false, fam("wei")}});
            t.glue[W] = g1("fl");
            t.glue[N] = g1("we");
            t.geom[N] = ns_face({{true, fam("we")}});
            if (interior_wall) t.glue[E] = g1("fa");
            add(t);
        }
    }

    void emit_roofs() {
        bool two = pl_.roof_rows == 2;
        {
            auto t = build::tile("r1W");
            t.glue[S] = g1("r1seed");
            t.geom[S] = ns_face({{false, fam("r1s")}});
            t.glue[E] = g1("r1ch");
            t.geom[N] = ns_face({}, {d1_});
            add(t);
        }
        {
            auto t = build::tile("r1T");
            t.glue[W] = g1("r1ch");
            t.glue[E] = g1("r1ch");
            t.geom[S] = ns_face({}, {d1_});
            t.geom[N] = ns_face({}, {d0_});
            add(t);
        }
        {
            auto t = build::tile("r1E");
            t.glue[W] = g1("r1ch");
            t.geom[S] = ns_face({}, {d0_});
            if (two) {
                t.glue[N] = g1("r2seed");
            } else if (!exit_glue.empty()) {
                t.glue[E] = Glue(exit_glue, 1);
            }
            // The top roof's east corner lands on the square's boundary row;
            // the bottom filler row is seeded elsewhere, so no wall glue here.
            add(t);
        }
        if (!two) return;
        {
            auto t = build::tile("r2E");
            t.glue[S] = g1("r2seed");
            t.glue[W] = g1("r2ch");
            if (!exit_glue.empty()) t.glue[E] = Glue(exit_glue, 1);
            add(t);
        }
        {
            auto t = build::tile("r2T");
            t.glue[E] = g1("r2ch");
            t.glue[W] = g1("r2ch");
            t.geom[S] = ns_face({}, {d1_});
            add(t);
        }
        {
            auto t = build::tile("r2W");
            t.glue[E] = g1("r2ch");
            t.geom[S] = ns_face({}, {d0_});
            add(t);
        }
        if (two && interior_wall) {
            // With two roof rows the lower roof's east tile also faces the
            // interior column below the exit corner.
            for (auto& t : out_)
                if (t.name == prefix_ + "r1E") t.glue[E] = g1("fa");
        }
    }
};

} // namespace gsq

// Temperature-1 geometric tile system that uniquely assembles an n x n
// square: three border pipelines (west wall growing north, top strip growing
// east, east wall growing south), each a bed counter + bit decoder + binary
// counter + roof, plus three filler tiles that sweep the interior column by
// column from the east wall.
inline std::pair<TileSystem, GtamSquareInfo> gen_gtam_square(int n) {
    GtamSquareInfo info;
    info.params = gtam_square_params(n);
    int r = info.params.r;

    // Pipeline heights: west wall spans the full side; the top strip spans
    // the rest of the top edge; the east wall spans below the top strip.
    auto p1 = gsq::plan_pipeline(n, r, info.params.np);
    auto p2 = gsq::plan_pipeline(n - p1.width, r, 1);
    auto p3 = gsq::plan_pipeline(n - p2.width, r, 1);
    info.pipe_width[0] = p1.width;
    info.pipe_width[1] = p2.width;
    info.pipe_width[2] = p3.width;
    if (p1.width + p3.width >= n || p2.width >= n)
        throw InputError("gtam square: n too small for the border pipelines");

    TileSystem sys;
    sys.temperature = 1;
    sys.w = 1;

    const gsq::PipelinePlan plans[3] = {p1, p2, p3};
    int face_len = 0;
    std::string seed_name;
    for (int k = 0; k < 3; ++k) {
        gsq::PipelineBuilder b(plans[k], r, 0, "p" + std::to_string(k + 1) + ":");
        if (k > 0) b.entry_glue = "hand:" + std::to_string(k + 1);
        if (k < 2) b.exit_glue = "hand:" + std::to_string(k + 2);
        b.interior_wall = (k == 2);
        b.bottom_seed = (k == 0);
        b.build();
        face_len = std::max(face_len, b.face_len());
        auto pt = b.take();
        if (k == 0) seed_name = pt.seed_name;
        for (auto& t : pt.tiles) {
            // Rotate into the physical frame: p1 keeps the logical frame,
            // p2 turns once clockwise, p3 twice.
            GeometricTileType rt = t;
            for (int q = 0; q < k; ++q) rt = rotate_tile_cw(rt, 1, b.face_len());
            sys.tiles.push_back(std::move(rt));
        }
        info.counts["pipeline" + std::to_string(k + 1)] = static_cast<int>(pt.tiles.size());
    }
    // All pipelines share the face length; builders can differ only through
    // their family sizes, which depend on r alone.
    sys.l = face_len;
    for (auto& t : sys.tiles) sys.validate_dims(t);

    // Interior fillers: rows sweep west from the east wall on alternating
    // chain labels; the bottom row sweeps east from the west bed's cap so the
    // two never meet.
    {
        auto t = build::tile("fillW");
        t.glue[E] = Glue("p3:fa", 1);
        t.glue[W] = Glue("f1", 1);
        sys.add(t);
        auto u = build::tile("fill1");
        u.glue[E] = Glue("f1", 1);
        u.glue[W] = Glue("f2", 1);
        sys.add(u);
        auto v = build::tile("fill2");
        v.glue[E] = Glue("f2", 1);
        v.glue[W] = Glue("f1", 1);
        sys.add(v);
        auto bw = build::tile("fillBW");
        bw.glue[W] = Glue("p1:fb", 1);
        bw.glue[E] = Glue("fbA", 1);
        sys.add(bw);
        auto ba = build::tile("fillBA");
        ba.glue[W] = Glue("fbA", 1);
        ba.glue[E] = Glue("fbB", 1);
        sys.add(ba);
        auto bb = build::tile("fillBB");
        bb.glue[W] = Glue("fbB", 1);
        bb.glue[E] = Glue("fbA", 1);
        sys.add(bb);
        info.counts["filler"] = 6;
    }
    sys.seed = sys.index_of(seed_name);
    info.tile_count = static_cast<int>(sys.tiles.size());
    info.geometry_length = sys.l;
    return {std::move(sys), info};
}

} // namespace gtam
