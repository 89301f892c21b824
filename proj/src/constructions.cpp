#include "nkcfg/constructions.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <unordered_set>

#include "nkcfg/errors.hpp"

namespace nkcfg {

namespace {

// Deterministic retry stream (splitmix64). Seeded from the input's geometry
// hash mixed with the caller's seed, so identical inputs retry identically.
class RetryStream {
public:
    explicit RetryStream(std::uint64_t seed) : state_(seed ^ 0x6a09e667f3bcc908ULL) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    long range(long lo, long hi) { // inclusive bounds
        return lo + (long)(next() % (std::uint64_t)(hi - lo + 1));
    }

    // Uniform-ish small rational in (0, 1).
    Rational small_positive() { return Rational(Int(range(1, 9)), Int(range(10, 19))); }

private:
    std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
    b += 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2);
    return a ^ b;
}

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

void require_verified(const Configuration& c, const char* op) {
    VerificationReport rep = verify(c);
    if (!rep.ok)
        throw Error(Errc::InputNotConfiguration,
                    std::string(op) + " input fails verification (" +
                        std::to_string(rep.violations.size()) + " violations, first: " +
                        violation_kind_name(rep.violations.front().kind) + ")");
}

// General-position state for replication: every line transversal to a
// vertical axis, all relevant points at pairwise distinct heights.
struct SurveyResult {
    bool ok = false;
    Rational max_x;     // largest abscissa among pairwise line intersections
};

SurveyResult survey_for_vertical_axis(const Configuration& c) {
    SurveyResult s;
    for (const LineRecord& rec : c.lines)
        if (rec.line.is_vertical()) return s;
    // Pairwise intersections of configuration lines. Configuration points
    // are among them (each lies on >= 2 lines), so one distinct-y sweep over
    // the intersections covers the axis-perpendicularity condition too.
    std::unordered_set<Point, PointHash> pts;
    for (std::size_t i = 0; i < c.lines.size(); ++i)
        for (std::size_t j = i + 1; j < c.lines.size(); ++j)
            if (auto p = intersect(c.lines[i].line, c.lines[j].line)) pts.insert(*p);
    bool first = true;
    std::map<Rational, int> ys;
    for (const Point& p : pts) {
        if (!ys.emplace(p.y, 1).second) return s; // two crossings at one height
        if (first || p.x > s.max_x) s.max_x = p.x;
        first = false;
    }
    s.ok = !first;
    return s;
}

} // namespace

ReplicationResult affine_replication(const Configuration& c, int k, std::uint64_t seed) {
    if (k < 3) throw Error(Errc::BadParams, "replication target k must be >= 3");
    require_verified(c, "replication");
    if (c.k != k - 1)
        throw Error(Errc::InputNotConfiguration,
                    "replication to k = " + std::to_string(k) + " needs a (m_" +
                        std::to_string(k - 1) + ") input, got k = " + std::to_string(c.k));

    const int m = c.n();
    RetryStream rng(mix_seed(geometry_hash(c), seed));
    const int budget = 8;

    for (int attempt = 0; attempt < budget; ++attempt) {
        // Shear into general position. The identity is tried first so inputs
        // that already qualify keep their coordinates.
        AffineMap shear = AffineMap::identity();
        Configuration base = c;
        SurveyResult sv = survey_for_vertical_axis(base);
        for (int tries = 0; !sv.ok && tries < 16; ++tries) {
            shear = AffineMap::linear(1, rng.small_positive(), rng.small_positive(), 1);
            base = apply_map(c, shear);
            sv = survey_for_vertical_axis(base);
        }
        if (!sv.ok) continue;

        // Vertical axis strictly right of every pairwise intersection, whole
        // part only to keep coefficient growth in check.
        Int cx = sv.max_x.floor() + 1;
        if (attempt > 0) cx += rng.range(1, 8);
        Line axis(Int(1), Int(0), Int(-cx));

        std::vector<Rational> ratios;
        if (attempt == 0) {
            for (int i = 1; i < k; ++i) ratios.push_back(Rational(-i));
        } else {
            // Distinct negative ratios keep every image strictly right of
            // the axis, away from the untouched originals.
            std::unordered_set<std::uint64_t> used;
            while ((int)ratios.size() < k - 1) {
                Rational r(Int(-rng.range(2, 40)), Int(rng.range(1, 7)));
                if (used.insert(r.hash()).second) ratios.push_back(r);
            }
        }

        std::vector<AffineMap> maps{AffineMap::identity()};
        for (const Rational& r : ratios) maps.push_back(orthogonal_affinity(axis, r));
        const int copies = k; // original + k-1 images

        Configuration out;
        out.k = k;
        out.points.reserve((std::size_t)(copies + 1) * m);
        for (int j = 0; j < copies; ++j)
            for (int p = 0; p < m; ++p) out.points.push_back(maps[j].apply(base.points[p]));
        // One fixed point per input line where it crosses the axis; shared
        // by the line and all of its images.
        std::vector<int> fixed_ids;
        for (int l = 0; l < m; ++l) {
            auto f = intersect(axis, base.lines[l].line);
            if (!f) break; // axis parallel to a line; resample
            fixed_ids.push_back(copies * m + l);
            out.points.push_back(*f);
        }
        if ((int)fixed_ids.size() != m) continue;

        out.lines.reserve((std::size_t)(copies + 1) * m);
        for (int j = 0; j < copies; ++j) {
            for (int l = 0; l < m; ++l) {
                LineRecord rec;
                rec.line = maps[j].apply(base.lines[l].line);
                for (int pid : base.lines[l].points) rec.points.push_back(j * m + pid);
                rec.points.push_back(copies * m + l);
                std::sort(rec.points.begin(), rec.points.end());
                out.lines.push_back(std::move(rec));
            }
        }
        // The new pencil: one horizontal line per input point, carrying the
        // point and all of its images (orthogonal affinities with a vertical
        // axis preserve heights).
        std::vector<int> pencil_ids;
        for (int p = 0; p < m; ++p) {
            LineRecord rec;
            rec.line = Line(Rational(0), Rational(1), -base.points[p].y);
            for (int j = 0; j < copies; ++j) rec.points.push_back(j * m + p);
            pencil_ids.push_back((int)out.lines.size());
            out.lines.push_back(std::move(rec));
        }

        out.meta = Json::object();
        out.meta["op"] = "affine_replication";
        out.meta["k"] = k;
        out.meta["n"] = out.n();
        Json jratios = Json::array();
        for (const Rational& r : ratios) jratios.push_back(r.str());
        out.meta["ratios"] = std::move(jratios);
        out.meta["axis"] = Json::array({int_str(axis.a()), int_str(axis.b()), int_str(axis.c())});
        out.meta["shear"] = Json::array({shear.m01.str(), shear.m10.str()});
        out.meta["attempt"] = attempt;
        out.meta["parent"] = hash_hex(geometry_hash(c));
        if (c.meta.contains("op")) out.meta["parent_op"] = c.meta["op"];

        if (!verify(out).ok) continue;

        ReplicationResult res;
        res.output = std::move(out);
        res.new_pencil = Pencil{{Int(0), Int(1)}, std::move(pencil_ids)};
        res.axis = axis;
        res.fixed_points = std::move(fixed_ids);
        res.ratios = std::move(ratios);
        return res;
    }
    throw Error(Errc::DegenerateAfterRetries,
                "replication stayed degenerate after " + std::to_string(budget) + " attempts");
}

namespace {

void check_pencil(const Configuration& c, const Pencil& p, const char* name) {
    if (p.lines.empty()) throw Error(Errc::BadParams, std::string(name) + " pencil is empty");
    for (int id : p.lines) {
        if (id < 0 || id >= (int)c.lines.size())
            throw Error(Errc::BadParams, std::string(name) + " pencil references line " + std::to_string(id));
        if (c.lines[id].line.direction() != p.direction)
            throw Error(Errc::BadParams,
                        std::string(name) + " pencil direction does not match line " + std::to_string(id));
    }
}

Rational horizontal_height(const Line& l) {
    if (!l.is_horizontal()) throw std::logic_error("normalized pencil line is not horizontal");
    return Rational(-l.c(), l.b());
}

Rational vertical_offset(const Line& l) {
    if (!l.is_vertical()) throw std::logic_error("normalized pencil line is not vertical");
    return Rational(-l.c(), l.a());
}

} // namespace

SwitchResult affine_switch(const Configuration& c, const Pencil& pencil_h, const Pencil* pencil_v,
                           int s, int t, long h, std::uint64_t seed) {
    require_verified(c, "switch");
    const int k = c.k;
    if (k < 3)
        throw Error(Errc::InputNotConfiguration, "switch needs k >= 3, got k = " + std::to_string(k));
    check_pencil(c, pencil_h, "horizontal");
    if (pencil_v) check_pencil(c, *pencil_v, "vertical");
    if (s < 0 || t < 0) throw Error(Errc::BadParams, "negative removal count");
    if (t > 0 && !pencil_v) throw Error(Errc::BadParams, "t > 0 needs a vertical pencil");
    const int r = s + t;
    if (r < 1) throw Error(Errc::RTooLarge, "r = s + t must be at least 1");
    if (s > pencil_h.size())
        throw Error(Errc::RTooLarge, "s = " + std::to_string(s) + " exceeds pencil of " +
                                         std::to_string(pencil_h.size()));
    if (pencil_v && t > pencil_v->size())
        throw Error(Errc::RTooLarge, "t = " + std::to_string(t) + " exceeds pencil of " +
                                         std::to_string(pencil_v->size()));
    if (pencil_v && !independent_pencils(c, pencil_h, *pencil_v))
        throw Error(Errc::DependentPencils, "pencils share a point");

    long h0 = h > 0 ? h : 2L * k;
    if (h0 <= (long)k - 2) throw Error(Errc::HTooSmall, "need h > k-2");

    const int m = c.n();
    Configuration normalized = pencil_v ? normalize_pencils(c, pencil_h, pencil_v)
                                        : normalize_pencils(c, pencil_h);

    // Lines removed, in deterministic order: lowest ids first, horizontal
    // pencil before vertical.
    std::vector<int> removed(pencil_h.lines.begin(), pencil_h.lines.begin() + s);
    if (t > 0) removed.insert(removed.end(), pencil_v->lines.begin(), pencil_v->lines.begin() + t);
    std::unordered_set<int> removed_set(removed.begin(), removed.end());

    RetryStream rng(mix_seed(geometry_hash(c), seed));
    const int budget = 8;

    for (int attempt = 0; attempt < budget; ++attempt) {
        long cur_h = h0 << attempt;
        // Strictly positive quadrant: keeps the origin (the diagonal maps'
        // only fixed point) and both coordinate axes clear of the
        // configuration. Later attempts jitter the frame, which moves the
        // centers relative to the copies; h alone cannot (the connecting
        // lines and centers are h-independent).
        Rational minx = normalized.points[0].x, miny = normalized.points[0].y;
        for (const Point& p : normalized.points) {
            if (p.x < minx) minx = p.x;
            if (p.y < miny) miny = p.y;
        }
        Rational dx = Rational(1) - Rational(minx.floor());
        Rational dy = Rational(1) - Rational(miny.floor());
        if (attempt > 0) {
            dx += rng.small_positive();
            dy += rng.small_positive();
        }
        Configuration frame = apply_map(normalized, AffineMap::translation(dx, dy));

        std::vector<AffineMap> alphas = switch_family(cur_h, k);
        const int copies = k - 1; // original + k-2 images
        std::vector<AffineMap> maps{AffineMap::identity()};
        maps.insert(maps.end(), alphas.begin(), alphas.end());

        Configuration out;
        out.k = k;
        out.points.reserve((std::size_t)copies * m + r);
        for (int j = 0; j < copies; ++j)
            for (int p = 0; p < m; ++p) out.points.push_back(maps[j].apply(frame.points[p]));

        // One center per removed line; every connecting line of that removed
        // line passes through it, on the axis the removed line faces.
        std::vector<int> center_ids;
        for (int rid = 0; rid < r; ++rid) {
            const Line& dead = frame.lines[removed[rid]].line;
            Point center = rid < s ? pencil_center_y(alphas[0], horizontal_height(dead))
                                   : pencil_center(alphas[0], vertical_offset(dead));
            center_ids.push_back((int)out.points.size());
            out.points.push_back(center);
        }

        out.lines.reserve((std::size_t)copies * (m - r) + (std::size_t)r * k);
        for (int j = 0; j < copies; ++j) {
            for (int l = 0; l < m; ++l) {
                if (removed_set.count(l)) continue;
                LineRecord rec;
                rec.line = maps[j].apply(frame.lines[l].line);
                for (int pid : frame.lines[l].points) rec.points.push_back(j * m + pid);
                std::sort(rec.points.begin(), rec.points.end());
                out.lines.push_back(std::move(rec));
            }
        }
        for (int rid = 0; rid < r; ++rid) {
            for (int pid : frame.lines[removed[rid]].points) {
                // The images of a point under the whole family are collinear
                // with it; one connecting line per orbit plus the center.
                LineRecord rec;
                rec.line = line_through(frame.points[pid], maps[1].apply(frame.points[pid]));
                for (int j = 0; j < copies; ++j) rec.points.push_back(j * m + pid);
                rec.points.push_back(center_ids[rid]);
                std::sort(rec.points.begin(), rec.points.end());
                out.lines.push_back(std::move(rec));
            }
        }

        out.meta = Json::object();
        out.meta["op"] = "affine_switch";
        out.meta["k"] = k;
        out.meta["n"] = out.n();
        out.meta["h"] = cur_h;
        out.meta["s"] = s;
        out.meta["t"] = t;
        out.meta["removed_lines"] = removed;
        out.meta["attempt"] = attempt;
        out.meta["parent"] = hash_hex(geometry_hash(c));
        if (c.meta.contains("op")) out.meta["parent_op"] = c.meta["op"];

        if (!verify(out).ok) continue;

        SwitchResult res;
        res.output = std::move(out);
        res.removed_line_ids = removed;
        res.center_point_ids = std::move(center_ids);
        res.h = cur_h;
        return res;
    }
    throw Error(Errc::DegenerateAfterRetries,
                "switch stayed degenerate after " + std::to_string(budget) + " attempts");
}

std::vector<SwitchResult> affine_switch_band(const Configuration& c, const Pencil& pencil,
                                             long h, std::uint64_t seed) {
    std::vector<SwitchResult> results;
    for (int r = 1; r <= pencil.size(); ++r)
        results.push_back(affine_switch(c, pencil, nullptr, r, 0, h, seed));
    return results;
}

} // namespace nkcfg
