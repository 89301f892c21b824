#include "nkcfg/configuration.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "nkcfg/errors.hpp"

namespace nkcfg {

const char* violation_kind_name(Violation::Kind k) {
    switch (k) {
    case Violation::Kind::CountMismatch: return "count_mismatch";
    case Violation::Kind::BadK: return "bad_k";
    case Violation::Kind::DuplicatePoint: return "duplicate_point";
    case Violation::Kind::DuplicateLine: return "duplicate_line";
    case Violation::Kind::BadIndex: return "bad_index";
    case Violation::Kind::DeclaredCount: return "declared_count";
    case Violation::Kind::BrokenIncidence: return "broken_incidence";
    case Violation::Kind::UnintendedIncidence: return "unintended_incidence";
    case Violation::Kind::PointDegree: return "point_degree";
    case Violation::Kind::LineDegree: return "line_degree";
    }
    return "unknown";
}

namespace {

// One-sided incidence prefilter: evaluate the line form mod the Mersenne
// prime 2^61-1. A nonzero residue proves non-incidence; a zero residue (or a
// denominator divisible by p) falls back to the exact rational test, so the
// verdict never differs from the naive exact scan.
constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
    return (std::uint64_t)((unsigned __int128)a * b % kPrime);
}

std::uint64_t addmod(std::uint64_t a, std::uint64_t b) {
    std::uint64_t s = a + b; // < 2^62, no overflow
    return s >= kPrime ? s - kPrime : s;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    while (exp) {
        if (exp & 1) r = mulmod(r, base);
        base = mulmod(base, base);
        exp >>= 1;
    }
    return r;
}

std::uint64_t residue(const Int& v) {
    std::uint64_t r = mpz_fdiv_ui(v.get_mpz_t(), kPrime);
    return r;
}

struct RatResidue {
    std::uint64_t v = 0;
    bool ok = false;
};

RatResidue residue(const Rational& q) {
    std::uint64_t den = residue(q.den());
    if (den == 0) return {};
    std::uint64_t num = residue(q.num());
    return {mulmod(num, powmod(den, kPrime - 2)), true};
}

bool sorted_contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

} // namespace

VerificationReport verify(const Configuration& c) {
    VerificationReport rep;
    auto flag = [&](Violation::Kind kind, int point, int line, std::string detail) {
        rep.violations.push_back({kind, point, line, std::move(detail)});
    };

    const int np = (int)c.points.size();
    const int nl = (int)c.lines.size();

    if (np != nl)
        flag(Violation::Kind::CountMismatch, -1, -1,
             std::to_string(np) + " points vs " + std::to_string(nl) + " lines");
    if (np == 0 && nl == 0)
        flag(Violation::Kind::CountMismatch, -1, -1, "empty configuration");
    if (c.k < 2)
        flag(Violation::Kind::BadK, -1, -1, "k = " + std::to_string(c.k));

    std::unordered_map<Point, int, PointHash> point_ix;
    for (int i = 0; i < np; ++i) {
        auto [it, fresh] = point_ix.emplace(c.points[i], i);
        if (!fresh)
            flag(Violation::Kind::DuplicatePoint, i, -1,
                 "coincides with point " + std::to_string(it->second));
    }
    std::unordered_map<Line, int, LineHash> line_ix;
    for (int j = 0; j < nl; ++j) {
        auto [it, fresh] = line_ix.emplace(c.lines[j].line, j);
        if (!fresh)
            flag(Violation::Kind::DuplicateLine, -1, j,
                 "coincides with line " + std::to_string(it->second));
    }

    // Declared incidence lists: sorted unique in-range ids, exactly k each.
    std::vector<std::vector<int>> declared(nl);
    for (int j = 0; j < nl; ++j) {
        std::vector<int> ids = c.lines[j].points;
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        if (ids.size() != c.lines[j].points.size())
            flag(Violation::Kind::BadIndex, -1, j, "repeated point id in incidence list");
        std::vector<int> kept;
        for (int id : ids) {
            if (id < 0 || id >= np)
                flag(Violation::Kind::BadIndex, id, j, "point id out of range");
            else
                kept.push_back(id);
        }
        if ((int)kept.size() != c.k)
            flag(Violation::Kind::DeclaredCount, -1, j,
                 "declares " + std::to_string(kept.size()) + " points, expected " +
                     std::to_string(c.k));
        declared[j] = std::move(kept);
    }

    // Exact n x n incidence scan (prefiltered). True degrees are counted
    // over all pairs, so unintended incidences can not hide.
    std::vector<RatResidue> px(np), py(np);
    for (int i = 0; i < np; ++i) {
        px[i] = residue(c.points[i].x);
        py[i] = residue(c.points[i].y);
    }
    std::vector<int> point_deg(np, 0), line_deg(nl, 0);
    for (int j = 0; j < nl; ++j) {
        const Line& l = c.lines[j].line;
        std::uint64_t ra = residue(l.a()), rb = residue(l.b()), rc = residue(l.c());
        for (int i = 0; i < np; ++i) {
            bool inc;
            if (px[i].ok && py[i].ok) {
                std::uint64_t r = addmod(addmod(mulmod(ra, px[i].v), mulmod(rb, py[i].v)), rc);
                inc = (r == 0) && l.contains(c.points[i]);
            } else {
                inc = l.contains(c.points[i]);
            }
            if (inc) {
                ++point_deg[i];
                ++line_deg[j];
                ++rep.incidences;
                if (!sorted_contains(declared[j], i))
                    flag(Violation::Kind::UnintendedIncidence, i, j,
                         "point lies on the line but is not declared");
            } else if (sorted_contains(declared[j], i)) {
                flag(Violation::Kind::BrokenIncidence, i, j,
                     "declared point does not lie on the line");
            }
        }
    }
    for (int i = 0; i < np; ++i)
        if (point_deg[i] != c.k)
            flag(Violation::Kind::PointDegree, i, -1,
                 "on " + std::to_string(point_deg[i]) + " lines, expected " + std::to_string(c.k));
    for (int j = 0; j < nl; ++j)
        if (line_deg[j] != c.k)
            flag(Violation::Kind::LineDegree, -1, j,
                 "through " + std::to_string(line_deg[j]) + " points, expected " +
                     std::to_string(c.k));

    // Incidence graph connectivity over declared incidences. Reported for
    // information only; disconnected configurations are legitimate.
    {
        int total = np + nl;
        std::vector<char> seen(total, 0);
        std::queue<int> q;
        if (total > 0) {
            q.push(0);
            seen[0] = 1;
        }
        int visited = total > 0 ? 1 : 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            auto push = [&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    ++visited;
                    q.push(w);
                }
            };
            if (v < np) {
                for (int j = 0; j < nl; ++j)
                    if (sorted_contains(declared[j], v)) push(np + j);
            } else {
                for (int id : declared[v - np]) push(id);
            }
        }
        rep.connected = (visited == total && total > 0);
    }

    rep.ok = rep.violations.empty();
    return rep;
}

std::vector<Pencil> pencils(const Configuration& c, bool include_singletons) {
    std::map<std::pair<Int, Int>, std::vector<int>> classes;
    for (int j = 0; j < (int)c.lines.size(); ++j)
        classes[c.lines[j].line.direction()].push_back(j);
    std::vector<Pencil> out;
    for (auto& [dir, ids] : classes) {
        if ((int)ids.size() < 2 && !include_singletons) continue;
        out.push_back({dir, ids});
    }
    return out;
}

bool independent_pencils(const Configuration& c, const Pencil& p1, const Pencil& p2) {
    if (p1.direction == p2.direction)
        throw Error(Errc::SameDirection, "pencils share the parallel class");
    auto check_ids = [&](const Pencil& p) {
        for (int id : p.lines)
            if (id < 0 || id >= (int)c.lines.size())
                throw Error(Errc::BadParams, "pencil references line " + std::to_string(id));
    };
    check_ids(p1);
    check_ids(p2);
    // Each line carries exactly k points, so disjointness is impossible once
    // the combined count exceeds n; skip the scan in that case.
    if ((long)c.k * (p1.size() + p2.size()) > (long)c.n()) return false;
    std::unordered_set<int> covered;
    for (int id : p1.lines)
        for (int pid : c.lines[id].points) covered.insert(pid);
    for (int id : p2.lines)
        for (int pid : c.lines[id].points)
            if (covered.count(pid)) return false;
    return true;
}

Configuration apply_map(const Configuration& c, const AffineMap& m) {
    if (m.determinant().is_zero())
        throw Error(Errc::SingularMap, "configuration image needs an invertible map");
    Configuration out;
    out.k = c.k;
    out.meta = c.meta;
    out.points.reserve(c.points.size());
    for (const Point& p : c.points) out.points.push_back(m.apply(p));
    out.lines.reserve(c.lines.size());
    for (const LineRecord& rec : c.lines) {
        LineRecord nr;
        nr.line = m.apply(rec.line);
        nr.points = rec.points;
        out.lines.push_back(std::move(nr));
    }
    // Affine maps preserve incidence; anything else is a bug here.
    for (const LineRecord& rec : out.lines)
        for (int id : rec.points)
            if (id >= 0 && id < (int)out.points.size() && !rec.line.contains(out.points[id]))
                throw std::logic_error("affine image broke a declared incidence");
    return out;
}

namespace {

// Canonical direction vector of a parallel class (a,b): (b,-a) with the
// leading nonzero made positive.
std::pair<Int, Int> direction_vector(const std::pair<Int, Int>& dir) {
    Int vx = dir.second, vy = -dir.first;
    int lead = sgn(vx) != 0 ? sgn(vx) : sgn(vy);
    if (lead < 0) {
        vx = -vx;
        vy = -vy;
    }
    return {vx, vy};
}

} // namespace

Configuration normalize_pencils(const Configuration& c, const Pencil& horiz, const Pencil* vert) {
    auto v1 = direction_vector(horiz.direction);
    std::pair<Int, Int> v2;
    if (vert) {
        try {
            if (!independent_pencils(c, horiz, *vert))
                throw Error(Errc::DependentPencils, "pencils share a point");
        } catch (const Error& e) {
            if (e.code() == Errc::SameDirection)
                throw Error(Errc::DependentPencils, "pencils share the parallel class");
            throw;
        }
        v2 = direction_vector(vert->direction);
    } else {
        // Complete v1 to a basis with a coordinate axis direction.
        v2 = sgn(v1.first) != 0 ? std::pair<Int, Int>{0, 1} : std::pair<Int, Int>{1, 0};
    }
    // The inverse of the matrix with columns v1, v2 sends v1 to (1,0) and v2
    // to (0,1); on already-normalized input both columns are axis unit
    // vectors and the map is the identity.
    AffineMap basis = AffineMap::linear(Rational(v1.first), Rational(v2.first),
                                        Rational(v1.second), Rational(v2.second));
    return apply_map(c, basis.inverse());
}

Json to_json(const Configuration& c) {
    Json doc = Json::object();
    doc["k"] = c.k;
    Json pts = Json::array();
    for (const Point& p : c.points) pts.push_back(Json::array({p.x.str(), p.y.str()}));
    doc["points"] = std::move(pts);
    Json lines = Json::array();
    for (const LineRecord& rec : c.lines) {
        Json l = Json::object();
        l["coeffs"] = Json::array({int_str(rec.line.a()), int_str(rec.line.b()), int_str(rec.line.c())});
        std::vector<int> ids = rec.points;
        std::sort(ids.begin(), ids.end());
        l["points"] = ids;
        lines.push_back(std::move(l));
    }
    doc["lines"] = std::move(lines);
    doc["meta"] = c.meta.is_null() ? Json::object() : c.meta;
    return doc;
}

namespace {

Int parse_integer(const Json& v, const char* what) {
    if (!v.is_string()) throw Error(Errc::ParseError, std::string(what) + " must be a string");
    Rational r = Rational::parse(v.get<std::string>());
    if (r.den() != 1) throw Error(Errc::ParseError, std::string(what) + " must be an integer");
    return r.num();
}

Rational parse_rational(const Json& v, const char* what) {
    if (!v.is_string()) throw Error(Errc::ParseError, std::string(what) + " must be a string");
    return Rational::parse(v.get<std::string>());
}

} // namespace

Configuration from_json(const Json& doc) {
    if (!doc.is_object()) throw Error(Errc::ParseError, "document must be an object");
    if (!doc.contains("k") || !doc["k"].is_number_integer())
        throw Error(Errc::ParseError, "missing integer field 'k'");
    if (!doc.contains("points") || !doc["points"].is_array())
        throw Error(Errc::ParseError, "missing array field 'points'");
    if (!doc.contains("lines") || !doc["lines"].is_array())
        throw Error(Errc::ParseError, "missing array field 'lines'");

    Configuration c;
    c.k = doc["k"].get<int>();
    for (const Json& pv : doc["points"]) {
        if (!pv.is_array() || pv.size() != 2)
            throw Error(Errc::ParseError, "each point must be a [x, y] pair");
        c.points.push_back({parse_rational(pv[0], "point coordinate"),
                            parse_rational(pv[1], "point coordinate")});
    }
    for (const Json& lv : doc["lines"]) {
        if (!lv.is_object() || !lv.contains("coeffs") || !lv.contains("points"))
            throw Error(Errc::ParseError, "each line needs 'coeffs' and 'points'");
        const Json& cf = lv["coeffs"];
        if (!cf.is_array() || cf.size() != 3)
            throw Error(Errc::ParseError, "line coeffs must be [a, b, c]");
        LineRecord rec;
        try {
            rec.line = Line(parse_integer(cf[0], "line coefficient"),
                            parse_integer(cf[1], "line coefficient"),
                            parse_integer(cf[2], "line coefficient"));
        } catch (const Error& e) {
            if (e.code() == Errc::BadParams)
                throw Error(Errc::ParseError, "line with zero normal vector");
            throw;
        }
        if (!lv["points"].is_array())
            throw Error(Errc::ParseError, "line points must be an array of ids");
        for (const Json& id : lv["points"]) {
            if (!id.is_number_integer())
                throw Error(Errc::ParseError, "line points must be integer ids");
            rec.points.push_back(id.get<int>());
        }
        std::sort(rec.points.begin(), rec.points.end());
        c.lines.push_back(std::move(rec));
    }
    if (doc.contains("meta")) {
        if (!doc["meta"].is_object()) throw Error(Errc::ParseError, "meta must be an object");
        c.meta = doc["meta"];
    }
    return c;
}

Configuration read_configuration(std::istream& in) {
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::ParseError, e.what());
    }
    return from_json(doc);
}

void write_configuration(std::ostream& out, const Configuration& c) {
    out << to_json(c).dump(2) << "\n";
}

Configuration load_configuration(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    return read_configuration(in);
}

void save_configuration(const std::string& path, const Configuration& c) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, "cannot open " + path + " for writing");
    write_configuration(out, c);
}

std::uint64_t geometry_hash(const Configuration& c) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t v) {
        h ^= v;
        h *= 0x100000001b3ULL;
    };
    mix((std::uint64_t)c.k);
    for (const Point& p : c.points) mix(p.hash());
    for (const LineRecord& rec : c.lines) {
        mix(rec.line.hash());
        for (int id : rec.points) mix((std::uint64_t)id + 0x51ed2701);
    }
    return h;
}

} // namespace nkcfg
