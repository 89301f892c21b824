#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "nkcfg/geometry.hpp"

namespace nkcfg {

using Json = nlohmann::ordered_json;

struct LineRecord {
    Line line;
    std::vector<int> points; // incident point ids, sorted ascending
};

// Candidate geometric (n_k) configuration: n = |points| = |lines|, every
// point on exactly k of the lines, every line through exactly k of the
// points, incidence meant exactly (no epsilon anywhere). Whether an instance
// actually is one is decided by verify(), never assumed.
struct Configuration {
    int k = 0;
    std::vector<Point> points;
    std::vector<LineRecord> lines;
    Json meta = Json::object(); // free-form provenance, carried verbatim

    int n() const { return (int)points.size(); }
};

struct Violation {
    enum class Kind {
        CountMismatch,       // |points| != |lines|
        BadK,                // k < 2
        DuplicatePoint,
        DuplicateLine,
        BadIndex,            // declared incidence references a missing point
        DeclaredCount,       // line declares != k incident points
        BrokenIncidence,     // declared incidence does not hold
        UnintendedIncidence, // point on a line that does not declare it
        PointDegree,         // point on != k lines
        LineDegree,          // line through != k points
    };

    Kind kind;
    int point = -1; // -1 when not point-specific
    int line = -1;  // -1 when not line-specific
    std::string detail;
};

const char* violation_kind_name(Violation::Kind k);

struct VerificationReport {
    bool ok = false;
    bool connected = false; // incidence graph connectivity; informational only
    long incidences = 0;    // count of true point-line incidences
    std::vector<Violation> violations;
};

// Full exact check of the configuration property. Every point is tested
// against every line; a one-sided modular prefilter skips provably
// non-incident pairs and never changes the outcome.
VerificationReport verify(const Configuration& c);

struct Pencil {
    std::pair<Int, Int> direction; // canonical (a,b) parallel class
    std::vector<int> lines;        // line ids, sorted ascending

    int size() const { return (int)lines.size(); }
};

// Maximal parallel classes with at least two lines (all classes when
// include_singletons), ordered by direction.
std::vector<Pencil> pencils(const Configuration& c, bool include_singletons = false);

// True iff the two pencils cover disjoint point sets. Directions must
// differ (SameDirection). Pairs whose combined covered-point count already
// exceeds n are rejected without scanning.
bool independent_pencils(const Configuration& c, const Pencil& p1, const Pencil& p2);

// Image configuration under an invertible affine map; indices and declared
// incidences carry over unchanged. Throws SingularMap.
Configuration apply_map(const Configuration& c, const AffineMap& m);

// Affinely transformed copy in which horiz's lines are horizontal and (when
// given) vert's lines are vertical. Picks the identity when the input is
// already normalized. Throws DependentPencils when the pencils share a
// direction or a point.
Configuration normalize_pencils(const Configuration& c, const Pencil& horiz,
                                const Pencil* vert = nullptr);

// Interchange format:
//   {"k": 3, "points": [["x","y"],...],
//    "lines": [{"coeffs": ["a","b","c"], "points": [ids]},...],
//    "meta": {...}}
// Rationals are "num/den" strings (plain "num" for integers). Writing is
// canonical: write(read(doc)) is byte-identical for documents this library
// produced.
Json to_json(const Configuration& c);
Configuration from_json(const Json& doc); // throws ParseError

Configuration read_configuration(std::istream& in);
void write_configuration(std::ostream& out, const Configuration& c);
Configuration load_configuration(const std::string& path);
void save_configuration(const std::string& path, const Configuration& c);

// Hash of the geometric content (k, points, lines; meta excluded). Stable
// across runs and platforms; seeds the deterministic retry streams.
std::uint64_t geometry_hash(const Configuration& c);

} // namespace nkcfg
