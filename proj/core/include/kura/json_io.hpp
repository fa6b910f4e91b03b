#ifndef KURA_JSON_IO_HPP
#define KURA_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "kura/monoid.hpp"
#include "kura/operators.hpp"
#include "kura/orbit.hpp"
#include "kura/separation.hpp"

namespace kura {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& q);  // "p/q" or "p"

/// {dim, lines:[[a1,a2,b],...], flags:{vertices:[...], edges:[...], cells:[...]}}
/// with faces in canonical construction order; dimension-1 lines are [a1,b].
Json set_json(const FlaggedSet& S);

Json report_json(const OperatorReport& r);

/// {seed, size, members:[{index, witness, set}], transitions:[...]} in stable
/// (BFS) order.
Json orbit_json(const Orbit& o);

Json monoid_json(const MonoidTable& t, RewriteMode mode);

Json certificate_json(const SeparationCertificate& c);
Json witness_json(const Point& p, int dim);

/// Interval notation in dimension 1 (e.g. "(-inf,0) U [1,2)"); a compact
/// line/flag listing in dimension 2.
std::string set_text(const FlaggedSet& S);

/// One line per member: witness word, set, and where f and g lead.
std::string orbit_text(const Orbit& o);

/// Aligned composition grid; convex-seed reductions are marked with '*'.
std::string monoid_text(const MonoidTable& t, bool show_table);

}  // namespace kura

#endif
