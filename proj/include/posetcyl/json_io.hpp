#pragma once

#include "posetcyl/cylinder.hpp"

#include <nlohmann/json_fwd.hpp>

#include <optional>
#include <string>

namespace posetcyl {

/// Poset JSON: {"labels": [...], "covers": [[lo,hi],...], "rank": [...]?}.
/// Serialization is canonical: labels sorted lexicographically, covers
/// sorted lexicographically by pair, the rank array following the labels.
nlohmann::json poset_to_json(const Poset& p, const RankFunction* rank);
Poset poset_from_json(const nlohmann::json& j, std::optional<RankFunction>* rank_out);

/// Map JSON: {"source": <poset>, "source_rank": [...], "target": <poset>,
/// "target_rank": [...], "image": [[src,tgt],...]}.
nlohmann::json map_to_json(const PosetMap& m);
PosetMap map_from_json(const nlohmann::json& j);

/// Triple JSON: {"poset": <poset>, "rank": [...], "q": label}.
nlohmann::json triple_to_json(const JoinTriple& t);
JoinTriple triple_from_json(const nlohmann::json& j);

/// Square JSON: {"phi1": <map>, "sigma": <map>, "sigma_prime": <map>,
/// "phi2": <map>}.
nlohmann::json square_to_json(const SfsSquare& sq);
SfsSquare square_from_json(const nlohmann::json& j);

/// Hasse diagram in DOT format; ranks rendered as same-rank layers when a
/// rank function is supplied.
std::string to_dot(const Poset& p, const RankFunction* rank);

/// Poset with elements reordered so labels are sorted (identity on already
/// canonical posets).
Poset canonical_poset(const Poset& p);

}  // namespace posetcyl
