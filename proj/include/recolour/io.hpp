#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "recolour/colouring.hpp"
#include "recolour/graph.hpp"
#include "recolour/structure.hpp"

// File formats. All readers throw parse_error on malformed input.
//
//   graph      {"n": 5, "edges": [[0, 1], [1, 2]]}   0-indexed, u < v, sorted
//   colouring  {"k": 3, "colours": [1, 2, 1]}       colours 1..k
//   sequence   {"start": <colouring>, "steps": [{"v": 0, "to": 3}]}
//
// Graphs are also read from DIMACS .col files (1-indexed "e u v" lines) and
// written as DOT.

namespace recolour {

using json = nlohmann::json;

json to_json(const Graph& g);
json to_json(const Colouring& c);
json to_json(const RecolouringStep& s);
json to_json(const RecolouringSequence& seq);
json to_json(const Partition& p);
json to_json(const HoleCertificate& h);

/// Rejects self-loops, repeated edges (in either orientation), out-of-range
/// ids and edges not written as u < v. Unknown keys are ignored.
Graph graph_from_json(const json& j);
Colouring colouring_from_json(const json& j);
RecolouringSequence sequence_from_json(const json& j);

Graph parse_dimacs(std::istream& in);

/// DIMACS when the path ends in .col or .dimacs, JSON otherwise.
Graph read_graph(const std::filesystem::path& path);
json read_json(const std::filesystem::path& path);
Colouring read_colouring(const std::filesystem::path& path);
RecolouringSequence read_sequence(const std::filesystem::path& path);

/// Undirected DOT; vertices are labelled with their colour when one is given.
void write_dot(std::ostream& out, const Graph& g, const std::optional<Colouring>& colouring = {});
std::string to_dot(const Graph& g, const std::optional<Colouring>& colouring = {});

} // namespace recolour
