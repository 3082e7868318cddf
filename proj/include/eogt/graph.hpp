#pragma once

#include "eogt/error.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace eogt {

using Id = std::string;

struct EdgeType
{
	std::string name;
	std::string source;
	std::string target;

	friend bool operator==(const EdgeType&, const EdgeType&) = default;
};

/// The fixed graph whose nodes and edges serve as types.
class TypeGraph
{
public:
	TypeGraph() = default;
	explicit TypeGraph(std::string name) : name_(std::move(name)) {}

	/// Throws std::invalid_argument on a duplicate name.
	TypeGraph& add_node_type(const std::string& name);
	TypeGraph& add_edge_type(const std::string& name, const std::string& source, const std::string& target);

	const std::string& name() const noexcept { return name_; }
	const std::set<std::string>& node_types() const noexcept { return node_types_; }
	const std::map<std::string, EdgeType>& edge_types() const noexcept { return edge_types_; }

	bool has_node_type(const std::string& t) const { return node_types_.count(t) != 0; }
	const EdgeType* edge_type(const std::string& t) const;

	friend bool operator==(const TypeGraph&, const TypeGraph&) = default;

private:
	std::string name_;
	std::set<std::string> node_types_;
	std::map<std::string, EdgeType> edge_types_;
};

Diagnostics validate_type_graph(const TypeGraph& tg);

struct Edge
{
	std::string type;
	Id source;
	Id target;

	friend bool operator==(const Edge&, const Edge&) = default;
	friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A finite multigraph whose elements carry type names. Nodes and edges share
/// one id space; ids are kept in ascending order, which fixes every iteration
/// order in the library.
class TypedGraph
{
public:
	TypedGraph() = default;
	explicit TypedGraph(std::string type_graph) : type_graph_(std::move(type_graph)) {}

	/// Throws std::invalid_argument if `id` is already used by a node or edge.
	TypedGraph& add_node(const Id& id, const std::string& type);
	/// Endpoints are not checked here; see validate_graph.
	TypedGraph& add_edge(const Id& id, const std::string& type, const Id& source, const Id& target);

	void remove_node(const Id& id);
	void remove_edge(const Id& id);

	const std::string& type_graph() const noexcept { return type_graph_; }
	void set_type_graph(std::string name) { type_graph_ = std::move(name); }

	const std::map<Id, std::string>& nodes() const noexcept { return nodes_; }
	const std::map<Id, Edge>& edges() const noexcept { return edges_; }

	bool has_node(const Id& id) const { return nodes_.count(id) != 0; }
	bool has_edge(const Id& id) const { return edges_.count(id) != 0; }
	bool has_element(const Id& id) const { return has_node(id) || has_edge(id); }

	/// Throws std::out_of_range for unknown ids.
	const std::string& node_type(const Id& id) const { return nodes_.at(id); }
	const Edge& edge(const Id& id) const { return edges_.at(id); }

	std::size_t node_count() const noexcept { return nodes_.size(); }
	std::size_t edge_count() const noexcept { return edges_.size(); }
	std::size_t size() const noexcept { return nodes_.size() + edges_.size(); }
	bool empty() const noexcept { return size() == 0; }

	/// Edges whose source or target is `node`, ascending id.
	std::vector<Id> incident_edges(const Id& node) const;

	friend bool operator==(const TypedGraph&, const TypedGraph&) = default;

private:
	std::string type_graph_;
	std::map<Id, std::string> nodes_;
	std::map<Id, Edge> edges_;
};

/// A set of graph elements, split by kind.
struct ElementSet
{
	std::set<Id> nodes;
	std::set<Id> edges;

	std::size_t size() const noexcept { return nodes.size() + edges.size(); }
	bool empty() const noexcept { return nodes.empty() && edges.empty(); }
	bool contains(const Id& id) const { return nodes.count(id) != 0 || edges.count(id) != 0; }

	friend bool operator==(const ElementSet&, const ElementSet&) = default;
	friend auto operator<=>(const ElementSet&, const ElementSet&) = default;
};

/// Componentwise difference a \ b on element ids.
ElementSet difference(const TypedGraph& a, const TypedGraph& b);
ElementSet elements_of(const TypedGraph& g);

/// Structure-preserving node/edge maps. Source and target graphs are not
/// stored; operations that need them take them as arguments.
struct Morphism
{
	std::map<Id, Id> nodes;
	std::map<Id, Id> edges;

	bool empty() const noexcept { return nodes.empty() && edges.empty(); }
	bool is_injective() const;

	/// Image of a node/edge id, or nullopt when unmapped.
	std::optional<Id> node(const Id& id) const;
	std::optional<Id> edge(const Id& id) const;

	std::set<Id> node_image() const;
	std::set<Id> edge_image() const;

	friend bool operator==(const Morphism&, const Morphism&) = default;
	friend auto operator<=>(const Morphism&, const Morphism&) = default;
};

/// `second ∘ first`; elements whose image is unmapped by `second` are dropped.
Morphism compose(const Morphism& first, const Morphism& second);
Morphism identity(const TypedGraph& g);
/// Identity on the ids of `sub` (an id-inclusion into any supergraph).
Morphism inclusion(const TypedGraph& sub);
Morphism restrict_to(const Morphism& f, const TypedGraph& sub);
/// Inverse of an injective map (throws NotInjective otherwise).
Morphism invert(const Morphism& f);

/// True iff `sub` is an id-subgraph of `sup`: same ids with equal types and
/// endpoints.
bool is_subgraph(const TypedGraph& sub, const TypedGraph& sup);
/// Subgraph of `g` induced by the given element ids. Throws
/// std::invalid_argument if an edge's endpoint is missing.
TypedGraph subgraph(const TypedGraph& g, const ElementSet& keep);
/// Id-union of two graphs that agree on shared ids; throws
/// std::invalid_argument on conflict.
TypedGraph graph_union(const TypedGraph& a, const TypedGraph& b);

Diagnostics validate_graph(const TypedGraph& g, const TypeGraph& tg);
/// Endpoint/id checks only (no type graph available).
Diagnostics validate_graph_structure(const TypedGraph& g);

Diagnostics check_morphism(const Morphism& f, const TypedGraph& src, const TypedGraph& dst, bool require_injective);

/// Visits the injective total morphisms pattern -> host that extend `partial`
/// in a fixed order: pattern nodes in ascending id, host candidates in
/// ascending id, then edges likewise. The visitor returns false to stop.
void for_each_injective_extension(const TypedGraph& pattern,
                                  const TypedGraph& host,
                                  const Morphism& partial,
                                  const std::function<bool(const Morphism&)>& visit);

std::vector<Morphism> find_injective_extensions(const TypedGraph& pattern,
                                                const TypedGraph& host,
                                                const Morphism& partial = {},
                                                std::size_t limit = static_cast<std::size_t>(-1));

bool has_injective_extension(const TypedGraph& pattern, const TypedGraph& host, const Morphism& partial = {});

/// Naming of elements that the pushout object takes from its second leg.
enum class FreshNaming
{
	KeepIfFree, // reuse the id, suffix "#k" only on clash
	AlwaysSuffix // always "id#k", smallest free k >= 1
};

struct PushoutResult
{
	TypedGraph object;
	Morphism from_first;  // B -> D
	Morphism from_second; // C -> D
};

/// Gluing of `b` and `c` along the injective maps f: A -> B, g: A -> C (both
/// total on the same A). Elements of `b` keep their ids.
PushoutResult pushout(const TypedGraph& b,
                      const TypedGraph& c,
                      const Morphism& f,
                      const Morphism& g,
                      FreshNaming naming = FreshNaming::KeepIfFree);

struct PushoutComplementResult
{
	TypedGraph context;     // D, an id-subgraph of G
	Morphism interface_map; // K -> D
	Morphism into_host;     // D -> G
};

/// Host node ids whose incident edges violate the dangling condition for
/// deleting m(L \ l(K)); empty iff a pushout complement exists.
std::vector<Id> dangling_nodes(const TypedGraph& lhs, const Morphism& interface_to_lhs, const Morphism& match, const TypedGraph& host);

/// D = G minus m(L \ l(K)). Throws DanglingViolation naming the first
/// offending host node, NotInjective for non-injective inputs.
PushoutComplementResult pushout_complement(const TypedGraph& lhs,
                                           const Morphism& interface_to_lhs,
                                           const Morphism& match,
                                           const TypedGraph& host);

/// Square
///
///     A --top--> B
///     |          |
///   left       right
///     v          v
///     C -bottom-> D
///
/// with injective legs. Returns whether it is a pullback, i.e. A covers
/// right(B) ∩ bottom(C). Throws NonCommuting if right∘top != bottom∘left.
bool is_pullback_square(const Morphism& top, const Morphism& left, const Morphism& right, const Morphism& bottom);

/// Bijective typed morphism a -> b, if any (exhaustive backtracking).
std::optional<Morphism> find_isomorphism(const TypedGraph& a, const TypedGraph& b);
inline bool isomorphic(const TypedGraph& a, const TypedGraph& b) { return find_isomorphism(a, b).has_value(); }

} // namespace eogt
