#pragma once

#include "eogt/graph.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace eogt {

/// Negative application condition: the match must not extend to `forbidden`,
/// which contains the rule's LHS as an id-subgraph.
struct Nac
{
	std::string name;
	TypedGraph forbidden;

	friend bool operator==(const Nac&, const Nac&) = default;
};

/// DPO rule L ⊇ K ⊆ R with inclusions realised by shared ids, plus a
/// conjunction of NACs over L.
struct Rule
{
	std::string name;
	TypedGraph lhs;
	TypedGraph interface;
	TypedGraph rhs;
	std::vector<Nac> nacs;

	friend bool operator==(const Rule&, const Rule&) = default;
};

struct SubruleEmbedding
{
	Rule sub;
	Rule sup;
	Morphism iota_l;
	Morphism iota_k;
	Morphism iota_r;
};

/// A direct DPO transformation G => H. The context D is an id-subgraph of both
/// G and H, so the inclusions D -> G and D -> H are identities on D's ids.
struct TransformationRecord
{
	TypedGraph input;
	TypedGraph output;
	TypedGraph context;
	Rule rule;
	Morphism match;
	Morphism comatch;
	Morphism interface_to_context;
	Morphism context_to_input;
	Morphism context_to_output;

	/// Partial map G -> H through the preserved context.
	Morphism track() const;
};

Diagnostics validate_rule(const Rule& r, const TypeGraph* tg = nullptr);

/// True iff no NAC admits an injective extension of `match` into `host`.
bool satisfies_nacs(const Morphism& match, const std::vector<Nac>& nacs, const TypedGraph& host);

/// Translate NACs over L along the injective b: L -> L'. Each NAC N becomes
/// one NAC per jointly surjective overlap of L' and N over L.
std::vector<Nac> shift_nacs(const Morphism& b, const TypedGraph& target_lhs, const std::vector<Nac>& nacs);

/// Node/edge types occurring in the given graphs; edge-type endpoints are read
/// off the first occurrence.
TypeGraph infer_type_graph(const std::vector<const TypedGraph*>& graphs);

/// Visits every typed graph over `types` with at most `max_nodes` nodes (node
/// types listed in non-decreasing order) and at most `max_multiplicity`
/// parallel edges per (type, source, target). `min_type_counts` prunes graphs
/// lacking the required number of nodes per type. Visitor returns false to
/// stop.
void enumerate_hosts(const TypeGraph& types,
                     std::size_t max_nodes,
                     std::size_t max_multiplicity,
                     const std::map<std::string, std::size_t>& min_type_counts,
                     const std::function<bool(const TypedGraph&)>& visit);

struct EquivalenceOptions
{
	std::size_t max_host_nodes = 5;
};

/// Semantic equivalence of two NAC conjunctions over `lhs`: identical
/// satisfaction for every injective match into every host within the bound.
/// Sets that coincide up to isomorphism over `lhs` are accepted directly.
bool nacs_equivalent(const TypedGraph& lhs,
                     const std::vector<Nac>& a,
                     const std::vector<Nac>& b,
                     const EquivalenceOptions& opts = {});

/// Both squares commute and are pullbacks, and sup.nacs ≡ Shift(iota_l,
/// sub.nacs). Throws NonCommuting when a square does not commute.
bool check_subrule_embedding(const SubruleEmbedding& e, const EquivalenceOptions& opts = {});

/// Classical DPO step. Created elements are named "<rule element id>#k".
/// Throws NotInjective, NacViolated or DanglingViolation.
TransformationRecord apply_rule(const Rule& r, const TypedGraph& host, const Morphism& match);

/// The reversed span R ⊇ K ⊆ L (NACs dropped).
Rule inverse(const Rule& r);

} // namespace eogt
