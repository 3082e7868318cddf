#pragma once

// Brute-force reference implementations used to check the library. Nothing
// here calls the library's extension search, pushout or matching code.

#include "eogt/effect.hpp"
#include "eogt/matching.hpp"

#include <random>
#include <set>
#include <vector>

namespace eogt::testing {

/// Every total typed injective morphism pattern -> host extending `partial`,
/// found by trying all node tuples and all edge tuples. Sorted.
std::vector<Morphism> all_injective_morphisms(const TypedGraph& pattern, const TypedGraph& host, const Morphism& partial = {});

/// Same, without the injectivity filter.
std::vector<Morphism> all_morphisms(const TypedGraph& pattern, const TypedGraph& host, const Morphism& partial = {});

bool brute_isomorphic(const TypedGraph& a, const TypedGraph& b);

/// NACs by definition: no NAC graph admits an injective extension.
bool brute_satisfies(const Morphism& m, const std::vector<Nac>& nacs, const TypedGraph& host);

/// Host nodes deleted by m(L \ K) that keep an incident edge outside m(L \ K).
std::set<Id> brute_dangling(const TypedGraph& lhs, const TypedGraph& interface, const Morphism& m, const TypedGraph& host);

/// G - m(L \ K) plus a disjoint copy of R \ K glued to m(K); ids of the copy
/// are arbitrary, so compare results up to isomorphism.
TypedGraph brute_dpo(const TypedGraph& lhs, const TypedGraph& interface, const TypedGraph& rhs, const Morphism& m, const TypedGraph& host);

/// Number of closed selections, counted per subset of potential nodes as
/// 2^(eligible potential edges).
std::uint64_t closure_count(const EffectOrientedRule& eor);

/// A locally complete compatible match described at element level.
struct RawResult
{
	InducedSelection selection;
	Morphism match;

	friend auto operator<=>(const RawResult&, const RawResult&) = default;
	friend bool operator==(const RawResult&, const RawResult&) = default;
};

/// Locally complete results by definition: every way of mapping a subset of
/// potential elements injectively (edges only with mapped endpoints), kept if
/// applicable and if no unmapped in-scope potential element has a free host
/// element to go to.
std::vector<RawResult> brute_locally_complete(const EffectOrientedRule& eor, const TypedGraph& host, const Morphism& pm);

// ---------------------------------------------------------------------------
// Random instances

using Rng = std::mt19937;

TypeGraph random_type_graph(Rng& rng, std::size_t node_types = 3, std::size_t edge_types = 4);

/// Up to `max_nodes` nodes; each type-compatible ordered pair gets an edge of
/// that type with probability `density` (occasionally a parallel one).
TypedGraph random_graph(Rng& rng, const TypeGraph& tg, std::size_t min_nodes, std::size_t max_nodes, double density);

struct RuleShape
{
	std::size_t max_interface_nodes = 2;
	std::size_t max_mandatory_nodes = 1; // per side
	std::size_t max_potential_nodes = 4; // both sides together
	std::size_t max_potential_edges = 6;
	bool potential_deletion_nodes = true;
	double nac_probability = 0.2;
};

EffectOrientedRule random_effect_rule(Rng& rng, const TypeGraph& tg, const RuleShape& shape = {});

/// A plain rule with nodes/edges drawn over `tg` (L, K, R each ≤ max_nodes).
Rule random_rule(Rng& rng, const TypeGraph& tg, std::size_t max_nodes = 3);

/// Node types A, B with edge types f: A -> B and g: B -> A. No loops, so all
/// hosts up to five nodes stay enumerable.
TypeGraph two_sorted_types();

/// A NAC over `lhs` and a larger `target` containing `lhs` by ids.
struct NacPair
{
	TypedGraph lhs;
	Nac nac;
	TypedGraph target;
};

NacPair random_nac_pair(Rng& rng, const TypeGraph& tg);

} // namespace eogt::testing
