#pragma once

#include "eogt/effect.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace eogt {

/// Injective L_b -> G. `nac_ok` records whether the base NACs hold.
struct PreMatch
{
	Morphism morphism;
	bool nac_ok = false;

	friend bool operator==(const PreMatch&, const PreMatch&) = default;
};

/// Checks injectivity and computes `nac_ok`. Throws InvalidPreMatch.
PreMatch make_prematch(const EffectOrientedRule& eor, const TypedGraph& host, const Morphism& m);

/// All injective NAC-satisfying L_b -> G, in extension-search order.
std::vector<PreMatch> find_base_prematches(const EffectOrientedRule& eor, const TypedGraph& host);

struct MatchResult
{
	InducedRule induced;
	Morphism match; // L_c -> G
	PreMatch base_prematch;

	friend bool operator==(const MatchResult&, const MatchResult&) = default;
};

/// Canonical order: pre-match, then selection, then match.
bool canonical_less(const MatchResult& a, const MatchResult& b);

bool is_compatible(const EffectOrientedRule& eor, const PreMatch& pm, const MatchResult& mr);

struct MatchStats
{
	std::size_t backtracks = 0;   // candidate assignments withdrawn
	bool completion_pass = false; // the literal search found nothing and the skipping pass ran
};

enum class SearchMode
{
	/// The published search only: a node is skipped only when it has no
	/// candidate. It can miss locally complete matches when a deletion node
	/// grabs the only host node a later node could have used.
	Literal,
	/// Literal search first; if it fails, also try skipping nodes that do have
	/// candidates, accepting a leaf only when every skipped node is left
	/// without a free candidate.
	Complete
};

/// Depth-first node assignment over potential-deletion nodes then
/// potential-creation nodes (ascending ids), host candidates in ascending id,
/// dangling check once all nodes are decided; edges inferred greedily.
/// Throws InvalidPreMatch.
std::optional<MatchResult> find_locally_complete(const EffectOrientedRule& eor,
                                                 const TypedGraph& host,
                                                 const PreMatch& pm,
                                                 MatchStats* stats = nullptr,
                                                 SearchMode mode = SearchMode::Complete);

/// No single further potential deletion (into L_i') or skipped creation
/// (into K_c) admits an extension of the current e1/e2 whose combination is
/// injective.
bool is_locally_complete(const EffectOrientedRule& eor, const TypedGraph& host, const PreMatch& pm, const MatchResult& mr);

/// Brute force: every selection, every applicable compatible match, filtered
/// by is_locally_complete. Canonically sorted.
std::vector<MatchResult> oracle_locally_complete(const EffectOrientedRule& eor, const TypedGraph& host, const PreMatch& pm);

std::vector<MatchResult> find_locally_maximal(const EffectOrientedRule& eor, const TypedGraph& host, const PreMatch& pm);

std::vector<MatchResult> find_globally_maximal(const EffectOrientedRule& eor, const TypedGraph& host);

} // namespace eogt
