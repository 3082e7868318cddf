#pragma once

#include "eogt/graph.hpp"
#include "eogt/rule.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace eogt {

/// A base rule embedded in a maximal rule over the same interface. Every
/// element of the maximal rule that the base rule lacks is a potential action:
/// L_g \ L_b are potential deletions, R_g \ R_b potential creations.
struct EffectOrientedRule
{
	std::string name;
	Rule base;
	Rule maximal;

	friend bool operator==(const EffectOrientedRule&, const EffectOrientedRule&) = default;
};

/// Builds the maximal rule from its two sides (interface = base interface,
/// NACs shifted from the base LHS) and validates the result. Throws
/// ValidationError.
EffectOrientedRule make_effect_rule(std::string name, Rule base, TypedGraph maximal_lhs, TypedGraph maximal_rhs);

/// The subrule embedding base -> maximal (all three components inclusions).
SubruleEmbedding base_embedding(const EffectOrientedRule& eor);

Diagnostics validate_effect_rule(const EffectOrientedRule& eor, const EquivalenceOptions& opts = {});

struct PotentialActions
{
	ElementSet deletions;
	ElementSet creations;
};

PotentialActions potential_actions(const EffectOrientedRule& eor);

/// Which potential deletions to perform and which potential creations to skip
/// (skipped creations are matched as context instead).
struct InducedSelection
{
	ElementSet del_extra;
	ElementSet preserve_extra;

	std::size_t size() const noexcept { return del_extra.size() + preserve_extra.size(); }

	friend bool operator==(const InducedSelection&, const InducedSelection&) = default;
	friend auto operator<=>(const InducedSelection&, const InducedSelection&) = default;
};

std::string describe(const InducedSelection& sel);

Diagnostics validate_selection(const EffectOrientedRule& eor, const InducedSelection& sel);

/// L_i' = L_b extended by the selected deletions (a subgraph of L_g).
TypedGraph left_extension(const EffectOrientedRule& eor, const InducedSelection& sel);
/// K_c = K_b extended by the skipped creations (a subgraph of R_g).
TypedGraph induced_interface(const EffectOrientedRule& eor, const InducedSelection& sel);

struct InducedRule
{
	InducedSelection selection;
	Rule rule; // L_c ⊇ K_c ⊆ R_g
	std::size_t size = 0;

	friend bool operator==(const InducedRule&, const InducedRule&) = default;
};

/// L_c is the pushout of L_i' and K_c over K_b; R_c = R_g; NACs are the base
/// NACs shifted along L_b -> L_c. Throws InvalidSelection.
InducedRule build_induced_rule(const EffectOrientedRule& eor, const InducedSelection& sel);

enum class ConnectednessFilter
{
	None,
	WeakLeft,
	WeakRight,
	Left,
	Right
};

std::string to_string(ConnectednessFilter f);
/// Accepts "none", "weak-left", "weak_left", ... Throws std::invalid_argument.
ConnectednessFilter parse_filter(const std::string& s);

bool satisfies_filter(const EffectOrientedRule& eor, const InducedSelection& sel, ConnectednessFilter filter);

/// All closed selections, ordered by (deleted nodes, deleted edges, preserved
/// nodes, preserved edges) as ascending bitmasks over ascending ids.
std::vector<InducedSelection> enumerate_selections(const EffectOrientedRule& eor,
                                                   ConnectednessFilter filter = ConnectednessFilter::None);

struct CountBounds
{
	std::uint64_t lower = 1;
	std::uint64_t upper = 1;

	friend bool operator==(const CountBounds&, const CountBounds&) = default;
};

/// 2^(potential nodes) <= #induced rules <= 2^(potential nodes + edges).
/// Throws std::overflow_error past 2^63.
CountBounds count_bounds(const EffectOrientedRule& eor);

/// The base rule is a subrule of `ir` via inclusions.
bool check_base_subrule(const EffectOrientedRule& eor, const InducedRule& ir, const EquivalenceOptions& opts = {});

} // namespace eogt
