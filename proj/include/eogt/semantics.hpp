#pragma once

#include "eogt/matching.hpp"

#include <optional>
#include <string>
#include <vector>

namespace eogt {

enum class Strategy
{
	LocallyComplete,
	LocallyMaximal,
	GloballyMaximal
};

std::string to_string(Strategy s);
/// "locally-complete", "locally_maximal", ... Throws std::invalid_argument.
Strategy parse_strategy(const std::string& s);

struct EffectTransformation
{
	EffectOrientedRule eor;
	Strategy strategy = Strategy::LocallyComplete;
	TransformationRecord result;
	InducedSelection selection;
	PreMatch base_prematch;
};

/// Applies the induced rule of `mr` at its match.
EffectTransformation realize(const EffectOrientedRule& eor, const TypedGraph& host, Strategy strategy, const MatchResult& mr);

/// Runs the strategy's match finder (first result in canonical order for the
/// maximal strategies) and applies it. `pm` is required for the local
/// strategies and must be absent for GloballyMaximal; otherwise throws
/// StrategyArgumentMismatch.
std::optional<EffectTransformation> transform(const EffectOrientedRule& eor,
                                              const TypedGraph& host,
                                              Strategy strategy,
                                              const std::optional<PreMatch>& pm = std::nullopt);

enum class AuditClause
{
	AlternativeAction,   // deletion: x was deleted; creation: every m_b+ hits m_c(L_c)
	AlternativeCreation, // every m+ lands on a comatch image
	NonExistence,        // creation: no m_b+ exists
	NoEmbedding,         // deletion: no m+ exists, nothing to check
	SkippedNotAGraph,    // x is an edge with an endpoint outside K_b
	Violated
};

std::string to_string(AuditClause c);

struct AuditEntry
{
	Id element;
	bool potential_deletion = false; // false: performed potential creation
	AuditClause clause = AuditClause::Violated;
	std::size_t embeddings = 0; // m+ / m_b+ enumerated
};

struct AuditReport
{
	std::vector<AuditEntry> entries;

	bool passed() const;
};

/// Checks both clauses of the characterisation for every potential deletion
/// and every performed potential creation. With `throw_on_failure` a violated
/// clause raises AuditFailure naming the element.
AuditReport audit_effect(const EffectTransformation& t, bool throw_on_failure = true);

} // namespace eogt
