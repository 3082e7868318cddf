#include "eogt/semantics.hpp"

#include <algorithm>
#include <stdexcept>

namespace eogt {

std::string to_string(Strategy s)
{
	switch (s) {
	case Strategy::LocallyComplete: return "locally-complete";
	case Strategy::LocallyMaximal: return "locally-maximal";
	case Strategy::GloballyMaximal: return "globally-maximal";
	}
	return "locally-complete";
}

Strategy parse_strategy(const std::string& s)
{
	std::string t = s;
	std::replace(t.begin(), t.end(), '_', '-');
	if (t == "locally-complete") return Strategy::LocallyComplete;
	if (t == "locally-maximal") return Strategy::LocallyMaximal;
	if (t == "globally-maximal") return Strategy::GloballyMaximal;
	throw std::invalid_argument("unknown strategy '" + s + "'");
}

EffectTransformation realize(const EffectOrientedRule& eor, const TypedGraph& host, Strategy strategy, const MatchResult& mr)
{
	EffectTransformation t;
	t.eor = eor;
	t.strategy = strategy;
	t.result = apply_rule(mr.induced.rule, host, mr.match);
	t.selection = mr.induced.selection;
	t.base_prematch = mr.base_prematch;
	return t;
}

std::optional<EffectTransformation> transform(const EffectOrientedRule& eor,
                                              const TypedGraph& host,
                                              Strategy strategy,
                                              const std::optional<PreMatch>& pm)
{
	std::optional<MatchResult> chosen;
	if (strategy == Strategy::GloballyMaximal) {
		if (pm)
			throw StrategyArgumentMismatch("globally-maximal takes no base pre-match");
		auto all = find_globally_maximal(eor, host);
		if (!all.empty())
			chosen = std::move(all.front());
	} else {
		if (!pm)
			throw StrategyArgumentMismatch(to_string(strategy) + " needs a base pre-match");
		if (strategy == Strategy::LocallyComplete) {
			chosen = find_locally_complete(eor, host, *pm);
		} else {
			auto all = find_locally_maximal(eor, host, *pm);
			if (!all.empty())
				chosen = std::move(all.front());
		}
	}
	if (!chosen)
		return std::nullopt;
	return realize(eor, host, strategy, *chosen);
}

std::string to_string(AuditClause c)
{
	switch (c) {
	case AuditClause::AlternativeAction: return "alternative-action";
	case AuditClause::AlternativeCreation: return "alternative-creation";
	case AuditClause::NonExistence: return "non-existence";
	case AuditClause::NoEmbedding: return "no-embedding";
	case AuditClause::SkippedNotAGraph: return "skipped: not-a-graph";
	case AuditClause::Violated: return "violated";
	}
	return "violated";
}

bool AuditReport::passed() const
{
	return std::none_of(entries.begin(), entries.end(), [](const AuditEntry& e) { return e.clause == AuditClause::Violated; });
}

namespace {

// K_b extended by x taken from `side`; nullopt when x is an edge with an
// endpoint outside K_b.
std::optional<TypedGraph> extend_interface(const TypedGraph& kb, const TypedGraph& side, const Id& x)
{
	TypedGraph g = kb;
	if (side.has_node(x)) {
		g.add_node(x, side.node_type(x));
		return g;
	}
	const Edge& e = side.edge(x);
	if (!kb.has_node(e.source) || !kb.has_node(e.target))
		return std::nullopt;
	g.add_edge(x, e.type, e.source, e.target);
	return g;
}

std::optional<Id> image_of(const Morphism& m, const Id& x, bool node)
{
	return node ? m.node(x) : m.edge(x);
}

bool in_image(const Morphism& m, const Id& y)
{
	return m.node_image().count(y) || m.edge_image().count(y);
}

} // namespace

AuditReport audit_effect(const EffectTransformation& t, bool throw_on_failure)
{
	AuditReport report;
	const EffectOrientedRule& eor = t.eor;
	const TypedGraph& kb = eor.base.interface;
	const TransformationRecord& rec = t.result;
	PotentialActions pa = potential_actions(eor);

	auto fail = [&](AuditEntry& e, const std::string& what) {
		e.clause = AuditClause::Violated;
		report.entries.push_back(e);
		if (throw_on_failure)
			throw AuditFailure(e.element, what);
	};

	Morphism comatch_on_kb = restrict_to(rec.comatch, kb);
	for (const auto* pool : {&pa.deletions.nodes, &pa.deletions.edges}) {
		for (const auto& x : *pool) {
			AuditEntry entry{x, true, AuditClause::NoEmbedding, 0};
			auto kplus = extend_interface(kb, eor.maximal.lhs, x);
			if (!kplus) {
				entry.clause = AuditClause::SkippedNotAGraph;
				report.entries.push_back(entry);
				continue;
			}
			bool node = kplus->has_node(x);
			bool all_created = true;
			for_each_injective_extension(*kplus, rec.output, comatch_on_kb, [&](const Morphism& m) {
				++entry.embeddings;
				if (!in_image(rec.comatch, *image_of(m, x, node)))
					all_created = false;
				return true;
			});
			if (entry.embeddings == 0)
				entry.clause = AuditClause::NoEmbedding;
			else if (rec.rule.lhs.has_element(x))
				entry.clause = AuditClause::AlternativeAction;
			else if (all_created)
				entry.clause = AuditClause::AlternativeCreation;
			else {
				fail(entry, "potential deletion " + x + " neither performed nor covered by the comatch");
				continue;
			}
			report.entries.push_back(entry);
		}
	}

	// Performed potential creations: R_c \ (K_c ∪ R_b).
	Morphism match_on_kb = restrict_to(rec.match, kb);
	for (const auto* pool : {&pa.creations.nodes, &pa.creations.edges}) {
		for (const auto& x : *pool) {
			if (rec.rule.interface.has_element(x))
				continue;
			AuditEntry entry{x, false, AuditClause::NonExistence, 0};
			auto kplus = extend_interface(kb, eor.maximal.rhs, x);
			if (!kplus) {
				entry.clause = AuditClause::SkippedNotAGraph;
				report.entries.push_back(entry);
				continue;
			}
			bool node = kplus->has_node(x);
			bool all_matched = true;
			for_each_injective_extension(*kplus, rec.input, match_on_kb, [&](const Morphism& m) {
				++entry.embeddings;
				if (!in_image(rec.match, *image_of(m, x, node)))
					all_matched = false;
				return true;
			});
			if (entry.embeddings == 0)
				entry.clause = AuditClause::NonExistence;
			else if (all_matched)
				entry.clause = AuditClause::AlternativeAction;
			else {
				fail(entry, "potential creation " + x + " performed although a free occurrence existed");
				continue;
			}
			report.entries.push_back(entry);
		}
	}
	return report;
}

} // namespace eogt
