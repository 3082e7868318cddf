#include "eogt/effect.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace eogt {

EffectOrientedRule make_effect_rule(std::string name, Rule base, TypedGraph maximal_lhs, TypedGraph maximal_rhs)
{
	EffectOrientedRule eor;
	eor.name = std::move(name);
	eor.maximal.name = eor.name;
	eor.maximal.interface = base.interface;
	eor.maximal.nacs = shift_nacs(inclusion(base.lhs), maximal_lhs, base.nacs);
	eor.maximal.lhs = std::move(maximal_lhs);
	eor.maximal.rhs = std::move(maximal_rhs);
	if (base.name.empty())
		base.name = eor.name + " (base)";
	eor.base = std::move(base);
	if (Diagnostics ds = validate_effect_rule(eor); !ds.empty())
		throw ValidationError("invalid effect-oriented rule " + eor.name, ds);
	return eor;
}

SubruleEmbedding base_embedding(const EffectOrientedRule& eor)
{
	return SubruleEmbedding{eor.base, eor.maximal, inclusion(eor.base.lhs), inclusion(eor.base.interface), inclusion(eor.base.rhs)};
}

Diagnostics validate_effect_rule(const EffectOrientedRule& eor, const EquivalenceOptions& opts)
{
	Diagnostics out = validate_rule(eor.base);
	for (auto& d : validate_rule(eor.maximal))
		out.push_back(std::move(d));
	if (eor.base.interface != eor.maximal.interface)
		out.push_back({"interface-mismatch", eor.name, "base and maximal interfaces differ"});
	if (!is_subgraph(eor.base.lhs, eor.maximal.lhs))
		out.push_back({"base-lhs-not-included", eor.name, "base lhs is not a subgraph of the maximal lhs"});
	if (!is_subgraph(eor.base.rhs, eor.maximal.rhs))
		out.push_back({"base-rhs-not-included", eor.name, "base rhs is not a subgraph of the maximal rhs"});
	if (!out.empty())
		return out;
	try {
		if (!check_subrule_embedding(base_embedding(eor), opts))
			out.push_back({"not-a-subrule", eor.name, "base rule does not embed as a subrule of the maximal rule"});
	} catch (const NonCommuting& e) {
		out.push_back({"not-a-subrule", eor.name, e.what()});
	}
	return out;
}

PotentialActions potential_actions(const EffectOrientedRule& eor)
{
	return {difference(eor.maximal.lhs, eor.base.lhs), difference(eor.maximal.rhs, eor.base.rhs)};
}

std::string describe(const InducedSelection& sel)
{
	auto list = [](const ElementSet& s) {
		std::ostringstream os;
		os << "{";
		bool first = true;
		for (const auto* part : {&s.nodes, &s.edges})
			for (const auto& id : *part) {
				os << (first ? "" : ", ") << id;
				first = false;
			}
		os << "}";
		return os.str();
	};
	return "delete " + list(sel.del_extra) + " preserve " + list(sel.preserve_extra);
}

Diagnostics validate_selection(const EffectOrientedRule& eor, const InducedSelection& sel)
{
	Diagnostics out;
	PotentialActions pa = potential_actions(eor);
	for (const auto& id : sel.del_extra.nodes)
		if (!pa.deletions.nodes.count(id))
			out.push_back({"not-potential-deletion", id, "node is not a potential deletion"});
	for (const auto& id : sel.del_extra.edges)
		if (!pa.deletions.edges.count(id))
			out.push_back({"not-potential-deletion", id, "edge is not a potential deletion"});
	for (const auto& id : sel.preserve_extra.nodes)
		if (!pa.creations.nodes.count(id))
			out.push_back({"not-potential-creation", id, "node is not a potential creation"});
	for (const auto& id : sel.preserve_extra.edges)
		if (!pa.creations.edges.count(id))
			out.push_back({"not-potential-creation", id, "edge is not a potential creation"});
	if (!out.empty())
		return out;

	for (const auto& id : sel.del_extra.edges) {
		const Edge& e = eor.maximal.lhs.edge(id);
		for (const auto& end : {e.source, e.target})
			if (!eor.base.lhs.has_node(end) && !sel.del_extra.nodes.count(end))
				out.push_back({"closure", id, "deleted edge needs endpoint '" + end + "' in the extended lhs"});
	}
	for (const auto& id : sel.preserve_extra.edges) {
		const Edge& e = eor.maximal.rhs.edge(id);
		for (const auto& end : {e.source, e.target})
			if (!eor.base.interface.has_node(end) && !sel.preserve_extra.nodes.count(end))
				out.push_back({"closure", id, "preserved edge needs endpoint '" + end + "' in the extended interface"});
	}
	return out;
}

TypedGraph left_extension(const EffectOrientedRule& eor, const InducedSelection& sel)
{
	ElementSet keep = elements_of(eor.base.lhs);
	keep.nodes.insert(sel.del_extra.nodes.begin(), sel.del_extra.nodes.end());
	keep.edges.insert(sel.del_extra.edges.begin(), sel.del_extra.edges.end());
	return subgraph(eor.maximal.lhs, keep);
}

TypedGraph induced_interface(const EffectOrientedRule& eor, const InducedSelection& sel)
{
	ElementSet keep = elements_of(eor.base.interface);
	keep.nodes.insert(sel.preserve_extra.nodes.begin(), sel.preserve_extra.nodes.end());
	keep.edges.insert(sel.preserve_extra.edges.begin(), sel.preserve_extra.edges.end());
	return subgraph(eor.maximal.rhs, keep);
}

InducedRule build_induced_rule(const EffectOrientedRule& eor, const InducedSelection& sel)
{
	if (Diagnostics ds = validate_selection(eor, sel); !ds.empty())
		throw InvalidSelection(ds);

	TypedGraph li = left_extension(eor, sel);
	TypedGraph kc = induced_interface(eor, sel);
	Morphism k1 = inclusion(eor.base.interface);
	PushoutResult glued = pushout(li, kc, k1, k1);
	// Outside K_b the ids of L_g and R_g are disjoint, so no renaming happens.
	if (glued.from_second != identity(kc))
		throw std::logic_error("induced lhs required renaming");

	InducedRule ir;
	ir.selection = sel;
	ir.size = sel.size();
	ir.rule.name = eor.name + " [" + describe(sel) + "]";
	ir.rule.lhs = std::move(glued.object);
	ir.rule.interface = std::move(kc);
	ir.rule.rhs = eor.maximal.rhs;
	ir.rule.nacs = shift_nacs(inclusion(eor.base.lhs), ir.rule.lhs, eor.base.nacs);
	return ir;
}

std::string to_string(ConnectednessFilter f)
{
	switch (f) {
	case ConnectednessFilter::None: return "none";
	case ConnectednessFilter::WeakLeft: return "weak-left";
	case ConnectednessFilter::WeakRight: return "weak-right";
	case ConnectednessFilter::Left: return "left";
	case ConnectednessFilter::Right: return "right";
	}
	return "none";
}

ConnectednessFilter parse_filter(const std::string& s)
{
	std::string t = s;
	std::replace(t.begin(), t.end(), '_', '-');
	if (t == "none") return ConnectednessFilter::None;
	if (t == "weak-left") return ConnectednessFilter::WeakLeft;
	if (t == "weak-right") return ConnectednessFilter::WeakRight;
	if (t == "left") return ConnectednessFilter::Left;
	if (t == "right") return ConnectednessFilter::Right;
	throw std::invalid_argument("unknown connectedness filter '" + s + "'");
}

namespace {

// For every extra node, its adjacent edges in `g` must be in `chosen_edges`;
// in the weak form only those whose other endpoint is in `node_universe`.
bool connected(const TypedGraph& g,
               const std::set<Id>& extra_nodes,
               const std::set<Id>& node_universe,
               const std::set<Id>& chosen_edges,
               bool weak)
{
	for (const auto& x : extra_nodes)
		for (const auto& eid : g.incident_edges(x)) {
			if (chosen_edges.count(eid))
				continue;
			const Edge& e = g.edge(eid);
			const Id& other = e.source == x ? e.target : e.source;
			if (!weak || node_universe.count(other))
				return false;
		}
	return true;
}

} // namespace

bool satisfies_filter(const EffectOrientedRule& eor, const InducedSelection& sel, ConnectednessFilter filter)
{
	if (filter == ConnectednessFilter::None)
		return true;
	bool weak = filter == ConnectednessFilter::WeakLeft || filter == ConnectednessFilter::WeakRight;
	if (filter == ConnectednessFilter::WeakLeft || filter == ConnectednessFilter::Left) {
		TypedGraph li = left_extension(eor, sel);
		return connected(eor.maximal.lhs, sel.del_extra.nodes, elements_of(li).nodes, elements_of(li).edges, weak);
	}
	TypedGraph kc = induced_interface(eor, sel);
	return connected(eor.maximal.rhs, sel.preserve_extra.nodes, elements_of(kc).nodes, elements_of(kc).edges, weak);
}

namespace {

template<class F>
void for_each_subset(const std::vector<Id>& items, F&& f)
{
	if (items.size() >= 63)
		throw std::overflow_error("too many potential elements to enumerate");
	const std::uint64_t n = std::uint64_t{1} << items.size();
	for (std::uint64_t mask = 0; mask < n; ++mask) {
		std::set<Id> chosen;
		for (std::size_t i = 0; i < items.size(); ++i)
			if (mask & (std::uint64_t{1} << i))
				chosen.insert(items[i]);
		f(chosen);
	}
}

// Potential edges whose endpoints all lie in `base_nodes ∪ chosen_nodes`.
std::vector<Id> eligible_edges(const TypedGraph& g, const std::set<Id>& potential_edges, const TypedGraph& base, const std::set<Id>& chosen_nodes)
{
	std::vector<Id> out;
	for (const auto& id : potential_edges) {
		const Edge& e = g.edge(id);
		auto ok = [&](const Id& n) { return base.has_node(n) || chosen_nodes.count(n); };
		if (ok(e.source) && ok(e.target))
			out.push_back(id);
	}
	return out;
}

} // namespace

std::vector<InducedSelection> enumerate_selections(const EffectOrientedRule& eor, ConnectednessFilter filter)
{
	PotentialActions pa = potential_actions(eor);
	std::vector<Id> del_nodes(pa.deletions.nodes.begin(), pa.deletions.nodes.end());
	std::vector<Id> cre_nodes(pa.creations.nodes.begin(), pa.creations.nodes.end());

	std::vector<InducedSelection> out;
	for_each_subset(del_nodes, [&](const std::set<Id>& dn) {
		auto de_pool = eligible_edges(eor.maximal.lhs, pa.deletions.edges, eor.base.lhs, dn);
		for_each_subset(de_pool, [&](const std::set<Id>& de) {
			for_each_subset(cre_nodes, [&](const std::set<Id>& pn) {
				auto pe_pool = eligible_edges(eor.maximal.rhs, pa.creations.edges, eor.base.interface, pn);
				for_each_subset(pe_pool, [&](const std::set<Id>& pe) {
					InducedSelection sel{{dn, de}, {pn, pe}};
					if (satisfies_filter(eor, sel, filter))
						out.push_back(std::move(sel));
				});
			});
		});
	});
	return out;
}

CountBounds count_bounds(const EffectOrientedRule& eor)
{
	PotentialActions pa = potential_actions(eor);
	std::size_t low = pa.deletions.nodes.size() + pa.creations.nodes.size();
	std::size_t high = pa.deletions.size() + pa.creations.size();
	if (high >= 64)
		throw std::overflow_error("induced-rule count bound exceeds 2^63");
	return {std::uint64_t{1} << low, std::uint64_t{1} << high};
}

bool check_base_subrule(const EffectOrientedRule& eor, const InducedRule& ir, const EquivalenceOptions& opts)
{
	SubruleEmbedding e{eor.base, ir.rule, inclusion(eor.base.lhs), inclusion(eor.base.interface), inclusion(eor.base.rhs)};
	return check_subrule_embedding(e, opts);
}

} // namespace eogt
