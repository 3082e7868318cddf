#include "eogt/matching.hpp"

#include <algorithm>
#include <tuple>

namespace eogt {

PreMatch make_prematch(const EffectOrientedRule& eor, const TypedGraph& host, const Morphism& m)
{
	if (Diagnostics ds = check_morphism(m, eor.base.lhs, host, true); !ds.empty())
		throw InvalidPreMatch("not an injective morphism from the base lhs: " + to_string(ds));
	return PreMatch{m, satisfies_nacs(m, eor.base.nacs, host)};
}

std::vector<PreMatch> find_base_prematches(const EffectOrientedRule& eor, const TypedGraph& host)
{
	std::vector<PreMatch> out;
	for_each_injective_extension(eor.base.lhs, host, {}, [&](const Morphism& m) {
		if (satisfies_nacs(m, eor.base.nacs, host))
			out.push_back(PreMatch{m, true});
		return true;
	});
	return out;
}

bool canonical_less(const MatchResult& a, const MatchResult& b)
{
	return std::tie(a.base_prematch.morphism, a.induced.selection, a.match)
	       < std::tie(b.base_prematch.morphism, b.induced.selection, b.match);
}

bool is_compatible(const EffectOrientedRule& eor, const PreMatch& pm, const MatchResult& mr)
{
	return restrict_to(mr.match, eor.base.lhs) == pm.morphism;
}

namespace {

void require_valid(const EffectOrientedRule& eor, const TypedGraph& host, const PreMatch& pm)
{
	PreMatch checked = make_prematch(eor, host, pm.morphism);
	if (checked.nac_ok != pm.nac_ok)
		throw InvalidPreMatch("pre-match nac_ok flag does not match the base NACs");
	if (!pm.nac_ok)
		throw InvalidPreMatch("pre-match violates a base NAC");
}

class LocalSearch
{
public:
	LocalSearch(const EffectOrientedRule& eor, const TypedGraph& host, const PreMatch& pm, MatchStats& stats)
		: eor_(eor)
		, host_(host)
		, pm_(pm)
		, stats_(stats)
		, actions_(potential_actions(eor))
	{
		for (const auto& n : actions_.deletions.nodes)
			unbound_.push_back({n, eor.maximal.lhs.node_type(n), true});
		for (const auto& n : actions_.creations.nodes)
			unbound_.push_back({n, eor.maximal.rhs.node_type(n), false});
		used_ = pm.morphism.node_image();
		for (const auto& [id, e] : host.edges())
			parallel_[e].push_back(id);
	}

	std::optional<MatchResult> run(bool allow_skip)
	{
		allow_skip_ = allow_skip;
		assigned_.clear();
		skipped_.clear();
		return extend(0);
	}

private:
	struct Unbound
	{
		Id id;
		std::string type;
		bool deletion;
	};

	std::vector<Id> candidates(const Unbound& n) const
	{
		std::vector<Id> out;
		for (const auto& [h, t] : host_.nodes())
			if (t == n.type && !used_.count(h))
				out.push_back(h);
		return out;
	}

	std::optional<MatchResult> extend(std::size_t pos)
	{
		if (pos == unbound_.size())
			return finish();
		const Unbound& n = unbound_[pos];
		std::vector<Id> cands = candidates(n);
		for (const Id& x : cands) {
			assigned_[n.id] = x;
			used_.insert(x);
			if (auto r = extend(pos + 1))
				return r;
			assigned_.erase(n.id);
			used_.erase(x);
			++stats_.backtracks;
		}
		if (!cands.empty() && !allow_skip_)
			return std::nullopt;
		skipped_.push_back(pos);
		auto r = extend(pos + 1);
		skipped_.pop_back();
		return r;
	}

	// Greedy edge inclusion: per rule edge (deletions first, ascending id) the
	// lowest unused parallel host edge between the images of its endpoints.
	std::optional<MatchResult> finish()
	{
		// A skipped node that still has a free candidate would make the result
		// extendable; only reachable in the skipping pass.
		for (std::size_t pos : skipped_)
			if (!candidates(unbound_[pos]).empty())
				return std::nullopt;

		Morphism m = pm_.morphism;
		InducedSelection sel;
		for (const auto& u : unbound_) {
			auto it = assigned_.find(u.id);
			if (it == assigned_.end())
				continue;
			m.nodes[u.id] = it->second;
			(u.deletion ? sel.del_extra : sel.preserve_extra).nodes.insert(u.id);
		}

		std::set<Id> used_edges = pm_.morphism.edge_image();
		auto claim = [&](const TypedGraph& side, const std::set<Id>& pool, const TypedGraph& anchor, ElementSet& into) {
			for (const auto& eid : pool) {
				const Edge& e = side.edge(eid);
				auto in_scope = [&](const Id& v) { return anchor.has_node(v) || into.nodes.count(v); };
				if (!in_scope(e.source) || !in_scope(e.target))
					continue;
				auto it = parallel_.find(Edge{e.type, m.nodes.at(e.source), m.nodes.at(e.target)});
				if (it == parallel_.end())
					continue;
				for (const Id& h : it->second)
					if (!used_edges.count(h)) {
						used_edges.insert(h);
						m.edges[eid] = h;
						into.edges.insert(eid);
						break;
					}
			}
		};
		claim(eor_.maximal.lhs, actions_.deletions.edges, eor_.base.lhs, sel.del_extra);
		claim(eor_.maximal.rhs, actions_.creations.edges, eor_.base.interface, sel.preserve_extra);

		if (!dangling_ok(m, sel))
			return std::nullopt;

		MatchResult mr;
		mr.induced = build_induced_rule(eor_, sel);
		mr.match = std::move(m);
		mr.base_prematch = pm_;
		return mr;
	}

	bool dangling_ok(const Morphism& m, const InducedSelection& sel) const
	{
		std::set<Id> gone_nodes;
		std::set<Id> gone_edges;
		for (const auto& [id, t] : eor_.base.lhs.nodes())
			if (!eor_.base.interface.has_node(id))
				gone_nodes.insert(m.nodes.at(id));
		for (const auto& [id, e] : eor_.base.lhs.edges())
			if (!eor_.base.interface.has_edge(id))
				gone_edges.insert(m.edges.at(id));
		for (const auto& id : sel.del_extra.nodes)
			gone_nodes.insert(m.nodes.at(id));
		for (const auto& id : sel.del_extra.edges)
			gone_edges.insert(m.edges.at(id));
		for (const auto& h : gone_nodes)
			for (const auto& eid : host_.incident_edges(h))
				if (!gone_edges.count(eid))
					return false;
		return true;
	}

	const EffectOrientedRule& eor_;
	const TypedGraph& host_;
	const PreMatch& pm_;
	MatchStats& stats_;
	PotentialActions actions_;
	std::vector<Unbound> unbound_;
	std::map<Edge, std::vector<Id>> parallel_;
	std::map<Id, Id> assigned_;
	std::set<Id> used_;
	std::vector<std::size_t> skipped_;
	bool allow_skip_ = false;
};

bool jointly_injective(const Morphism& a, const Morphism& b)
{
	Morphism both = a;
	both.nodes.insert(b.nodes.begin(), b.nodes.end());
	both.edges.insert(b.edges.begin(), b.edges.end());
	return both.is_injective();
}

// Some single potential element `x` outside `part` can be added to `part` and
// matched by extending `own` so that it stays jointly injective with `other`.
bool extendable(const TypedGraph& side,
                const std::set<Id>& node_pool,
                const std::set<Id>& edge_pool,
                const TypedGraph& part,
                const Morphism& own,
                const Morphism& other,
                const TypedGraph& host)
{
	auto try_with = [&](const TypedGraph& bigger) {
		bool found = false;
		for_each_injective_extension(bigger, host, own, [&](const Morphism& e) {
			found = jointly_injective(e, other);
			return !found;
		});
		return found;
	};
	for (const auto& x : node_pool) {
		if (part.has_node(x))
			continue;
		TypedGraph bigger = part;
		bigger.add_node(x, side.node_type(x));
		if (try_with(bigger))
			return true;
	}
	for (const auto& x : edge_pool) {
		if (part.has_edge(x))
			continue;
		const Edge& e = side.edge(x);
		if (!part.has_node(e.source) || !part.has_node(e.target))
			continue;
		TypedGraph bigger = part;
		bigger.add_edge(x, e.type, e.source, e.target);
		if (try_with(bigger))
			return true;
	}
	return false;
}

} // namespace

std::optional<MatchResult> find_locally_complete(const EffectOrientedRule& eor,
                                                 const TypedGraph& host,
                                                 const PreMatch& pm,
                                                 MatchStats* stats,
                                                 SearchMode mode)
{
	require_valid(eor, host, pm);
	MatchStats local;
	MatchStats& st = stats ? *stats : local;
	LocalSearch search(eor, host, pm, st);
	if (auto r = search.run(false))
		return r;
	if (mode == SearchMode::Literal)
		return std::nullopt;
	st.completion_pass = true;
	return search.run(true);
}

bool is_locally_complete(const EffectOrientedRule& eor, const TypedGraph& host, const PreMatch& pm, const MatchResult& mr)
{
	(void)pm;
	const InducedSelection& sel = mr.induced.selection;
	TypedGraph li = left_extension(eor, sel);
	TypedGraph kc = induced_interface(eor, sel);
	Morphism e1 = restrict_to(mr.match, li);
	Morphism e2 = restrict_to(mr.match, kc);
	PotentialActions pa = potential_actions(eor);
	if (extendable(eor.maximal.lhs, pa.deletions.nodes, pa.deletions.edges, li, e1, e2, host))
		return false;
	if (extendable(eor.maximal.rhs, pa.creations.nodes, pa.creations.edges, kc, e2, e1, host))
		return false;
	return true;
}

std::vector<MatchResult> oracle_locally_complete(const EffectOrientedRule& eor, const TypedGraph& host, const PreMatch& pm)
{
	require_valid(eor, host, pm);
	std::vector<MatchResult> out;
	for (const auto& sel : enumerate_selections(eor)) {
		InducedRule ir = build_induced_rule(eor, sel);
		Morphism kc_in_lc = inclusion(ir.rule.interface);
		for_each_injective_extension(ir.rule.lhs, host, pm.morphism, [&](const Morphism& m) {
			if (!dangling_nodes(ir.rule.lhs, kc_in_lc, m, host).empty() || !satisfies_nacs(m, ir.rule.nacs, host))
				return true;
			MatchResult mr{ir, m, pm};
			if (is_locally_complete(eor, host, pm, mr))
				out.push_back(std::move(mr));
			return true;
		});
	}
	std::sort(out.begin(), out.end(), canonical_less);
	return out;
}

namespace {

std::vector<MatchResult> keep_largest(std::vector<MatchResult> all)
{
	std::size_t best = 0;
	for (const auto& r : all)
		best = std::max(best, r.induced.size);
	std::erase_if(all, [&](const MatchResult& r) { return r.induced.size != best; });
	return all;
}

} // namespace

std::vector<MatchResult> find_locally_maximal(const EffectOrientedRule& eor, const TypedGraph& host, const PreMatch& pm)
{
	return keep_largest(oracle_locally_complete(eor, host, pm));
}

std::vector<MatchResult> find_globally_maximal(const EffectOrientedRule& eor, const TypedGraph& host)
{
	std::vector<MatchResult> all;
	for (const auto& pm : find_base_prematches(eor, host))
		for (auto& r : find_locally_maximal(eor, host, pm))
			all.push_back(std::move(r));
	std::vector<MatchResult> out = keep_largest(std::move(all));
	std::sort(out.begin(), out.end(), canonical_less);
	return out;
}

} // namespace eogt
