#include "eogt/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace eogt {

// ---------------------------------------------------------------------------
// TypeGraph

TypeGraph& TypeGraph::add_node_type(const std::string& name)
{
	if (!node_types_.insert(name).second)
		throw std::invalid_argument("duplicate node type '" + name + "'");
	return *this;
}

TypeGraph& TypeGraph::add_edge_type(const std::string& name, const std::string& source, const std::string& target)
{
	if (!edge_types_.emplace(name, EdgeType{name, source, target}).second)
		throw std::invalid_argument("duplicate edge type '" + name + "'");
	return *this;
}

const EdgeType* TypeGraph::edge_type(const std::string& t) const
{
	auto it = edge_types_.find(t);
	return it == edge_types_.end() ? nullptr : &it->second;
}

Diagnostics validate_type_graph(const TypeGraph& tg)
{
	Diagnostics out;
	for (const auto& [name, et] : tg.edge_types()) {
		if (!tg.has_node_type(et.source))
			out.push_back({"unknown-source-type", name, "source type '" + et.source + "' is not declared"});
		if (!tg.has_node_type(et.target))
			out.push_back({"unknown-target-type", name, "target type '" + et.target + "' is not declared"});
	}
	return out;
}

// ---------------------------------------------------------------------------
// TypedGraph

TypedGraph& TypedGraph::add_node(const Id& id, const std::string& type)
{
	if (has_element(id))
		throw std::invalid_argument("duplicate element id '" + id + "'");
	nodes_.emplace(id, type);
	return *this;
}

TypedGraph& TypedGraph::add_edge(const Id& id, const std::string& type, const Id& source, const Id& target)
{
	if (has_element(id))
		throw std::invalid_argument("duplicate element id '" + id + "'");
	edges_.emplace(id, Edge{type, source, target});
	return *this;
}

void TypedGraph::remove_node(const Id& id) { nodes_.erase(id); }
void TypedGraph::remove_edge(const Id& id) { edges_.erase(id); }

std::vector<Id> TypedGraph::incident_edges(const Id& node) const
{
	std::vector<Id> out;
	for (const auto& [id, e] : edges_)
		if (e.source == node || e.target == node)
			out.push_back(id);
	return out;
}

ElementSet difference(const TypedGraph& a, const TypedGraph& b)
{
	ElementSet out;
	for (const auto& [id, t] : a.nodes())
		if (!b.has_node(id))
			out.nodes.insert(id);
	for (const auto& [id, e] : a.edges())
		if (!b.has_edge(id))
			out.edges.insert(id);
	return out;
}

ElementSet elements_of(const TypedGraph& g)
{
	ElementSet out;
	for (const auto& [id, t] : g.nodes())
		out.nodes.insert(id);
	for (const auto& [id, e] : g.edges())
		out.edges.insert(id);
	return out;
}

// ---------------------------------------------------------------------------
// Morphism helpers

namespace {

template<class Map>
bool map_injective(const Map& m)
{
	std::set<Id> seen;
	for (const auto& [k, v] : m)
		if (!seen.insert(v).second)
			return false;
	return true;
}

std::optional<Id> lookup(const std::map<Id, Id>& m, const Id& id)
{
	auto it = m.find(id);
	if (it == m.end())
		return std::nullopt;
	return it->second;
}

} // namespace

bool Morphism::is_injective() const { return map_injective(nodes) && map_injective(edges); }

std::optional<Id> Morphism::node(const Id& id) const { return lookup(nodes, id); }
std::optional<Id> Morphism::edge(const Id& id) const { return lookup(edges, id); }

std::set<Id> Morphism::node_image() const
{
	std::set<Id> out;
	for (const auto& [k, v] : nodes)
		out.insert(v);
	return out;
}

std::set<Id> Morphism::edge_image() const
{
	std::set<Id> out;
	for (const auto& [k, v] : edges)
		out.insert(v);
	return out;
}

Morphism compose(const Morphism& first, const Morphism& second)
{
	Morphism out;
	for (const auto& [k, v] : first.nodes)
		if (auto w = second.node(v))
			out.nodes.emplace(k, *w);
	for (const auto& [k, v] : first.edges)
		if (auto w = second.edge(v))
			out.edges.emplace(k, *w);
	return out;
}

Morphism identity(const TypedGraph& g) { return inclusion(g); }

Morphism inclusion(const TypedGraph& sub)
{
	Morphism out;
	for (const auto& [id, t] : sub.nodes())
		out.nodes.emplace(id, id);
	for (const auto& [id, e] : sub.edges())
		out.edges.emplace(id, id);
	return out;
}

Morphism restrict_to(const Morphism& f, const TypedGraph& sub)
{
	Morphism out;
	for (const auto& [id, t] : sub.nodes())
		if (auto v = f.node(id))
			out.nodes.emplace(id, *v);
	for (const auto& [id, e] : sub.edges())
		if (auto v = f.edge(id))
			out.edges.emplace(id, *v);
	return out;
}

Morphism invert(const Morphism& f)
{
	Morphism out;
	for (const auto& [k, v] : f.nodes)
		if (!out.nodes.emplace(v, k).second)
			throw NotInjective("cannot invert: node " + v + " has several pre-images");
	for (const auto& [k, v] : f.edges)
		if (!out.edges.emplace(v, k).second)
			throw NotInjective("cannot invert: edge " + v + " has several pre-images");
	return out;
}

bool is_subgraph(const TypedGraph& sub, const TypedGraph& sup)
{
	for (const auto& [id, t] : sub.nodes()) {
		auto it = sup.nodes().find(id);
		if (it == sup.nodes().end() || it->second != t)
			return false;
	}
	for (const auto& [id, e] : sub.edges()) {
		auto it = sup.edges().find(id);
		if (it == sup.edges().end() || it->second != e)
			return false;
	}
	return true;
}

TypedGraph subgraph(const TypedGraph& g, const ElementSet& keep)
{
	TypedGraph out(g.type_graph());
	for (const auto& id : keep.nodes)
		out.add_node(id, g.node_type(id));
	for (const auto& id : keep.edges) {
		const Edge& e = g.edge(id);
		if (!out.has_node(e.source) || !out.has_node(e.target))
			throw std::invalid_argument("edge '" + id + "' kept without its endpoints");
		out.add_edge(id, e.type, e.source, e.target);
	}
	return out;
}

TypedGraph graph_union(const TypedGraph& a, const TypedGraph& b)
{
	TypedGraph out = a;
	for (const auto& [id, t] : b.nodes()) {
		if (a.has_node(id)) {
			if (a.node_type(id) != t)
				throw std::invalid_argument("conflicting node '" + id + "' in union");
			continue;
		}
		out.add_node(id, t);
	}
	for (const auto& [id, e] : b.edges()) {
		if (a.has_edge(id)) {
			if (a.edge(id) != e)
				throw std::invalid_argument("conflicting edge '" + id + "' in union");
			continue;
		}
		out.add_edge(id, e.type, e.source, e.target);
	}
	return out;
}

// ---------------------------------------------------------------------------
// Validation

Diagnostics validate_graph_structure(const TypedGraph& g)
{
	Diagnostics out;
	for (const auto& [id, e] : g.edges()) {
		if (!g.has_node(e.source))
			out.push_back({"dangling-endpoint", id, "source node '" + e.source + "' is absent"});
		if (!g.has_node(e.target))
			out.push_back({"dangling-endpoint", id, "target node '" + e.target + "' is absent"});
	}
	return out;
}

Diagnostics validate_graph(const TypedGraph& g, const TypeGraph& tg)
{
	Diagnostics out;
	if (!g.type_graph().empty() && !tg.name().empty() && g.type_graph() != tg.name())
		out.push_back({"type-graph-mismatch", g.type_graph(), "graph is typed over '" + g.type_graph() + "', not '" + tg.name() + "'"});
	for (const auto& [id, t] : g.nodes())
		if (!tg.has_node_type(t))
			out.push_back({"unknown-node-type", id, "node type '" + t + "' is not declared"});
	for (const auto& [id, e] : g.edges()) {
		bool src_ok = g.has_node(e.source);
		bool tgt_ok = g.has_node(e.target);
		if (!src_ok)
			out.push_back({"dangling-endpoint", id, "source node '" + e.source + "' is absent"});
		if (!tgt_ok)
			out.push_back({"dangling-endpoint", id, "target node '" + e.target + "' is absent"});
		const EdgeType* et = tg.edge_type(e.type);
		if (et == nullptr) {
			out.push_back({"unknown-edge-type", id, "edge type '" + e.type + "' is not declared"});
			continue;
		}
		if (src_ok && g.node_type(e.source) != et->source)
			out.push_back({"source-type-mismatch", id, "source '" + e.source + "' has type '" + g.node_type(e.source) + "', expected '" + et->source + "'"});
		if (tgt_ok && g.node_type(e.target) != et->target)
			out.push_back({"target-type-mismatch", id, "target '" + e.target + "' has type '" + g.node_type(e.target) + "', expected '" + et->target + "'"});
	}
	return out;
}

Diagnostics check_morphism(const Morphism& f, const TypedGraph& src, const TypedGraph& dst, bool require_injective)
{
	Diagnostics out;
	for (const auto& [id, t] : src.nodes()) {
		auto img = f.node(id);
		if (!img) {
			out.push_back({"not-total", id, "node is unmapped"});
			continue;
		}
		if (!dst.has_node(*img)) {
			out.push_back({"missing-target", id, "image node '" + *img + "' is absent"});
			continue;
		}
		if (dst.node_type(*img) != t)
			out.push_back({"type-mismatch", id, "mapped to '" + *img + "' of type '" + dst.node_type(*img) + "'"});
	}
	for (const auto& [id, e] : src.edges()) {
		auto img = f.edge(id);
		if (!img) {
			out.push_back({"not-total", id, "edge is unmapped"});
			continue;
		}
		if (!dst.has_edge(*img)) {
			out.push_back({"missing-target", id, "image edge '" + *img + "' is absent"});
			continue;
		}
		const Edge& de = dst.edge(*img);
		if (de.type != e.type)
			out.push_back({"type-mismatch", id, "mapped to '" + *img + "' of type '" + de.type + "'"});
		if (f.node(e.source) != std::optional<Id>(de.source))
			out.push_back({"source-not-commuting", id, "source does not commute"});
		if (f.node(e.target) != std::optional<Id>(de.target))
			out.push_back({"target-not-commuting", id, "target does not commute"});
	}
	for (const auto& [k, v] : f.nodes)
		if (!src.has_node(k))
			out.push_back({"foreign-element", k, "mapped node is not in the source graph"});
	for (const auto& [k, v] : f.edges)
		if (!src.has_edge(k))
			out.push_back({"foreign-element", k, "mapped edge is not in the source graph"});
	if (require_injective) {
		std::map<Id, Id> seen;
		for (const auto& [k, v] : f.nodes)
			if (auto [it, fresh] = seen.emplace(v, k); !fresh)
				out.push_back({"not-injective", k, "node shares image '" + v + "' with '" + it->second + "'"});
		seen.clear();
		for (const auto& [k, v] : f.edges)
			if (auto [it, fresh] = seen.emplace(v, k); !fresh)
				out.push_back({"not-injective", k, "edge shares image '" + v + "' with '" + it->second + "'"});
	}
	return out;
}

// ---------------------------------------------------------------------------
// Injective extension search

namespace {

class ExtensionSearch
{
public:
	ExtensionSearch(const TypedGraph& pattern,
	                const TypedGraph& host,
	                const Morphism& partial,
	                const std::function<bool(const Morphism&)>& visit)
		: pattern_(pattern)
		, host_(host)
		, visit_(visit)
		, current_(partial)
	{
		for (const auto& [id, e] : host.edges())
			between_[{e.source, e.target}].push_back(id);
		for (const auto& [id, t] : host.nodes())
			by_type_[t].push_back(id);
		for (const auto& [id, t] : pattern.nodes())
			if (!current_.nodes.count(id))
				free_nodes_.push_back(id);
		for (const auto& [id, e] : pattern.edges())
			if (!current_.edges.count(id))
				free_edges_.push_back(id);
		used_nodes_ = current_.node_image();
		used_edges_ = current_.edge_image();
	}

	void run()
	{
		if (!partial_consistent())
			return;
		assign_node(0);
	}

private:
	bool partial_consistent() const
	{
		if (!current_.is_injective())
			return false;
		for (const auto& [k, v] : current_.nodes)
			if (!pattern_.has_node(k) || !host_.has_node(v) || pattern_.node_type(k) != host_.node_type(v))
				return false;
		for (const auto& [k, v] : current_.edges) {
			if (!pattern_.has_edge(k) || !host_.has_edge(v))
				return false;
			const Edge& pe = pattern_.edge(k);
			const Edge& he = host_.edge(v);
			if (pe.type != he.type)
				return false;
			auto s = current_.node(pe.source);
			auto t = current_.node(pe.target);
			if ((s && *s != he.source) || (t && *t != he.target))
				return false;
		}
		return true;
	}

	// Every free pattern edge between assigned nodes still has some host edge.
	bool edges_feasible(const Id& just_assigned) const
	{
		for (const auto& pid : free_edges_) {
			const Edge& pe = pattern_.edge(pid);
			if (pe.source != just_assigned && pe.target != just_assigned)
				continue;
			auto s = current_.node(pe.source);
			auto t = current_.node(pe.target);
			if (!s || !t)
				continue;
			auto it = between_.find({*s, *t});
			if (it == between_.end())
				return false;
			bool any = std::any_of(it->second.begin(), it->second.end(), [&](const Id& h) {
				return host_.edge(h).type == pe.type && !used_edges_.count(h);
			});
			if (!any)
				return false;
		}
		// Edges already fixed by the partial map must agree with new node images.
		for (const auto& [pid, hid] : current_.edges) {
			const Edge& pe = pattern_.edge(pid);
			const Edge& he = host_.edge(hid);
			if (pe.source == just_assigned && current_.nodes.at(just_assigned) != he.source)
				return false;
			if (pe.target == just_assigned && current_.nodes.at(just_assigned) != he.target)
				return false;
		}
		return true;
	}

	bool assign_node(std::size_t pos)
	{
		if (pos == free_nodes_.size())
			return assign_edge(0);
		const Id& n = free_nodes_[pos];
		auto it = by_type_.find(pattern_.node_type(n));
		if (it == by_type_.end())
			return true;
		for (const Id& x : it->second) {
			if (used_nodes_.count(x))
				continue;
			current_.nodes[n] = x;
			used_nodes_.insert(x);
			bool keep_going = true;
			if (edges_feasible(n))
				keep_going = assign_node(pos + 1);
			used_nodes_.erase(x);
			current_.nodes.erase(n);
			if (!keep_going)
				return false;
		}
		return true;
	}

	bool assign_edge(std::size_t pos)
	{
		if (pos == free_edges_.size())
			return visit_(current_);
		const Id& pid = free_edges_[pos];
		const Edge& pe = pattern_.edge(pid);
		auto it = between_.find({current_.nodes.at(pe.source), current_.nodes.at(pe.target)});
		if (it == between_.end())
			return true;
		for (const Id& h : it->second) {
			if (used_edges_.count(h) || host_.edge(h).type != pe.type)
				continue;
			current_.edges[pid] = h;
			used_edges_.insert(h);
			bool keep_going = assign_edge(pos + 1);
			used_edges_.erase(h);
			current_.edges.erase(pid);
			if (!keep_going)
				return false;
		}
		return true;
	}

	const TypedGraph& pattern_;
	const TypedGraph& host_;
	const std::function<bool(const Morphism&)>& visit_;
	Morphism current_;
	std::map<std::pair<Id, Id>, std::vector<Id>> between_;
	std::map<std::string, std::vector<Id>> by_type_;
	std::vector<Id> free_nodes_;
	std::vector<Id> free_edges_;
	std::set<Id> used_nodes_;
	std::set<Id> used_edges_;
};

} // namespace

void for_each_injective_extension(const TypedGraph& pattern,
                                  const TypedGraph& host,
                                  const Morphism& partial,
                                  const std::function<bool(const Morphism&)>& visit)
{
	ExtensionSearch(pattern, host, partial, visit).run();
}

std::vector<Morphism> find_injective_extensions(const TypedGraph& pattern,
                                                const TypedGraph& host,
                                                const Morphism& partial,
                                                std::size_t limit)
{
	std::vector<Morphism> out;
	if (limit == 0)
		return out;
	for_each_injective_extension(pattern, host, partial, [&](const Morphism& m) {
		out.push_back(m);
		return out.size() < limit;
	});
	return out;
}

bool has_injective_extension(const TypedGraph& pattern, const TypedGraph& host, const Morphism& partial)
{
	return !find_injective_extensions(pattern, host, partial, 1).empty();
}

// ---------------------------------------------------------------------------
// Pushout, pushout complement, pullback check

namespace {

Id fresh_id(const Id& base, const TypedGraph& taken, FreshNaming naming)
{
	if (naming == FreshNaming::KeepIfFree && !taken.has_element(base))
		return base;
	for (std::size_t k = 1;; ++k) {
		Id candidate = base + "#" + std::to_string(k);
		if (!taken.has_element(candidate))
			return candidate;
	}
}

bool same_domain(const Morphism& f, const Morphism& g)
{
	auto keys = [](const std::map<Id, Id>& m) {
		std::set<Id> s;
		for (const auto& [k, v] : m)
			s.insert(k);
		return s;
	};
	return keys(f.nodes) == keys(g.nodes) && keys(f.edges) == keys(g.edges);
}

} // namespace

PushoutResult pushout(const TypedGraph& b, const TypedGraph& c, const Morphism& f, const Morphism& g, FreshNaming naming)
{
	if (!f.is_injective() || !g.is_injective())
		throw NotInjective("pushout requires injective legs");
	if (!same_domain(f, g))
		throw std::invalid_argument("pushout legs do not share a domain");

	PushoutResult out;
	out.object = b;
	out.from_first = identity(b);
	Morphism g_inv = invert(g);

	for (const auto& [id, t] : c.nodes()) {
		if (auto a = g_inv.node(id)) {
			out.from_second.nodes.emplace(id, f.nodes.at(*a));
			continue;
		}
		Id nid = fresh_id(id, out.object, naming);
		out.object.add_node(nid, t);
		out.from_second.nodes.emplace(id, nid);
	}
	for (const auto& [id, e] : c.edges()) {
		if (auto a = g_inv.edge(id)) {
			out.from_second.edges.emplace(id, f.edges.at(*a));
			continue;
		}
		Id nid = fresh_id(id, out.object, naming);
		out.object.add_edge(nid, e.type, out.from_second.nodes.at(e.source), out.from_second.nodes.at(e.target));
		out.from_second.edges.emplace(id, nid);
	}
	return out;
}

namespace {

struct Deletion
{
	ElementSet rule;
	ElementSet host;
};

Deletion deleted_part(const TypedGraph& lhs, const Morphism& interface_to_lhs, const Morphism& match)
{
	if (!interface_to_lhs.is_injective() || !match.is_injective())
		throw NotInjective("pushout complement requires injective morphisms");
	std::set<Id> kept_nodes = interface_to_lhs.node_image();
	std::set<Id> kept_edges = interface_to_lhs.edge_image();
	Deletion d;
	for (const auto& [id, t] : lhs.nodes())
		if (!kept_nodes.count(id)) {
			d.rule.nodes.insert(id);
			d.host.nodes.insert(match.nodes.at(id));
		}
	for (const auto& [id, e] : lhs.edges())
		if (!kept_edges.count(id)) {
			d.rule.edges.insert(id);
			d.host.edges.insert(match.edges.at(id));
		}
	return d;
}

} // namespace

std::vector<Id> dangling_nodes(const TypedGraph& lhs, const Morphism& interface_to_lhs, const Morphism& match, const TypedGraph& host)
{
	Deletion d = deleted_part(lhs, interface_to_lhs, match);
	std::vector<Id> out;
	for (const auto& hn : d.host.nodes)
		for (const auto& he : host.incident_edges(hn))
			if (!d.host.edges.count(he)) {
				out.push_back(hn);
				break;
			}
	return out;
}

PushoutComplementResult pushout_complement(const TypedGraph& lhs,
                                           const Morphism& interface_to_lhs,
                                           const Morphism& match,
                                           const TypedGraph& host)
{
	Deletion d = deleted_part(lhs, interface_to_lhs, match);
	Morphism match_inv = invert(match);
	for (const auto& hn : d.host.nodes)
		for (const auto& he : host.incident_edges(hn))
			if (!d.host.edges.count(he))
				throw DanglingViolation(hn, match_inv.nodes.at(hn), he);

	PushoutComplementResult out;
	out.context = host;
	for (const auto& he : d.host.edges)
		out.context.remove_edge(he);
	for (const auto& hn : d.host.nodes)
		out.context.remove_node(hn);
	out.interface_map = compose(interface_to_lhs, match);
	out.into_host = identity(out.context);
	return out;
}

bool is_pullback_square(const Morphism& top, const Morphism& left, const Morphism& right, const Morphism& bottom)
{
	for (const Morphism* m : {&top, &left, &right, &bottom})
		if (!m->is_injective())
			throw NotInjective("pullback check requires injective morphisms");

	Morphism via_top = compose(top, right);
	Morphism via_left = compose(left, bottom);
	if (via_top != via_left || via_top.nodes.size() != top.nodes.size() || via_top.edges.size() != top.edges.size())
		throw NonCommuting("square does not commute");

	auto covered = [](const std::set<Id>& a, const std::set<Id>& b, const std::set<Id>& corner) {
		for (const auto& x : a)
			if (b.count(x) && !corner.count(x))
				return false;
		return true;
	};
	return covered(right.node_image(), bottom.node_image(), via_top.node_image())
	    && covered(right.edge_image(), bottom.edge_image(), via_top.edge_image());
}

// ---------------------------------------------------------------------------
// Isomorphism

std::optional<Morphism> find_isomorphism(const TypedGraph& a, const TypedGraph& b)
{
	if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count())
		return std::nullopt;
	auto type_counts = [](const TypedGraph& g) {
		std::map<std::string, std::size_t> nodes;
		std::map<std::string, std::size_t> edges;
		for (const auto& [id, t] : g.nodes())
			++nodes[t];
		for (const auto& [id, e] : g.edges())
			++edges[e.type];
		return std::make_pair(nodes, edges);
	};
	if (type_counts(a) != type_counts(b))
		return std::nullopt;
	// An injective total morphism between graphs of equal cardinalities is
	// bijective, and its inverse again preserves structure.
	auto found = find_injective_extensions(a, b, {}, 1);
	if (found.empty())
		return std::nullopt;
	return found.front();
}

} // namespace eogt
