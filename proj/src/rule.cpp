#include "eogt/rule.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace eogt {

Morphism TransformationRecord::track() const
{
	return compose(invert(context_to_input), context_to_output);
}

Diagnostics validate_rule(const Rule& r, const TypeGraph* tg)
{
	Diagnostics out;
	auto check_graph = [&](const TypedGraph& g, const std::string& part) {
		Diagnostics ds = tg ? validate_graph(g, *tg) : validate_graph_structure(g);
		for (auto& d : ds) {
			d.message = part + ": " + d.message;
			out.push_back(std::move(d));
		}
	};
	check_graph(r.lhs, "lhs");
	check_graph(r.interface, "interface");
	check_graph(r.rhs, "rhs");

	if (r.lhs.type_graph() != r.interface.type_graph() || r.rhs.type_graph() != r.interface.type_graph())
		out.push_back({"type-graph-mismatch", r.name, "lhs, interface and rhs are typed over different type graphs"});

	auto check_inclusion = [&](const TypedGraph& big, const std::string& part) {
		for (const auto& [id, t] : r.interface.nodes())
			if (!big.has_node(id) || big.node_type(id) != t)
				out.push_back({"interface-not-in-" + part, id, "interface node missing from " + part});
		for (const auto& [id, e] : r.interface.edges())
			if (!big.has_edge(id) || big.edge(id) != e)
				out.push_back({"interface-not-in-" + part, id, "interface edge missing from " + part});
	};
	check_inclusion(r.lhs, "lhs");
	check_inclusion(r.rhs, "rhs");

	for (const auto& [id, t] : r.lhs.nodes())
		if (r.rhs.has_element(id) && !r.interface.has_node(id))
			out.push_back({"ambiguous-id", id, "id used in lhs and rhs outside the interface"});
	for (const auto& [id, e] : r.lhs.edges())
		if (r.rhs.has_element(id) && !r.interface.has_edge(id))
			out.push_back({"ambiguous-id", id, "id used in lhs and rhs outside the interface"});

	for (const auto& nac : r.nacs) {
		if (!is_subgraph(r.lhs, nac.forbidden))
			out.push_back({"nac-not-rooted", nac.name, "NAC graph does not contain the lhs"});
		for (auto& d : tg ? validate_graph(nac.forbidden, *tg) : validate_graph_structure(nac.forbidden)) {
			d.message = "nac " + nac.name + ": " + d.message;
			out.push_back(std::move(d));
		}
	}
	return out;
}

bool satisfies_nacs(const Morphism& match, const std::vector<Nac>& nacs, const TypedGraph& host)
{
	return std::none_of(nacs.begin(), nacs.end(), [&](const Nac& nac) {
		return has_injective_extension(nac.forbidden, host, match);
	});
}

// ---------------------------------------------------------------------------
// Shift along monos

namespace {

Id first_free(const Id& base, const TypedGraph& g)
{
	if (!g.has_element(base))
		return base;
	for (std::size_t k = 1;; ++k) {
		Id c = base + "#" + std::to_string(k);
		if (!g.has_element(c))
			return c;
	}
}

class OverlapEnumerator
{
public:
	OverlapEnumerator(const Morphism& b, const TypedGraph& target, const Nac& nac, std::vector<Nac>& out)
		: b_(b)
		, target_(target)
		, nac_(nac)
		, out_(out)
	{
		for (const auto& [id, t] : nac.forbidden.nodes())
			if (!b.nodes.count(id))
				extra_nodes_.push_back(id);
		for (const auto& [id, e] : nac.forbidden.edges())
			if (!b.edges.count(id))
				extra_edges_.push_back(id);
		std::set<Id> bn = b.node_image();
		std::set<Id> be = b.edge_image();
		for (const auto& [id, t] : target.nodes())
			if (!bn.count(id))
				free_nodes_.push_back(id);
		for (const auto& [id, e] : target.edges())
			if (!be.count(id))
				free_edges_.push_back(id);
	}

	void run() { choose_node(0); }

private:
	// Where a NAC node lands in the overlap: a glued target node, or fresh.
	std::optional<Id> endpoint(const Id& nac_node) const
	{
		if (auto v = b_.node(nac_node))
			return v;
		auto it = node_glue_.find(nac_node);
		if (it != node_glue_.end() && it->second)
			return it->second;
		return std::nullopt;
	}

	void choose_node(std::size_t pos)
	{
		if (pos == extra_nodes_.size()) {
			choose_edge(0);
			return;
		}
		const Id& x = extra_nodes_[pos];
		node_glue_[x] = std::nullopt;
		choose_node(pos + 1);
		for (const Id& y : free_nodes_) {
			if (used_.count(y) || target_.node_type(y) != nac_.forbidden.node_type(x))
				continue;
			node_glue_[x] = y;
			used_.insert(y);
			choose_node(pos + 1);
			used_.erase(y);
		}
		node_glue_.erase(x);
	}

	void choose_edge(std::size_t pos)
	{
		if (pos == extra_edges_.size()) {
			emit();
			return;
		}
		const Id& x = extra_edges_[pos];
		const Edge& e = nac_.forbidden.edge(x);
		edge_glue_[x] = std::nullopt;
		choose_edge(pos + 1);
		auto s = endpoint(e.source);
		auto t = endpoint(e.target);
		if (s && t) {
			for (const Id& y : free_edges_) {
				const Edge& te = target_.edge(y);
				if (used_.count(y) || te.type != e.type || te.source != *s || te.target != *t)
					continue;
				edge_glue_[x] = y;
				used_.insert(y);
				choose_edge(pos + 1);
				used_.erase(y);
			}
		}
		edge_glue_.erase(x);
	}

	void emit()
	{
		TypedGraph p = target_;
		std::map<Id, Id> node_in_p;
		for (const auto& x : extra_nodes_) {
			if (auto g = node_glue_.at(x)) {
				node_in_p[x] = *g;
				continue;
			}
			Id nid = first_free(x, p);
			p.add_node(nid, nac_.forbidden.node_type(x));
			node_in_p[x] = nid;
		}
		auto where = [&](const Id& n) {
			if (auto v = b_.node(n))
				return *v;
			return node_in_p.at(n);
		};
		for (const auto& x : extra_edges_) {
			if (edge_glue_.at(x))
				continue;
			const Edge& e = nac_.forbidden.edge(x);
			p.add_edge(first_free(x, p), e.type, where(e.source), where(e.target));
		}
		out_.push_back(Nac{nac_.name, std::move(p)});
	}

	const Morphism& b_;
	const TypedGraph& target_;
	const Nac& nac_;
	std::vector<Nac>& out_;
	std::vector<Id> extra_nodes_;
	std::vector<Id> extra_edges_;
	std::vector<Id> free_nodes_;
	std::vector<Id> free_edges_;
	std::map<Id, std::optional<Id>> node_glue_;
	std::map<Id, std::optional<Id>> edge_glue_;
	std::set<Id> used_;
};

} // namespace

std::vector<Nac> shift_nacs(const Morphism& b, const TypedGraph& target_lhs, const std::vector<Nac>& nacs)
{
	if (!b.is_injective())
		throw NotInjective("shift requires an injective morphism");
	std::vector<Nac> out;
	for (const auto& nac : nacs)
		OverlapEnumerator(b, target_lhs, nac, out).run();
	return out;
}

// ---------------------------------------------------------------------------
// Bounded semantic equivalence

TypeGraph infer_type_graph(const std::vector<const TypedGraph*>& graphs)
{
	TypeGraph tg;
	for (const TypedGraph* g : graphs) {
		for (const auto& [id, t] : g->nodes())
			if (!tg.has_node_type(t))
				tg.add_node_type(t);
		for (const auto& [id, e] : g->edges()) {
			if (tg.edge_type(e.type))
				continue;
			if (!g->has_node(e.source) || !g->has_node(e.target))
				continue;
			tg.add_edge_type(e.type, g->node_type(e.source), g->node_type(e.target));
		}
	}
	return tg;
}

namespace {

class HostEnumerator
{
public:
	HostEnumerator(const TypeGraph& types,
	               std::size_t max_nodes,
	               std::size_t max_multiplicity,
	               const std::map<std::string, std::size_t>& min_counts,
	               const std::function<bool(const TypedGraph&)>& visit)
		: types_(types.node_types().begin(), types.node_types().end())
		, edge_types_(types.edge_types())
		, max_nodes_(max_nodes)
		, max_mult_(max_multiplicity)
		, min_counts_(min_counts)
		, visit_(visit)
	{
	}

	void run()
	{
		for (std::size_t n = 0; n <= max_nodes_; ++n) {
			sequence_.clear();
			if (!choose_types(n, 0))
				return;
		}
	}

private:
	bool choose_types(std::size_t remaining, std::size_t from)
	{
		if (remaining == 0)
			return meets_minimum() ? enumerate_edges() : true;
		for (std::size_t t = from; t < types_.size(); ++t) {
			sequence_.push_back(types_[t]);
			bool go = choose_types(remaining - 1, t);
			sequence_.pop_back();
			if (!go)
				return false;
		}
		return true;
	}

	bool meets_minimum() const
	{
		for (const auto& [t, need] : min_counts_)
			if (static_cast<std::size_t>(std::count(sequence_.begin(), sequence_.end(), t)) < need)
				return false;
		return true;
	}

	bool enumerate_edges()
	{
		struct Slot
		{
			std::size_t s, t;
			std::string type;
		};
		std::vector<Slot> slots;
		for (std::size_t i = 0; i < sequence_.size(); ++i)
			for (std::size_t j = 0; j < sequence_.size(); ++j)
				for (const auto& [name, et] : edge_types_)
					if (et.source == sequence_[i] && et.target == sequence_[j])
						slots.push_back({i, j, name});
		std::vector<std::size_t> mult(slots.size(), 0);
		while (true) {
			TypedGraph g;
			for (std::size_t i = 0; i < sequence_.size(); ++i)
				g.add_node("n" + std::to_string(i), sequence_[i]);
			std::size_t eid = 0;
			for (std::size_t k = 0; k < slots.size(); ++k)
				for (std::size_t c = 0; c < mult[k]; ++c)
					g.add_edge("e" + std::to_string(eid++), slots[k].type, "n" + std::to_string(slots[k].s), "n" + std::to_string(slots[k].t));
			if (!visit_(g))
				return false;
			std::size_t k = 0;
			while (k < slots.size() && mult[k] == max_mult_)
				mult[k++] = 0;
			if (k == slots.size())
				return true;
			++mult[k];
		}
	}

	std::vector<std::string> types_;
	const std::map<std::string, EdgeType>& edge_types_;
	std::size_t max_nodes_;
	std::size_t max_mult_;
	const std::map<std::string, std::size_t>& min_counts_;
	const std::function<bool(const TypedGraph&)>& visit_;
	std::vector<std::string> sequence_;
};

std::size_t max_parallel(const TypedGraph& g)
{
	std::map<Edge, std::size_t> counts;
	std::size_t best = 0;
	for (const auto& [id, e] : g.edges())
		best = std::max(best, ++counts[e]);
	return best;
}

bool same_up_to_iso_over(const TypedGraph& lhs, const std::vector<Nac>& a, const std::vector<Nac>& b)
{
	auto covered = [&](const std::vector<Nac>& xs, const std::vector<Nac>& ys) {
		for (const auto& x : xs) {
			bool found = std::any_of(ys.begin(), ys.end(), [&](const Nac& y) {
				if (x.forbidden.node_count() != y.forbidden.node_count() || x.forbidden.edge_count() != y.forbidden.edge_count())
					return false;
				return has_injective_extension(x.forbidden, y.forbidden, identity(lhs));
			});
			if (!found)
				return false;
		}
		return true;
	};
	return covered(a, b) && covered(b, a);
}

} // namespace

void enumerate_hosts(const TypeGraph& types,
                     std::size_t max_nodes,
                     std::size_t max_multiplicity,
                     const std::map<std::string, std::size_t>& min_type_counts,
                     const std::function<bool(const TypedGraph&)>& visit)
{
	HostEnumerator(types, max_nodes, max_multiplicity, min_type_counts, visit).run();
}

bool nacs_equivalent(const TypedGraph& lhs, const std::vector<Nac>& a, const std::vector<Nac>& b, const EquivalenceOptions& opts)
{
	if (a == b || same_up_to_iso_over(lhs, a, b))
		return true;

	std::vector<const TypedGraph*> graphs{&lhs};
	std::size_t mult = std::max<std::size_t>(1, max_parallel(lhs));
	for (const auto* set : {&a, &b})
		for (const auto& nac : *set) {
			graphs.push_back(&nac.forbidden);
			mult = std::max(mult, max_parallel(nac.forbidden));
		}
	TypeGraph types = infer_type_graph(graphs);
	std::map<std::string, std::size_t> min_counts;
	for (const auto& [id, t] : lhs.nodes())
		++min_counts[t];

	bool equivalent = true;
	enumerate_hosts(types, opts.max_host_nodes, mult, min_counts, [&](const TypedGraph& host) {
		for_each_injective_extension(lhs, host, {}, [&](const Morphism& m) {
			if (satisfies_nacs(m, a, host) != satisfies_nacs(m, b, host))
				equivalent = false;
			return equivalent;
		});
		return equivalent;
	});
	return equivalent;
}

bool check_subrule_embedding(const SubruleEmbedding& e, const EquivalenceOptions& opts)
{
	if (!check_morphism(e.iota_l, e.sub.lhs, e.sup.lhs, true).empty()
	    || !check_morphism(e.iota_k, e.sub.interface, e.sup.interface, true).empty()
	    || !check_morphism(e.iota_r, e.sub.rhs, e.sup.rhs, true).empty())
		return false;

	Morphism sub_le = inclusion(e.sub.interface);
	Morphism sup_le = inclusion(e.sup.interface);
	if (!is_pullback_square(sub_le, e.iota_k, e.iota_l, sup_le))
		return false;
	if (!is_pullback_square(sub_le, e.iota_k, e.iota_r, sup_le))
		return false;
	return nacs_equivalent(e.sup.lhs, e.sup.nacs, shift_nacs(e.iota_l, e.sup.lhs, e.sub.nacs), opts);
}

// ---------------------------------------------------------------------------
// Rule application

TransformationRecord apply_rule(const Rule& r, const TypedGraph& host, const Morphism& match)
{
	if (Diagnostics ds = check_morphism(match, r.lhs, host, true); !ds.empty())
		throw NotInjective("match is not an injective morphism: " + to_string(ds));
	if (!satisfies_nacs(match, r.nacs, host))
		throw NacViolated("match violates a negative application condition of " + r.name);

	PushoutComplementResult pc = pushout_complement(r.lhs, inclusion(r.interface), match, host);
	PushoutResult po = pushout(pc.context, r.rhs, pc.interface_map, inclusion(r.interface), FreshNaming::AlwaysSuffix);

	TransformationRecord rec;
	rec.input = host;
	rec.output = std::move(po.object);
	rec.output.set_type_graph(host.type_graph());
	rec.context = std::move(pc.context);
	rec.rule = r;
	rec.match = match;
	rec.comatch = std::move(po.from_second);
	rec.interface_to_context = std::move(pc.interface_map);
	rec.context_to_input = std::move(pc.into_host);
	rec.context_to_output = std::move(po.from_first);
	return rec;
}

Rule inverse(const Rule& r)
{
	return Rule{r.name + "^-1", r.rhs, r.interface, r.lhs, {}};
}

} // namespace eogt
