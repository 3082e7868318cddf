#include "eogt/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace eogt::io {

using nlohmann::json;

namespace {

std::size_t line_of(const std::string& text, std::size_t byte)
{
	byte = std::min(byte, text.size());
	return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

json parse(const std::string& text)
{
	try {
		return json::parse(text);
	} catch (const json::parse_error& e) {
		throw ParseError(e.what(), line_of(text, e.byte));
	}
}

std::string dump(const json& j)
{
	return j.dump(2) + "\n";
}

// Runs a decoder body, turning library type errors into ParseError.
template<class F>
auto guarded(const std::string& what, F&& f) -> decltype(f())
{
	try {
		return f();
	} catch (const json::exception& e) {
		throw ParseError(what + ": " + e.what());
	} catch (const std::invalid_argument& e) {
		throw ParseError(what + ": " + e.what());
	}
}

const json& field(const json& obj, const std::string& key, const std::string& where)
{
	if (!obj.is_object())
		throw ParseError(where + ": expected an object", 0, where);
	auto it = obj.find(key);
	if (it == obj.end())
		throw ParseError(where + ": missing field '" + key + "'", 0, where);
	return *it;
}

std::string text_field(const json& obj, const std::string& key, const std::string& where)
{
	const json& v = field(obj, key, where);
	if (!v.is_string())
		throw ParseError(where + ": field '" + key + "' must be a string", 0, where);
	return v.get<std::string>();
}

const json& array_field(const json& obj, const std::string& key, const std::string& where)
{
	const json& v = field(obj, key, where);
	if (!v.is_array())
		throw ParseError(where + ": field '" + key + "' must be an array", 0, where);
	return v;
}

void expect_kind(const json& j, const std::string& kind)
{
	std::string got = text_field(j, "kind", "document");
	if (got != kind)
		throw ParseError("expected a '" + kind + "' document, got '" + got + "'", 0, "kind");
}

json node_json(const Id& id, const std::string& type)
{
	return json{{"id", id}, {"type", type}};
}

json edge_json(const Id& id, const Edge& e)
{
	return json{{"id", id}, {"source", e.source}, {"target", e.target}, {"type", e.type}};
}

struct RawNode
{
	Id id;
	std::string type;
	std::string action;
};

struct RawEdge
{
	Id id;
	Edge edge;
	std::string action;
};

RawNode read_node(const json& j, bool tagged)
{
	std::string where = "node " + (j.is_object() && j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>() : std::string("?"));
	return {text_field(j, "id", where), text_field(j, "type", where), tagged ? text_field(j, "action", where) : std::string()};
}

RawEdge read_edge(const json& j, bool tagged)
{
	std::string where = "edge " + (j.is_object() && j.contains("id") && j["id"].is_string() ? j["id"].get<std::string>() : std::string("?"));
	return {text_field(j, "id", where),
	        Edge{text_field(j, "type", where), text_field(j, "source", where), text_field(j, "target", where)},
	        tagged ? text_field(j, "action", where) : std::string()};
}

void add_node_checked(TypedGraph& g, const Id& id, const std::string& type)
{
	if (g.has_element(id))
		throw ParseError("duplicate id '" + id + "'", 0, id);
	g.add_node(id, type);
}

void add_edge_checked(TypedGraph& g, const Id& id, const Edge& e)
{
	if (g.has_element(id))
		throw ParseError("duplicate id '" + id + "'", 0, id);
	g.add_edge(id, e.type, e.source, e.target);
}

void check_against(const TypedGraph& g, const TypeGraph* tg, const std::string& what)
{
	if (!tg)
		return;
	if (Diagnostics ds = validate_graph(g, *tg); !ds.empty())
		throw ValidationError("invalid " + what, ds);
}

// ---------------------------------------------------------------------------
// Rules

const std::set<std::string> plain_actions{"preserve", "delete", "create"};
const std::set<std::string> effect_actions{"preserve", "delete", "create", "delete_potential", "create_potential"};

struct Sides
{
	std::string name;
	std::string type_graph;
	TypedGraph k, lb, rb, lg, rg;
	std::vector<Nac> nacs;
};

Sides read_rule_document(const json& j, const std::set<std::string>& actions)
{
	expect_kind(j, "rule");
	Sides s;
	s.name = text_field(j, "name", "rule");
	s.type_graph = text_field(j, "type_graph", "rule");
	for (TypedGraph* g : {&s.k, &s.lb, &s.rb, &s.lg, &s.rg})
		g->set_type_graph(s.type_graph);

	std::map<Id, std::string> node_action;
	for (const auto& jn : array_field(j, "nodes", "rule")) {
		RawNode n = read_node(jn, true);
		if (!actions.count(n.action))
			throw ParseError("unknown action '" + n.action + "' on node " + n.id, 0, n.id);
		if (node_action.count(n.id))
			throw ParseError("duplicate id '" + n.id + "'", 0, n.id);
		node_action[n.id] = n.action;
		const std::string& a = n.action;
		if (a == "preserve")
			for (TypedGraph* g : {&s.k, &s.lb, &s.rb, &s.lg, &s.rg})
				g->add_node(n.id, n.type);
		if (a == "delete")
			for (TypedGraph* g : {&s.lb, &s.lg})
				g->add_node(n.id, n.type);
		if (a == "create")
			for (TypedGraph* g : {&s.rb, &s.rg})
				g->add_node(n.id, n.type);
		if (a == "delete_potential")
			s.lg.add_node(n.id, n.type);
		if (a == "create_potential")
			s.rg.add_node(n.id, n.type);
	}

	static const std::map<std::string, std::set<std::string>> endpoint_ok{
		{"preserve", {"preserve"}},
		{"delete", {"preserve", "delete"}},
		{"create", {"preserve", "create"}},
		{"delete_potential", {"preserve", "delete_potential"}},
		{"create_potential", {"preserve", "create_potential"}},
	};
	for (const auto& je : array_field(j, "edges", "rule")) {
		RawEdge e = read_edge(je, true);
		if (!actions.count(e.action))
			throw ParseError("unknown action '" + e.action + "' on edge " + e.id, 0, e.id);
		if (node_action.count(e.id) || s.lg.has_edge(e.id) || s.rg.has_edge(e.id))
			throw ParseError("duplicate id '" + e.id + "'", 0, e.id);
		for (const Id& end : {e.edge.source, e.edge.target}) {
			auto it = node_action.find(end);
			if (it == node_action.end())
				throw ParseError("edge " + e.id + " has unknown endpoint '" + end + "'", 0, e.id);
			if (!endpoint_ok.at(e.action).count(it->second))
				throw ParseError("edge " + e.id + " (" + e.action + ") has endpoint '" + end + "' tagged " + it->second, 0, e.id);
		}
		const std::string& a = e.action;
		std::vector<TypedGraph*> into;
		if (a == "preserve") into = {&s.k, &s.lb, &s.rb, &s.lg, &s.rg};
		if (a == "delete") into = {&s.lb, &s.lg};
		if (a == "create") into = {&s.rb, &s.rg};
		if (a == "delete_potential") into = {&s.lg};
		if (a == "create_potential") into = {&s.rg};
		for (TypedGraph* g : into)
			g->add_edge(e.id, e.edge.type, e.edge.source, e.edge.target);
	}

	for (const auto& jn : array_field(j, "nacs", "rule")) {
		Nac nac;
		nac.name = text_field(jn, "name", "nac");
		nac.forbidden = s.lb;
		std::string where = "nac " + nac.name;
		for (const auto& x : array_field(jn, "nodes", where)) {
			RawNode n = read_node(x, false);
			add_node_checked(nac.forbidden, n.id, n.type);
		}
		for (const auto& x : array_field(jn, "edges", where)) {
			RawEdge e = read_edge(x, false);
			for (const Id& end : {e.edge.source, e.edge.target})
				if (!nac.forbidden.has_node(end))
					throw ParseError(where + ": edge " + e.id + " has unknown endpoint '" + end + "'", 0, e.id);
			add_edge_checked(nac.forbidden, e.id, e.edge);
		}
		s.nacs.push_back(std::move(nac));
	}
	return s;
}

std::string action_of(const Id& id, const TypedGraph& k, const TypedGraph& lb, const TypedGraph& rb, const TypedGraph& lg)
{
	if (k.has_element(id)) return "preserve";
	if (lb.has_element(id)) return "delete";
	if (rb.has_element(id)) return "create";
	if (lg.has_element(id)) return "delete_potential";
	return "create_potential";
}

json rule_json(const std::string& name,
               const TypedGraph& k,
               const TypedGraph& lb,
               const TypedGraph& rb,
               const TypedGraph& lg,
               const TypedGraph& rg,
               const std::vector<Nac>& nacs)
{
	std::map<Id, std::string> nodes;
	std::map<Id, Edge> edges;
	for (const TypedGraph* g : {&lg, &rg}) {
		nodes.insert(g->nodes().begin(), g->nodes().end());
		edges.insert(g->edges().begin(), g->edges().end());
	}
	json jn = json::array();
	for (const auto& [id, t] : nodes) {
		json n = node_json(id, t);
		n["action"] = action_of(id, k, lb, rb, lg);
		jn.push_back(std::move(n));
	}
	json je = json::array();
	for (const auto& [id, e] : edges) {
		json x = edge_json(id, e);
		x["action"] = action_of(id, k, lb, rb, lg);
		je.push_back(std::move(x));
	}
	json jnacs = json::array();
	for (const auto& nac : nacs) {
		json extra_nodes = json::array();
		json extra_edges = json::array();
		for (const auto& [id, t] : nac.forbidden.nodes())
			if (!lb.has_node(id))
				extra_nodes.push_back(node_json(id, t));
		for (const auto& [id, e] : nac.forbidden.edges())
			if (!lb.has_edge(id))
				extra_edges.push_back(edge_json(id, e));
		jnacs.push_back(json{{"name", nac.name}, {"nodes", extra_nodes}, {"edges", extra_edges}});
	}
	return json{{"kind", "rule"},
	            {"name", name},
	            {"type_graph", lb.type_graph()},
	            {"nodes", jn},
	            {"edges", je},
	            {"nacs", jnacs}};
}

json morphism_json(const Morphism& m)
{
	return json{{"nodes", m.nodes}, {"edges", m.edges}};
}

Morphism read_morphism(const json& j, const std::string& where)
{
	Morphism m;
	const json& n = field(j, "nodes", where);
	const json& e = field(j, "edges", where);
	if (!n.is_object() || !e.is_object())
		throw ParseError(where + ": 'nodes' and 'edges' must be objects", 0, where);
	m.nodes = n.get<std::map<Id, Id>>();
	m.edges = e.get<std::map<Id, Id>>();
	return m;
}

json element_set_json(const ElementSet& s)
{
	return json{{"nodes", s.nodes}, {"edges", s.edges}};
}

ElementSet read_element_set(const json& j, const std::string& where)
{
	ElementSet s;
	for (const auto& x : array_field(j, "nodes", where))
		s.nodes.insert(x.get<std::string>());
	for (const auto& x : array_field(j, "edges", where))
		s.edges.insert(x.get<std::string>());
	return s;
}

} // namespace

// ---------------------------------------------------------------------------

std::string encode_type_graph(const TypeGraph& tg)
{
	json et = json::array();
	for (const auto& [name, e] : tg.edge_types())
		et.push_back(json{{"name", name}, {"source", e.source}, {"target", e.target}});
	return dump(json{{"kind", "type_graph"}, {"name", tg.name()}, {"node_types", tg.node_types()}, {"edge_types", et}});
}

TypeGraph decode_type_graph(const std::string& text)
{
	json j = parse(text);
	TypeGraph tg = guarded("type graph", [&] {
		expect_kind(j, "type_graph");
		TypeGraph out(text_field(j, "name", "type graph"));
		for (const auto& t : array_field(j, "node_types", "type graph")) {
			if (!t.is_string())
				throw ParseError("type graph: node types must be strings");
			out.add_node_type(t.get<std::string>());
		}
		for (const auto& e : array_field(j, "edge_types", "type graph"))
			out.add_edge_type(text_field(e, "name", "edge type"), text_field(e, "source", "edge type"), text_field(e, "target", "edge type"));
		return out;
	});
	if (Diagnostics ds = validate_type_graph(tg); !ds.empty())
		throw ValidationError("invalid type graph " + tg.name(), ds);
	return tg;
}

std::string encode_graph(const TypedGraph& g)
{
	json jn = json::array();
	for (const auto& [id, t] : g.nodes())
		jn.push_back(node_json(id, t));
	json je = json::array();
	for (const auto& [id, e] : g.edges())
		je.push_back(edge_json(id, e));
	return dump(json{{"kind", "graph"}, {"type_graph", g.type_graph()}, {"nodes", jn}, {"edges", je}});
}

TypedGraph decode_graph(const std::string& text, const TypeGraph* tg)
{
	json j = parse(text);
	TypedGraph g = guarded("graph", [&] {
		expect_kind(j, "graph");
		TypedGraph out(text_field(j, "type_graph", "graph"));
		for (const auto& x : array_field(j, "nodes", "graph")) {
			RawNode n = read_node(x, false);
			add_node_checked(out, n.id, n.type);
		}
		for (const auto& x : array_field(j, "edges", "graph")) {
			RawEdge e = read_edge(x, false);
			add_edge_checked(out, e.id, e.edge);
		}
		return out;
	});
	if (Diagnostics ds = tg ? validate_graph(g, *tg) : validate_graph_structure(g); !ds.empty())
		throw ValidationError("invalid graph", ds);
	return g;
}

std::string encode_rule(const Rule& r)
{
	return dump(rule_json(r.name, r.interface, r.lhs, r.rhs, r.lhs, r.rhs, r.nacs));
}

Rule decode_rule(const std::string& text, const TypeGraph* tg)
{
	json j = parse(text);
	Sides s = guarded("rule", [&] { return read_rule_document(j, plain_actions); });
	Rule r{s.name, std::move(s.lb), std::move(s.k), std::move(s.rb), std::move(s.nacs)};
	for (auto& nac : r.nacs)
		nac.forbidden.set_type_graph(s.type_graph);
	if (Diagnostics ds = validate_rule(r, tg); !ds.empty())
		throw ValidationError("invalid rule " + r.name, ds);
	return r;
}

std::string encode_effect_rule(const EffectOrientedRule& eor)
{
	return dump(rule_json(eor.name, eor.base.interface, eor.base.lhs, eor.base.rhs, eor.maximal.lhs, eor.maximal.rhs, eor.base.nacs));
}

EffectOrientedRule decode_effect_rule(const std::string& text, const TypeGraph* tg)
{
	json j = parse(text);
	Sides s = guarded("rule", [&] { return read_rule_document(j, effect_actions); });
	for (auto& nac : s.nacs)
		nac.forbidden.set_type_graph(s.type_graph);
	Rule base{"", std::move(s.lb), std::move(s.k), std::move(s.rb), std::move(s.nacs)};
	if (tg)
		for (const TypedGraph* g : {&base.lhs, &base.rhs, &s.lg, &s.rg})
			check_against(*g, tg, "rule " + s.name);
	return make_effect_rule(s.name, std::move(base), std::move(s.lg), std::move(s.rg));
}

std::string type_graph_reference(const std::string& text)
{
	json j = parse(text);
	return guarded("document", [&] { return text_field(j, "type_graph", "document"); });
}

std::string document_kind(const std::string& text)
{
	json j = parse(text);
	return guarded("document", [&] { return text_field(j, "kind", "document"); });
}

std::string encode_match(const Morphism& m)
{
	json j = morphism_json(m);
	j["kind"] = "match";
	return dump(j);
}

Morphism decode_match(const std::string& text)
{
	json j = parse(text);
	return guarded("match", [&] {
		expect_kind(j, "match");
		return read_morphism(j, "match");
	});
}

Trace trace_of(const EffectTransformation& t)
{
	return Trace{t.eor.name, t.strategy, t.base_prematch.morphism, t.selection, t.result.match, t.result.comatch};
}

std::string encode_trace(const Trace& t)
{
	return dump(json{{"kind", "trace"},
	                 {"rule", t.rule},
	                 {"strategy", to_string(t.strategy)},
	                 {"base_match", morphism_json(t.base_match)},
	                 {"selection", json{{"delete", element_set_json(t.selection.del_extra)}, {"preserve", element_set_json(t.selection.preserve_extra)}}},
	                 {"match", morphism_json(t.match)},
	                 {"comatch", morphism_json(t.comatch)}});
}

Trace decode_trace(const std::string& text)
{
	json j = parse(text);
	return guarded("trace", [&] {
		expect_kind(j, "trace");
		Trace t;
		t.rule = text_field(j, "rule", "trace");
		t.strategy = parse_strategy(text_field(j, "strategy", "trace"));
		t.base_match = read_morphism(field(j, "base_match", "trace"), "base_match");
		const json& sel = field(j, "selection", "trace");
		t.selection.del_extra = read_element_set(field(sel, "delete", "selection"), "selection.delete");
		t.selection.preserve_extra = read_element_set(field(sel, "preserve", "selection"), "selection.preserve");
		t.match = read_morphism(field(j, "match", "trace"), "match");
		t.comatch = read_morphism(field(j, "comatch", "trace"), "comatch");
		return t;
	});
}

std::string encode_audit(const AuditReport& r)
{
	json entries = json::array();
	for (const auto& e : r.entries)
		entries.push_back(json{{"element", e.element},
		                       {"side", e.potential_deletion ? "deletion" : "creation"},
		                       {"clause", to_string(e.clause)},
		                       {"embeddings", e.embeddings}});
	return dump(json{{"kind", "audit"}, {"passed", r.passed()}, {"entries", entries}});
}

std::string read_file(const std::filesystem::path& p)
{
	std::ifstream in(p, std::ios::binary);
	if (!in)
		throw Error("cannot read " + p.string());
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_file(const std::filesystem::path& p, const std::string& text)
{
	std::ofstream out(p, std::ios::binary);
	if (!out || !(out << text))
		throw Error("cannot write " + p.string());
}

} // namespace eogt::io
