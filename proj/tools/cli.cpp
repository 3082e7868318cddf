#include "cli.hpp"

#include "eogt/io.hpp"
#include "eogt/semantics.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>

namespace eogt::cli {

namespace fs = std::filesystem;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_invalid = 1;
constexpr int exit_no_match = 2;
constexpr int exit_audit = 3;

struct Options
{
	std::vector<std::string> files;
	std::string types;
	std::string rule;
	std::string graph;
	std::string strategy = "locally-complete";
	std::string base_match;
	std::string out;
	std::string trace;
	std::string report;
	std::string filter = "none";
	bool all = false;
	bool count_only = false;
};

// Type graph of a document: --types if given, else <dir>/<name>.types.json.
TypeGraph load_types(const Options& o, const fs::path& doc, const std::string& text)
{
	if (!o.types.empty())
		return io::decode_type_graph(io::read_file(o.types));
	std::string name = io::type_graph_reference(text);
	fs::path p = doc.parent_path() / (name + ".types.json");
	if (!fs::exists(p))
		throw Error("type graph '" + name + "' not found (looked for " + p.string() + "; pass --types)");
	return io::decode_type_graph(io::read_file(p));
}

struct Loaded
{
	TypeGraph types;
	EffectOrientedRule eor;
	TypedGraph graph;
};

Loaded load_rule_and_graph(const Options& o, bool need_graph)
{
	Loaded l;
	std::string rule_text = io::read_file(o.rule);
	l.types = load_types(o, o.rule, rule_text);
	l.eor = io::decode_effect_rule(rule_text, &l.types);
	if (need_graph) {
		std::string graph_text = io::read_file(o.graph);
		if (io::type_graph_reference(graph_text) != l.types.name())
			throw Error("graph and rule refer to different type graphs");
		l.graph = io::decode_graph(graph_text, &l.types);
	}
	return l;
}

std::string join(const std::set<Id>& ids)
{
	std::string s;
	for (const auto& id : ids)
		s += (s.empty() ? "" : ", ") + id;
	return s.empty() ? "(none)" : s;
}

void print_assignment(std::ostream& out, const std::string& title, const std::map<Id, Id>& m)
{
	out << title << ":\n";
	for (const auto& [from, to] : m)
		out << "  " << from << " -> " << to << "\n";
}

void print_result(std::ostream& out, const MatchResult& r)
{
	std::string base;
	for (const auto& [from, to] : r.base_prematch.morphism.nodes)
		base += (base.empty() ? "" : ", ") + from + " -> " + to;
	out << "base match: " << (base.empty() ? "(empty)" : base) << "\n";
	out << "selection: " << describe(r.induced.selection) << "\n";
	out << "size: " << r.induced.size << "\n";
	print_assignment(out, "nodes", r.match.nodes);
	print_assignment(out, "edges", r.match.edges);
}

std::vector<PreMatch> prematches_for(const Options& o, const Loaded& l)
{
	if (o.base_match.empty())
		return find_base_prematches(l.eor, l.graph);
	return {make_prematch(l.eor, l.graph, io::decode_match(io::read_file(o.base_match)))};
}

// Results under the strategy. Without --all only the first is kept; without
// --base-match the local strategies take the first pre-match that yields one.
std::vector<MatchResult> find_results(const Options& o, const Loaded& l)
{
	Strategy s = parse_strategy(o.strategy);
	if (s == Strategy::GloballyMaximal) {
		if (!o.base_match.empty())
			throw StrategyArgumentMismatch("globally-maximal takes no --base-match");
		auto all = find_globally_maximal(l.eor, l.graph);
		if (!o.all && all.size() > 1)
			all.resize(1);
		return all;
	}
	std::vector<MatchResult> out;
	for (const auto& pm : prematches_for(o, l)) {
		if (!pm.nac_ok)
			throw InvalidPreMatch("base match violates a NAC of the base rule");
		std::vector<MatchResult> found;
		if (s == Strategy::LocallyComplete && !o.all) {
			if (auto r = find_locally_complete(l.eor, l.graph, pm))
				found.push_back(std::move(*r));
		} else if (s == Strategy::LocallyComplete) {
			found = oracle_locally_complete(l.eor, l.graph, pm);
		} else {
			found = find_locally_maximal(l.eor, l.graph, pm);
		}
		for (auto& r : found)
			out.push_back(std::move(r));
		if (!o.all && !out.empty()) {
			out.resize(1);
			break;
		}
	}
	std::sort(out.begin(), out.end(), canonical_less);
	return out;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err)
{
	bool clean = true;
	for (const auto& f : o.files) {
		try {
			std::string text = io::read_file(f);
			std::string kind = io::document_kind(text);
			if (kind == "type_graph") {
				io::decode_type_graph(text);
			} else if (kind == "graph") {
				TypeGraph tg = load_types(o, f, text);
				io::decode_graph(text, &tg);
			} else if (kind == "rule") {
				TypeGraph tg = load_types(o, f, text);
				io::decode_effect_rule(text, &tg);
			} else if (kind == "match") {
				io::decode_match(text);
			} else if (kind == "trace") {
				io::decode_trace(text);
			} else {
				throw ParseError("unknown document kind '" + kind + "'");
			}
			out << f << ": ok\n";
		} catch (const ValidationError& e) {
			clean = false;
			err << f << ": " << e.what() << "\n";
			for (const auto& d : e.diagnostics())
				err << "  " << to_string(d) << "\n";
		} catch (const std::exception& e) {
			clean = false;
			err << f << ": " << e.what() << "\n";
		}
	}
	return clean ? exit_ok : exit_invalid;
}

int cmd_match(const Options& o, std::ostream& out, std::ostream& err)
{
	Loaded l = load_rule_and_graph(o, true);
	auto results = find_results(o, l);
	if (results.empty()) {
		err << "no match under strategy " << o.strategy << "\n";
		return exit_no_match;
	}
	for (std::size_t i = 0; i < results.size(); ++i) {
		if (i)
			out << "\n";
		print_result(out, results[i]);
	}
	return exit_ok;
}

int cmd_apply(const Options& o, std::ostream& out, std::ostream& err)
{
	Loaded l = load_rule_and_graph(o, true);
	Options single = o;
	single.all = false;
	auto results = find_results(single, l);
	if (results.empty()) {
		err << "no match under strategy " << o.strategy << "\n";
		return exit_no_match;
	}
	const MatchResult& r = results.front();
	EffectTransformation t = realize(l.eor, l.graph, parse_strategy(o.strategy), r);
	io::write_file(o.out, io::encode_graph(t.result.output));
	if (!o.trace.empty())
		io::write_file(o.trace, io::encode_trace(io::trace_of(t)));

	const Rule& rc = t.result.rule;
	std::set<Id> deleted, created, reused;
	for (const auto& [id, h] : r.match.nodes)
		if (!rc.interface.has_node(id))
			deleted.insert(h);
	for (const auto& [id, h] : r.match.edges)
		if (!rc.interface.has_edge(id))
			deleted.insert(h);
	for (const auto& [id, h] : t.result.comatch.nodes)
		if (!rc.interface.has_node(id))
			created.insert(h);
	for (const auto& [id, h] : t.result.comatch.edges)
		if (!rc.interface.has_edge(id))
			created.insert(h);
	for (const auto* part : {&r.induced.selection.preserve_extra.nodes, &r.induced.selection.preserve_extra.edges})
		for (const auto& id : *part)
			reused.insert(id + "=" + (r.match.nodes.count(id) ? r.match.nodes.at(id) : r.match.edges.at(id)));
	out << "selection: " << describe(r.induced.selection) << "\n";
	out << "deleted: " << join(deleted) << "\n";
	out << "created: " << join(created) << "\n";
	out << "reused: " << join(reused) << "\n";
	return exit_ok;
}

int cmd_induced(const Options& o, std::ostream& out, std::ostream&)
{
	Loaded l = load_rule_and_graph(o, false);
	auto sels = enumerate_selections(l.eor, parse_filter(o.filter));
	if (o.count_only) {
		out << sels.size() << "\n";
		return exit_ok;
	}
	for (std::size_t i = 0; i < sels.size(); ++i)
		out << i << ": " << describe(sels[i]) << " (size " << sels[i].size() << ")\n";
	return exit_ok;
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream&)
{
	Loaded l = load_rule_and_graph(o, false);
	CountBounds b = count_bounds(l.eor);
	out << b.lower << " " << b.upper << "\n";
	return exit_ok;
}

int cmd_audit(const Options& o, std::ostream& out, std::ostream& err)
{
	Loaded l = load_rule_and_graph(o, true);
	TypedGraph recorded = io::decode_graph(io::read_file(o.out), &l.types);
	io::Trace trace = io::decode_trace(io::read_file(o.trace));
	if (trace.rule != l.eor.name)
		throw Error("trace was recorded for rule '" + trace.rule + "', not '" + l.eor.name + "'");

	// The recorded output must be what replaying the trace produces.
	MatchResult mr{build_induced_rule(l.eor, trace.selection), trace.match, make_prematch(l.eor, l.graph, trace.base_match)};
	if (!is_compatible(l.eor, mr.base_prematch, mr))
		throw Error("trace match does not extend its base match");
	EffectTransformation t = realize(l.eor, l.graph, trace.strategy, mr);
	if (t.result.output != recorded || t.result.comatch != trace.comatch) {
		err << "audit: recorded output differs from the replayed transformation\n";
		return exit_audit;
	}

	AuditReport report = audit_effect(t, false);
	for (const auto& e : report.entries)
		out << (e.potential_deletion ? "deletion " : "creation ") << e.element << ": " << to_string(e.clause) << " ("
		    << e.embeddings << " embeddings)\n";
	if (!o.report.empty())
		io::write_file(o.report, io::encode_audit(report));
	out << (report.passed() ? "audit passed" : "audit FAILED") << "\n";
	return report.passed() ? exit_ok : exit_audit;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
	Options o;
	CLI::App app{"Effect-oriented graph transformation"};
	app.require_subcommand(1);

	auto* validate = app.add_subcommand("validate", "Check graph, rule and type graph files");
	validate->add_option("files", o.files, "Files to check")->required();
	validate->add_option("--types", o.types, "Type graph file");

	auto add_rule = [&](CLI::App* c) {
		c->add_option("--rule", o.rule, "Rule file")->required();
		c->add_option("--types", o.types, "Type graph file (default: <dir>/<name>.types.json)");
	};
	auto add_matching = [&](CLI::App* c) {
		add_rule(c);
		c->add_option("--graph", o.graph, "Host graph file")->required();
		c->add_option("--strategy", o.strategy, "locally-complete | locally-maximal | globally-maximal");
		c->add_option("--base-match", o.base_match, "Base match file");
	};

	auto* match = app.add_subcommand("match", "Find matches under a strategy");
	add_matching(match);
	match->add_flag("--all", o.all, "Print every result instead of the first");

	auto* apply = app.add_subcommand("apply", "Apply the rule and write the result graph");
	add_matching(apply);
	apply->add_option("--out", o.out, "Result graph file")->required();
	apply->add_option("--trace", o.trace, "Write a replayable trace");

	auto* induced = app.add_subcommand("induced", "List or count induced rules");
	add_rule(induced);
	induced->add_option("--filter", o.filter, "none | weak-left | weak-right | left | right");
	induced->add_flag("--count-only", o.count_only, "Print only the number of induced rules");

	auto* bounds = app.add_subcommand("bounds", "Print lower and upper bounds on the number of induced rules");
	add_rule(bounds);

	auto* audit = app.add_subcommand("audit", "Check a recorded transformation against the characterisation");
	add_matching(audit);
	audit->add_option("--out", o.out, "Recorded result graph")->required();
	audit->add_option("--trace", o.trace, "Recorded trace")->required();
	audit->add_option("--report", o.report, "Write the audit report");

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		return app.exit(e, out, err) == 0 ? exit_ok : exit_invalid;
	}

	try {
		if (*validate) return cmd_validate(o, out, err);
		if (*match) return cmd_match(o, out, err);
		if (*apply) return cmd_apply(o, out, err);
		if (*induced) return cmd_induced(o, out, err);
		if (*bounds) return cmd_bounds(o, out, err);
		if (*audit) return cmd_audit(o, out, err);
	} catch (const ValidationError& e) {
		err << "error: " << e.what() << "\n";
		for (const auto& d : e.diagnostics())
			err << "  " << to_string(d) << "\n";
		return exit_invalid;
	} catch (const AuditFailure& e) {
		err << "audit: " << e.what() << "\n";
		return exit_audit;
	} catch (const std::exception& e) {
		err << "error: " << e.what() << "\n";
		return exit_invalid;
	}
	return exit_invalid;
}

} // namespace eogt::cli
