#include "happy/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include "happy/errors.hpp"

namespace happy {

namespace {

std::vector<std::string_view> split_fields(std::string_view line, int line_no) {
	std::vector<std::string_view> out;
	size_t start = 0;
	while (true) {
		size_t end = line.find(' ', start);
		std::string_view field = line.substr(start, end == std::string_view::npos ? end : end - start);
		if (field.empty())
			throw ParseError(line_no, "fields must be separated by single spaces");
		out.push_back(field);
		if (end == std::string_view::npos)
			return out;
		start = end + 1;
	}
}

std::int64_t to_int(std::string_view s, int line_no) {
	std::int64_t value = 0;
	auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
	if (ec != std::errc() || ptr != s.data() + s.size())
		throw ParseError(line_no, "expected an integer, got '" + std::string(s) + "'");
	return value;
}

template <typename Fn>
void for_each_line(const std::string &text, Fn &&fn) {
	int line_no = 0;
	size_t pos = 0;
	while (pos < text.size()) {
		size_t end = text.find('\n', pos);
		std::string_view line(text.data() + pos, (end == std::string::npos ? text.size() : end) - pos);
		++line_no;
		if (!line.empty() && line.back() == '\r')
			throw ParseError(line_no, "CR line endings are not accepted");
		if (!line.empty() && line[0] != '#')
			fn(line, line_no);
		if (end == std::string::npos)
			break;
		pos = end + 1;
	}
}

} // namespace

Instance parse_instance(const std::string &text) {
	bool have_header = false, have_objective = false;
	int n = 0, m = 0, ell = 1;
	std::vector<Edge> edges;
	std::set<Edge> seen_edges;
	std::vector<Color> colors;
	Instance inst;
	int last_line = 0;

	for_each_line(text, [&](std::string_view line, int line_no) {
		last_line = line_no;
		auto f = split_fields(line, line_no);
		auto arity = [&](size_t want) {
			if (f.size() != want)
				throw ParseError(line_no, "'" + std::string(f[0]) + "' line expects " +
				                              std::to_string(want - 1) + " fields");
		};
		if (f[0] == "p") {
			if (have_header)
				throw ParseError(line_no, "duplicate header");
			arity(5);
			if (f[1] != "happy")
				throw ParseError(line_no, "header must start with 'p happy'");
			std::int64_t nn = to_int(f[2], line_no), mm = to_int(f[3], line_no), ll = to_int(f[4], line_no);
			if (nn < 0 || mm < 0 || ll < 1 || nn > 100'000'000 || ll > 1'000'000)
				throw ParseError(line_no, "header counts out of range");
			if (mm > nn * (nn - 1) / 2)
				throw ParseError(line_no, "more edges than a simple graph allows");
			n = static_cast<int>(nn);
			m = static_cast<int>(mm);
			ell = static_cast<int>(ll);
			colors.assign(static_cast<size_t>(n), kUncolored);
			have_header = true;
			return;
		}
		if (!have_header)
			throw ParseError(line_no, "record before 'p happy' header");
		if (f[0] == "e") {
			arity(3);
			std::int64_t u = to_int(f[1], line_no), v = to_int(f[2], line_no);
			if (u < 1 || v > n || u >= v)
				throw ParseError(line_no, "edge must satisfy 1 <= u < v <= n");
			Edge e{static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)};
			if (!seen_edges.insert(e).second)
				throw ParseError(line_no, "duplicate edge");
			if (static_cast<int>(edges.size()) == m)
				throw ParseError(line_no, "more edge lines than the header declares");
			edges.push_back(e);
		} else if (f[0] == "c") {
			arity(3);
			std::int64_t v = to_int(f[1], line_no), c = to_int(f[2], line_no);
			if (v < 1 || v > n)
				throw ParseError(line_no, "vertex out of range");
			if (c < 1 || c > ell)
				throw ParseError(line_no, "color " + std::to_string(c) + " out of range 1.." + std::to_string(ell));
			if (colors[v - 1] != kUncolored)
				throw ParseError(line_no, "vertex precolored twice");
			colors[v - 1] = static_cast<Color>(c);
		} else if (f[0] == "o") {
			arity(2);
			if (have_objective)
				throw ParseError(line_no, "duplicate objective");
			if (f[1] != "vertices" && f[1] != "edges")
				throw ParseError(line_no, "objective must be 'vertices' or 'edges'");
			inst.objective = objective_from_string(std::string(f[1]));
			have_objective = true;
		} else if (f[0] == "k") {
			arity(2);
			if (inst.threshold)
				throw ParseError(line_no, "duplicate threshold");
			std::int64_t k = to_int(f[1], line_no);
			if (k < 0)
				throw ParseError(line_no, "threshold must be nonnegative");
			inst.threshold = k;
		} else {
			throw ParseError(line_no, "unknown record type '" + std::string(f[0]) + "'");
		}
	});
	if (!have_header)
		throw ParseError(last_line, "missing 'p happy' header");
	if (static_cast<int>(edges.size()) != m)
		throw ParseError(last_line, "header declares " + std::to_string(m) + " edges, found " +
		                                std::to_string(edges.size()));
	inst.graph = Graph::from_edges(n, edges);
	inst.precoloring = PartialColoring(std::move(colors), ell);
	try {
		inst.validate();
	} catch (const InputError &e) {
		throw ParseError(last_line, e.what());
	}
	return inst;
}

std::string write_instance(const Instance &inst) {
	std::ostringstream out;
	out << "p happy " << inst.n() << ' ' << inst.m() << ' ' << inst.ell() << '\n';
	for (const Edge &e : inst.graph.edges())
		out << "e " << (e.u + 1) << ' ' << (e.v + 1) << '\n';
	for (Vertex v : inst.precoloring.precolored())
		out << "c " << (v + 1) << ' ' << inst.precoloring.color(v) << '\n';
	out << "o " << to_string(inst.objective) << '\n';
	if (inst.threshold)
		out << "k " << *inst.threshold << '\n';
	return out.str();
}

FullColoring parse_coloring(const std::string &text, int n) {
	FullColoring c(static_cast<size_t>(n), kUncolored);
	int last_line = 0;
	for_each_line(text, [&](std::string_view line, int line_no) {
		last_line = line_no;
		auto f = split_fields(line, line_no);
		if (f[0] != "v" || f.size() != 3)
			throw ParseError(line_no, "expected 'v <vertex> <color>'");
		std::int64_t v = to_int(f[1], line_no), col = to_int(f[2], line_no);
		if (v < 1 || v > n)
			throw ParseError(line_no, "vertex out of range");
		if (col < 1)
			throw ParseError(line_no, "color must be positive");
		if (c[v - 1] != kUncolored)
			throw ParseError(line_no, "vertex colored twice");
		c[v - 1] = static_cast<Color>(col);
	});
	for (int v = 0; v < n; ++v)
		if (c[v] == kUncolored)
			throw ParseError(last_line, "vertex " + std::to_string(v + 1) + " has no color");
	return c;
}

std::string write_coloring(const FullColoring &c) {
	std::ostringstream out;
	for (size_t v = 0; v < c.size(); ++v)
		out << "v " << (v + 1) << ' ' << c[v] << '\n';
	return out.str();
}

std::string read_file(const std::string &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw InputError("cannot open '" + path + "'");
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_file(const std::string &path, const std::string &contents) {
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw InputError("cannot write '" + path + "'");
	out << contents;
}

} // namespace happy
