#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcyl/dac.hpp"
#include "gcyl/gray.hpp"
#include "gcyl/nu.hpp"
#include "gcyl/pr.hpp"
#include "gcyl/span.hpp"
#include "gcyl/theta.hpp"

using namespace gcyl;
using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string cell = "[0]";
    int max_dim = -1;
    std::size_t ceiling = kDefaultCeiling;
    std::string format = "text";
    std::string out;
    std::string suite = "all";
    std::string kind = "shuffle";
};

int max_dim_for(const Options& o, const Cell& t, int extra = 1) {
    return o.max_dim >= 0 ? o.max_dim : dimension(t) + extra;
}

void write(const Options& o, const std::string& s) {
    if (o.out.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + o.out);
    f << s;
}

std::string counts_line(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

std::string dump_cells(const Options& o, const Complex& k, const CellSet& s) {
    if (o.format == "json") return cells_json(k, s) + "\n";
    if (o.format == "dot") return cells_dot(k, s);
    std::ostringstream os;
    os << "totals: " << counts_line(s.totals()) << "\n";
    os << "nondegenerate: " << counts_line(s.nondegenerate()) << "\n";
    for (int d = 0; d <= s.max_dim(); ++d)
        for (const auto& c : s.by_dim[static_cast<std::size_t>(d)])
            if (!is_degenerate(c)) os << d << " " << format_cell(k, c) << "\n";
    return os.str();
}

int cmd_decompose(const Options& o) {
    Cell t = parse_cell(o.cell);
    GlobularSum g = globular_sum(t);
    if (o.format == "json") {
        json j{{"cell", to_string(t)}, {"sum", to_string(g)}, {"leaf_dims", g.leaf_dims}, {"meet_dims", g.meet_dims}};
        write(o, j.dump(2) + "\n");
    } else {
        write(o, to_string(g) + "\n");
    }
    return 0;
}

int cmd_lambda(const Options& o) {
    write(o, to_json(*lambda(parse_cell(o.cell))) + "\n");
    return 0;
}

int cmd_tensor(const Options& o) {
    write(o, to_json(*cylinder(parse_cell(o.cell)).cx) + "\n");
    return 0;
}

int cmd_nu(const Options& o) {
    Cell t = parse_cell(o.cell);
    CPtr k = lambda(t);
    write(o, dump_cells(o, *k, enumerate_cells(*k, max_dim_for(o, t, 0), o.ceiling)));
    return 0;
}

int cmd_gray(const Options& o) {
    Cell t = parse_cell(o.cell);
    Tensor c = cylinder(t);
    write(o, dump_cells(o, *c.cx, gray_cylinder(t, max_dim_for(o, t), o.ceiling)));
    return 0;
}

int cmd_counts(const Options& o) {
    Cell t = parse_cell(o.cell);
    int md = max_dim_for(o, t);
    CellSet s = gray_cylinder(t, md, o.ceiling);
    auto tot = s.totals();
    auto nd = s.nondegenerate();
    auto pr = pr_counts({t}, md);
    bool ok = true;
    json rows = json::array();
    std::ostringstream os;
    os << "dim nu pr nondegenerate\n";
    for (int d = 0; d <= md; ++d) {
        auto i = static_cast<std::size_t>(d);
        bool eq = static_cast<i64>(tot[i]) == pr[i];
        ok = ok && eq;
        os << d << " " << tot[i] << " " << pr[i] << " " << nd[i] << (eq ? "" : " MISMATCH") << "\n";
        rows.push_back({{"dim", d}, {"nu", tot[i]}, {"pr", pr[i]}, {"nondegenerate", nd[i]}});
    }
    if (o.format == "json")
        write(o, json{{"cell", to_string(t)}, {"rows", rows}, {"equal", ok}}.dump(2) + "\n");
    else
        write(o, os.str());
    return ok ? 0 : 1;
}

struct SuiteResult {
    std::string name;
    bool pass;
    json detail;
};

SuiteResult suite_gray(const Cell& t) {
    GluingReport g = verify_gluing(t);
    EndpointReport e = verify_endpoints(t);
    json d = json::parse(to_json(g));
    d["endpoints"] = {{"disjoint", e.disjoint}, {"injective", e.injective}, {"factor", e.factor}};
    return {"gray", g.pass && e.pass, d};
}

SuiteResult suite_globular(const Cell& t) {
    std::vector<std::string> f;
    bool ok = verify_globular_preservation(t, &f);
    return {"globular", ok, json{{"failures", f}}};
}

SuiteResult suite_hyperface(const Cell& t) {
    bool ok = true;
    json faces = json::array();
    for (const auto& h : hyperfaces(t)) {
        HyperfaceCylinder c = hyperface_cylinder(h.map);
        ok = ok && c.agree;
        faces.push_back({{"kind", to_string(h.kind)}, {"position", h.position}, {"variant", h.variant}, {"face", to_string(h.map)}, {"agree", c.agree}});
    }
    return {"hyperface", ok, faces};
}

SuiteResult suite_span(const Cell& t, int md) {
    SpanReport r = verify_span(t, md);
    return {"span", r.pass, json::parse(to_json(r))};
}

int cmd_verify(const Options& o) {
    Cell t = parse_cell(o.cell);
    std::vector<SuiteResult> rs;
    const std::string& s = o.suite;
    if (s == "gray" || s == "all") rs.push_back(suite_gray(t));
    if (s == "globular" || s == "all") rs.push_back(suite_globular(t));
    if (s == "hyperface" || s == "all") rs.push_back(suite_hyperface(t));
    if (s == "span" || s == "all") rs.push_back(suite_span(t, max_dim_for(o, t)));
    bool ok = true;
    for (const auto& r : rs) ok = ok && r.pass;
    if (o.format == "json") {
        json j{{"cell", to_string(t)}, {"pass", ok}};
        for (const auto& r : rs) j[r.name] = {{"pass", r.pass}, {"detail", r.detail}};
        write(o, j.dump(2) + "\n");
    } else {
        std::string out;
        for (const auto& r : rs) out += std::string(r.pass ? "PASS " : "FAIL ") + r.name + " " + to_string(t) + "\n";
        write(o, out);
    }
    return ok ? 0 : 1;
}

int cmd_span(const Options& o) {
    Cell t = parse_cell(o.cell);
    SpanReport r = verify_span(t, max_dim_for(o, t));
    if (o.format == "dot")
        write(o, span_dot(t, r));
    else if (o.format == "json")
        write(o, to_json(r) + "\n");
    else {
        std::string out;
        for (const auto& q : r.squares) out += std::string(q.ok ? "ok   " : "FAIL ") + q.name + "\n";
        out += std::string("diamond ") + (r.diamond ? "ok" : "FAIL") + "\n";
        out += std::string(r.pass ? "PASS" : "FAIL") + " span " + to_string(t) + "\n";
        write(o, out);
    }
    return r.pass ? 0 : 1;
}

int cmd_emit(const Options& o) {
    Cell t = parse_cell(o.cell);
    if (o.kind == "shuffle") {
        write(o, shuffle_dot(lax_shuffle_diagram(t)));
    } else if (o.kind == "gray") {
        write(o, cells_dot(*cylinder(t).cx, gray_cylinder(t, max_dim_for(o, t), o.ceiling)));
    } else if (o.kind == "nu") {
        CPtr k = lambda(t);
        write(o, cells_dot(*k, enumerate_cells(*k, max_dim_for(o, t, 0), o.ceiling)));
    } else {
        write(o, span_dot(t, verify_span(t, max_dim_for(o, t))));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gray cylinders over Theta cells"};
    app.require_subcommand(1);
    Options o;
    auto common = [&](CLI::App* c, bool cell = true) {
        if (cell) c->add_option("cell", o.cell, "Theta cell, e.g. [2]([1],[0]) or G<3>")->required();
        c->add_option("--max-dim", o.max_dim, "highest cell dimension")->check(CLI::NonNegativeNumber);
        c->add_option("--ceiling", o.ceiling, "cell budget for enumeration")->check(CLI::PositiveNumber);
        c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "dot"}));
        c->add_option("--out", o.out, "output path");
    };
    std::map<CLI::App*, int (*)(const Options&)> run;
    auto sub = [&](const char* name, const char* help, int (*f)(const Options&)) {
        CLI::App* c = app.add_subcommand(name, help);
        common(c);
        run[c] = f;
        return c;
    };
    sub("decompose", "print the globular sum", cmd_decompose);
    sub("lambda", "dump lambda(T) as JSON", cmd_lambda);
    sub("tensor", "dump lambda([1]) (x) lambda(T) as JSON", cmd_tensor);
    sub("nu", "cells of nu(lambda(T))", cmd_nu);
    sub("gray", "cells of the Gray cylinder", cmd_gray);
    sub("counts", "nu against P.R. cell counts", cmd_counts);
    sub("span", "span verification report", cmd_span);
    CLI::App* emit = sub("emit", "write DOT", cmd_emit);
    emit->add_option("--kind", o.kind, "what to draw")->check(CLI::IsMember({"shuffle", "gray", "nu", "span"}));
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    verify->add_option("suite", o.suite, "gray, globular, hyperface, span or all")
        ->required()
        ->check(CLI::IsMember({"gray", "globular", "hyperface", "span", "all"}));
    common(verify);
    run[verify] = cmd_verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        for (auto* c : app.get_subcommands())
            if (run.count(c)) return run[c](o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
