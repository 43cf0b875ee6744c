#include "matroid_xf/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "matroid_xf/factorization.hpp"
#include "matroid_xf/hitting.hpp"
#include "matroid_xf/polytope.hpp"
#include "matroid_xf/protocol.hpp"

namespace matroid_xf {

namespace {

using json = nlohmann::json;

std::string kind_prefix(SpecError::Kind kind) {
    switch (kind) {
        case SpecError::Kind::parse: return "parse error: ";
        case SpecError::Kind::validation: return "validation error: ";
        case SpecError::Kind::loop: return "loop detected: ";
    }
    return "";
}

[[noreturn]] void invalid(const std::string& what) { throw SpecError(SpecError::Kind::validation, what); }
[[noreturn]] void loop(const std::string& what) { throw SpecError(SpecError::Kind::loop, what); }

const json& field(const json& spec, const char* name) {
    if (!spec.contains(name)) invalid(std::string("missing field \"") + name + "\"");
    return spec.at(name);
}

int integer_field(const json& spec, const char* name) {
    const json& v = field(spec, name);
    if (!v.is_number_integer()) invalid(std::string("field \"") + name + "\" must be an integer");
    return v.get<int>();
}

std::vector<std::vector<int>> integer_rows(const json& v, const char* name) {
    if (!v.is_array()) invalid(std::string("field \"") + name + "\" must be an array of arrays");
    std::vector<std::vector<int>> rows;
    for (const auto& row : v) {
        if (!row.is_array()) invalid(std::string("field \"") + name + "\" must be an array of arrays");
        std::vector<int> out;
        for (const auto& x : row) {
            if (!x.is_number_integer()) invalid(std::string("field \"") + name + "\" must hold integers");
            out.push_back(x.get<int>());
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

Matroid build(const json& spec) {
    if (!spec.is_object()) invalid("matroid spec must be a JSON object");
    const json& type_field = field(spec, "type");
    if (!type_field.is_string()) invalid("field \"type\" must be a string");
    const std::string type = type_field.get<std::string>();
    try {
        if (type == "uniform") return Matroid::uniform(integer_field(spec, "r"), integer_field(spec, "n"));
        if (type == "graphic") {
            Graph g;
            g.vertices = integer_field(spec, "vertices");
            if (g.vertices < 0) invalid("vertex count must be nonnegative");
            const auto edges = integer_rows(field(spec, "edges"), "edges");
            for (std::size_t i = 0; i < edges.size(); ++i) {
                if (edges[i].size() != 2) invalid("edge " + std::to_string(i) + " must have two endpoints");
                const int u = edges[i][0];
                const int v = edges[i][1];
                if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
                    invalid("edge " + std::to_string(i) + " references a vertex outside 0.." +
                            std::to_string(g.vertices - 1));
                if (u == v) loop("edge " + std::to_string(i) + " joins vertex " + std::to_string(u) + " to itself");
                g.edges.emplace_back(u, v);
            }
            if (g.edges.empty()) invalid("graph has no edges");
            return Matroid::graphic(std::move(g));
        }
        if (type == "binary") {
            const auto rows = integer_rows(field(spec, "matrix"), "matrix");
            if (rows.empty() || rows.front().empty()) invalid("binary matrix is empty");
            for (const auto& row : rows) {
                if (row.size() != rows.front().size()) invalid("binary matrix rows have unequal length");
                for (int x : row)
                    if (x != 0 && x != 1) invalid("binary matrix entries must be 0 or 1");
            }
            for (std::size_t j = 0; j < rows.front().size(); ++j) {
                bool zero = true;
                for (const auto& row : rows) zero = zero && row[j] == 0;
                if (zero) loop("column " + std::to_string(j) + " is zero");
            }
            return Matroid::binary(rows);
        }
        if (type == "bases") {
            const int n = integer_field(spec, "n");
            const auto bases = integer_rows(field(spec, "bases"), "bases");
            if (bases.empty()) invalid("basis list is empty");
            std::set<int> used;
            for (const auto& b : bases) {
                if (b.size() != bases.front().size()) invalid("bases have unequal sizes");
                for (int e : b) {
                    if (e < 0 || e >= n) invalid("basis element " + std::to_string(e) + " outside 0.." + std::to_string(n - 1));
                    used.insert(e);
                }
            }
            for (int e = 0; e < n; ++e)
                if (!used.contains(e)) loop("element " + std::to_string(e) + " lies in no basis");
            return Matroid::from_bases(n, bases);
        }
        if (type == "dual") return dual(build(field(spec, "of")));
        if (type == "direct_sum") {
            const json& parts = field(spec, "parts");
            if (!parts.is_array() || parts.empty()) invalid("field \"parts\" must be a nonempty array");
            Matroid sum = build(parts.front());
            for (std::size_t i = 1; i < parts.size(); ++i) sum = direct_sum(sum, build(parts[i]));
            return sum;
        }
    } catch (const SpecError&) {
        throw;
    } catch (const InvalidInput& e) {
        const std::string what = e.what();
        if (what.find("loop") != std::string::npos) loop(what);
        invalid(what);
    }
    invalid("unknown matroid type \"" + type + "\"");
}

// Resolved --family-mode choice.
struct FamilyChoice {
    std::string mode;
    HittingFamily family;
};

FamilyChoice choose_family(const Matroid& m, const SlackMatrix& slack, const std::string& requested,
                           const EnumerationCaps& caps) {
    if (requested == "stars") {
        if (m.graph() == nullptr || !m.graph()->is_complete() || m.graph()->vertices < 3)
            throw InvalidInput("--family-mode stars needs a complete graph with at least 3 vertices");
        return {"stars", make_hitting_family(slack.rows, star_bases(*m.graph()))};
    }
    if (requested == "greedy") return {"greedy", greedy_hitting_family(slack)};
    if (requested == "exact") return {"exact", minimum_hitting_family(slack, caps)};
    if (slack.cols.size() <= caps.max_cover_columns) return {"exact", minimum_hitting_family(slack, caps)};
    return {"greedy", greedy_hitting_family(slack)};
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidInput("cannot open " + path + " for writing");
    file << contents;
}

std::string braces(Subset s) { return "{" + to_label(s, ',') + "}"; }

// Row for the bench table; h_exact is "-" past the exact-cover cap.
struct BenchRow {
    int n;
    std::size_t flacets;
    std::size_t h_greedy;
    std::string h_exact;
    int num_y;
    int size;
    std::size_t trivial;
};

BenchRow bench_row(int n, const Matroid& m, const Graph* complete, const EnumerationCaps& caps) {
    const auto slack = slack_matrix(m, caps);
    BenchRow row{n, slack.rows.size(), greedy_hitting_family(slack).size(), "-", 0, 0,
                 slack.rows.size() + 2 * static_cast<std::size_t>(m.size())};
    std::optional<HittingFamily> exact;
    if (slack.cols.size() <= caps.max_cover_columns) {
        exact = minimum_hitting_family(slack, caps);
        row.h_exact = std::to_string(exact->size());
    }
    if (complete != nullptr) {
        const auto fac = factorize_star_protocol(*complete, caps);
        row.num_y = build_extended_formulation(m, fac, caps).num_y;
    } else {
        const auto family = exact ? *exact : greedy_hitting_family(slack);
        const auto fac = factorize_from_transcripts(m, family, slack);
        row.num_y = build_extended_formulation(m, fac, caps).num_y;
    }
    row.size = 2 * m.size() + row.num_y;
    return row;
}

}  // namespace

SpecError::SpecError(Kind kind, const std::string& what) : InvalidInput(kind_prefix(kind) + what), kind_(kind) {}

Matroid parse_matroid(const std::string& json_text) {
    json spec;
    try {
        spec = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError(SpecError::Kind::parse, e.what());
    }
    return build(spec);
}

Matroid load_matroid(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw SpecError(SpecError::Kind::parse, "cannot read " + path);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_matroid(buffer.str());
}

int run_command(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Matroid base polytopes, hitting families and protocol-derived extended formulations",
                 argv.empty() ? "matroid-xf" : argv.front()};
    app.require_subcommand(1);

    std::string spec_path;
    std::string family_mode = "auto";
    std::string output;
    std::string transcripts_out;
    int objectives = 50;
    std::uint64_t seed = 1;
    std::string bench_family;
    int min_n = 3;
    int max_n = 5;

    const std::set<std::string> modes{"auto", "exact", "greedy", "stars"};
    auto add_spec = [&](CLI::App* sub) { sub->add_option("spec", spec_path, "Matroid spec file (JSON)")->required(); };
    auto add_mode = [&](CLI::App* sub) {
        sub->add_option("--family-mode", family_mode, "Hitting family source: auto, exact, greedy or stars")
            ->check(CLI::IsMember(modes));
    };

    auto* info = app.add_subcommand("info", "Ground set size, rank, basis count, connectivity");
    add_spec(info);
    auto* flacet_cmd = app.add_subcommand("flacets", "List the facet-inducing flats");
    add_spec(flacet_cmd);
    auto* hitting = app.add_subcommand("hitting", "Greedy and exact hitting families");
    add_spec(hitting);
    hitting->add_option("-o,--output", output, "Write the reported family, one basis per line");
    auto* slack = app.add_subcommand("slack", "Slack matrix as CSV");
    add_spec(slack);
    slack->add_option("-o,--output", output, "CSV path (stdout if omitted)");
    auto* check = app.add_subcommand("protocol-check", "Expected protocol output equals slack on every pair");
    add_spec(check);
    add_mode(check);
    check->add_option("--transcripts", transcripts_out, "Write the transcript list as CSV");
    auto* build_xf = app.add_subcommand("build-xf", "Write the extended formulation");
    add_spec(build_xf);
    add_mode(build_xf);
    build_xf->add_option("-o,--output", output, "Formulation path (default <spec>.xf.txt)");
    auto* verify_xf = app.add_subcommand("verify-xf", "Vertex lifting and LP optimization checks");
    add_spec(verify_xf);
    add_mode(verify_xf);
    verify_xf->add_option("--objectives", objectives, "Number of random objectives")->check(CLI::NonNegativeNumber);
    verify_xf->add_option("--seed", seed, "Objective sampling seed");
    auto* bench = app.add_subcommand("bench", "Size table over a matroid family (TSV)");
    bench->add_option("--family", bench_family, "complete-graphs, cocomplete-graphs or uniform-half")
        ->required()
        ->check(CLI::IsMember({"complete-graphs", "cocomplete-graphs", "uniform-half"}));
    bench->add_option("--min-n", min_n, "Smallest n")->check(CLI::PositiveNumber);
    bench->add_option("--max-n", max_n, "Largest n")->check(CLI::PositiveNumber);

    std::vector<std::string> args(argv.size() > 1 ? argv.begin() + 1 : argv.end(), argv.end());
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        const EnumerationCaps caps = EnumerationCaps::from_environment();

        if (bench->parsed()) {
            out << "n\tflacets\th_greedy\th_exact\tnum_y\tsize\ttrivial_facets\n";
            for (int n = min_n; n <= max_n; ++n) {
                BenchRow row{};
                if (bench_family == "uniform-half") {
                    if (n < 2) continue;
                    row = bench_row(n, Matroid::uniform(n / 2, n), nullptr, caps);
                } else {
                    if (n < 3) continue;
                    const Graph g = Graph::complete(n);
                    const Matroid m = Matroid::graphic(g);
                    row = bench_family == "complete-graphs" ? bench_row(n, m, &g, caps)
                                                            : bench_row(n, dual(m), nullptr, caps);
                }
                out << row.n << '\t' << row.flacets << '\t' << row.h_greedy << '\t' << row.h_exact << '\t'
                    << row.num_y << '\t' << row.size << '\t' << row.trivial << '\n';
            }
            return 0;
        }

        const Matroid m = load_matroid(spec_path);

        if (info->parsed()) {
            const auto bases = enumerate_bases(m, caps);
            const auto components = connected_components(m, caps);
            out << "kind: " << to_string(m.kind()) << '\n'
                << "n: " << m.size() << '\n'
                << "r: " << m.rank() << '\n'
                << "bases: " << bases.size() << '\n'
                << "connected: " << (components.size() <= 1 ? "yes" : "no") << '\n'
                << "components: " << components.size() << '\n'
                << "dimension: " << polytope_dimension(m, caps) << '\n';
            return 0;
        }

        if (flacet_cmd->parsed()) {
            const auto analysis = analyze_flacets(m, caps);
            for (const auto& f : analysis.flacets) out << "x(" << braces(f.flat) << ") <= " << f.rhs << '\n';
            out << "flacets: " << analysis.flacets.size() << " of " << analysis.candidates.size()
                << " nontrivial flats\n";
            for (const auto& d : analysis.disagreements) {
                err << "diagnostic: connectivity criterion " << (d.fast_path ? "accepts" : "rejects") << ' '
                    << braces(d.flat) << ", oracle " << (d.oracle ? "accepts" : "rejects") << '\n';
            }
            return 0;
        }

        const auto s = slack_matrix(m, caps);

        if (slack->parsed()) {
            const auto csv = slack_matrix_csv(s);
            if (output.empty()) {
                out << csv;
            } else {
                write_file(output, csv);
                out << "wrote " << s.rows.size() << "x" << s.cols.size() << " slack matrix to " << output << '\n';
            }
            return 0;
        }

        if (hitting->parsed()) {
            const auto greedy = greedy_hitting_family(s);
            out << "greedy=" << greedy.size();
            const HittingFamily* reported = &greedy;
            std::optional<HittingFamily> exact;
            if (s.cols.size() <= caps.max_cover_columns) {
                exact = minimum_hitting_family(s, caps);
                out << " exact=" << exact->size();
                reported = &*exact;
            } else {
                out << " exact=skipped (" << s.cols.size() << " bases over cap " << caps.max_cover_columns << ")";
            }
            out << '\n' << family_text(*reported);
            if (!output.empty()) write_file(output, family_text(*reported));
            return 0;
        }

        const auto choice = choose_family(m, s, family_mode, caps);
        out << "family: " << choice.mode << " (h=" << choice.family.size() << ")\n";
        const bool one_bit = choice.mode == "stars";

        if (check->parsed()) {
            for (std::size_t i = 0; i < s.rows.size(); ++i) {
                for (std::size_t j = 0; j < s.cols.size(); ++j) {
                    const Rational slack_value = s.entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                    Rational value = expected_value(m, choice.family, s.rows[i], s.cols[j]);
                    if (value == slack_value && one_bit)
                        value = star_expected_value(*m.graph(), choice.family, s.rows[i], s.cols[j]);
                    if (value != slack_value) {
                        out << "FAIL: flacet " << braces(s.rows[i].flat) << " basis " << braces(s.cols[j].set())
                            << ": expected " << value << ", slack " << slack_value << '\n';
                        return 1;
                    }
                }
            }
            if (!transcripts_out.empty()) write_file(transcripts_out, transcripts_csv(enumerate_transcripts(m, choice.family, s.rows, s.cols)));
            out << "PASS: " << s.rows.size() << "x" << s.cols.size() << " grid checked\n";
            return 0;
        }

        // Formulation commands.
        ExtendedFormulation ef;
        LiftingCheck lifting;
        int bits = 0;
        if (one_bit) {
            const auto fac = factorize_star_protocol(*m.graph(), caps);
            ef = build_extended_formulation(m, fac, caps);
            lifting = verify_vertex_lifting(ef, fac);
            bits = star_protocol_bits(*m.graph());
        } else {
            const auto fac = factorize_from_transcripts(m, choice.family, s);
            ef = build_extended_formulation(m, fac, caps);
            lifting = verify_vertex_lifting(ef, fac);
            bits = protocol_stats(m, choice.family, caps).bits;
        }

        if (build_xf->parsed()) {
            std::string path = output;
            if (path.empty()) path = std::filesystem::path(spec_path).replace_extension(".xf.txt").string();
            write_file(path, formulation_text(ef));
            out << "size: " << ef.size() << '\n'
                << "num_y: " << ef.num_y << '\n'
                << "bits: " << bits << '\n'
                << "bound 2^bits + 2n: " << ((std::size_t{1} << bits) + 2 * static_cast<std::size_t>(m.size())) << '\n'
                << "wrote " << path << '\n';
            return 0;
        }

        if (verify_xf->parsed()) {
            if (!lifting.ok) {
                out << "FAIL: lifting of basis " << braces(s.cols[*lifting.basis].set()) << " violates " << lifting.row
                    << '\n';
                return 1;
            }
            out << "lifting: PASS (" << s.cols.size() << " bases)\n";
            const auto result = verify_optimization_equivalence(m, ef, random_objectives(m.size(), objectives, seed), caps);
            for (const auto& c : result.objectives) {
                if (c.ok()) continue;
                out << "FAIL: objective (";
                for (Eigen::Index e = 0; e < c.objective.size(); ++e) out << (e ? "," : "") << c.objective(e);
                out << "): formulation " << c.formulation_max << ", vertices " << c.vertex_max
                    << (c.optimum_in_polytope ? "" : ", optimum outside B(M)") << '\n';
                return 1;
            }
            out << "optimization: PASS (" << result.objectives.size() << " objectives, seed " << seed << ")\n";
            return 0;
        }
    } catch (const InternalConsistency& e) {
        err << "internal consistency failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

}  // namespace matroid_xf
