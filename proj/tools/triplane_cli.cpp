#include <algorithm>
#include <cstdlib>
#include <atomic>
#include <future>
#include <thread>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "triplane/chconvert.h"
#include "triplane/corpus.h"
#include "triplane/families.h"
#include "triplane/io.h"
#include "triplane/render.h"
#include "triplane/search.h"

namespace {

using namespace triplane;

SearchBudget base_budget() {
    SearchBudget budget;
    if (const char* ms = std::getenv("TRIPLANE_BUDGET_MS")) {
        try {
            budget.time_ms = std::stoll(ms);
        } catch (const std::exception&) {
            throw Error("TRIPLANE_BUDGET_MS is not an integer");
        }
    }
    return budget;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
}

std::string invariant_line_unknown_chi(const InvariantReport& r) {
    std::string out = "b=" + std::to_string(r.bridges);
    out += " c=" + std::to_string(r.total_crossings);
    out += " chi=?";
    out += " e=" + std::to_string(r.normal_euler);
    out += std::string(" orientable=") + (r.orientable ? "true" : "false");
    out += std::string(" concentrated=") + (r.concentrated ? "true" : "false");
    return out;
}

int run_validate(const std::string& path) {
    DiagramFile file = read_diagram_file(path);
    Certifier certifier = make_certifier(base_budget());
    std::vector<std::pair<std::string, Certification>> sides;
    if (file.kind == DiagramFileKind::TriPlane) {
        ValidationReport report = validate_triplane(file.triplane, certifier);
        for (int i = 0; i < 3; ++i)
            sides.emplace_back("closure " + std::to_string(i + 1), report.closure_certs[i]);
    } else {
        ChValidation val = validate_ch(file.marked, certifier);
        sides.emplace_back("resolution -", val.minus);
        sides.emplace_back("resolution +", val.plus);
    }
    for (const auto& [name, cert] : sides)
        if (cert.status == Certification::Status::Refuted) {
            std::cout << "Refuted " << name << ": " << cert.obstruction << "\n";
            return 1;
        }
    for (const auto& [name, cert] : sides)
        if (cert.status != Certification::Status::Certified) {
            std::cout << "Unknown " << name << "\n";
            return 3;
        }
    std::string counts;
    for (const auto& [name, cert] : sides) {
        if (!counts.empty()) counts += ",";
        counts += std::to_string(cert.components);
    }
    std::cout << "Certified (" << counts << ")\n";
    return 0;
}

int run_invariants(const std::string& path) {
    DiagramFile file = read_diagram_file(path);
    Certifier certifier = make_certifier(base_budget());
    TriPlaneDiagram d;
    bool certified = true;
    if (file.kind == DiagramFileKind::TriPlane) {
        d = file.triplane;
        certified = validate_triplane(d, certifier).valid();
    } else {
        d = ch_to_triplane(file.marked, certifier);
    }
    InvariantReport r = invariants(d);
    std::cout << (certified ? invariant_line(r) : invariant_line_unknown_chi(r)) << "\n";
    return 0;
}

int run_convert(const std::string& path, const std::string& out_path) {
    DiagramFile file = read_diagram_file(path);
    if (file.kind != DiagramFileKind::Marked)
        throw Error("convert expects a marked diagram file");
    TriPlaneDiagram d = ch_to_triplane(file.marked, make_certifier(base_budget()));
    emit(to_file_text(d), out_path);
    return 0;
}

int run_simplify(const std::string& path, int budget, std::uint64_t seed,
                 const std::string& out_path) {
    DiagramFile file = read_diagram_file(path);
    SimplifyOptions opt;
    opt.budget = budget;
    opt.seed = seed;
    opt.certifier = base_budget();
    TriPlaneDiagram d = file.kind == DiagramFileKind::Marked
                            ? ch_to_triplane(file.marked, make_certifier(opt.certifier))
                            : file.triplane;
    SimplifyResult result = simplify_triplane(d, opt);
    for (const std::string& move : result.log) std::cout << move << "\n";
    std::cout << invariant_line(invariants(result.diagram)) << "\n";
    if (!out_path.empty()) write_text_file(out_path, to_file_text(result.diagram));
    return 0;
}

int run_generate(const std::string& spec, const std::string& out_path) {
    TriPlaneDiagram d = generate(FamilySpec::parse(spec));
    if (out_path.empty()) {
        std::cout << to_file_text(d);
    } else {
        write_text_file(out_path, to_file_text(d));
        std::cout << invariant_line(invariants(d)) << "\n";
    }
    return 0;
}

int run_census(int bridge) {
    if (bridge < 1) throw Error("census bridge number must be at least 1");
    if (bridge > 4) throw Error("census bound exceeded (enumeration is capped at bridge 4)");
    std::vector<TriPlaneDiagram> all = enumerate_zero_crossing(bridge);
    std::size_t orientable = 0;
    for (const TriPlaneDiagram& d : all)
        if (invariants(d).orientable) ++orientable;
    std::cout << "b=" << bridge << " diagrams=" << all.size() << " orientable=" << orientable
              << "\n";
    return 0;
}

struct RowOutcome {
    std::string text;
    bool hard_fail = false;
    bool soft_fail = false;
};

RowOutcome check_row(const CorpusRow& row, const std::string& dir) {
    RowOutcome out;
    std::ostringstream line;
    line << row.label << ": ";
    try {
        DiagramFile file = read_diagram_file(dir + "/" + row.file_name);
        if (file.kind != DiagramFileKind::Marked)
            throw Error("corpus entry is not a marked diagram file");
        SimplifyOptions opt;
        opt.certifier = base_budget();
        opt.seed = 1;
        TriPlaneDiagram raw = ch_to_triplane(file.marked, make_certifier(opt.certifier));
        SimplifyResult simplified = simplify_triplane(raw, opt);
        InvariantReport r = invariants(simplified.diagram);

        std::vector<std::string> bad;
        if (r.type_partition != row.type_partition)
            bad.push_back("type " + r.type_partition + " expected " + row.type_partition);
        if (r.bridges != row.bridges)
            bad.push_back("b=" + std::to_string(r.bridges) + " expected " +
                          std::to_string(row.bridges));
        if (r.normal_euler != row.normal_euler)
            bad.push_back("e=" + std::to_string(r.normal_euler) + " expected " +
                          std::to_string(row.normal_euler));
        bool over_bound = r.total_crossings > row.crossing_bound;
        // the crossing bound is part of the hard gate only where the table
        // marks it as realized by a concentrated diagram at bridge <= 4
        if (over_bound && row.crossings_hard && row.bridges <= 4)
            bad.push_back("c=" + std::to_string(r.total_crossings) + " bound " +
                          std::to_string(row.crossing_bound));

        if (!bad.empty()) {
            out.hard_fail = true;
            line << "FAIL";
            for (const std::string& b : bad) line << " [" << b << "]";
        } else if (over_bound) {
            out.soft_fail = true;
            line << "soft fail, best c=" << r.total_crossings << " above bound "
                 << row.crossing_bound;
        } else {
            line << "pass b=" << r.bridges << " c=" << r.total_crossings
                 << " e=" << r.normal_euler << " type=" << r.type_partition;
        }
        if (row.table_bridges != row.bridges)
            line << " (table prints b=" << row.table_bridges << ", suspected typo, expected "
                 << row.bridges << ")";
        if (row.star) line << " (table bound attained only at bridge 5)";
    } catch (const std::exception& e) {
        out.hard_fail = true;
        line << "FAIL [" << e.what() << "]";
    }
    out.text = line.str();
    return out;
}

int run_table(const std::string& dir) {
    const std::vector<CorpusRow>& rows = corpus_rows();
    // bounded worker pool; each row's searches hold tens of megabytes
    const std::size_t workers =
        std::min<std::size_t>(4, std::max(1u, std::thread::hardware_concurrency()));
    std::vector<std::future<RowOutcome>> futures(rows.size());
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::promise<RowOutcome>> promises(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) futures[i] = promises[i].get_future();
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
                try {
                    promises[i].set_value(check_row(rows[i], dir));
                } catch (...) {
                    promises[i].set_exception(std::current_exception());
                }
            }
        });
    int pass = 0, soft = 0, fail = 0;
    for (auto& f : futures) {
        RowOutcome o = f.get();
        std::cout << o.text << "\n";
        if (o.hard_fail)
            ++fail;
        else if (o.soft_fail)
            ++soft;
        else
            ++pass;
    }
    for (std::thread& t : pool) t.join();
    std::cout << "rows=" << rows.size() << " pass=" << pass << " soft=" << soft
              << " fail=" << fail << "\n";
    return fail == 0 ? 0 : 1;
}

int run_render(const std::string& path, const std::string& out_path) {
    DiagramFile file = read_diagram_file(path);
    emit(render_svg(file), out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tri-plane diagrams of knotted surfaces in the 4-sphere"};
    app.require_subcommand(1);

    std::string validate_file;
    CLI::App* validate = app.add_subcommand("validate", "certify closures or resolutions");
    validate->add_option("file", validate_file, "diagram file")->required();

    std::string invariants_file;
    CLI::App* invars = app.add_subcommand("invariants", "print the invariant report");
    invars->add_option("file", invariants_file, "diagram file")->required();

    std::string convert_file, convert_out;
    CLI::App* convert = app.add_subcommand("convert", "marked diagram to tri-plane diagram");
    convert->add_option("file", convert_file, "marked diagram file")->required();
    convert->add_option("-o,--output", convert_out, "output file (default stdout)");

    std::string simplify_file, simplify_out;
    int simplify_budget = 20000;
    std::uint64_t simplify_seed = 0;
    CLI::App* simplify = app.add_subcommand("simplify", "reduce crossings and bridges");
    simplify->add_option("file", simplify_file, "diagram file")->required();
    simplify->add_option("--budget", simplify_budget, "search states per phase");
    simplify->add_option("--seed", simplify_seed, "neighbor shuffle seed");
    simplify->add_option("-o,--output", simplify_out, "output file");

    std::string generate_spec, generate_out;
    CLI::App* generate = app.add_subcommand("generate", "build a family diagram");
    generate
        ->add_option("family", generate_spec,
                     "sphere | torus:g | p+ | p- | p:n,m | spun:x2+,x2+,...")
        ->required();
    generate->add_option("-o,--output", generate_out, "output file (default stdout)");

    int census_bridge = 4;
    CLI::App* census = app.add_subcommand("census", "count crossingless diagrams");
    census->add_option("--bridge", census_bridge, "bridge number, at most 4");

    std::string table_dir;
    CLI::App* table = app.add_subcommand("table", "reproduce the Yoshikawa table");
    table->add_option("--corpus", table_dir, "corpus directory")->required();

    std::string render_file, render_out;
    CLI::App* render = app.add_subcommand("render", "draw a diagram as SVG");
    render->add_option("file", render_file, "diagram file")->required();
    render->add_option("-o,--output", render_out, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (validate->parsed()) return run_validate(validate_file);
        if (invars->parsed()) return run_invariants(invariants_file);
        if (convert->parsed()) return run_convert(convert_file, convert_out);
        if (simplify->parsed())
            return run_simplify(simplify_file, simplify_budget, simplify_seed, simplify_out);
        if (generate->parsed()) return run_generate(generate_spec, generate_out);
        if (census->parsed()) return run_census(census_bridge);
        if (table->parsed()) return run_table(table_dir);
        if (render->parsed()) return run_render(render_file, render_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
