#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "nkcfg/bounds.hpp"
#include "nkcfg/configuration.hpp"
#include "nkcfg/constructions.hpp"
#include "nkcfg/errors.hpp"
#include "nkcfg/planner.hpp"
#include "nkcfg/seeds.hpp"
#include "nkcfg/svg.hpp"

namespace {

using namespace nkcfg;

Configuration read_input(const std::string& path) {
    if (path.empty() || path == "-") return read_configuration(std::cin);
    return load_configuration(path);
}

void write_output(const std::string& path, const Configuration& c) {
    if (path.empty() || path == "-") {
        write_configuration(std::cout, c);
        return;
    }
    save_configuration(path, c);
}

Pencil pick_largest_pencil(const Configuration& c) {
    std::vector<Pencil> ps = pencils(c);
    if (ps.empty()) throw Error(Errc::BadParams, "configuration has no pencil (no two parallel lines)");
    std::size_t best = 0;
    for (std::size_t i = 1; i < ps.size(); ++i)
        if (ps[i].size() > ps[best].size()) best = i;
    return ps[best];
}

std::string describe(const Configuration& c) {
    return "(" + std::to_string(c.n()) + "_" + std::to_string(c.k) + ")";
}

int cmd_verify(const Configuration& c, bool report) {
    VerificationReport rep = verify(c);
    std::cout << describe(c) << (rep.ok ? " ok" : " FAILED") << ", incidences=" << rep.incidences
              << ", connected=" << (rep.connected ? "yes" : "no") << "\n";
    if (report) {
        for (const Violation& v : rep.violations) {
            std::cout << "  " << violation_kind_name(v.kind);
            if (v.point >= 0) std::cout << " point=" << v.point;
            if (v.line >= 0) std::cout << " line=" << v.line;
            if (!v.detail.empty()) std::cout << ": " << v.detail;
            std::cout << "\n";
        }
        std::vector<Pencil> ps = pencils(c);
        for (const Pencil& p : ps)
            std::cout << "  pencil direction (" << int_str(p.direction.first) << ","
                      << int_str(p.direction.second) << "): " << p.size() << " lines\n";
    }
    return rep.ok ? 0 : 1;
}

void print_bound_table(const BoundTable& rows, bool csv, bool with_t) {
    if (csv) {
        std::cout << (with_t ? "k,value,t,formula\n" : "k,value,formula\n");
        for (const BoundRow& r : rows) {
            std::cout << r.k << "," << int_str(r.value) << ",";
            if (with_t) std::cout << (r.t < 0 ? std::string("-") : std::to_string(r.t)) << ",";
            std::cout << "\"" << r.formula << "\"\n";
        }
        return;
    }
    for (const BoundRow& r : rows) {
        std::cout << "k=" << r.k << "  " << int_str(r.value);
        if (with_t && r.t >= 0) std::cout << "  t=" << r.t;
        std::cout << "  [" << r.formula << "]\n";
    }
}

int dispatch(CLI::App& app, const std::string& sub, std::uint64_t seed,
             const std::string& in_path, const std::string& out_path,
             const std::string& seed_type, int seed_n,
             int ar_k, int sw_r, long sw_h, bool report,
             int plan_k, long plan_n, bool do_execute,
             const std::string& t1_start, bool hat, const std::vector<long>& nk_args, int max_k,
             bool csv, bool highlight, int width, int height) {
    if (sub == "seed") {
        Configuration c;
        if (seed_type == "multilateral") {
            if (seed_n < 0) throw Error(Errc::BadParams, "multilateral seed needs --n");
            c = multilateral(seed_n);
        } else {
            c = pappus();
        }
        write_output(out_path, c);
        return 0;
    }
    if (sub == "ar") {
        Configuration c = read_input(in_path);
        ReplicationResult res = affine_replication(c, ar_k, seed);
        std::cerr << describe(c) << " -> " << describe(res.output) << ", new pencil of "
                  << res.new_pencil.size() << " lines\n";
        write_output(out_path, res.output);
        return 0;
    }
    if (sub == "switch") {
        Configuration c = read_input(in_path);
        Pencil p = pick_largest_pencil(c);
        SwitchResult res = affine_switch(c, p, nullptr, sw_r, 0, sw_h, seed);
        std::cerr << describe(c) << " -> " << describe(res.output) << ", removed " << sw_r
                  << " of " << p.size() << " pencil lines, h=" << res.h << "\n";
        write_output(out_path, res.output);
        return 0;
    }
    if (sub == "band") {
        Configuration c = read_input(in_path);
        Pencil p = pick_largest_pencil(c);
        std::filesystem::create_directories(out_path);
        std::vector<SwitchResult> results = affine_switch_band(c, p, sw_h, seed);
        for (std::size_t i = 0; i < results.size(); ++i) {
            std::string file = out_path + "/band_r" + std::to_string(i + 1) + ".json";
            save_configuration(file, results[i].output);
            std::cout << "r=" << i + 1 << " -> " << describe(results[i].output) << "  " << file
                      << "\n";
        }
        return 0;
    }
    if (sub == "verify") return cmd_verify(read_input(in_path), report);
    if (sub == "plan") {
        std::optional<ConstructionPlan> p = plan(plan_k, plan_n);
        if (!p) {
            std::cerr << "(" << plan_n << "_" << plan_k
                      << ") is not covered by the construction recipes\n";
            return 1;
        }
        if (!do_execute) {
            std::cout << p->summary() << "\n" << p->to_json().dump(2) << "\n";
            return 0;
        }
        std::cerr << p->summary() << "\n";
        Configuration c = execute(*p, seed);
        write_output(out_path, c);
        return 0;
    }
    if (sub == "bounds") {
        if (!nk_args.empty()) {
            if (nk_args.size() != 4) throw Error(Errc::BadParams, "--nk takes K T A D");
            std::cout << int_str(n_bound((int)nk_args[0], (int)nk_args[1], Int(nk_args[2]),
                                         Int(nk_args[3])))
                      << "\n";
            return 0;
        }
        if (hat) {
            print_bound_table(hat_table(max_k), csv, true);
            return 0;
        }
        if (!t1_start.empty()) {
            int start_k;
            Int start_value;
            auto colon = t1_start.find(':');
            if (colon == std::string::npos) {
                start_k = std::stoi(t1_start);
                if (start_k == 2) start_value = 3;
                else if (start_k == 3) start_value = 9;
                else if (start_k == 4) start_value = 24;
                else throw Error(Errc::BadParams,
                                 "--table1 START needs an explicit value (\"k:value\") for k > 4");
            } else {
                start_k = std::stoi(t1_start.substr(0, colon));
                start_value = Int(t1_start.substr(colon + 1));
            }
            print_bound_table(table1(start_k, start_value, max_k), csv, false);
            return 0;
        }
        throw Error(Errc::BadParams, "bounds needs one of --table1, --hat, --nk");
    }
    if (sub == "render") {
        Configuration c = read_input(in_path);
        RenderOptions opt;
        opt.width = width;
        opt.height = height;
        Pencil p;
        if (highlight) {
            p = pick_largest_pencil(c);
            opt.highlight = &p;
        }
        if (out_path.empty() || out_path == "-") {
            render_svg(std::cout, c, opt);
        } else {
            std::ofstream out(out_path);
            if (!out) throw Error(Errc::BadParams, "cannot open " + out_path);
            render_svg(out, c, opt);
        }
        return 0;
    }
    std::cerr << app.help();
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact construction, verification and planning of geometric (n_k) configurations"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "retry stream seed for reproducible constructions");

    std::string in_path, out_path, seed_type, t1_start;
    int seed_n = -1, ar_k = 0, sw_r = 0, plan_k = 0, max_k = 10;
    long sw_h = 0, plan_n = 0;
    bool report = false, do_execute = false, hat = false, csv = false, highlight = false;
    int width = 1000, height = 800;
    std::vector<long> nk_args;

    CLI::App* seed_cmd = app.add_subcommand("seed", "emit a seed configuration");
    seed_cmd->add_option("--type", seed_type, "multilateral | pappus")
        ->required()
        ->check(CLI::IsMember({"multilateral", "pappus"}));
    seed_cmd->add_option("--n", seed_n, "order of the multilateral seed");
    seed_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* ar_cmd = app.add_subcommand("ar", "affine replication: (m_{k-1}) -> ((k+1)m_k)");
    ar_cmd->add_option("--k", ar_k, "target k")->required();
    ar_cmd->add_option("-i,--input", in_path, "input file (default stdin)");
    ar_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* sw_cmd = app.add_subcommand("switch", "affine switch: remove r pencil lines");
    sw_cmd->set_help_flag("--help", "print help and exit"); // frees -h for the family parameter
    sw_cmd->add_option("--r", sw_r, "lines to remove from the largest pencil")->required();
    sw_cmd->add_option("--h", sw_h, "family parameter (default 2k)");
    sw_cmd->add_option("-i,--input", in_path, "input file (default stdin)");
    sw_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* band_cmd = app.add_subcommand("band", "affine switches for every r = 1..|pencil|");
    band_cmd->set_help_flag("--help", "print help and exit");
    band_cmd->add_option("--h", sw_h, "family parameter (default 2k)");
    band_cmd->add_option("-i,--input", in_path, "input file (default stdin)");
    band_cmd->add_option("-o,--output", out_path, "output directory")->required();

    CLI::App* verify_cmd = app.add_subcommand("verify", "check the configuration property exactly");
    verify_cmd->add_option("-i,--input", in_path, "input file (default stdin)");
    verify_cmd->add_flag("--report", report, "list violations and pencils");

    CLI::App* plan_cmd = app.add_subcommand("plan", "find a construction recipe for (n_k)");
    plan_cmd->add_option("--k", plan_k, "target k")->required();
    plan_cmd->add_option("--n", plan_n, "target order")->required();
    plan_cmd->add_flag("--execute", do_execute, "run the recipe and emit the configuration");
    plan_cmd->add_option("-o,--output", out_path, "output file (default stdout)");

    CLI::App* bounds_cmd = app.add_subcommand("bounds", "bound tables for N_k");
    bounds_cmd->add_option("--table1", t1_start,
                           "iterate the replication recurrence from START (\"2\", \"3\", \"4\" or \"k:value\")");
    bounds_cmd->add_flag("--hat", hat, "best recursive thresholds with minimizing t");
    bounds_cmd->add_option("--nk", nk_args, "band-family threshold for K T A D")->expected(4);
    bounds_cmd->add_option("--max-k", max_k, "last row to print (default 10)");
    bounds_cmd->add_flag("--csv", csv, "CSV output");

    CLI::App* render_cmd = app.add_subcommand("render", "draw the configuration as SVG");
    render_cmd->add_option("-i,--input", in_path, "input file (default stdin)");
    render_cmd->add_option("-o,--output", out_path, "output SVG file (default stdout)");
    render_cmd->add_flag("--highlight-pencil", highlight, "accent the largest pencil");
    render_cmd->add_option("--width", width, "viewport width in px");
    render_cmd->add_option("--height", height, "viewport height in px");

    // Let global options (--seed) appear after the subcommand name too.
    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        return dispatch(app, app.get_subcommands().front()->get_name(), seed, in_path, out_path,
                        seed_type, seed_n, ar_k, sw_r, sw_h, report, plan_k, plan_n, do_execute,
                        t1_start, hat, nk_args, max_k, csv, highlight, width, height);
    } catch (const Error& e) {
        std::cerr << "error [" << errc_name(e.code()) << "]: " << e.what() << "\n";
        switch (e.code()) {
        case Errc::ParseError:
        case Errc::BadParams:
        case Errc::NTooSmall:
        case Errc::RTooLarge:
        case Errc::HTooSmall:
        case Errc::ResourceLimit:
            return 2;
        default:
            return 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
