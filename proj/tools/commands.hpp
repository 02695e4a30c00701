#pragma once

// Command dispatch for the taxicab tool. Kept out of main.cpp so tests can
// drive it in-process with string streams.

#include "taxicab/figures.hpp"
#include "taxicab/io.hpp"
#include "taxicab/verify.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace taxicab::cli {

enum ExitCode { kOk = 0, kViolation = 1, kUsage = 2 };

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

namespace detail {

inline std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io::InputError("cannot open input file " + path);
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw io::InputError("cannot write " + path);
    f << body;
}

inline void write_output(const std::string& path, const std::string& body, std::ostream& out) {
    if (path == "-") out << body;
    else write_file(path, body);
}

}  // namespace detail

struct CommonOptions {
    std::string input = "-";
    std::string output = "-";
    std::string format = "json";
};

inline int run_cli(const std::vector<std::string>& args, Streams io) {
    CLI::App app{"Exact taxicab triangle geometry", "taxicab"};
    app.require_subcommand(1);

    CommonOptions opt;
    const auto add_common = [&](CLI::App* sub, bool with_input) {
        if (with_input) sub->add_option("--input", opt.input, "input document, - for stdin");
        sub->add_option("--output", opt.output, "output file, - for stdout");
        sub->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* classify_cmd = app.add_subcommand("classify", "classify the angles of a triangle");
    auto* circ_cmd = app.add_subcommand("circumcircle", "all circumcircles of a triangle");
    auto* inc_cmd = app.add_subcommand("incircle", "incircle of a triangle and the arc construction");
    auto* angle_cmd = app.add_subcommand("angle", "class and t-radian measure of an angle");
    for (auto* sub : {classify_cmd, circ_cmd, inc_cmd, angle_cmd}) add_common(sub, true);

    auto* figure_cmd = app.add_subcommand("figure", "render a built-in figure or a scene file to SVG");
    std::string figure_name, scene_path;
    bool list_figures = false;
    figure_cmd->add_option("name", figure_name, "built-in figure name");
    figure_cmd->add_option("--scene", scene_path, "scene document");
    figure_cmd->add_flag("--list", list_figures, "list built-in figures");
    figure_cmd->add_option("--output", opt.output, "output file, - for stdout");

    auto* verify_cmd = app.add_subcommand("verify", "run the property suite");
    int box = 4, trials = 0, denominator = 4;
    std::uint64_t seed = 1;
    std::string report = "taxicab-verify";
    verify_cmd->add_option("--box", box, "enumerate vertices in [0, N]^2");
    verify_cmd->add_option("--trials", trials, "random rational triangles");
    verify_cmd->add_option("--seed", seed, "seed of the random stream");
    verify_cmd->add_option("--denominator", denominator, "largest denominator of random coordinates");
    verify_cmd->add_option("--report", report, "write <prefix>.json and <prefix>.txt; empty to skip");
    add_common(verify_cmd, false);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        io.out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        io.out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        io.err << "error: " << e.what() << "\n";
        return kUsage;
    }

    const bool json = opt.format == "json";
    try {
        if (classify_cmd->parsed()) {
            const Triangle t = io::triangle_from(io::parse_document(detail::read_input(opt.input, io.in)));
            const auto c = classify_triangle(t);
            io::Json j = io::to_json(t);
            const io::Json fields = io::to_json(c);
            for (const auto& [k, v] : fields.items()) j[k] = v;
            detail::write_output(opt.output, json ? io::dump(j) : io::text(c), io.out);
        } else if (circ_cmd->parsed()) {
            const Triangle t = io::triangle_from(io::parse_document(detail::read_input(opt.input, io.in)));
            const auto s = circumcircles(t);
            detail::write_output(opt.output, json ? io::dump(io::to_json(s)) : io::text(s), io.out);
        } else if (inc_cmd->parsed()) {
            const Triangle t = io::triangle_from(io::parse_document(detail::read_input(opt.input, io.in)));
            const auto r = incircle(t);
            const bool inscribed = classify_triangle(t).is_inscribed;
            std::string body;
            if (json) {
                io::Json j = io::to_json(r);
                if (inscribed) j["construction"] = io::to_json(paper_construction(t));
                body = io::dump(j);
            } else {
                body = io::text(r);
                if (inscribed) body += io::text(paper_construction(t));
            }
            detail::write_output(opt.output, body, io.out);
        } else if (angle_cmd->parsed()) {
            const Angle a = io::angle_from(io::parse_document(detail::read_input(opt.input, io.in)));
            detail::write_output(opt.output, json ? io::dump(io::angle_report(a)) : io::text(a), io.out);
        } else if (figure_cmd->parsed()) {
            if (list_figures) {
                for (const auto& n : scene::builtin_figure_names()) io.out << n << "\n";
                return kOk;
            }
            if (figure_name.empty() == scene_path.empty()) {
                io.err << "error: give exactly one of a figure name or --scene\n";
                return kUsage;
            }
            std::optional<scene::Scene> s;
            if (!scene_path.empty()) {
                s = scene::scene_from(io::parse_document(detail::read_input(scene_path, io.in)));
            } else {
                s = scene::builtin_figure(figure_name);
                if (!s) {
                    io.err << "error: unknown figure \"" << figure_name << "\" (try --list)\n";
                    return kUsage;
                }
            }
            detail::write_output(opt.output, scene::render_svg(*s), io.out);
        } else if (verify_cmd->parsed()) {
            if (box < 1) {
                io.err << "error: --box must be at least 1\n";
                return kUsage;
            }
            SweepConfig cfg;
            cfg.box_max = box;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.denominator_limit = denominator;
            try {
                cfg.validate();
            } catch (const std::invalid_argument& e) {
                io.err << "error: " << e.what() << "\n";
                return kUsage;
            }
            const SuiteReport r = run_suite(cfg);
            const std::string as_json = io::dump(io::to_json(r)), as_text = io::text(r);
            if (!report.empty()) {
                detail::write_file(report + ".json", as_json);
                detail::write_file(report + ".txt", as_text);
            }
            detail::write_output(opt.output, json ? as_json : as_text, io.out);
            return r.passed() ? kOk : kViolation;
        }
    } catch (const io::InputError& e) {
        io.err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const GeometryError& e) {
        io.err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        io.err << "error: malformed document: " << e.what() << "\n";
        return kUsage;
    }
    return kOk;
}

inline int run_cli(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run_cli(args, Streams{std::cin, std::cout, std::cerr});
}

}  // namespace taxicab::cli
