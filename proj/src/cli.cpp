#include "holescan/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "holescan/cubical.hpp"
#include "holescan/detector.hpp"
#include "holescan/homology.hpp"
#include "holescan/image.hpp"
#include "holescan/persistence.hpp"
#include "holescan/sheaf.hpp"

namespace holescan {

namespace {

std::vector<int> parse_int_list(const std::string& text, char sep, std::size_t expected,
                                const std::string& what) {
    std::vector<int> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        try {
            std::size_t used = 0;
            values.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw std::runtime_error("invalid " + what + ": '" + text + "'");
        }
    }
    if (expected != 0 && values.size() != expected)
        throw std::runtime_error(what + " needs " + std::to_string(expected) +
                                 " comma-separated integers, got '" + text + "'");
    return values;
}

WindowRect parse_window(const std::string& text) {
    const auto v = parse_int_list(text, ',', 3, "window (row,col,size)");
    return WindowRect{v[0], v[1], v[2], v[2]};
}

std::vector<PixelSet> parse_parts(const std::string& text, const BinaryImage& img) {
    std::vector<PixelSet> parts;
    std::stringstream ss(text);
    std::string rect;
    while (std::getline(ss, rect, ';')) {
        const auto v = parse_int_list(rect, ',', 4, "part rectangle (top,left,rows,cols)");
        PixelSet part;
        for (int r = v[0]; r < v[0] + v[2]; ++r)
            for (int c = v[1]; c < v[1] + v[3]; ++c)
                if (r >= 0 && r < img.height() && c >= 0 && c < img.width() && img.black(r, c))
                    part.push_back(Pixel{r, c});
        parts.push_back(std::move(part));
    }
    return parts;
}

void print_diagram(const PersistenceDiagram& d, std::ostream& out) {
    for (const Bar& b : d.bars()) {
        out << b.dim << ' ' << b.birth << ' ';
        if (b.finite())
            out << b.death;
        else
            out << "inf";
        out << '\n';
    }
}

HeatmapFormat parse_format(const std::string& name) {
    if (name == "csv") return HeatmapFormat::csv;
    if (name == "pgm") return HeatmapFormat::pgm;
    throw std::runtime_error("unknown heatmap format '" + name + "' (expected csv or pgm)");
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Detects positions and relative sizes of 1-dimensional holes in binary "
                 "images via sliding-window persistence of local systems."};
    app.name("holescan");
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string window_spec;
    std::string parts_spec;
    std::string format_name = "csv";
    std::string scales_spec;
    int threshold = 0;
    int q = 1;
    int window_size = 0;
    int step = 1;
    bool sublevel = false;
    double threshold_heat = 0.0;

    auto* betti_cmd = app.add_subcommand("betti", "Print 'b0 b1' of the thresholded black set.");
    betti_cmd->add_option("--input", input, "PGM (P1/P2/P5) or plain-text grid image")->required();
    betti_cmd->add_option("--threshold", threshold, "black = pixels with value <= threshold (default 0)");

    auto* diagram_cmd = app.add_subcommand(
        "diagram", "Print persistence bars, one 'q birth death' line per bar (death 'inf' when "
                   "the class never dies). Default and --sublevel: sub-level filtration of the "
                   "grayscale input. With --window: short filtration of the window's local system "
                   "on the thresholded black set.");
    diagram_cmd->add_option("--input", input)->required();
    diagram_cmd->add_flag("--sublevel", sublevel, "sub-level filtration of the grayscale values");
    diagram_cmd->add_option("--window", window_spec, "row,col,size window for a short filtration");
    diagram_cmd->add_option("--threshold", threshold, "binarization threshold for --window mode");

    auto* local_cmd = app.add_subcommand(
        "local", "Print 'm o i dim_gamma' for one window's local system.");
    local_cmd->add_option("--input", input)->required();
    local_cmd->add_option("--window", window_spec, "row,col,size")->required();
    local_cmd->add_option("--q", q, "homology dimension, 0 or 1 (default 1)");
    local_cmd->add_option("--threshold", threshold, "binarization threshold (default 0)");

    auto* detect_cmd = app.add_subcommand(
        "detect", "Write the hole-location heatmap. Windows sit at multiples of the step; "
                  "placements that do not fit inside the grid are skipped, so a border band "
                  "narrower than the window may receive no heat.");
    detect_cmd->add_option("--input", input)->required();
    detect_cmd->add_option("--window-size", window_size, "square window side, >= 3")->required();
    detect_cmd->add_option("--step", step, "sliding step, >= 1 (default 1)");
    detect_cmd->add_option("--out", output, "heatmap output path")->required();
    detect_cmd->add_option("--format", format_name, "csv or pgm (default csv)");
    detect_cmd->add_option("--threshold", threshold, "binarization threshold (default 0)");

    auto* size_cmd = app.add_subcommand(
        "size", "Write the multiscale hole-size heatmap (sum over the given window sizes). "
                "The same border-skipping rule as 'detect' applies.");
    size_cmd->add_option("--input", input)->required();
    size_cmd->add_option("--scales", scales_spec, "comma-separated window sizes, each >= 3")->required();
    size_cmd->add_option("--step", step, "sliding step, >= 1 (default 1)");
    size_cmd->add_option("--out", output, "heatmap output path")->required();
    size_cmd->add_option("--format", format_name, "csv or pgm (default csv)");
    size_cmd->add_option("--threshold-heat", threshold_heat, "zero all entries below this value");
    size_cmd->add_option("--threshold", threshold, "binarization threshold (default 0)");

    auto* sections_cmd = app.add_subcommand(
        "sections", "Print 'q dim_gamma phi_rank' for an n-system of window parts.");
    sections_cmd->add_option("--input", input)->required();
    sections_cmd
        ->add_option("--parts", parts_spec,
                     "semicolon-separated rectangles 'top,left,rows,cols'; part i is the black "
                     "set inside rectangle i")
        ->required();
    sections_cmd->add_option("--q", q, "homology dimension, 0 or 1")->required();
    sections_cmd->add_option("--threshold", threshold, "binarization threshold (default 0)");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        const auto parsed = app.get_subcommands();
        out << (parsed.empty() ? app.help() : parsed.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        const GrayscaleImage gray = load_grayscale(input);

        if (app.got_subcommand(betti_cmd)) {
            const CubicalComplex c = realize(threshold_sublevel(gray, threshold).black_pixels());
            out << betti(c, 0) << ' ' << betti(c, 1) << '\n';
        } else if (app.got_subcommand(diagram_cmd)) {
            if (sublevel && !window_spec.empty())
                throw std::runtime_error("--sublevel and --window are mutually exclusive");
            if (window_spec.empty()) {
                print_diagram(persistence(sublevel_filtration(gray)), out);
            } else {
                const BinaryImage img = threshold_sublevel(gray, threshold);
                const LocalSystem ls = build_local_system(img, parse_window(window_spec));
                print_diagram(persistence(short_filtration(ls)), out);
            }
        } else if (app.got_subcommand(local_cmd)) {
            if (q < 0 || q > 1) throw std::runtime_error("--q must be 0 or 1");
            const BinaryImage img = threshold_sublevel(gray, threshold);
            const LocalSystem ls = build_local_system(img, parse_window(window_spec));
            const MergingProfile p = merging_profile(persistence(short_filtration(ls)), q);
            const SectionSpace s = global_section_dim(ls, q);
            out << p.merging << ' ' << p.outer_merging << ' ' << p.interior << ' ' << s.dim_gamma
                << '\n';
        } else if (app.got_subcommand(detect_cmd)) {
            const BinaryImage img = threshold_sublevel(gray, threshold);
            DetectorConfig cfg;
            cfg.window_size = window_size;
            cfg.step = step;
            cfg.mode = DetectorMode::detect;
            write_heatmap(detect_holes(img, cfg), output, parse_format(format_name));
        } else if (app.got_subcommand(size_cmd)) {
            const BinaryImage img = threshold_sublevel(gray, threshold);
            const std::vector<int> scales = parse_int_list(scales_spec, ',', 0, "scales");
            Heatmap heat = multiscale(img, scales, step);
            if (size_cmd->count("--threshold-heat") > 0) {
                for (int r = 0; r < heat.height(); ++r)
                    for (int c = 0; c < heat.width(); ++c)
                        if (heat.at(r, c) < threshold_heat) heat.at(r, c) = 0.0;
            }
            write_heatmap(heat, output, parse_format(format_name));
        } else if (app.got_subcommand(sections_cmd)) {
            if (q < 0 || q > 1) throw std::runtime_error("--q must be 0 or 1");
            const BinaryImage img = threshold_sublevel(gray, threshold);
            NSystem sys;
            sys.ambient = img.black_pixels();
            sys.parts = parse_parts(parts_spec, img);
            const SectionSpace s = global_section_dim_n(sys, q);
            out << s.q << ' ' << s.dim_gamma << ' ' << s.phi_rank << '\n';
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

}  // namespace holescan
