#pragma once

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cuboid/correspondence.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/face_cuboid.hpp"
#include "cuboid/oracle.hpp"
#include "cuboid/serialize.hpp"

// Command-line surface. Exit codes: 0 success, 1 malformed input, 2 domain
// error, 3 internal-consistency error.

namespace cuboid {
namespace cli {

enum class OutputFormat { json, jsonl, csv };

inline OutputFormat parse_format(const std::string& name) {
    if (name == "json")
        return OutputFormat::json;
    if (name == "jsonl")
        return OutputFormat::jsonl;
    if (name == "csv")
        return OutputFormat::csv;
    throw ParseError("unknown format '" + name + "' (expected json, jsonl or csv)");
}

inline void emit_records(const std::vector<Json>& records, OutputFormat format,
                         std::ostream& out) {
    switch (format) {
        case OutputFormat::json: {
            Json array = Json::array();
            for (const Json& record : records)
                array.push_back(record);
            out << array.dump(2) << '\n';
            return;
        }
        case OutputFormat::jsonl: {
            for (const Json& record : records)
                out << record.dump() << '\n';
            return;
        }
        case OutputFormat::csv: {
            bool wrote_header = false;
            for (const Json& record : records) {
                std::vector<std::string> header;
                std::vector<std::string> values;
                flatten_record(record, header, values);
                if (!wrote_header) {
                    out << csv_row(header);
                    wrote_header = true;
                }
                out << csv_row(values);
            }
            return;
        }
    }
}

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            parts.push_back(current);
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(current);
    return parts;
}

inline std::array<Rational, 3> parse_edge_triple(const std::string& text) {
    std::vector<std::string> parts = split_list(text);
    if (parts.size() != 3)
        throw ParseError("--edges expects three comma-separated values, got '" + text + "'");
    return {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])};
}

inline std::array<std::int64_t, 3> parse_integer_edges(const std::string& text) {
    std::array<Rational, 3> edges = parse_edge_triple(text);
    std::array<std::int64_t, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        if (edges[i].get_den() != 1 || sgn(edges[i]) <= 0 ||
            !edges[i].get_num().fits_slong_p())
            throw ParseError("--edges expects positive integers, got '" + text + "'");
        out[i] = edges[i].get_num().get_si();
        if (out[i] > 1'000'000'000)
            throw DomainError("verify: edges above 10^9 would overflow the 64-bit diagonal "
                              "check");
    }
    return out;
}

inline unsigned oracle_thread_count(unsigned requested) {
    unsigned threads = requested != 0 ? requested
                                      : std::max(1u, std::thread::hardware_concurrency());
    if (const char* cap_text = std::getenv("CUBOID_THREADS")) {
        unsigned long cap = std::strtoul(cap_text, nullptr, 10);
        if (cap >= 1)
            threads = std::min<unsigned long>(threads, cap);
    }
    return threads;
}

struct SeedOptions {
    std::string s = "5/3";
    std::string x = "-20/27";
    std::string y = "1120/243";

    TripleA parse() const {
        return TripleA(parse_rational(s), parse_rational(x), parse_rational(y));
    }
};

inline std::vector<Json> family_records(const TripleA& seed, int n_max) {
    if (n_max < 1)
        throw DomainError("family: --n must be positive");
    CurveParams curve = seed.curve();
    CurvePoint base = seed.point();
    CurvePoint multiple = base;
    std::vector<Json> records;
    records.reserve(static_cast<std::size_t>(n_max));
    std::set<PairB> seen;
    for (int n = 1; n <= n_max; ++n) {
        PairA pair(seed.s(), multiple.x());
        CuboidClass cls = canonicalize(forward_map(pair));
        if (!seen.insert(cls.canonical()).second)
            throw InternalError("family: duplicate cuboid class at multiple " +
                                std::to_string(n));
        records.push_back(cuboid_class_json(cls));
        multiple = detail::add_raw(curve, multiple, base);
    }
    return records;
}

inline Json invert_record(const Rational& bf, const Rational& ef, const Rational& gf) {
    PairB params = pair_b_from_cuboid(bf, ef, gf);
    std::vector<PairA> fiber = fiber_map(params);
    CuboidClass cls = canonicalize(params);
    Json fiber_s = Json::array();
    for (const PairA& p : fiber)
        fiber_s.push_back(to_string(p.s()));
    Json primitive = Json::array();
    for (const Integer& e : cls.primitive_edges())
        primitive.push_back(e.get_str());
    return Json{{"t", to_string(params.t())},
                {"gamma", to_string(params.gamma())},
                {"fiber_s", fiber_s},
                {"canonical_t", to_string(cls.canonical().t())},
                {"canonical_gamma", to_string(cls.canonical().gamma())},
                {"primitive_edges", primitive}};
}

inline Json verify_record(const std::array<std::int64_t, 3>& edges_in) {
    std::array<std::int64_t, 3> edges = edges_in;
    std::sort(edges.begin(), edges.end());
    IntegerCuboidHit hit = detail::describe_triple(edges);
    std::array<std::int64_t, 3> oriented = face_cuboid_orientation(hit);
    bool valid = verify_class_roundtrip(hit);
    Json record = hit_json(hit);
    record["oriented_edges"] =
        Json{{"bf", oriented[0]}, {"ef", oriented[1]}, {"gf", oriented[2]}};
    record["valid"] = valid;
    Json detail = invert_record(Rational(oriented[0]), Rational(oriented[1]),
                                Rational(oriented[2]));
    for (auto& [key, value] : detail.items())
        record[key] = value;
    return record;
}

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact arithmetic for rational face cuboids and the elliptic curves "
                 "behind them"};
    app.require_subcommand(1);

    SeedOptions seed;
    std::string format_name;
    std::string output_path = "-";
    int n_max = 1;
    int count = 1;
    std::int64_t max_edge = 700;
    unsigned threads = 0;
    std::string edges_text;
    std::string t_text;
    std::string gamma_text;

    auto add_common = [&](CLI::App* cmd, const char* default_format) {
        cmd->add_option("--format", format_name,
                        std::string("output format: json, jsonl or csv (default ") +
                            default_format + ")");
        cmd->add_option("--output", output_path, "output path, '-' for stdout");
        cmd->parse_complete_callback([&format_name, default_format]() {
            if (format_name.empty())
                format_name = default_format;
        });
    };
    auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--s", seed.s, "curve parameter s as p/q");
        cmd->add_option("--x", seed.x, "seed point x-coordinate as p/q");
        cmd->add_option("--y", seed.y, "seed point y-coordinate as p/q");
    };

    CLI::App* family = app.add_subcommand(
        "family", "cuboid classes from successive multiples of a curve point");
    add_seed(family);
    family->add_option("--n", n_max, "number of multiples to emit")->default_val(1);
    add_common(family, "jsonl");

    CLI::App* from_point = app.add_subcommand(
        "from-point", "the cuboid class of a single curve point");
    add_seed(from_point);
    add_common(from_point, "json");

    CLI::App* invert = app.add_subcommand(
        "invert", "recover (t, gamma) and the parameter fiber from edges bf,ef,gf");
    invert->add_option("--edges", edges_text, "edges bf,ef,gf as p/q values")->required();
    add_common(invert, "json");

    CLI::App* fibers = app.add_subcommand(
        "fibers", "the 32 curve-point preimages of a cuboid class");
    fibers->add_option("--t", t_text, "parameter t as p/q")->required();
    fibers->add_option("--gamma", gamma_text, "parameter gamma as p/q")->required();
    add_common(fibers, "jsonl");

    CLI::App* rank = app.add_subcommand(
        "rank-family", "distinct curve parameters with certified non-torsion points");
    add_seed(rank);
    rank->add_option("--count", count, "number of distinct parameters")->default_val(1);
    add_common(rank, "jsonl");

    CLI::App* search = app.add_subcommand(
        "search", "brute-force scan for primitive integer face cuboids");
    search->add_option("--max-edge", max_edge, "largest edge to scan")->default_val(700);
    search->add_option("--threads", threads, "worker threads (0 = hardware)")->default_val(0);
    add_common(search, "jsonl");

    CLI::App* verify = app.add_subcommand(
        "verify", "round-trip an integer cuboid through the correspondence");
    verify->add_option("--edges", edges_text, "three positive integer edges a,b,c")->required();
    add_common(verify, "json");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("cuboid");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 1;
    }

    try {
        OutputFormat format = parse_format(format_name);
        std::ofstream file;
        if (output_path != "-") {
            file.open(output_path);
            if (!file)
                throw DomainError("cannot open output file '" + output_path + "'");
        }
        std::ostream& sink = output_path == "-" ? out : file;

        std::vector<Json> records;
        if (family->parsed()) {
            records = family_records(seed.parse(), n_max);
        } else if (from_point->parsed()) {
            TripleA triple = seed.parse();
            records.push_back(
                cuboid_class_json(canonicalize(forward_map(triple.pair()))));
        } else if (invert->parsed()) {
            std::array<Rational, 3> edges = parse_edge_triple(edges_text);
            records.push_back(invert_record(edges[0], edges[1], edges[2]));
        } else if (fibers->parsed()) {
            PairB params(parse_rational(t_text), parse_rational(gamma_text));
            for (const TripleA& triple : class_fiber_32(params))
                records.push_back(triple_a_json(triple));
        } else if (rank->parsed()) {
            for (const RankFamilyEntry& entry : rank_family(seed.parse(), count)) {
                records.push_back(Json{{"s", to_string(entry.s)},
                                       {"witness", triple_a_json(entry.witness)}});
            }
        } else if (search->parsed()) {
            for (const IntegerCuboidHit& hit :
                 brute_force_face_cuboids(max_edge, oracle_thread_count(threads)))
                records.push_back(hit_json(hit));
        } else if (verify->parsed()) {
            records.push_back(verify_record(parse_integer_edges(edges_text)));
        }
        emit_records(records, format, sink);
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return 3;
    }
}

}  // namespace cli
}  // namespace cuboid
