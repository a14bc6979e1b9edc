#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wtorsor/json_io.hpp"

namespace {

using wtorsor::json;

long long enum_bound_from_env() {
    const char* env = std::getenv("WTORSOR_ENUM_BOUND");
    if (!env) return wtorsor::kDefaultEnumBound;
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (!end || *end != '\0' || v <= 0)
        throw wtorsor::InvalidInputError("WTORSOR_ENUM_BOUND must be a positive integer");
    return v;
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw wtorsor::InvalidInputError("cannot open input file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw wtorsor::InvalidInputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

wtorsor::WeightedGroup load_weighted(const std::string& path) {
    return wtorsor::weighted_group_from_json(load_json(path));
}

std::vector<long long> parse_coeff_list(const std::string& text) {
    std::vector<long long> coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
        char* end = nullptr;
        const long long v = std::strtoll(tok.c_str(), &end, 10);
        if (tok.empty() || !end || *end != '\0')
            throw wtorsor::InvalidInputError("bad coefficient list entry: '" + tok + "'");
        coeffs.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return coeffs;
}

std::vector<wtorsor::LensSpace> parse_lens_list(const std::string& text) {
    std::vector<wtorsor::LensSpace> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos
                                                                            : comma - pos);
        const std::size_t colon = tok.find(':');
        if (colon == std::string::npos)
            throw wtorsor::InvalidInputError("lens spaces are written p:q, got '" + tok + "'");
        try {
            out.emplace_back(std::stol(tok.substr(0, colon)), std::stol(tok.substr(colon + 1)));
        } catch (const std::logic_error&) {
            throw wtorsor::InvalidInputError("lens spaces are written p:q, got '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Fourier analysis of weighted finite abelian groups, the maximal-special-"
                 "subgroup invariant, and lens-space / Alexander-polynomial applications"};
    app.require_subcommand(1);

    std::string input, input2, format = "json", emit_kind, poly_text, lens_text;
    std::vector<std::string> inputs;
    long p = 0, q = 0, n = 0, pmax = 0;

    auto* ft = app.add_subcommand("ft", "Fourier transform of a weighted group");
    ft->add_option("--input", input, "weighted group JSON file")->required();
    ft->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv"}));

    auto* ift = app.add_subcommand("ift", "inverse Fourier transform of dual weights");
    ift->add_option("--input", input, "dual weights JSON file")->required();

    auto* red = app.add_subcommand("reduce", "reduced part of a weighted group");
    red->add_option("--input", input, "weighted group JSON file")->required();

    auto* sum = app.add_subcommand("sum", "iterated direct sum of weighted groups");
    sum->add_option("--input", inputs, "weighted group JSON files (repeat)")->required();

    auto* ms = app.add_subcommand("ms", "maximal-special-subgroup multiset report");
    ms->add_option("--input", input, "weighted group JSON file")->required();

    auto* dec = app.add_subcommand("decompose", "counts of lens candidates in a weighted group");
    dec->add_option("--input", input, "weighted group JSON file")->required();
    dec->add_option("--lens", lens_text, "candidates p:q[,p:q...]")->required();

    auto* lens = app.add_subcommand("lens", "lens space invariants");
    lens->add_option("--p", p)->required();
    lens->add_option("--q", q)->required();
    lens->add_option("--emit", emit_kind, "dual | time | f")
        ->required()
        ->check(CLI::IsMember({"dual", "time", "f"}));

    auto* cls = app.add_subcommand("classify-lens", "lens family classification");
    cls->add_option("--pmax", pmax)->required();

    auto* alex = app.add_subcommand("alex", "Alexander polynomial operations");
    alex->require_subcommand(1);
    auto* torus = alex->add_subcommand("torus", "torus knot Alexander polynomial");
    torus->add_option("--p", p)->required();
    torus->add_option("--q", q)->required();
    auto* div = alex->add_subcommand("divides", "torus-polynomial divisibility test");
    div->add_option("--poly", poly_text, "integer coefficients, constant first")->required();
    div->add_option("--p", p)->required();
    div->add_option("--q", q)->required();
    auto* surg = alex->add_subcommand("surgery", "surgery torsion dual weights");
    surg->add_option("--poly", poly_text, "integer coefficients, constant first")->required();
    surg->add_option("--n", n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 1;
    }

    try {
        const long long bound = enum_bound_from_env();

        if (*ft) {
            const auto dual = wtorsor::fourier_transform(load_weighted(input));
            if (format == "csv")
                std::cout << wtorsor::dual_weights_to_csv(dual);
            else
                emit(wtorsor::dual_weights_to_json(dual));
        } else if (*ift) {
            emit(wtorsor::weighted_group_to_json(
                wtorsor::inverse_fourier(wtorsor::dual_weights_from_json(load_json(input)))));
        } else if (*red) {
            emit(wtorsor::weighted_group_to_json(wtorsor::reduce(load_weighted(input))));
        } else if (*sum) {
            if (inputs.size() < 2)
                throw wtorsor::InvalidInputError("sum needs at least two --input files");
            wtorsor::WeightedGroup acc = load_weighted(inputs[0]);
            for (std::size_t i = 1; i < inputs.size(); ++i)
                acc = wtorsor::direct_sum(acc, load_weighted(inputs[i])).sum;
            emit(wtorsor::weighted_group_to_json(acc));
        } else if (*ms) {
            emit(wtorsor::ms_multiset_to_json(wtorsor::ms_multiset(load_weighted(input), bound)));
        } else if (*dec) {
            const auto target = load_weighted(input);
            const auto spaces = parse_lens_list(lens_text);
            std::vector<wtorsor::WeightedGroup> candidates;
            candidates.reserve(spaces.size());
            for (const auto& l : spaces) candidates.push_back(wtorsor::lens_reduced_d(l));
            const auto counts = wtorsor::recover_decomposition(target, candidates, bound);
            json out = json::array();
            for (std::size_t i = 0; i < spaces.size(); ++i)
                out.push_back(json{{"lens", wtorsor::lens_to_json(spaces[i])},
                                   {"count", counts[i]}});
            emit(json{{"counts", std::move(out)}});
        } else if (*lens) {
            const wtorsor::LensSpace l(p, q);
            if (emit_kind == "dual")
                emit(wtorsor::dual_weights_to_json(wtorsor::lens_torsion_dual(l)));
            else if (emit_kind == "time")
                emit(wtorsor::weighted_group_to_json(wtorsor::lens_reduced_d(l)));
            else
                emit(wtorsor::weighted_group_to_json(wtorsor::lens_f(l)));
        } else if (*cls) {
            emit(wtorsor::classification_to_json(
                pmax, wtorsor::classify_lens_family(pmax, bound)));
        } else if (*torus) {
            json delta = wtorsor::alexander_to_json(wtorsor::torus_delta(p, q));
            emit(json{{"p", p}, {"q", q}, {"coeffs", delta["coeffs"]}});
        } else if (*div) {
            const auto delta = wtorsor::AlexanderPolynomial::from_ints(parse_coeff_list(poly_text));
            emit(json{{"divides", wtorsor::divides_delta(delta, p, q)}});
        } else if (*surg) {
            const auto delta = wtorsor::AlexanderPolynomial::from_ints(parse_coeff_list(poly_text));
            emit(wtorsor::dual_weights_to_json(wtorsor::surgery_torsion_dual(delta, n)));
        }
        return 0;
    } catch (const wtorsor::Error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", e.kind()}}.dump() << "\n";
        return e.kind() == "resource" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
        return 1;
    }
}
