#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tannaka/errors.hpp"
#include "tannaka/jobs/jobs.hpp"

using namespace tannaka;

namespace {

std::string fixture_dir() {
    if (const char* env = std::getenv("TANNAKA_FIXTURES")) return env;
    return TANNAKA_FIXTURE_DIR;
}

std::string slurp(std::istream& in) {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// --fixture, then --input, then stdin.
std::pair<std::string, std::string> read_input(const std::string& fixture, const std::string& input) {
    std::string path;
    if (!fixture.empty())
        path = fixture_dir() + "/" + fixture + ".json";
    else if (!input.empty() && input != "-")
        path = input;
    if (path.empty()) return {slurp(std::cin), "<stdin>"};
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open " + path);
    return {slurp(in), path};
}

moncat::DimAssignment parse_dims(const std::string& text) {
    moncat::DimAssignment dims;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("--dims: expected NAME=DIM, got '" + item + "'");
        try {
            std::size_t used = 0;
            const std::string num = item.substr(eq + 1);
            const unsigned long v = std::stoul(num, &used);
            if (used != num.size()) throw std::invalid_argument(num);
            dims[item.substr(0, eq)] = v;
        } catch (const std::logic_error&) {
            throw ParseError("--dims: bad dimension in '" + item + "'");
        }
    }
    return dims;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tannaka reconstruction from presented categories and fiber functors"};
    app.require_subcommand(1);

    std::string field_name, fixture, input;
    bool as_json = false;
    app.add_option("--field", field_name, "Ground field: Q or Fp:<p> (overrides the document)");
    app.add_flag("--json", as_json, "Print the report as JSON");
    app.add_option("--fixture", fixture, "Read the named document from the fixture directory");
    app.add_option("--input", input, "Read the document from a file (default: stdin)");

    using Job = jobs::JobResult (*)(const jobs::Json&, std::optional<exact::Field>);
    const std::vector<std::tuple<std::string, std::string, Job>> document_commands{
        {"validate", "Check the functor, tensor and duality data or the coalgebra and comodule axioms", jobs::cmd_validate},
        {"reconstruct", "Build End^v(F) with its structure maps and check the axioms", jobs::cmd_reconstruct},
        {"lift", "Lift the functor to End^v(F)-comodules", jobs::cmd_lift},
        {"rho-tilde", "The comparison map End^v(U) -> B for a category of comodules", jobs::cmd_rho_tilde},
        {"nat", "Compare Nat^v(F, G) with the space of natural transformations", jobs::cmd_nat},
        {"characters", "Grouplikes and characters with their group tables", jobs::cmd_characters},
    };
    std::optional<Job> chosen;
    for (const auto& [name, help, job] : document_commands) {
        auto* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        sub->callback([&chosen, job = job] { chosen = job; });
    }

    std::string lhs, rhs, dims_text;
    auto* coherence = app.add_subcommand("coherence", "Decide whether two symmetry expressions are equal");
    coherence->fallthrough();
    coherence->add_option("lhs", lhs, "First expression, e.g. (swap[X,Y;0] ; swap[Y,X;0])")->required();
    coherence->add_option("rhs", rhs, "Second expression")->required();
    coherence->add_option("--dims", dims_text, "Dimensions for the matrix cross-check, e.g. X=2,Y=3");

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<exact::Field> field;
        if (!field_name.empty()) field = exact::Field::from_name(field_name);
        jobs::JobResult result;
        if (coherence->parsed()) {
            std::optional<moncat::DimAssignment> dims;
            if (!dims_text.empty()) dims = parse_dims(dims_text);
            result = jobs::cmd_coherence(lhs, rhs, dims);
        } else {
            auto [text, source] = read_input(fixture, input);
            result = (*chosen)(jobs::parse_document(text, source), field);
        }
        if (as_json)
            std::cout << result.json.dump(2) << "\n";
        else
            std::cout << jobs::render_text(result.json);
        return result.ok() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
