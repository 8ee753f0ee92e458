// condec: conditional decomposability and coordinated nonblockingness checks
// for generators in the .gen text format.
//
// Every command prints one JSON report on stdout. Exit codes: 0 when the
// checked property holds, 1 when it fails (the report carries a witness),
// 2 on usage, parse, or precondition errors.

#include "condec/condec.hpp"
#include "condec/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace condec;
using nlohmann::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

struct FileParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Loaded {
    Generator g;
    std::string name;
    report::InputFile file;
};

Loaded load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw InvalidArgument("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        GenFile file = parse_gen_file(text);
        return {std::move(file.generator), file.name, {path, report::digest(text)}};
    } catch (const ParseError &e) {
        throw FileParseError(path + ": " + e.what());
    }
}

Alphabet parse_alphabet(const std::string &csv) {
    std::vector<Event> events;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto first = item.find_first_not_of(" \t");
        if (first == std::string::npos)
            continue;
        auto last = item.find_last_not_of(" \t");
        Event e = Event::parse(item.substr(first, last - first + 1));
        if (e.tilde)
            throw InvalidArgument("tilde event '" + e.str() + "' is not allowed in user input");
        events.push_back(std::move(e));
    }
    return Alphabet(std::move(events));
}

AlphabetFamily parse_family(const std::vector<std::string> &locals, const std::string &ek) {
    AlphabetFamily family;
    for (const std::string &l : locals)
        family.locals.push_back(parse_alphabet(l));
    family.coordinator = parse_alphabet(ek);
    family.validate();
    return family;
}

json generator_summary(const Generator &g, const std::string &name) {
    return {{"states", g.num_states()},
            {"transitions", g.num_transitions()},
            {"marked", g.num_marked()},
            {"alphabet", report::alphabet(g.alphabet())},
            {"generator", serialize_gen(g, name)}};
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw InvalidArgument("cannot write '" + path + "'");
    out << text;
}

class Timer {
public:
    double elapsed_ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int emit(const std::string &command, const std::vector<report::InputFile> &inputs, bool holds,
         json result, const Timer &timer) {
    std::cout << report::envelope(command, inputs, holds, std::move(result), timer.elapsed_ms())
                     .dump(2)
              << '\n';
    return holds ? kHolds : kFails;
}

struct TransformOptions {
    std::string out_path;
    std::string dot_path;
};

int emit_generator(const std::string &command, const std::vector<report::InputFile> &inputs,
                   const Generator &g, const std::string &name, const TransformOptions &opts,
                   const Timer &timer) {
    if (!opts.out_path.empty())
        write_file(opts.out_path, serialize_gen(g, name));
    if (!opts.dot_path.empty())
        write_file(opts.dot_path, export_dot(g, name));
    return emit(command, inputs, true, generator_summary(g, name), timer);
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Conditional decomposability checks for discrete-event generators", "condec"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> files;
    std::vector<std::string> locals;
    std::string ek;
    std::string onto;
    std::string over;
    std::string coordinator_path;
    std::string coordinator_mode;
    bool oracle_flag = false;
    bool direct_flag = false;
    TransformOptions topts;

    auto add_family = [&](CLI::App *sub) {
        sub->add_option("--local", locals, "Local alphabet E_i as comma-separated events")
            ->required()
            ->allow_extra_args(false)
            ->take_all();
        sub->add_option("--ek", ek, "Coordinator alphabet E_k (comma-separated, may be empty)")
            ->required();
    };
    auto add_transform_outputs = [&](CLI::App *sub) {
        sub->add_option("--out", topts.out_path, "Also write the result as a .gen file");
        sub->add_option("--dot", topts.dot_path, "Also write the result as Graphviz DOT");
    };

    auto *is_cd_cmd = app.add_subcommand("is-cd", "Check conditional decomposability");
    is_cd_cmd->add_option("file", file, "Generator marking K")->required();
    add_family(is_cd_cmd);
    is_cd_cmd->add_flag("--oracle", oracle_flag, "Cross-check against the definition-level oracle");

    auto *extend_cmd = app.add_subcommand("extend", "Extend E_k until K is decomposable");
    extend_cmd->add_option("file", file, "Generator marking K")->required();
    add_family(extend_cmd);

    auto *nb_cmd = app.add_subcommand("nonblocking", "Nonblockingness of a coordinated system");
    nb_cmd->add_option("components", files, "Component generators G_1..G_n")->required();
    nb_cmd->add_option("--coordinator", coordinator_path, "Coordinator generator G_k");
    nb_cmd->add_option("--coordinator-mode", coordinator_mode,
                       "Use the simplified check: supplied (G_k given) or intersection")
        ->check(CLI::IsMember({"supplied", "intersection"}));
    nb_cmd->add_option("--ek", ek, "Coordinator alphabet (intersection mode)");
    nb_cmd->add_flag("--direct", direct_flag, "Also check the full composition directly");

    auto *obs_cmd = app.add_subcommand("observer", "Check the observer property of P_k");
    obs_cmd->add_option("file", file, "Generator marking L")->required();
    obs_cmd->add_option("--ek", ek, "Target alphabet of the projection")->required();

    auto *proj_cmd = app.add_subcommand("project", "Natural projection of a generator");
    proj_cmd->add_option("file", file)->required();
    proj_cmd->add_option("--onto", onto, "Target alphabet")->required();
    add_transform_outputs(proj_cmd);

    auto *compose_cmd = app.add_subcommand("compose", "Parallel composition");
    compose_cmd->add_option("files", files)->required()->expected(2, -1);
    add_transform_outputs(compose_cmd);

    auto *trim_cmd = app.add_subcommand("trim", "Reachable and co-reachable part");
    trim_cmd->add_option("file", file)->required();
    add_transform_outputs(trim_cmd);

    auto *min_cmd = app.add_subcommand("minimize", "Minimal generator (L and L_m preserved)");
    min_cmd->add_option("file", file)->required();
    add_transform_outputs(min_cmd);

    auto *co_cmd = app.add_subcommand("complement", "Complement of the marked language");
    co_cmd->add_option("file", file)->required();
    co_cmd->add_option("--over", over, "Alphabet to complete over (default: own alphabet)");
    add_transform_outputs(co_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kError;
    }

    try {
        Timer timer;
        if (*is_cd_cmd) {
            Loaded k = load(file);
            AlphabetFamily family = parse_family(locals, ek);
            CdVerdict v = is_cd(k.g, family);
            json result = report::to_json(v);
            if (oracle_flag) {
                CdVerdict o = oracle::cd_by_definition(k.g, family);
                result["oracle"] = report::to_json(o);
                result["oracle_agrees"] = o.decomposable == v.decomposable;
                if (o.decomposable != v.decomposable)
                    std::cerr << "warning: oracle disagrees with the polynomial check\n";
            }
            return emit("is-cd", {k.file}, v.decomposable, result, timer);
        }
        if (*extend_cmd) {
            Loaded k = load(file);
            AlphabetFamily family = parse_family(locals, ek);
            if (k.g.alphabet() != family.global())
                throw InvalidArgument("generator alphabet " + to_string(k.g.alphabet()) +
                                      " differs from the union of local alphabets");
            ExtensionTrace t = family.locals.size() == 2
                                   ? extend2(k.g, family.locals[0], family.locals[1],
                                             family.coordinator)
                                   : extend_n(k.g, family);
            return emit("extend", {k.file}, t.verified, report::to_json(t), timer);
        }
        if (*nb_cmd) {
            std::vector<Generator> comps;
            std::vector<report::InputFile> inputs;
            for (const std::string &f : files) {
                Loaded l = load(f);
                comps.push_back(std::move(l.g));
                inputs.push_back(l.file);
            }
            NonblockingReport r;
            if (coordinator_mode == "intersection") {
                if (ek.empty() && !nb_cmd->count("--ek"))
                    throw InvalidArgument("intersection mode needs --ek");
                r = corollary_coordinator(comps, parse_alphabet(ek),
                                          CoordinatorMode::Intersection, nullptr, direct_flag);
            } else {
                if (coordinator_path.empty())
                    throw InvalidArgument("--coordinator is required unless "
                                          "--coordinator-mode intersection is used");
                Loaded gk = load(coordinator_path);
                inputs.push_back(gk.file);
                if (coordinator_mode == "supplied") {
                    r = corollary_coordinator(comps, gk.g.alphabet(),
                                              CoordinatorMode::SubsetSupplied, &gk.g, direct_flag);
                } else {
                    r = coordinated_nonblocking({std::move(comps), std::move(gk.g)}, direct_flag);
                }
            }
            json result = report::to_json(r);
            result["mode"] = coordinator_mode.empty() ? "theorem" : coordinator_mode;
            return emit("nonblocking", inputs, r.overall, result, timer);
        }
        if (*obs_cmd) {
            Loaded l = load(file);
            ObserverResult r = observer_check(l.g, parse_alphabet(ek));
            return emit("observer", {l.file}, r.is_observer, report::to_json(r), timer);
        }
        if (*proj_cmd) {
            Loaded l = load(file);
            return emit_generator("project", {l.file}, project(l.g, parse_alphabet(onto)),
                                  l.name + "_proj", topts, timer);
        }
        if (*compose_cmd) {
            std::vector<report::InputFile> inputs;
            std::optional<Generator> acc;
            std::string name;
            for (const std::string &f : files) {
                Loaded l = load(f);
                inputs.push_back(l.file);
                acc = acc ? parallel(*acc, l.g) : l.g;
                name += (name.empty() ? "" : "_") + l.name;
            }
            return emit_generator("compose", inputs, *acc, name, topts, timer);
        }
        if (*trim_cmd) {
            Loaded l = load(file);
            return emit_generator("trim", {l.file}, trim(l.g), l.name, topts, timer);
        }
        if (*min_cmd) {
            Loaded l = load(file);
            return emit_generator("minimize", {l.file}, minimize(l.g), l.name, topts, timer);
        }
        if (*co_cmd) {
            Loaded l = load(file);
            Alphabet target = over.empty() ? l.g.alphabet() : parse_alphabet(over);
            return emit_generator("complement", {l.file}, complement(complete(l.g, target)),
                                  l.name + "_co", topts, timer);
        }
    } catch (const PremiseViolation &e) {
        std::cerr << "error: " << e.what() << " (witness: \"" << to_string(e.witness().word)
                  << "\")\n";
        return kError;
    } catch (const FileParseError &e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kError;
    } catch (const InvalidArgument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
