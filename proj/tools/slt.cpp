// slt: command-line front end for the subspace-lattice toolkit.

#include "slt/errors.hpp"
#include "slt/fixtures.hpp"
#include "slt/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace slt;
using io::Json;

namespace {

struct Options {
    std::string field = "Q";
    std::uint64_t seed = 1;
    std::size_t samples = 16;
    std::optional<std::size_t> max_lattice;
    std::string output;
    std::string format = "json";
    std::string input;
    std::string l;
    std::string m;
    std::size_t k_dim = 2;
    std::size_t max_product_dim = 16;
    std::string check;
    std::string replay;
    std::string scenario;
};

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path, "cannot open file");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path, e.what());
    }
}

ProjectionLattice lattice_ref(const std::string& ref, std::size_t cap, const char* flag) {
    if (ref.empty()) throw ParseError(flag, "lattice argument required");
    Scenario none;
    none.base_dir = ".";
    return resolve_lattice(none, ref, cap);
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output);
    if (!out) throw ParseError(o.output, "cannot open output file");
    out << text;
}

std::string dump(const Json& j) {
    return j.dump(2) + "\n";
}

std::string lattice_table(const ProjectionLattice& lat) {
    std::ostringstream os;
    os << "dim " << lat.ambient_dim() << ", " << lat.size() << " elements, " << lat.atoms().size() << " atoms\n";
    const auto& f = lat.flags();
    os << "closed " << f.is_closed << "  csl " << f.is_csl << "  distributive " << f.is_distributive
       << "  complemented " << f.is_complemented << "  absl " << f.is_absl << "\n";
    for (const auto& s : lat.elements()) os << "  " << s.to_string() << "\n";
    return os.str();
}

std::string map_table(const AtomMap& f) {
    std::ostringstream os;
    for (std::size_t j = 0; j < f.size(); ++j) os << f.atoms[j].to_string() << " -> " << f.values[j].to_string() << "\n";
    return os.str();
}

int cmd_closure(const Options& o, std::size_t cap) {
    const ProjectionLattice lat = o.input.empty() ? lattice_ref(o.l, cap, "--L")
                                                  : io::lattice_from_json(read_json(o.input), cap, o.input);
    emit(o, o.format == "table" ? lattice_table(lat) : dump(io::to_json(lat)));
    return exit_ok;
}

int cmd_alg(const Options& o, std::size_t cap) {
    const ProjectionLattice lat = lattice_ref(o.m.empty() ? o.l : o.m, cap, "--M");
    const OperatorSpace a = alg_of(lat);
    emit(o, o.format == "table" ? "dim Alg = " + std::to_string(a.dimension()) + "\n" : dump(io::to_json(a)));
    return exit_ok;
}

int cmd_rankone(const Options& o, std::size_t cap) {
    const ProjectionLattice lat = lattice_ref(o.m.empty() ? o.l : o.m, cap, "--M");
    const DensityReport d = rank_one_density(lat);
    Json j = Json::object();
    j["rank_one_dim"] = d.rank_one_dim;
    j["alg_dim"] = d.alg_dim;
    j["dense"] = d.dense();
    j["rank_one_basis"] = io::to_json(rank_one_subspace(lat));
    if (o.format == "table")
        emit(o, "rank-one span " + std::to_string(d.rank_one_dim) + " / Alg " + std::to_string(d.alg_dim) +
                    (d.dense() ? "  dense\n" : "  not dense\n"));
    else
        emit(o, dump(j));
    return exit_ok;
}

int cmd_tensor(const Options& o, std::size_t cap) {
    const ProjectionLattice l = lattice_ref(o.l, cap, "--L");
    const ProjectionLattice m = lattice_ref(o.m, cap, "--M");
    if (l.ambient_dim() * m.ambient_dim() > o.max_product_dim)
        throw CapExceeded("ambient product dimension exceeds cap " + std::to_string(o.max_product_dim));
    const TensorLattice t = tensor_lattice(l, m, cap);
    emit(o, o.format == "table" ? lattice_table(t.product) : dump(io::to_json(t)));
    return exit_ok;
}

int cmd_theta(const Options& o) {
    if (o.input.empty()) throw ParseError("--input", "atom map JSON required");
    const AtomMap f = io::atom_map_from_json(read_json(o.input), o.input);
    const Subspace q = theta(f);
    emit(o, o.format == "table" ? q.to_string() + "\n" : dump(io::to_json(q)));
    return exit_ok;
}

int cmd_phi(const Options& o, std::size_t cap) {
    if (o.input.empty()) throw ParseError("--input", "subspace JSON required");
    const ProjectionLattice m = lattice_ref(o.m, cap, "--M");
    const Subspace q = io::subspace_from_json(read_json(o.input), o.k_dim * m.ambient_dim(), o.input);
    const AtomMap f = o.l.empty() ? phi_full(q, m.atoms(), o.k_dim)
                                  : phi_lattice(q, m.atoms(), lattice_ref(o.l, cap, "--L"));
    emit(o, o.format == "table" ? map_table(f) : dump(io::to_json(f)));
    return exit_ok;
}

int cmd_cyclic(const Options& o, std::size_t cap) {
    if (o.input.empty()) throw ParseError("--input", "vector JSON required");
    const ProjectionLattice m = lattice_ref(o.m, cap, "--M");
    Json j = read_json(o.input);
    if (j.is_object() && j.contains("xi")) j = j.at("xi");
    const Vector xi = io::vector_from_json(j, o.k_dim * m.ambient_dim(), o.input);
    const AtomMap f = cyclic_decomposition(xi, m, o.k_dim);
    emit(o, o.format == "table" ? map_table(f) : dump(io::to_json(f)));
    return exit_ok;
}

int finish_report(const Options& o, const CheckReport& r) {
    emit(o, o.format == "table" ? render_table({r}) : dump(r.to_json()));
    return r.status == Status::fail ? exit_check_failed : exit_ok;
}

int cmd_check(const Options& o, std::size_t cap) {
    if (!o.replay.empty()) {
        const Json payload = read_json(o.replay);
        const Json& cx = payload.contains("counterexample") ? payload.at("counterexample") : payload;
        return finish_report(o, replay_counterexample(cx));
    }
    CheckConfig cfg;
    cfg.seed = o.seed;
    cfg.samples = o.samples;
    cfg.k_dim = o.k_dim;
    cfg.lattice_cap = cap;
    cfg.max_product_dim = o.max_product_dim;
    cfg.field = parse_field(o.field);
    const NamedLattice m{o.m, lattice_ref(o.m, cap, "--M")};
    std::optional<NamedLattice> l;
    if (check_takes_left_lattice(o.check)) l = NamedLattice{o.l, lattice_ref(o.l, cap, "--L")};
    return finish_report(o, run_check(o.check, l ? &*l : nullptr, m, cfg));
}

int cmd_run(const Options& o, const CLI::App& app) {
    Scenario s = load_scenario(o.scenario);
    if (app.count("--seed")) s.seed = o.seed;
    if (app.count("--samples")) s.samples = o.samples;
    if (app.count("--field")) s.field = parse_field(o.field);
    const std::size_t cap = effective_cap(o.max_lattice, s.max_lattice);
    const ScenarioResult result = run_scenario(s, cap);
    emit(o, o.format == "table" ? result.table() : dump(result.to_json(s, cap)));
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification toolkit for finite subspace lattices and their tensor products"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--field", o.field, "Scalar field: Q or Qi")->check(CLI::IsMember({"Q", "Qi"}));
    app.add_option("--seed", o.seed, "Random seed");
    app.add_option("--samples", o.samples, "Samples per check")->check(CLI::PositiveNumber);
    app.add_option("--max-lattice", o.max_lattice, "Lattice closure cap (overrides SLT_MAX_LATTICE)")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-product-dim", o.max_product_dim, "Cap on the ambient product dimension")
        ->check(CLI::PositiveNumber);
    app.add_option("--output,-o", o.output, "Write output to PATH");
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--k-dim", o.k_dim, "Dimension of K")->check(CLI::PositiveNumber);

    auto* closure = app.add_subcommand("closure", "Close generators into a lattice");
    closure->add_option("--input,-i", o.input, "Lattice JSON with generators or elements");
    closure->add_option("--L", o.l, "Fixture name or lattice file");

    auto* alg = app.add_subcommand("alg", "Compute Alg L");
    alg->add_option("--M,--L", o.m, "Fixture name or lattice file")->required();

    auto* rankone = app.add_subcommand("rankone", "Rank-one density of Alg L");
    rankone->add_option("--M,--L", o.m, "Fixture name or lattice file")->required();

    auto* tensor = app.add_subcommand("tensor", "Tensor product lattice L (x) M");
    tensor->add_option("--L", o.l, "Left factor")->required();
    tensor->add_option("--M", o.m, "Right factor")->required();

    auto* theta_cmd = app.add_subcommand("theta", "theta(f) for an atom map");
    theta_cmd->add_option("--input,-i", o.input, "Atom map JSON")->required();

    auto* phi_cmd = app.add_subcommand("phi", "phi(Q) over the atoms of M");
    phi_cmd->add_option("--input,-i", o.input, "Subspace JSON on K (x) H")->required();
    phi_cmd->add_option("--M", o.m, "Lattice supplying the atoms")->required();
    phi_cmd->add_option("--L", o.l, "Restrict values to this lattice (lattice mode)");

    auto* cyclic = app.add_subcommand("cyclic", "Cyclic-vector decomposition of xi");
    cyclic->add_option("--input,-i", o.input, "Vector JSON (array or {\"xi\": [...]})")->required();
    cyclic->add_option("--M", o.m, "Lattice M")->required();

    auto* check = app.add_subcommand("check", "Run a single property check");
    check->add_option("name", o.check, "Check name")->required()->check(CLI::IsMember(check_names()));
    check->add_option("--L", o.l, "Left lattice");
    check->add_option("--M", o.m, "Right lattice");
    check->add_option("--replay", o.replay, "Re-run a counterexample payload (or a report entry)");

    auto* run = app.add_subcommand("run", "Run a scenario file");
    run->add_option("scenario", o.scenario, "Scenario JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_bad_input;
    }

    try {
        const std::size_t cap = run->parsed() ? 0 : effective_cap(o.max_lattice, default_lattice_cap);
        if (closure->parsed()) return cmd_closure(o, cap);
        if (alg->parsed()) return cmd_alg(o, cap);
        if (rankone->parsed()) return cmd_rankone(o, cap);
        if (tensor->parsed()) return cmd_tensor(o, cap);
        if (theta_cmd->parsed()) return cmd_theta(o);
        if (phi_cmd->parsed()) return cmd_phi(o, cap);
        if (cyclic->parsed()) return cmd_cyclic(o, cap);
        if (check->parsed()) {
            if (o.replay.empty() && o.m.empty()) throw ParseError("--M", "lattice argument required");
            return cmd_check(o, cap);
        }
        return cmd_run(o, app);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return exit_cap_exceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_bad_input;
    }
}
