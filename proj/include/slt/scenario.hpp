#ifndef SLT_SCENARIO_HPP
#define SLT_SCENARIO_HPP

#include "slt/checks.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slt {

/// Exit codes shared by the CLI and run_scenario.
enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_bad_input = 2, exit_cap_exceeded = 3 };

Field parse_field(const std::string& text);
std::string field_name(Field f);

/// Per-check options beyond the lattices.
struct CheckOptions {
    std::optional<bool> expect_dense;
    std::optional<Subspace> l1;
    std::optional<Subspace> l2;
};

/// Dispatch by check name. `l` is required for two-lattice checks and ignored otherwise.
CheckReport run_check(const std::string& name, const NamedLattice* l, const NamedLattice& m, const CheckConfig& cfg,
                      const CheckOptions& opts = {});

struct ScenarioCheck {
    std::string check;
    std::string l;
    std::string m;
    std::optional<std::size_t> k_dim;
    std::optional<std::size_t> samples;
    std::optional<std::uint64_t> seed;
    bool expect_fail = false;
    CheckOptions options;
};

struct Scenario {
    std::string name = "unnamed";
    Field field = Field::Rational;
    std::uint64_t seed = 1;
    std::size_t samples = 16;
    std::size_t k_dim = 2;
    std::size_t max_lattice = default_lattice_cap;
    std::size_t max_product_dim = 16;
    std::map<std::string, io::Json> lattices; // name -> literal spec
    std::vector<ScenarioCheck> checks;
    std::filesystem::path base_dir;           // for relative lattice file references
};

/// Validate and apply defaults. Throws ParseError with a JSON-pointer location.
Scenario parse_scenario(const io::Json& j);
Scenario load_scenario(const std::filesystem::path& path);

/*
 * Resolve a lattice reference: a scenario-local name, a fixture name, or a
 * path to a lattice JSON file (relative to the scenario directory).
 */
ProjectionLattice resolve_lattice(const Scenario& s, const std::string& ref, std::size_t cap);

struct ScenarioResult {
    std::vector<CheckReport> reports;
    std::vector<bool> expect_fail;
    int exit_code = exit_ok;

    io::Json to_json(const Scenario& s, std::size_t cap) const;
    std::string table() const;
};

/// Runs the checks in declared order. CapExceeded and ParseError propagate.
ScenarioResult run_scenario(const Scenario& s, std::optional<std::size_t> cap_override = {});

/// The cap in force: explicit override, else SLT_MAX_LATTICE, else `fallback`.
std::size_t effective_cap(std::optional<std::size_t> flag, std::size_t fallback);

std::string render_table(const std::vector<CheckReport>& reports, const std::vector<bool>& expect_fail = {});

} // namespace slt

#endif
