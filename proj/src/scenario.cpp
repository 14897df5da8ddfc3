#include "slt/scenario.hpp"

#include "slt/errors.hpp"
#include "slt/fixtures.hpp"
#include "slt/random.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace slt {

using io::Json;

Field parse_field(const std::string& text) {
    if (text == "Q") return Field::Rational;
    if (text == "Qi") return Field::GaussianRational;
    throw ParseError("field", "expected Q or Qi, got '" + text + "'");
}

std::string field_name(Field f) {
    return f == Field::Rational ? "Q" : "Qi";
}

CheckReport run_check(const std::string& name, const NamedLattice* l, const NamedLattice& m, const CheckConfig& cfg,
                      const CheckOptions& opts) {
    if (check_takes_left_lattice(name) && !l) throw ParseError(name, "check needs an L lattice");
    if (name == "theorem-a") return check_theorem_a(m, cfg);
    if (name == "isomorphism") return check_isomorphism(*l, m, cfg);
    if (name == "uniqueness") return check_uniqueness(*l, m, cfg);
    if (name == "perp-identity") return check_perp_identity(m, cfg);
    if (name == "latalg-tensor") return check_latalg_tensor(*l, m, cfg);
    if (name == "ltpf") return check_ltpf(*l, m, cfg);
    if (name == "atpf-dimension") return check_atpf_dimension(*l, m, cfg);
    if (name == "absl-tensor") return check_absl_tensor(*l, m, cfg);
    if (name == "reflexivity-transfer") return check_reflexivity_transfer(*l, m, cfg);
    if (name == "rank-one-density") return check_rank_one_density(m, opts.expect_dense);
    if (name == "cyclic-decomposition") return check_cyclic_decomposition(m, cfg);
    if (name == "phi-join-probe") return check_phi_join_probe(m, cfg, opts.l1, opts.l2);
    throw ParseError(name, "unknown check");
}

namespace {

std::string at(const std::string& where, const std::string& key) {
    return where + "/" + key;
}

void only_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
            throw ParseError(at(where, key), "unknown field");
    }
}

std::size_t positive(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned() || j.get<std::size_t>() == 0) throw ParseError(where, "expected a positive integer");
    return j.get<std::size_t>();
}

std::uint64_t seed_value(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned()) throw ParseError(where, "expected a non-negative integer seed");
    return j.get<std::uint64_t>();
}

std::string text(const Json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where, "expected a string");
    return j.get<std::string>();
}

bool resolvable(const Scenario& s, const std::string& ref) {
    if (s.lattices.contains(ref) || fixtures::is_fixture_name(ref)) return true;
    std::error_code ec;
    return std::filesystem::is_regular_file(s.base_dir / ref, ec);
}

ProjectionLattice lattice_from_spec(const Json& spec, std::size_t cap, const std::string& where) {
    if (spec.is_object() && spec.contains("random_two_atom")) {
        const Json& r = spec.at("random_two_atom");
        const std::string w = at(where, "random_two_atom");
        if (!r.is_object()) throw ParseError(w, "expected an object");
        only_keys(r, {"dim", "atom_dim", "seed"}, w);
        const std::size_t dim = r.contains("dim") ? positive(r.at("dim"), at(w, "dim")) : 4;
        const std::size_t atom_dim = r.contains("atom_dim") ? positive(r.at("atom_dim"), at(w, "atom_dim")) : dim / 2;
        const std::uint64_t seed = r.contains("seed") ? seed_value(r.at("seed"), at(w, "seed")) : 1;
        if (2 * atom_dim != dim) throw ParseError(w, "dim must be twice atom_dim");
        return fixtures::random_two_atom(dim, atom_dim, seed);
    }
    if (spec.is_object() && spec.contains("fixture")) return fixtures::by_name(text(spec.at("fixture"), at(where, "fixture")));
    return io::lattice_from_json(spec, cap, where);
}

} // namespace

Scenario parse_scenario(const Json& j) {
    if (!j.is_object()) throw ParseError("", "scenario must be a JSON object");
    only_keys(j, {"name", "field", "seed", "samples", "k_dim", "max_lattice", "max_product_dim", "lattices", "checks"},
              "");
    Scenario s;
    if (j.contains("name")) s.name = text(j.at("name"), "/name");
    if (j.contains("field")) {
        try {
            s.field = parse_field(text(j.at("field"), "/field"));
        } catch (const ParseError& e) {
            throw ParseError("/field", e.what());
        }
    }
    if (j.contains("seed")) s.seed = seed_value(j.at("seed"), "/seed");
    if (j.contains("samples")) s.samples = positive(j.at("samples"), "/samples");
    if (j.contains("k_dim")) s.k_dim = positive(j.at("k_dim"), "/k_dim");
    if (j.contains("max_lattice")) s.max_lattice = positive(j.at("max_lattice"), "/max_lattice");
    if (j.contains("max_product_dim")) s.max_product_dim = positive(j.at("max_product_dim"), "/max_product_dim");

    if (j.contains("lattices")) {
        const Json& lats = j.at("lattices");
        if (!lats.is_object()) throw ParseError("/lattices", "expected an object of named lattices");
        for (const auto& [name, spec] : lats.items()) {
            if (!spec.is_object()) throw ParseError(at("/lattices", name), "expected a lattice object");
            s.lattices.emplace(name, spec);
        }
    }

    if (j.contains("checks")) {
        const Json& list = j.at("checks");
        if (!list.is_array()) throw ParseError("/checks", "expected an array");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string w = "/checks/" + std::to_string(i);
            const Json& c = list[i];
            if (!c.is_object()) throw ParseError(w, "expected an object");
            only_keys(c, {"check", "L", "M", "k_dim", "samples", "seed", "expect", "expect_dense", "L1", "L2"}, w);
            ScenarioCheck sc;
            if (!c.contains("check")) throw ParseError(at(w, "check"), "missing field");
            sc.check = text(c.at("check"), at(w, "check"));
            const auto& names = check_names();
            if (std::find(names.begin(), names.end(), sc.check) == names.end())
                throw ParseError(at(w, "check"), "unknown check '" + sc.check + "'");
            if (!c.contains("M")) throw ParseError(at(w, "M"), "missing field");
            sc.m = text(c.at("M"), at(w, "M"));
            if (check_takes_left_lattice(sc.check)) {
                if (!c.contains("L")) throw ParseError(at(w, "L"), "missing field");
                sc.l = text(c.at("L"), at(w, "L"));
            } else if (c.contains("L")) {
                throw ParseError(at(w, "L"), "check '" + sc.check + "' takes no L lattice");
            }
            if (c.contains("k_dim")) sc.k_dim = positive(c.at("k_dim"), at(w, "k_dim"));
            if (c.contains("samples")) sc.samples = positive(c.at("samples"), at(w, "samples"));
            if (c.contains("seed")) sc.seed = seed_value(c.at("seed"), at(w, "seed"));
            if (c.contains("expect")) {
                const std::string e = text(c.at("expect"), at(w, "expect"));
                if (e != "pass" && e != "fail") throw ParseError(at(w, "expect"), "expected \"pass\" or \"fail\"");
                sc.expect_fail = e == "fail";
            }
            if (c.contains("expect_dense")) {
                if (!c.at("expect_dense").is_boolean()) throw ParseError(at(w, "expect_dense"), "expected a boolean");
                sc.options.expect_dense = c.at("expect_dense").get<bool>();
            }
            const std::size_t k = sc.k_dim.value_or(s.k_dim);
            if (c.contains("L1")) sc.options.l1 = io::subspace_from_json(c.at("L1"), k, at(w, "L1"));
            if (c.contains("L2")) sc.options.l2 = io::subspace_from_json(c.at("L2"), k, at(w, "L2"));
            s.checks.push_back(std::move(sc));
        }
    }
    for (std::size_t i = 0; i < s.checks.size(); ++i) {
        const std::string w = "/checks/" + std::to_string(i);
        if (!resolvable(s, s.checks[i].m)) throw ParseError(at(w, "M"), "unresolvable lattice '" + s.checks[i].m + "'");
        if (!s.checks[i].l.empty() && !resolvable(s, s.checks[i].l))
            throw ParseError(at(w, "L"), "unresolvable lattice '" + s.checks[i].l + "'");
    }
    return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), "cannot open scenario file");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path.string(), e.what());
    }
    Scenario s = parse_scenario(j);
    s.base_dir = path.parent_path();
    return s;
}

ProjectionLattice resolve_lattice(const Scenario& s, const std::string& ref, std::size_t cap) {
    if (auto it = s.lattices.find(ref); it != s.lattices.end())
        return lattice_from_spec(it->second, cap, "/lattices/" + ref);
    if (fixtures::is_fixture_name(ref)) return fixtures::by_name(ref);
    const std::filesystem::path p = s.base_dir / ref;
    std::ifstream in(p);
    if (!in) throw ParseError(ref, "unresolvable lattice");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(p.string(), e.what());
    }
    return lattice_from_spec(j, cap, p.string());
}

std::size_t effective_cap(std::optional<std::size_t> flag, std::size_t fallback) {
    if (flag) return *flag;
    if (const char* env = std::getenv("SLT_MAX_LATTICE")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || v == 0) throw ParseError("SLT_MAX_LATTICE", "expected a positive integer");
        return static_cast<std::size_t>(v);
    }
    return fallback;
}

ScenarioResult run_scenario(const Scenario& s, std::optional<std::size_t> cap_override) {
    const std::size_t cap = effective_cap(cap_override, s.max_lattice);
    std::map<std::string, ProjectionLattice> cache;
    auto lattice = [&](const std::string& ref) -> const ProjectionLattice& {
        auto it = cache.find(ref);
        if (it == cache.end()) it = cache.emplace(ref, resolve_lattice(s, ref, cap)).first;
        return it->second;
    };

    ScenarioResult result;
    for (std::size_t i = 0; i < s.checks.size(); ++i) {
        const ScenarioCheck& c = s.checks[i];
        CheckConfig cfg;
        cfg.seed = c.seed.value_or(split_seed(s.seed, i));
        cfg.samples = c.samples.value_or(s.samples);
        cfg.k_dim = c.k_dim.value_or(s.k_dim);
        cfg.lattice_cap = cap;
        cfg.max_product_dim = s.max_product_dim;
        cfg.field = s.field;

        const NamedLattice m{c.m, lattice(c.m)};
        std::optional<NamedLattice> l;
        if (!c.l.empty()) l = NamedLattice{c.l, lattice(c.l)};

        const auto t0 = std::chrono::steady_clock::now();
        CheckReport r = run_check(c.check, l ? &*l : nullptr, m, cfg, c.options);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        const bool failed = r.status == Status::fail;
        if (c.expect_fail ? !failed : failed) result.exit_code = exit_check_failed;
        result.reports.push_back(std::move(r));
        result.expect_fail.push_back(c.expect_fail);
    }
    return result;
}

Json ScenarioResult::to_json(const Scenario& s, std::size_t cap) const {
    std::size_t pass = 0, fail = 0, skipped = 0, expected = 0;
    Json checks = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const CheckReport& r = reports[i];
        Json j = r.to_json();
        j["expect"] = expect_fail[i] ? "fail" : "pass";
        const bool as_expected = r.status == Status::skip || ((r.status == Status::fail) == expect_fail[i]);
        j["as_expected"] = as_expected;
        checks.push_back(std::move(j));
        switch (r.status) {
        case Status::pass: ++pass; break;
        case Status::fail: ++fail; break;
        case Status::skip: ++skipped; break;
        }
        if (expect_fail[i] && r.status == Status::fail) ++expected;
    }
    Json out = Json::object();
    out["report_version"] = 1;
    out["scenario"] = s.name;
    out["seed"] = s.seed;
    out["field"] = field_name(s.field);
    out["caps"] = Json{{"max_lattice", cap}, {"max_product_dim", s.max_product_dim}, {"samples", s.samples}};
    out["summary"] = Json{{"total", reports.size()}, {"pass", pass},         {"fail", fail},
                          {"skip", skipped},         {"expected_fail", expected}, {"exit_code", exit_code}};
    out["checks"] = std::move(checks);
    return out;
}

std::string ScenarioResult::table() const {
    return render_table(reports, expect_fail);
}

std::string render_table(const std::vector<CheckReport>& reports, const std::vector<bool>& expect_fail) {
    std::size_t wc = 5, ws = 7;
    for (const auto& r : reports) {
        wc = std::max(wc, r.id.size());
        ws = std::max(ws, r.subject.size());
    }
    std::ostringstream out;
    char buf[64];
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); };
    out << pad("#", 4) << pad("check", wc + 2) << pad("subject", ws + 2) << pad("status", 10) << pad("samples", 9)
        << "time(s)\n";
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const CheckReport& r = reports[i];
        std::string status = to_string(r.status);
        if (i < expect_fail.size() && expect_fail[i]) status += r.status == Status::fail ? " (xf)" : " (!xf)";
        std::snprintf(buf, sizeof buf, "%.3f", r.seconds);
        out << pad(std::to_string(i + 1), 4) << pad(r.id, wc + 2) << pad(r.subject, ws + 2) << pad(status, 10)
            << pad(std::to_string(r.samples), 9) << buf << "\n";
        for (const auto& n : r.notes) out << "      - " << n << "\n";
    }
    return out.str();
}

} // namespace slt
