#include "slt/checks.hpp"

#include "slt/errors.hpp"
#include "slt/random.hpp"

#include <algorithm>
#include <set>

namespace slt {

using io::Json;

std::string to_string(Status s) {
    switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::skip: return "SKIP";
    }
    return "?";
}

Json CheckReport::to_json() const {
    Json j = Json::object();
    j["check"] = id;
    j["property"] = property;
    j["subject"] = subject;
    j["status"] = to_string(status);
    j["samples"] = samples;
    j["details"] = details;
    j["notes"] = notes;
    j["counterexample"] = counterexample;
    return j;
}

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "theorem-a",      "isomorphism", "uniqueness",           "perp-identity",
        "latalg-tensor",  "ltpf",        "atpf-dimension",       "absl-tensor",
        "reflexivity-transfer", "rank-one-density", "cyclic-decomposition", "phi-join-probe"};
    return names;
}

bool check_takes_left_lattice(const std::string& name) {
    static const std::set<std::string> two{"isomorphism", "uniqueness",     "latalg-tensor",       "ltpf",
                                           "atpf-dimension", "absl-tensor", "reflexivity-transfer"};
    return two.contains(name);
}

namespace {

/// Records the first failed assertion of a check as its counterexample.
class Verdict {
public:
    explicit Verdict(CheckReport& r) : r_(r) {}

    bool expect(bool ok, const char* kind, Json data, const std::string& message) {
        if (ok || failed_) return ok;
        failed_ = true;
        r_.status = Status::fail;
        Json payload = Json::object();
        payload["check"] = r_.id;
        payload["kind"] = kind;
        payload["data"] = std::move(data);
        r_.counterexample = std::move(payload);
        r_.notes.push_back(message);
        return ok;
    }
    bool failed() const noexcept { return failed_; }

private:
    CheckReport& r_;
    bool failed_ = false;
};

CheckReport start(const char* id, const char* property, std::string subject) {
    CheckReport r;
    r.id = id;
    r.property = property;
    r.subject = std::move(subject);
    return r;
}

CheckReport skip(CheckReport r, std::string why) {
    r.status = Status::skip;
    r.notes.push_back(std::move(why));
    return r;
}

void require_product_dim(std::size_t n, const CheckConfig& cfg) {
    if (n > cfg.max_product_dim)
        throw CapExceeded("ambient product dimension " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cfg.max_product_dim));
}

Json subspaces_json(std::span<const Subspace> list) {
    Json j = Json::array();
    for (const auto& s : list) j.push_back(io::to_json(s));
    return j;
}

Json phi_pair_data(std::size_t k_dim, std::span<const Subspace> index, const Subspace& q1, const Subspace& q2) {
    Json d = Json::object();
    d["k_dim"] = k_dim;
    d["h_dim"] = index.empty() ? 0 : index.front().ambient_dim();
    d["index"] = subspaces_json(index);
    d["q1"] = io::to_json(q1);
    d["q2"] = io::to_json(q2);
    return d;
}

Json theta_phi_data(std::size_t k_dim, std::span<const Subspace> index, const Subspace& q) {
    Json d = Json::object();
    d["k_dim"] = k_dim;
    d["h_dim"] = index.empty() ? 0 : index.front().ambient_dim();
    d["index"] = subspaces_json(index);
    d["q"] = io::to_json(q);
    return d;
}

Json map_pair_data(const AtomMap& f, const AtomMap& g) {
    Json d = Json::object();
    d["f"] = io::to_json(f);
    d["g"] = io::to_json(g);
    return d;
}

Json invariance_data(const OperatorSpace& a, const Subspace& q) {
    Json d = Json::object();
    d["algebra"] = io::to_json(a);
    d["q"] = io::to_json(q);
    return d;
}

Json membership_data(const ProjectionLattice& lat, const Subspace& q) {
    Json d = Json::object();
    d["lattice"] = io::to_json(lat);
    d["q"] = io::to_json(q);
    return d;
}

Json rerun_data(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg) {
    Json d = Json::object();
    d["l"] = io::to_json(l.lattice);
    d["m"] = io::to_json(m.lattice);
    d["seed"] = cfg.seed;
    d["samples"] = cfg.samples;
    d["max_lattice"] = cfg.lattice_cap;
    return d;
}

AtomMap random_map(Rng& rng, std::span<const Subspace> atoms, std::size_t k_dim, Field field) {
    std::vector<Subspace> values;
    for (std::size_t j = 0; j < atoms.size(); ++j) values.push_back(rng.subspace(k_dim, field));
    const std::size_t h = atoms.empty() ? 0 : atoms.front().ambient_dim();
    return AtomMap::make(k_dim, h, {atoms.begin(), atoms.end()}, std::move(values));
}

AtomMap random_map_from(Rng& rng, std::span<const Subspace> atoms, std::span<const Subspace> pool, std::size_t k_dim) {
    std::vector<Subspace> values;
    for (std::size_t j = 0; j < atoms.size(); ++j)
        values.push_back(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))]);
    const std::size_t h = atoms.empty() ? 0 : atoms.front().ambient_dim();
    return AtomMap::make(k_dim, h, {atoms.begin(), atoms.end()}, std::move(values));
}

/// |values|^|atoms|, saturating at `limit + 1`.
std::size_t map_count(std::size_t values, std::size_t atoms, std::size_t limit) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < atoms; ++i) {
        total *= values;
        if (total > limit) return limit + 1;
    }
    return total;
}

/// Hypothesis shared by most checks: M is an ABSL with rank-one density.
std::optional<std::string> dense_absl_failure(const NamedLattice& m, Json& details) {
    if (!m.lattice.flags().is_absl) return m.name + " is not an ABSL";
    const DensityReport d = rank_one_density(m.lattice);
    details["rank_one_dim"] = d.rank_one_dim;
    details["alg_dim"] = d.alg_dim;
    if (!d.dense())
        return m.name + " lacks rank-one density (rank-one span " + std::to_string(d.rank_one_dim) + " < Alg " +
               std::to_string(d.alg_dim) + ")";
    return std::nullopt;
}

void record_sampling(CheckReport& r, const char* label, const InvariantSample& s) {
    r.details[std::string(label) + "_sampled"] = s.subspaces.size();
    r.details[std::string(label) + "_requested"] = s.requested;
    if (s.shortfall())
        r.notes.push_back(std::string("sampling shortfall for ") + label + ": " +
                          std::to_string(s.subspaces.size()) + " of " + std::to_string(s.requested));
}

std::string two_subject(const NamedLattice& l, const NamedLattice& m) {
    return "L=" + l.name + " M=" + m.name;
}

} // namespace

CheckReport check_theorem_a(const NamedLattice& m, const CheckConfig& cfg) {
    CheckReport r = start("theorem-a", "theta(phi(Q)) = Q on Lat(1 (x) Alg M); phi injective and meet-preserving",
                          "M=" + m.name + " K=" + std::to_string(cfg.k_dim));
    const ProjectionLattice& lat = m.lattice;
    const DensityReport density = rank_one_density(lat);
    r.details["rank_one_dim"] = density.rank_one_dim;
    r.details["alg_dim"] = density.alg_dim;
    if (!density.dense()) return skip(std::move(r), m.name + " lacks rank-one density");

    const std::size_t k = cfg.k_dim;
    require_product_dim(k * lat.ambient_dim(), cfg);
    const OperatorSpace amp = ampliation(k, alg_of(lat));
    const InvariantSample sample = sample_invariant_projections(amp, split_seed(cfg.seed, 1), cfg.samples, cfg.field);
    record_sampling(r, "invariant", sample);

    std::vector<Subspace> elements;
    for (const auto& s : lat.elements())
        if (!s.is_zero()) elements.push_back(s);
    const bool absl = lat.flags().is_absl;
    const std::vector<Subspace>& index = absl ? lat.atoms() : elements;
    r.details["index"] = absl ? "atoms" : "elements";

    Verdict v(r);
    std::vector<AtomMap> images;
    for (const auto& q : sample.subspaces) {
        const AtomMap f = phi_full(q, index, k);
        if (!v.expect(theta(f) == q, "theta_phi", theta_phi_data(k, index, q), "theta(phi(Q)) != Q")) return r;
        if (absl && !v.expect(theta(phi_full(q, elements, k)) == q, "theta_phi", theta_phi_data(k, elements, q),
                              "theta(phi(Q)) != Q over all lattice elements"))
            return r;
        images.push_back(f);
    }
    std::size_t pairs = 0;
    const auto& qs = sample.subspaces;
    for (std::size_t a = 0; a < qs.size(); ++a)
        for (std::size_t b = a + 1; b < qs.size(); ++b) {
            ++pairs;
            if (!v.expect(!(images[a] == images[b]), "phi_injective", phi_pair_data(k, index, qs[a], qs[b]),
                          "phi identifies two distinct invariant subspaces"))
                return r;
            if (!v.expect(phi_full(meet(qs[a], qs[b]), index, k) == pointwise_meet(images[a], images[b]), "phi_meet",
                          phi_pair_data(k, index, qs[a], qs[b]), "phi(Q1 meet Q2) != phi(Q1) meet phi(Q2)"))
                return r;
        }
    r.details["pairs"] = pairs;
    r.samples = qs.size();

    if (absl) {
        Rng rng(split_seed(cfg.seed, 2));
        for (std::size_t i = 0; i < cfg.samples; ++i) {
            const AtomMap f = random_map(rng, index, k, cfg.field);
            Json d = Json::object();
            d["map"] = io::to_json(f);
            if (!v.expect(phi_full(theta(f), index, k) == f, "phi_theta", std::move(d), "phi(theta(f)) != f")) return r;
        }
        r.details["random_maps"] = cfg.samples;
        r.samples += cfg.samples;
    }
    return r;
}

CheckReport check_isomorphism(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg) {
    CheckReport r = start("isomorphism", "theta: m(E,L) -> L (x) M is a lattice isomorphism with inverse phi",
                          two_subject(l, m));
    if (auto why = dense_absl_failure(m, r.details)) return skip(std::move(r), *why);
    require_product_dim(l.lattice.ambient_dim() * m.lattice.ambient_dim(), cfg);
    const TensorLattice t = tensor_lattice(l.lattice, m.lattice, cfg.lattice_cap);
    const auto& atoms = m.lattice.atoms();
    const std::size_t k = l.lattice.ambient_dim();

    std::vector<AtomMap> maps;
    const std::size_t total = map_count(l.lattice.size(), atoms.size(), cfg.lattice_cap);
    const bool exhaustive = total <= cfg.lattice_cap;
    if (exhaustive) {
        for_each_atom_map(atoms, l.lattice, [&](const AtomMap& f) { maps.push_back(f); });
    } else {
        Rng rng(split_seed(cfg.seed, 3));
        for (std::size_t i = 0; i < cfg.samples; ++i) maps.push_back(random_map_from(rng, atoms, l.lattice.elements(), k));
    }
    r.details["maps"] = maps.size();
    r.details["exhaustive"] = exhaustive;
    r.details["product_size"] = t.product.size();
    r.details["atoms"] = atoms.size();

    Verdict v(r);
    std::set<Subspace> images;
    std::vector<Subspace> image_of;
    for (const auto& f : maps) {
        const Subspace q = theta(f);
        if (!v.expect(t.product.contains(q), "member", membership_data(t.product, q), "theta(f) not in L (x) M"))
            return r;
        Json d = Json::object();
        d["map"] = io::to_json(f);
        if (!v.expect(phi_full(q, atoms, k) == f, "phi_theta", std::move(d), "phi(theta(f)) != f")) return r;
        images.insert(q);
        image_of.push_back(q);
    }
    if (!v.expect(images.size() == maps.size(), "rerun", rerun_data(l, m, cfg), "theta is not injective")) return r;
    if (exhaustive) {
        const std::vector<Subspace> sorted(images.begin(), images.end());
        if (!v.expect(sorted == t.product.elements(), "rerun", rerun_data(l, m, cfg),
                      "theta image (" + std::to_string(sorted.size()) + ") differs from L (x) M (" +
                          std::to_string(t.product.size()) + ")"))
            return r;
    }

    // Pointwise <-> latticewise operations, on all pairs when small.
    std::size_t pairs = 0;
    Rng rng(split_seed(cfg.seed, 4));
    const std::size_t n = maps.size();
    const bool all_pairs = n * n <= 4096;
    const std::size_t budget = all_pairs ? n * n : 16 * cfg.samples;
    for (std::size_t s = 0; s < budget; ++s) {
        const std::size_t a = all_pairs ? s / n : static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        const std::size_t b = all_pairs ? s % n : static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
        if (all_pairs && b < a) continue;
        ++pairs;
        if (!v.expect(theta(pointwise_join(maps[a], maps[b])) == join(image_of[a], image_of[b]), "theta_join",
                      map_pair_data(maps[a], maps[b]), "theta(f join g) != theta(f) join theta(g)"))
            return r;
        if (!v.expect(theta(pointwise_meet(maps[a], maps[b])) == meet(image_of[a], image_of[b]), "theta_meet",
                      map_pair_data(maps[a], maps[b]), "theta(f meet g) != theta(f) meet theta(g)"))
            return r;
    }
    r.details["pairs"] = pairs;
    if (l.lattice.flags().is_distributive)
        v.expect(t.product.flags().is_distributive, "rerun", rerun_data(l, m, cfg),
                 "L distributive but L (x) M is not distributive");
    r.samples = maps.size();
    return r;
}

CheckReport check_uniqueness(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg) {
    CheckReport r = start("uniqueness", "distinct atom maps have distinct theta-images", two_subject(l, m));
    if (auto why = dense_absl_failure(m, r.details)) return skip(std::move(r), *why);
    const auto& atoms = m.lattice.atoms();
    const std::size_t k = l.lattice.ambient_dim();
    require_product_dim(k * m.lattice.ambient_dim(), cfg);

    std::vector<AtomMap> maps;
    if (map_count(l.lattice.size(), atoms.size(), cfg.lattice_cap) <= cfg.lattice_cap)
        for_each_atom_map(atoms, l.lattice, [&](const AtomMap& f) { maps.push_back(f); });
    const std::size_t enumerated = maps.size();
    Rng rng(split_seed(cfg.seed, 5));
    for (std::size_t i = 0; i < cfg.samples; ++i) maps.push_back(random_map(rng, atoms, k, cfg.field));
    r.details["enumerated_maps"] = enumerated;
    r.details["random_maps"] = cfg.samples;

    Verdict v(r);
    std::vector<Subspace> images;
    for (const auto& f : maps) images.push_back(theta(f));
    std::size_t pairs = 0;
    for (std::size_t a = 0; a < maps.size(); ++a)
        for (std::size_t b = a + 1; b < maps.size(); ++b) {
            ++pairs;
            if (!v.expect(maps[a] == maps[b] || !(images[a] == images[b]), "theta_injective",
                          map_pair_data(maps[a], maps[b]), "two distinct maps share a theta-image"))
                return r;
        }
    r.details["pairs"] = pairs;
    r.samples = maps.size();
    return r;
}

CheckReport check_perp_identity(const NamedLattice& m, const CheckConfig& cfg) {
    CheckReport r = start("perp-identity", "theta(f)^perp = theta(f^perp); complement atoms D_j = meet_{i!=j} E_i^perp",
                          "M=" + m.name + " K=" + std::to_string(cfg.k_dim));
    if (auto why = dense_absl_failure(m, r.details)) return skip(std::move(r), *why);
    const std::size_t k = cfg.k_dim;
    require_product_dim(k * m.lattice.ambient_dim(), cfg);
    Verdict v(r);

    std::optional<ComplementLattice> comp;
    try {
        comp = complement_lattice(m.lattice);
    } catch (const std::logic_error& e) {
        Json d = Json::object();
        d["lattice"] = io::to_json(m.lattice);
        v.expect(false, "complement_atoms", std::move(d), e.what());
        return r;
    }
    r.details["complement_atoms"] = comp->atoms.size();
    r.details["complement_is_absl"] = comp->lattice.flags().is_absl;

    const auto& atoms = m.lattice.atoms();
    Rng rng(split_seed(cfg.seed, 6));
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        AtomMap f = i == 0 ? AtomMap::constant(k, atoms, Subspace::zero(k))
                  : i == 1 ? AtomMap::constant(k, atoms, Subspace::full(k))
                           : random_map(rng, atoms, k, cfg.field);
        const AtomMap fp = atom_map_perp(f, comp->atoms);
        Json d = Json::object();
        d["map"] = io::to_json(f);
        d["complement_atoms"] = subspaces_json(comp->atoms);
        if (!v.expect(perp(theta(f)) == theta(fp), "perp", std::move(d), "theta(f)^perp != theta(f^perp)")) return r;
    }
    r.samples = cfg.samples;
    return r;
}

CheckReport check_latalg_tensor(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg) {
    CheckReport r = start("latalg-tensor", "Lat Alg(L (x) M) = (Lat Alg L) (x) M", two_subject(l, m));
    if (auto why = dense_absl_failure(m, r.details)) return skip(std::move(r), *why);
    const std::size_t k = l.lattice.ambient_dim();
    require_product_dim(k * m.lattice.ambient_dim(), cfg);
    const TensorLattice t = tensor_lattice(l.lattice, m.lattice, cfg.lattice_cap);
    const OperatorSpace big = alg_of(t.product);
    const OperatorSpace small = alg_of(l.lattice);
    const auto& atoms = m.lattice.atoms();
    r.details["alg_tensor_dim"] = big.dimension();
    r.details["alg_l_dim"] = small.dimension();
    Verdict v(r);

    // (Lat Alg L) (x) M ⊆ Lat Alg(L (x) M)
    const InvariantSample pool = sample_invariant_projections(small, split_seed(cfg.seed, 7), cfg.samples, cfg.field);
    record_sampling(r, "lat_alg_l", pool);
    Rng rng(split_seed(cfg.seed, 8));
    for (std::size_t i = 0; i < cfg.samples && !pool.subspaces.empty(); ++i) {
        const AtomMap f = random_map_from(rng, atoms, pool.subspaces, k);
        const Subspace q = theta(f);
        if (!v.expect(is_invariant(q, big), "invariant", invariance_data(big, q),
                      "theta(f) with Lat Alg L values is not invariant under Alg(L (x) M)"))
            return r;
    }

    // Lat Alg(L (x) M) ⊆ (Lat Alg L) (x) M
    const InvariantSample qs = sample_invariant_projections(big, split_seed(cfg.seed, 9), cfg.samples, cfg.field);
    record_sampling(r, "lat_alg_tensor", qs);
    for (const auto& q : qs.subspaces) {
        const AtomMap f = phi_full(q, atoms, k);
        if (!v.expect(theta(f) == q, "theta_phi", theta_phi_data(k, atoms, q), "theta(phi(Q)) != Q")) return r;
        for (const auto& value : f.values)
            if (!v.expect(is_invariant(value, small), "invariant", invariance_data(small, value),
                          "phi(Q)(E) is not invariant under Alg L"))
                return r;
    }
    r.samples = cfg.samples + qs.subspaces.size();
    return r;
}

CheckReport check_ltpf(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg) {
    CheckReport r = start("ltpf", "Lat(Alg L (x) Alg M) = L (x) M for reflexive L", two_subject(l, m));
    if (auto why = dense_absl_failure(m, r.details)) return skip(std::move(r), *why);
    const std::size_t k = l.lattice.ambient_dim();
    require_product_dim(k * m.lattice.ambient_dim(), cfg);
    const OperatorSpace alg_l = alg_of(l.lattice);

    // Reflexivity of L is a hypothesis; only a sampled necessary condition is available.
    const InvariantSample lat_alg_l = sample_invariant_projections(alg_l, split_seed(cfg.seed, 10), cfg.samples, cfg.field);
    r.details["reflexivity"] = "sampled";
    for (const auto& s : lat_alg_l.subspaces)
        if (!l.lattice.contains(s)) return skip(std::move(r), l.name + " is not reflexive (sampled witness)");

    const OperatorSpace tensor_alg = operator_space_tensor_span(alg_l, alg_of(m.lattice));
    const auto& atoms = m.lattice.atoms();
    Verdict v(r);
    const InvariantSample qs = sample_invariant_projections(tensor_alg, split_seed(cfg.seed, 11), cfg.samples, cfg.field);
    record_sampling(r, "invariant", qs);
    const bool two_atoms = atoms.size() == 2;
    r.details["two_atom_form"] = two_atoms;
    for (const auto& q : qs.subspaces) {
        const AtomMap f = phi_full(q, atoms, k);
        if (!v.expect(theta(f) == q, "theta_phi", theta_phi_data(k, atoms, q), "theta(phi(Q)) != Q")) return r;
        for (const auto& value : f.values)
            if (!v.expect(l.lattice.contains(value), "member", membership_data(l.lattice, value),
                          "phi(Q)(E) is not an element of L"))
                return r;
        if (two_atoms) {
            const Subspace explicit_form = join(tensor(f.values[0], atoms[0]), tensor(f.values[1], atoms[1]));
            if (!v.expect(explicit_form == q, "theta_phi", theta_phi_data(k, atoms, q),
                          "Q != (L1 (x) P) join (L2 (x) Q)"))
                return r;
        }
    }

    std::size_t maps = 0;
    auto visit = [&](const AtomMap& f) {
        ++maps;
        if (v.failed()) return;
        const Subspace q = theta(f);
        v.expect(is_invariant(q, tensor_alg), "invariant", invariance_data(tensor_alg, q),
                 "theta(f) with values in L is not invariant under Alg L (x) Alg M");
    };
    if (map_count(l.lattice.size(), atoms.size(), cfg.lattice_cap) <= cfg.lattice_cap) {
        for_each_atom_map(atoms, l.lattice, visit);
    } else {
        Rng rng(split_seed(cfg.seed, 12));
        for (std::size_t i = 0; i < cfg.samples; ++i) visit(random_map_from(rng, atoms, l.lattice.elements(), k));
    }
    r.details["theta_maps"] = maps;
    r.samples = qs.subspaces.size() + maps;
    return r;
}

CheckReport check_atpf_dimension(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg) {
    CheckReport r = start("atpf-dimension", "Alg(L (x) M) = Alg L (x) Alg M", two_subject(l, m));
    const DensityReport d = rank_one_density(m.lattice);
    r.details["rank_one_dim"] = d.rank_one_dim;
    r.details["alg_dim"] = d.alg_dim;
    if (!d.dense()) return skip(std::move(r), m.name + " lacks rank-one density");
    require_product_dim(l.lattice.ambient_dim() * m.lattice.ambient_dim(), cfg);
    const TensorLattice t = tensor_lattice(l.lattice, m.lattice, cfg.lattice_cap);
    const OperatorSpace lhs = alg_of(t.product);
    const OperatorSpace rhs = operator_space_tensor_span(alg_of(l.lattice), alg_of(m.lattice));
    r.details["alg_tensor_dim"] = lhs.dimension();
    r.details["kronecker_span_dim"] = rhs.dimension();
    Json data = Json::object();
    data["a"] = io::to_json(lhs);
    data["b"] = io::to_json(rhs);
    Verdict v(r);
    v.expect(operator_space_equal(lhs, rhs), "opspace_equal", std::move(data),
             "Alg(L (x) M) differs from the Kronecker span");
    r.samples = 1;
    return r;
}

CheckReport check_absl_tensor(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg) {
    CheckReport r = start("absl-tensor", "L (x) M is an ABSL with atoms D_i (x) E_j", two_subject(l, m));
    if (!l.lattice.flags().is_absl || !m.lattice.flags().is_absl)
        return skip(std::move(r), "both factors must be ABSLs");
    const bool m_dense = has_rank_one_density(m.lattice);
    const bool l_dense = m_dense ? false : has_rank_one_density(l.lattice);
    r.details["dense_factor"] = m_dense ? "M" : (l_dense ? "L" : "none");
    if (!m_dense && !l_dense) return skip(std::move(r), "neither factor has rank-one density");
    const std::size_t kd = l.lattice.ambient_dim();
    const std::size_t hd = m.lattice.ambient_dim();
    require_product_dim(kd * hd, cfg);
    const TensorLattice t = tensor_lattice(l.lattice, m.lattice, cfg.lattice_cap);
    const ProjectionLattice& p = t.product;
    r.details["product_size"] = p.size();
    r.details["product_atoms"] = p.atoms().size();
    Verdict v(r);

    Json lat_data = Json::object();
    lat_data["lattice"] = io::to_json(p);
    if (!v.expect(p.flags().is_absl, "absl", lat_data, "L (x) M is not an ABSL")) return r;

    std::vector<Subspace> expected;
    for (const auto& di : l.lattice.atoms())
        for (const auto& ej : m.lattice.atoms()) expected.push_back(tensor(di, ej));
    std::sort(expected.begin(), expected.end());
    Json atom_data = lat_data;
    atom_data["expected_atoms"] = subspaces_json(expected);
    if (!v.expect(expected == p.atoms(), "absl_atoms", std::move(atom_data), "atoms differ from {D_i (x) E_j}"))
        return r;

    // Complement witness L' = join_j P'_j (x) E_j, decomposing over the dense factor's atoms.
    const ProjectionLattice& coeffs = m_dense ? l.lattice : m.lattice;
    const auto& atoms = m_dense ? m.lattice.atoms() : l.lattice.atoms();
    const std::size_t k = m_dense ? kd : hd;
    for (const auto& x : p.elements()) {
        const Subspace oriented = m_dense ? x : flip_factors(x, kd, hd);
        const AtomMap f = phi_full(oriented, atoms, k);
        std::vector<Subspace> comps;
        bool found = true;
        for (const auto& value : f.values) {
            const auto idx = coeffs.index_of(value);
            const auto c = idx ? find_complement(coeffs, *idx) : std::nullopt;
            if (!c) {
                found = false;
                break;
            }
            comps.push_back(coeffs[*c]);
        }
        Json d = Json::object();
        d["lattice"] = io::to_json(p);
        d["x"] = io::to_json(x);
        if (!v.expect(found, "complement_witness", d, "phi(X) has a value without a complement in the factor"))
            return r;
        const Subspace witness_oriented = theta(AtomMap::make(k, f.h_dim, atoms, comps));
        const Subspace witness = m_dense ? witness_oriented : flip_factors(witness_oriented, hd, kd);
        d["witness"] = io::to_json(witness);
        if (!v.expect(meet(x, witness).is_zero() && join(x, witness).is_full(), "complement_witness", std::move(d),
                      "L' is not a complement of X"))
            return r;
    }
    r.samples = p.size();
    return r;
}

CheckReport check_reflexivity_transfer(const NamedLattice& l, const NamedLattice& m, const CheckConfig& cfg) {
    CheckReport r = start("reflexivity-transfer",
                          "Lat Alg(L (x) M) membership transfers through phi; finite-K property (p) surrogate",
                          two_subject(l, m));
    if (auto why = dense_absl_failure(m, r.details)) return skip(std::move(r), *why);
    const std::size_t kd = l.lattice.ambient_dim();
    const std::size_t hd = m.lattice.ambient_dim();
    require_product_dim(kd * hd, cfg);
    const TensorLattice t = tensor_lattice(l.lattice, m.lattice, cfg.lattice_cap);
    const OperatorSpace big = alg_of(t.product);
    const OperatorSpace alg_l = alg_of(l.lattice);
    const auto& atoms = m.lattice.atoms();
    Verdict v(r);

    const InvariantSample qs = sample_invariant_projections(big, split_seed(cfg.seed, 13), cfg.samples, cfg.field);
    record_sampling(r, "lat_alg_tensor", qs);
    std::size_t outside = 0;
    for (const auto& q : qs.subspaces) {
        const AtomMap f = phi_full(q, atoms, kd);
        const bool in_product = t.product.contains(q);
        const bool values_in_l = std::all_of(f.values.begin(), f.values.end(),
                                             [&](const Subspace& s) { return l.lattice.contains(s); });
        if (!in_product) ++outside;
        Json d = Json::object();
        d["l"] = io::to_json(l.lattice);
        d["m"] = io::to_json(m.lattice);
        d["q"] = io::to_json(q);
        if (!v.expect(in_product == values_in_l, "membership_transfer", std::move(d),
                      "Q in L (x) M does not match phi(Q) valued in L"))
            return r;
    }
    r.details["sampled_outside_tensor_lattice"] = outside;
    r.notes.push_back("finite factors only: infinite separably-acting CSL factors are not covered");

    // Property (p) surrogate: enlarge K by a multiplicity space of dimension `extra`.
    std::size_t extra = 1;
    for (std::size_t c = 2; c >= 2; --c)
        if (c * kd * hd <= cfg.max_product_dim) {
            extra = c;
            break;
        }
    r.details["multiplicity_dim"] = extra;
    if (extra == 1) r.notes.push_back("multiplicity space collapsed to 1 at the product-dimension cap");
    const OperatorSpace amp = ampliation(extra, big);
    const OperatorSpace amp_l = ampliation(extra, alg_l);
    const InvariantSample ps = sample_invariant_projections(amp, split_seed(cfg.seed, 14), cfg.samples, cfg.field);
    record_sampling(r, "property_p", ps);
    for (const auto& q : ps.subspaces) {
        const AtomMap f = phi_full(q, atoms, extra * kd);
        if (!v.expect(theta(f) == q, "theta_phi", theta_phi_data(extra * kd, atoms, q),
                      "stage 1: Q != join_j R_j (x) E_j"))
            return r;
        for (const auto& value : f.values)
            if (!v.expect(is_invariant(value, amp_l), "invariant", invariance_data(amp_l, value),
                          "stage 2: R_j not invariant under 1 (x) Alg L"))
                return r;
    }
    r.samples = qs.subspaces.size() + ps.subspaces.size();
    return r;
}

CheckReport check_rank_one_density(const NamedLattice& m, std::optional<bool> expect_dense) {
    CheckReport r = start("rank-one-density", "span of rank-one operators in Alg M equals Alg M; density => distributive",
                          "M=" + m.name);
    const DensityReport d = rank_one_density(m.lattice);
    r.details["rank_one_dim"] = d.rank_one_dim;
    r.details["alg_dim"] = d.alg_dim;
    r.details["dense"] = d.dense();
    r.details["distributive"] = m.lattice.flags().is_distributive;
    Json data = Json::object();
    data["lattice"] = io::to_json(m.lattice);
    Verdict v(r);
    if (expect_dense) {
        r.details["expected_dense"] = *expect_dense;
        Json with_expect = data;
        with_expect["expect_dense"] = *expect_dense;
        if (!v.expect(d.dense() == *expect_dense, "density", std::move(with_expect),
                      "rank-one density differs from the expected value"))
            return r;
    }
    v.expect(!d.dense() || m.lattice.flags().is_distributive, "density_distributive", std::move(data),
             "dense lattice that is not distributive");
    r.samples = 1;
    return r;
}

CheckReport check_cyclic_decomposition(const NamedLattice& m, const CheckConfig& cfg) {
    CheckReport r = start("cyclic-decomposition", "orbit span of xi under 1 (x) Alg M equals theta(f_xi)",
                          "M=" + m.name + " K=" + std::to_string(cfg.k_dim));
    const DensityReport d = rank_one_density(m.lattice);
    r.details["rank_one_dim"] = d.rank_one_dim;
    r.details["alg_dim"] = d.alg_dim;
    if (!d.dense()) return skip(std::move(r), m.name + " lacks rank-one density");
    const std::size_t k = cfg.k_dim;
    const std::size_t n = k * m.lattice.ambient_dim();
    require_product_dim(n, cfg);
    Verdict v(r);
    Rng rng(split_seed(cfg.seed, 15));
    for (std::size_t i = 0; i < cfg.samples; ++i) {
        const Vector xi = i == 0 ? Vector(n) : rng.vector(n, cfg.field);
        Json data = Json::object();
        data["m"] = io::to_json(m.lattice);
        data["k_dim"] = k;
        data["xi"] = io::vector_to_json(xi);
        try {
            cyclic_decomposition(xi, m.lattice, k);
        } catch (const std::logic_error& e) {
            if (dynamic_cast<const PreconditionError*>(&e)) throw;
            v.expect(false, "orbit", std::move(data), e.what());
            return r;
        }
    }
    r.details["index"] = m.lattice.flags().is_absl ? "atoms" : "elements";
    r.samples = cfg.samples;
    return r;
}

CheckReport check_phi_join_probe(const NamedLattice& m, const CheckConfig& cfg, std::optional<Subspace> l1,
                                 std::optional<Subspace> l2) {
    CheckReport r = start("phi-join-probe", "asserts phi(Q1 join Q2) = phi(Q1) join phi(Q2); expected to FAIL",
                          "M=" + m.name + " K=" + std::to_string(cfg.k_dim));
    if (auto why = dense_absl_failure(m, r.details)) return skip(std::move(r), *why);
    const auto& atoms = m.lattice.atoms();
    if (atoms.size() < 2) return skip(std::move(r), m.name + " has fewer than two atoms");
    const std::size_t k = cfg.k_dim;
    require_product_dim(k * m.lattice.ambient_dim(), cfg);

    const Subspace first = l1.value_or(Subspace::full(k));
    Subspace second;
    if (l2) {
        second = *l2;
    } else {
        Vector e1(k);
        e1[0] = Scalar(1);
        const std::vector<Vector> vs{e1};
        second = Subspace::span(k, vs);
    }
    if (first.ambient_dim() != k || second.ambient_dim() != k) throw DimensionMismatch("probe: L_i not on K");
    const Subspace common = meet(first, second);
    if (common.is_zero()) return skip(std::move(r), "L1 meet L2 = 0; the configuration needs a nonzero meet");

    const Subspace& e1 = atoms[0];
    const Subspace& e2 = atoms[1];
    const Subspace e12 = join(e1, e2);
    const Subspace q1 = tensor(first, e1);
    const Subspace q2 = tensor(second, e2);
    const Subspace q = join(q1, q2);
    const std::vector<Subspace> at_join{e12};
    const Subspace phi_q = phi_full(q, at_join, k).values[0];
    const Subspace phi_q1 = phi_full(q1, at_join, k).values[0];
    const Subspace phi_q2 = phi_full(q2, at_join, k).values[0];

    r.details["phi_M_dominates_meet"] = leq(common, phi_q);
    r.details["meet_nonzero"] = !common.is_zero();
    r.details["phi_Li_vanish_at_join"] = phi_q1.is_zero() && phi_q2.is_zero();
    r.details["phi_Li_at_own_atom"] =
        phi_full(q1, std::vector<Subspace>{e1}, k).values[0] == first &&
        phi_full(q2, std::vector<Subspace>{e2}, k).values[0] == second;
    r.details["redundant_representation"] = join(q, tensor(common, e12)) == q;
    r.samples = 1;

    Verdict v(r);
    v.expect(phi_q == join(phi_q1, phi_q2), "phi_join", phi_pair_data(k, at_join, q1, q2),
             "phi(M)(E1 join E2) != phi(L1 (x) E1)(E1 join E2) join phi(L2 (x) E2)(E1 join E2)");
    return r;
}

} // namespace slt
