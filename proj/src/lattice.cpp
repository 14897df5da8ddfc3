#include "slt/lattice.hpp"

#include "slt/errors.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

namespace slt {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::vector<Subspace> canonical_family(std::size_t dim, std::vector<Subspace> elements) {
    for (const auto& s : elements)
        if (s.ambient_dim() != dim)
            throw DimensionMismatch("lattice element on F^" + std::to_string(s.ambient_dim()) +
                                    ", expected F^" + std::to_string(dim));
    elements.push_back(Subspace::zero(dim));
    elements.push_back(Subspace::full(dim));
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return elements;
}

} // namespace

std::optional<std::size_t> ProjectionLattice::index_of(const Subspace& s) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), s);
    if (it == elements_.end() || !(*it == s)) return std::nullopt;
    return static_cast<std::size_t>(it - elements_.begin());
}

void ProjectionLattice::require_closed(const char* op) const {
    if (!flags_.is_closed) throw PreconditionError(std::string(op) + " requires a closed lattice");
}

std::size_t ProjectionLattice::meet_index(std::size_t a, std::size_t b) const {
    require_closed("meet lookup");
    return meet_[a * elements_.size() + b];
}

std::size_t ProjectionLattice::join_index(std::size_t a, std::size_t b) const {
    require_closed("join lookup");
    return join_[a * elements_.size() + b];
}

ProjectionLattice ProjectionLattice::from_elements(std::size_t dim, std::vector<Subspace> elements, Exec exec) {
    ProjectionLattice lat;
    lat.dim_ = dim;
    lat.elements_ = canonical_family(dim, std::move(elements));
    const std::size_t n = lat.elements_.size();
    lat.meet_.assign(n * n, npos);
    lat.join_.assign(n * n, npos);

    // Meet/join tables: the dominant cost, one independent pair per iteration.
    bool closed = true;
    const auto total = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel) reduction(&& : closed)
    for (std::ptrdiff_t k = 0; k < total; ++k) {
        const std::size_t a = static_cast<std::size_t>(k) / n;
        const std::size_t b = static_cast<std::size_t>(k) % n;
        if (b < a) continue;
        const auto m = lat.index_of(meet(lat.elements_[a], lat.elements_[b]));
        const auto j = lat.index_of(join(lat.elements_[a], lat.elements_[b]));
        if (!m || !j) {
            closed = false;
            continue;
        }
        lat.meet_[a * n + b] = lat.meet_[b * n + a] = *m;
        lat.join_[a * n + b] = lat.join_[b * n + a] = *j;
    }
    lat.flags_.is_closed = closed;
    if (!closed) {
        lat.meet_.clear();
        lat.join_.clear();
        return lat;
    }

    for (std::size_t a = 1; a < n; ++a) {
        bool minimal = true;
        for (std::size_t b = 1; b < n && minimal; ++b)
            if (b != a && lat.leq_index(b, a)) minimal = false;
        if (minimal) lat.atoms_.push_back(lat.elements_[a]);
    }

    // Distributivity scan over index triples; keep the lexicographically first witness.
    std::vector<std::size_t> first_bad(n, npos);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
    for (std::ptrdiff_t sa = 0; sa < static_cast<std::ptrdiff_t>(n); ++sa) {
        const auto a = static_cast<std::size_t>(sa);
        for (std::size_t b = 0; b < n && first_bad[a] == npos; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const std::size_t lhs = lat.meet_[a * n + lat.join_[b * n + c]];
                const std::size_t rhs = lat.join_[lat.meet_[a * n + b] * n + lat.meet_[a * n + c]];
                if (lhs != rhs) {
                    first_bad[a] = b * n + c;
                    break;
                }
            }
    }
    for (std::size_t a = 0; a < n; ++a)
        if (first_bad[a] != npos) {
            lat.distributivity_witness_ = std::array<std::size_t, 3>{a, first_bad[a] / n, first_bad[a] % n};
            break;
        }

    lat.flags_ = classify_lattice(lat);
    return lat;
}

LatticeFlags classify_lattice(const ProjectionLattice& lat) {
    LatticeFlags f;
    f.is_closed = lat.is_closed();
    if (!f.is_closed) return f;
    const auto& el = lat.elements();
    const std::size_t n = el.size();

    f.is_csl = true;
    for (std::size_t a = 0; a < n && f.is_csl; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            const Matrix& p = el[a].projection();
            const Matrix& q = el[b].projection();
            if (!(p * q == q * p)) {
                f.is_csl = false;
                break;
            }
        }

    f.is_distributive = !lat.distributivity_witness().has_value();

    f.is_complemented = true;
    for (std::size_t a = 0; a < n; ++a)
        if (!find_complement(lat, a)) {
            f.is_complemented = false;
            break;
        }

    bool atomic = true;
    std::vector<std::size_t> atom_idx;
    for (const auto& atom : lat.atoms()) atom_idx.push_back(*lat.index_of(atom));
    for (std::size_t a = 0; a < n && atomic; ++a) {
        std::size_t acc = lat.zero_index();
        for (std::size_t e : atom_idx)
            if (lat.leq_index(e, a)) acc = lat.join_index(acc, e);
        atomic = acc == a;
    }
    f.is_absl = f.is_distributive && f.is_complemented && atomic;
    return f;
}

std::optional<std::size_t> find_complement(const ProjectionLattice& lat, std::size_t a) {
    for (std::size_t b = 0; b < lat.size(); ++b)
        if (lat.meet_index(a, b) == lat.zero_index() && lat.join_index(a, b) == lat.top_index()) return b;
    return std::nullopt;
}

bool is_distributive_reference(const ProjectionLattice& lat) {
    const auto& el = lat.elements();
    for (const auto& a : el)
        for (const auto& b : el)
            for (const auto& c : el)
                if (!(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)))) return false;
    return true;
}

ProjectionLattice lattice_closure(std::size_t dim, std::span<const Subspace> generators, std::size_t cap,
                                  Exec exec) {
    if (cap < 2) throw PreconditionError("lattice cap must be at least 2");
    std::vector<Subspace> order = canonical_family(dim, {generators.begin(), generators.end()});
    std::set<Subspace> known(order.begin(), order.end());
    if (order.size() > cap)
        throw CapExceeded("lattice closure exceeds cap " + std::to_string(cap) + " before closing", order,
                          {order.front(), order.back()});

    std::size_t frontier = 0;
    while (frontier < order.size()) {
        const std::size_t end = order.size();
        // Every pair (i, j) with j in the frontier and i <= j, in a fixed order.
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        for (std::size_t j = frontier; j < end; ++j)
            for (std::size_t i = 0; i <= j; ++i) pairs.emplace_back(i, j);
        std::vector<std::array<Subspace, 2>> results(pairs.size());
#pragma omp parallel for schedule(dynamic) if (exec == Exec::parallel)
        for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(pairs.size()); ++k) {
            const auto [i, j] = pairs[static_cast<std::size_t>(k)];
            results[static_cast<std::size_t>(k)] = {meet(order[i], order[j]), join(order[i], order[j])};
        }
        frontier = end;
        for (std::size_t k = 0; k < pairs.size(); ++k)
            for (auto& s : results[k]) {
                if (known.contains(s)) continue;
                known.insert(s);
                order.push_back(std::move(s));
                if (order.size() > cap) {
                    std::vector<Subspace> partial(known.begin(), known.end());
                    throw CapExceeded("lattice closure exceeds cap " + std::to_string(cap), std::move(partial),
                                      {order[pairs[k].first], order[pairs[k].second]});
                }
            }
    }
    return ProjectionLattice::from_elements(dim, std::move(order), exec);
}

ProjectionLattice lattice_closure_reference(std::size_t dim, std::span<const Subspace> generators,
                                            std::size_t cap) {
    if (cap < 2) throw PreconditionError("lattice cap must be at least 2");
    std::set<Subspace> known;
    for (auto& s : canonical_family(dim, {generators.begin(), generators.end()})) known.insert(s);
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<Subspace> snapshot(known.begin(), known.end());
        for (const auto& a : snapshot)
            for (const auto& b : snapshot)
                for (auto s : {meet(a, b), join(a, b)})
                    if (known.insert(std::move(s)).second) {
                        changed = true;
                        if (known.size() > cap)
                            throw CapExceeded("lattice closure exceeds cap " + std::to_string(cap),
                                              {known.begin(), known.end()}, {a, b});
                    }
    }
    return ProjectionLattice::from_elements(dim, {known.begin(), known.end()}, Exec::serial);
}

Subspace l_minus(const Subspace& l, const ProjectionLattice& lat) {
    if (!lat.is_closed()) throw PreconditionError("L_- requires a closed lattice");
    const auto li = lat.index_of(l);
    if (!li) throw PreconditionError("L_-: " + l.to_string() + " is not an element of the lattice");
    std::size_t acc = lat.zero_index();
    for (std::size_t p = 0; p < lat.size(); ++p)
        if (!lat.leq_index(*li, p)) acc = lat.join_index(acc, p);
    return lat[acc];
}

std::vector<Subspace> lattice_atoms(const ProjectionLattice& lat) {
    if (!lat.is_closed()) throw PreconditionError("atoms require a closed lattice");
    return lat.atoms();
}

ComplementLattice complement_lattice(const ProjectionLattice& lat) {
    if (!lat.flags().is_absl) throw PreconditionError("complement lattice requires an ABSL");
    const std::size_t n = lat.ambient_dim();
    std::vector<Subspace> perps;
    perps.reserve(lat.size());
    for (const auto& s : lat.elements()) perps.push_back(perp(s));
    ComplementLattice out{ProjectionLattice::from_elements(n, std::move(perps)), {}};

    const auto& atoms = lat.atoms();
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        Subspace d = Subspace::full(n);
        for (std::size_t i = 0; i < atoms.size(); ++i)
            if (i != j) d = meet(d, perp(atoms[i]));
        out.atoms.push_back(std::move(d));
    }

    std::vector<Subspace> sorted = out.atoms;
    std::sort(sorted.begin(), sorted.end());
    if (!out.lattice.flags().is_absl || sorted != out.lattice.atoms())
        throw std::logic_error("complement lattice: D_j family does not match the computed atoms");
    return out;
}

} // namespace slt
