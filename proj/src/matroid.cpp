#include "bcx/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bcx {

std::vector<Mask> antichain_minimalize(std::vector<Mask> sets) {
    std::sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
        int pa = popcount(a), pb = popcount(b);
        if (pa != pb) return pa < pb;
        return a < b;
    });
    std::vector<Mask> out;
    for (Mask s : sets) {
        bool dominated = false;
        for (Mask kept : out) {
            if (subset_of(kept, s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

GroundSet::GroundSet(std::vector<int> labels) : labels_(std::move(labels)) {
    for (int l : labels_) {
        if (l < 0) throw Error(ErrorCode::BadParameters, "negative element label " + std::to_string(l));
    }
    std::sort(labels_.begin(), labels_.end());
    if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
        throw Error(ErrorCode::BadParameters, "duplicate element labels in ground set");
    }
}

std::size_t GroundSet::index_of(int label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) {
        throw Error(ErrorCode::ElementNotInGroundSet, "element " + std::to_string(label));
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

bool GroundSet::contains(int label) const {
    return std::binary_search(labels_.begin(), labels_.end(), label);
}

Mask GroundSet::mask_of(const std::vector<int>& labels) const {
    Mask m = 0;
    for (int l : labels) m |= bit(index_of(l));
    return m;
}

std::vector<int> GroundSet::labels_of(Mask m) const {
    std::vector<int> out;
    for_each_bit(m, [&](std::size_t i) { out.push_back(labels_[i]); });
    return out;
}

LinearOrder LinearOrder::default_for(const GroundSet& ground) {
    std::vector<std::size_t> priority(ground.size());
    std::iota(priority.begin(), priority.end(), std::size_t{0});
    return LinearOrder(std::move(priority));
}

LinearOrder LinearOrder::from_labels(const GroundSet& ground, const std::vector<int>& labels) {
    if (labels.size() != ground.size()) {
        throw Error(ErrorCode::BadParameters, "order must list every ground element exactly once");
    }
    std::vector<std::size_t> priority(ground.size(), ground.size());
    for (std::size_t pos = 0; pos < labels.size(); ++pos) {
        std::size_t idx = ground.index_of(labels[pos]);
        if (priority[idx] != ground.size()) {
            throw Error(ErrorCode::BadParameters, "order repeats element " + std::to_string(labels[pos]));
        }
        priority[idx] = pos;
    }
    return LinearOrder(std::move(priority));
}

std::size_t LinearOrder::least_index(Mask m) const {
    std::size_t best = kMaskBits;
    std::size_t best_priority = priority_.size();
    for_each_bit(m, [&](std::size_t i) {
        if (priority_[i] < best_priority) {
            best_priority = priority_[i];
            best = i;
        }
    });
    return best;
}

std::vector<int> LinearOrder::to_labels(const GroundSet& ground) const {
    std::vector<int> out(size());
    for (std::size_t idx = 0; idx < size(); ++idx) out[priority_[idx]] = ground.label_at(idx);
    return out;
}

std::vector<Mask> SeriesClassPartition::classes() const {
    std::vector<Mask> out;
    for (const auto& cls : all) {
        if (!cls.coloop_singleton) out.push_back(cls.elements);
    }
    return out;
}

namespace {

void check_circuit_axioms(const GroundSet& ground, const std::vector<Mask>& circuits) {
    // Antichain; duplicates were removed by the caller.
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        for (std::size_t j = 0; j < circuits.size(); ++j) {
            if (i != j && subset_of(circuits[i], circuits[j])) {
                throw Error(ErrorCode::AxiomViolation,
                            "circuit family is not an antichain: {" +
                                [&] {
                                    std::ostringstream os;
                                    for (int l : ground.labels_of(circuits[i])) os << l << " ";
                                    return os.str();
                                }() +
                                "} is contained in another circuit");
            }
        }
    }
    // Weak circuit elimination.
    for (std::size_t i = 0; i < circuits.size(); ++i) {
        for (std::size_t j = i + 1; j < circuits.size(); ++j) {
            Mask common = circuits[i] & circuits[j];
            if (common == 0) continue;
            Mask uni = circuits[i] | circuits[j];
            bool ok_all = true;
            for_each_bit(common, [&](std::size_t e) {
                Mask target = uni & ~bit(e);
                bool found = false;
                for (Mask c : circuits) {
                    if (subset_of(c, target)) {
                        found = true;
                        break;
                    }
                }
                if (!found) ok_all = false;
            });
            if (!ok_all) {
                throw Error(ErrorCode::AxiomViolation, "circuit elimination fails for a circuit pair");
            }
        }
    }
}

} // namespace

Matroid Matroid::from_circuits(GroundSet ground, const std::vector<std::vector<int>>& circuits,
                               std::size_t max_elements) {
    std::vector<Mask> masks;
    masks.reserve(circuits.size());
    for (const auto& c : circuits) masks.push_back(ground.mask_of(c));
    return from_circuit_masks(std::move(ground), std::move(masks), max_elements);
}

Matroid Matroid::from_circuit_masks(GroundSet ground, std::vector<Mask> circuits,
                                    std::size_t max_elements) {
    max_elements = std::min(max_elements, kMaskBits);
    if (ground.size() > max_elements) {
        throw Error(ErrorCode::TooLarge, "ground set has " + std::to_string(ground.size()) +
                                             " elements, cap is " + std::to_string(max_elements));
    }
    for (Mask c : circuits) {
        if (c == 0) throw Error(ErrorCode::EmptyCircuit, "the empty set cannot be a circuit");
    }
    std::sort(circuits.begin(), circuits.end());
    circuits.erase(std::unique(circuits.begin(), circuits.end()), circuits.end());
    check_circuit_axioms(ground, circuits);
    return Matroid(std::move(ground), std::move(circuits));
}

std::vector<std::vector<int>> Matroid::circuit_labels() const {
    std::vector<std::vector<int>> out;
    out.reserve(circuits_.size());
    for (Mask c : circuits_) out.push_back(ground_.labels_of(c));
    return out;
}

void Matroid::check_element_mask(Mask x) const {
    if ((x & ~full_mask(size())) != 0) {
        throw Error(ErrorCode::ElementNotInGroundSet, "subset uses indices outside the ground set");
    }
}

bool Matroid::is_independent(Mask x) const {
    check_element_mask(x);
    for (Mask c : circuits_) {
        if (subset_of(c, x)) return false;
    }
    return true;
}

bool Matroid::is_independent(const std::vector<int>& labels) const {
    return is_independent(ground_.mask_of(labels));
}

int Matroid::rank(Mask x) const {
    check_element_mask(x);
    Mask picked = 0;
    for_each_bit(x, [&](std::size_t e) {
        Mask candidate = picked | bit(e);
        bool dependent = false;
        for (Mask c : circuits_) {
            if (subset_of(c, candidate)) {
                dependent = true;
                break;
            }
        }
        if (!dependent) picked = candidate;
    });
    return popcount(picked);
}

int Matroid::rank(const std::vector<int>& labels) const {
    return rank(ground_.mask_of(labels));
}

Matroid Matroid::dual() const {
    const std::size_t n = size();
    const int r = rank();
    const int dual_rank = static_cast<int>(n) - r;
    // All bases of this matroid.
    std::vector<Mask> bases;
    for_each_combination(n, static_cast<std::size_t>(r), [&](Mask m) {
        if (is_independent(m)) bases.push_back(m);
    });
    // X is independent in the dual iff X fits inside some complement of a
    // basis, i.e. X avoids some basis; dual circuits are the minimal sets
    // that meet every basis.
    std::vector<Mask> dual_circuits;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(dual_rank) + 1 && k <= n; ++k) {
        for_each_combination(n, k, [&](Mask x) {
            for (Mask found : dual_circuits) {
                if (subset_of(found, x)) return;
            }
            for (Mask b : bases) {
                if ((x & b) == 0) return; // avoids a basis: independent in the dual
            }
            dual_circuits.push_back(x);
        });
    }
    return from_circuit_masks(ground_, std::move(dual_circuits), kMaskBits);
}

namespace {

// Repacks a mask over old indices into the compacted index space that
// keeps exactly the bits of `kept` (in order).
Mask compact_mask(Mask m, const std::vector<std::size_t>& new_index, Mask kept) {
    Mask out = 0;
    for_each_bit(m & kept, [&](std::size_t i) { out |= bit(new_index[i]); });
    return out;
}

} // namespace

Matroid Matroid::deletion(Mask x) const {
    check_element_mask(x);
    Mask kept = full_mask(size()) & ~x;
    std::vector<std::size_t> new_index(size(), 0);
    std::size_t next = 0;
    for_each_bit(kept, [&](std::size_t i) { new_index[i] = next++; });
    std::vector<Mask> circuits;
    for (Mask c : circuits_) {
        if (subset_of(c, kept)) circuits.push_back(compact_mask(c, new_index, kept));
    }
    return from_circuit_masks(GroundSet(ground_.labels_of(kept)), std::move(circuits), kMaskBits);
}

Matroid Matroid::deletion(const std::vector<int>& labels) const {
    return deletion(ground_.mask_of(labels));
}

Matroid Matroid::contraction(Mask x) const {
    check_element_mask(x);
    Mask kept = full_mask(size()) & ~x;
    std::vector<std::size_t> new_index(size(), 0);
    std::size_t next = 0;
    for_each_bit(kept, [&](std::size_t i) { new_index[i] = next++; });
    std::vector<Mask> reduced;
    for (Mask c : circuits_) {
        Mask rest = c & kept;
        if (rest != 0) reduced.push_back(compact_mask(rest, new_index, kept));
    }
    return from_circuit_masks(GroundSet(ground_.labels_of(kept)), antichain_minimalize(std::move(reduced)),
                              kMaskBits);
}

Matroid Matroid::contraction(const std::vector<int>& labels) const {
    return contraction(ground_.mask_of(labels));
}

std::vector<Mask> Matroid::components() const {
    const std::size_t n = size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    for (Mask c : circuits_) {
        std::size_t first = static_cast<std::size_t>(lowest_bit(c));
        for_each_bit(c, [&](std::size_t e) { parent[find(e)] = find(first); });
    }
    std::vector<Mask> by_root(n, 0);
    for (std::size_t i = 0; i < n; ++i) by_root[find(i)] |= bit(i);
    std::vector<Mask> out;
    for (Mask m : by_root) {
        if (m != 0) out.push_back(m);
    }
    return out;
}

Mask Matroid::loops() const {
    Mask out = 0;
    for (Mask c : circuits_) {
        if (popcount(c) == 1) out |= c;
    }
    return out;
}

Mask Matroid::coloops() const {
    // A coloop lies in no circuit.
    Mask in_some_circuit = 0;
    for (Mask c : circuits_) in_some_circuit |= c;
    return full_mask(size()) & ~in_some_circuit;
}

SeriesClassPartition Matroid::series_classes() const {
    if (!is_loopless()) throw Error(ErrorCode::HasLoops, "series classes need a loopless matroid");
    const std::size_t n = size();
    const Mask coloop_mask = coloops();
    const int r = rank();
    const Mask all = full_mask(n);

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };

    std::vector<int> rank_without(n, 0);
    for (std::size_t e = 0; e < n; ++e) rank_without[e] = rank(all & ~bit(e));
    for (std::size_t e = 0; e < n; ++e) {
        if (coloop_mask & bit(e)) continue;
        for (std::size_t f = e + 1; f < n; ++f) {
            if (coloop_mask & bit(f)) continue;
            // {e,f} is a cocircuit iff dropping the pair loses rank while
            // dropping either element alone does not.
            if (rank_without[e] == r && rank_without[f] == r &&
                rank(all & ~(bit(e) | bit(f))) == r - 1) {
                parent[find(e)] = find(f);
            }
        }
    }

    std::vector<Mask> by_root(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(coloop_mask & bit(i))) by_root[find(i)] |= bit(i);
    }
    SeriesClassPartition partition;
    for (Mask m : by_root) {
        if (m != 0) partition.all.push_back({m, false});
    }
    for_each_bit(coloop_mask, [&](std::size_t e) { partition.all.push_back({bit(e), true}); });
    std::sort(partition.all.begin(), partition.all.end(),
              [](const SeriesClass& a, const SeriesClass& b) { return a.elements < b.elements; });
    return partition;
}

std::vector<Mask> Matroid::removable_series_classes() const {
    if (size() < 2 || !is_connected()) {
        throw Error(ErrorCode::NotConnected, "removable series classes need a connected matroid on >= 2 elements");
    }
    std::vector<Mask> out;
    for (Mask s : series_classes().classes()) {
        Matroid rest = deletion(s);
        if (rest.size() == 0 || rest.is_connected()) out.push_back(s);
    }
    return out;
}

Matroid Matroid::relabeled(const std::vector<std::pair<int, int>>& renames) const {
    std::vector<int> labels = ground_.labels();
    for (auto& l : labels) {
        for (const auto& [from, to] : renames) {
            if (l == from) {
                l = to;
                break;
            }
        }
    }
    GroundSet new_ground(labels);
    // labels[i] is the new name of old index i.
    std::vector<std::size_t> new_index(size());
    for (std::size_t i = 0; i < size(); ++i) new_index[i] = new_ground.index_of(labels[i]);
    std::vector<Mask> circuits;
    circuits.reserve(circuits_.size());
    for (Mask c : circuits_) {
        Mask m = 0;
        for_each_bit(c, [&](std::size_t i) { m |= bit(new_index[i]); });
        circuits.push_back(m);
    }
    return from_circuit_masks(std::move(new_ground), std::move(circuits), kMaskBits);
}

std::string Matroid::to_string() const {
    std::ostringstream os;
    os << "Matroid(E={";
    const auto& labels = ground_.labels();
    for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? "," : "") << labels[i];
    os << "}, C={";
    bool first_c = true;
    for (Mask c : circuits_) {
        os << (first_c ? "" : ", ") << "{";
        auto ls = ground_.labels_of(c);
        for (std::size_t i = 0; i < ls.size(); ++i) os << (i ? "," : "") << ls[i];
        os << "}";
        first_c = false;
    }
    os << "})";
    return os.str();
}

namespace {

GroundSet merged_ground(const Matroid& m1, const Matroid& m2) {
    std::vector<int> labels = m1.ground().labels();
    for (int l : m2.ground().labels()) {
        if (!m1.ground().contains(l)) labels.push_back(l);
    }
    return GroundSet(std::move(labels));
}

std::vector<Mask> circuits_in(const Matroid& m, const GroundSet& target) {
    std::vector<Mask> out;
    out.reserve(m.circuits().size());
    for (const auto& c : m.circuit_labels()) out.push_back(target.mask_of(c));
    return out;
}

void check_basepoint(const Matroid& m, int e, const char* side) {
    std::size_t idx = m.ground().index_of(e); // throws if absent
    if (m.loops() & bit(idx)) {
        throw Error(ErrorCode::BadBasepoint, std::string("basepoint is a loop of ") + side);
    }
    if (m.coloops() & bit(idx)) {
        throw Error(ErrorCode::BadBasepoint, std::string("basepoint is a coloop of ") + side);
    }
}

} // namespace

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
    for (int l : m2.ground().labels()) {
        if (m1.ground().contains(l)) {
            throw Error(ErrorCode::OverlappingGroundSets,
                        "direct sum needs disjoint ground sets (shared label " + std::to_string(l) + ")");
        }
    }
    GroundSet ground = merged_ground(m1, m2);
    std::vector<Mask> circuits = circuits_in(m1, ground);
    for (Mask c : circuits_in(m2, ground)) circuits.push_back(c);
    return Matroid::from_circuit_masks(std::move(ground), std::move(circuits), kMaskBits);
}

Matroid parallel_connection(const Matroid& m1, const Matroid& m2, int basepoint) {
    std::size_t shared = 0;
    for (int l : m2.ground().labels()) {
        if (m1.ground().contains(l)) {
            ++shared;
            if (l != basepoint) {
                throw Error(ErrorCode::BadBasepoint,
                            "ground sets share " + std::to_string(l) + " besides the basepoint");
            }
        }
    }
    if (shared != 1 || !m1.ground().contains(basepoint)) {
        throw Error(ErrorCode::BadBasepoint, "ground sets must intersect exactly in the basepoint");
    }
    check_basepoint(m1, basepoint, "the first matroid");
    check_basepoint(m2, basepoint, "the second matroid");

    GroundSet ground = merged_ground(m1, m2);
    Mask e_bit = bit(ground.index_of(basepoint));
    std::vector<Mask> c1 = circuits_in(m1, ground);
    std::vector<Mask> c2 = circuits_in(m2, ground);
    std::vector<Mask> circuits = c1;
    circuits.insert(circuits.end(), c2.begin(), c2.end());
    for (Mask a : c1) {
        if (!(a & e_bit)) continue;
        for (Mask b : c2) {
            if (!(b & e_bit)) continue;
            circuits.push_back((a | b) & ~e_bit);
        }
    }
    return Matroid::from_circuit_masks(std::move(ground), antichain_minimalize(std::move(circuits)),
                                       kMaskBits);
}

Matroid two_sum(const Matroid& m1, const Matroid& m2, int basepoint) {
    Matroid p = parallel_connection(m1, m2, basepoint);
    return p.deletion(std::vector<int>{basepoint});
}

Matroid series_class_reconstruction(const Matroid& m, Mask series_class, int e) {
    const GroundSet& ground = m.ground();
    std::size_t e_idx = ground.index_of(e);
    if (!(series_class & bit(e_idx))) {
        throw Error(ErrorCode::PreconditionViolation, "element is not a member of the series class");
    }
    Matroid contracted = m.contraction(series_class & ~bit(e_idx));

    // Auxiliary element standing in for e inside the glued circuit; renamed
    // back to e at the end.
    int aux = ground.labels().empty() ? 0 : ground.labels().back() + 1;
    std::vector<int> circuit_labels = ground.labels_of(series_class);
    for (auto& l : circuit_labels) {
        if (l == e) l = aux;
    }
    circuit_labels.push_back(e);
    GroundSet circuit_ground(circuit_labels);
    Matroid glue_circuit =
        Matroid::from_circuit_masks(circuit_ground, {full_mask(circuit_ground.size())}, kMaskBits);

    Mask contracted_loops = contracted.loops();
    Matroid joined = [&] {
        if (contracted_loops & bit(contracted.ground().index_of(e))) {
            // e became a loop: the series class was itself a circuit, so the
            // glue degenerates to contracting the basepoint out of the
            // replacement circuit next to whatever else survived.
            return direct_sum(contracted.deletion(std::vector<int>{e}),
                              glue_circuit.contraction(std::vector<int>{e}));
        }
        return two_sum(contracted, glue_circuit, e);
    }();
    return joined.relabeled({{aux, e}});
}

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::AxiomViolation: return "AxiomViolation";
        case ErrorCode::EmptyCircuit: return "EmptyCircuit";
        case ErrorCode::ElementNotInGroundSet: return "ElementNotInGroundSet";
        case ErrorCode::HasLoops: return "HasLoops";
        case ErrorCode::NotConnected: return "NotConnected";
        case ErrorCode::BadBasepoint: return "BadBasepoint";
        case ErrorCode::OverlappingGroundSets: return "OverlappingGroundSets";
        case ErrorCode::BadParameters: return "BadParameters";
        case ErrorCode::TooLarge: return "TooLarge";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::EmptySequence: return "EmptySequence";
        case ErrorCode::NegativeCoefficients: return "NegativeCoefficients";
        case ErrorCode::NotStartingAtOne: return "NotStartingAtOne";
        case ErrorCode::PreconditionViolation: return "PreconditionViolation";
        case ErrorCode::InternalInconsistency: return "InternalInconsistency";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::UnknownPredicate: return "UnknownPredicate";
    }
    return "UnknownError";
}

} // namespace bcx
