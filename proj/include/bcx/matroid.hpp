// Matroids represented by their canonical minimal-circuit families.
#ifndef BCX_MATROID_HPP
#define BCX_MATROID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bcx/bitset.hpp"
#include "bcx/errors.hpp"

namespace bcx {

// Ordered set of distinct nonnegative integer labels. Labels are kept
// sorted ascending; internal indices are positions in that order and are
// stable for the lifetime of any matroid built on the set.
class GroundSet {
  public:
    GroundSet() = default;
    explicit GroundSet(std::vector<int> labels);

    std::size_t size() const { return labels_.size(); }
    const std::vector<int>& labels() const { return labels_; }
    int label_at(std::size_t index) const { return labels_[index]; }
    // Throws ElementNotInGroundSet for unknown labels.
    std::size_t index_of(int label) const;
    bool contains(int label) const;

    Mask mask_of(const std::vector<int>& labels) const;
    std::vector<int> labels_of(Mask m) const;

    bool operator==(const GroundSet& rhs) const { return labels_ == rhs.labels_; }

  private:
    std::vector<int> labels_;
};

// Total order on a ground set: position = priority, first = least.
class LinearOrder {
  public:
    // Ascending label order.
    static LinearOrder default_for(const GroundSet& ground);
    // Explicit permutation given as labels from least to greatest.
    static LinearOrder from_labels(const GroundSet& ground, const std::vector<int>& labels);

    std::size_t size() const { return priority_.size(); }
    // Smaller value = earlier in the order.
    std::size_t priority_of_index(std::size_t index) const { return priority_[index]; }
    // Index of the least element of a nonempty mask.
    std::size_t least_index(Mask m) const;
    // Element labels from least to greatest.
    std::vector<int> to_labels(const GroundSet& ground) const;

  private:
    explicit LinearOrder(std::vector<std::size_t> priority) : priority_(std::move(priority)) {}
    std::vector<std::size_t> priority_;
};

struct SeriesClass {
    Mask elements = 0;
    bool coloop_singleton = false;
};

// Partition of the ground set into series classes, with coloops carried
// as flagged singletons.
struct SeriesClassPartition {
    std::vector<SeriesClass> all;

    // The series classes proper (coloop singletons excluded).
    std::vector<Mask> classes() const;
};

// Immutable after construction; all operations are pure functions of their
// inputs, so values are safe to share across threads.
class Matroid {
  public:
    static constexpr std::size_t kDefaultMaxElements = 24;

    // Validates the circuit axioms: no empty circuit, antichain, and weak
    // circuit elimination (checked exhaustively over circuit pairs).
    // Non-minimal input is rejected rather than repaired.
    static Matroid from_circuits(GroundSet ground, const std::vector<std::vector<int>>& circuits,
                                 std::size_t max_elements = kDefaultMaxElements);
    static Matroid from_circuit_masks(GroundSet ground, std::vector<Mask> circuits,
                                      std::size_t max_elements = kDefaultMaxElements);

    const GroundSet& ground() const { return ground_; }
    std::size_t size() const { return ground_.size(); }
    const std::vector<Mask>& circuits() const { return circuits_; }
    std::vector<std::vector<int>> circuit_labels() const;

    bool is_independent(Mask x) const;
    bool is_independent(const std::vector<int>& labels) const;

    // Greedy rank; rank() is the rank of the full ground set.
    int rank(Mask x) const;
    int rank(const std::vector<int>& labels) const;
    int rank() const { return rank(full_mask(size())); }

    Matroid dual() const;
    Matroid deletion(Mask x) const;
    Matroid deletion(const std::vector<int>& labels) const;
    Matroid contraction(Mask x) const;
    Matroid contraction(const std::vector<int>& labels) const;

    // Connected components as element masks; coloops and loops are
    // singletons. The empty matroid has no components.
    std::vector<Mask> components() const;
    bool is_connected() const { return components().size() == 1; }

    Mask loops() const;
    Mask coloops() const;
    bool is_loopless() const { return loops() == 0; }

    // Maximal classes of the pairwise-cocircuit relation among non-coloop
    // elements. Requires looplessness.
    SeriesClassPartition series_classes() const;
    // Series classes whose deletion keeps the matroid connected. Requires
    // a connected matroid on at least two elements.
    std::vector<Mask> removable_series_classes() const;

    bool operator==(const Matroid& rhs) const {
        return ground_ == rhs.ground_ && circuits_ == rhs.circuits_;
    }
    bool operator!=(const Matroid& rhs) const { return !(*this == rhs); }

    // New matroid with labels renamed by the given (old, new) pairs;
    // unlisted labels keep their names. The result must again have
    // distinct labels.
    Matroid relabeled(const std::vector<std::pair<int, int>>& renames) const;

    std::string to_string() const;

  private:
    Matroid(GroundSet ground, std::vector<Mask> circuits)
        : ground_(std::move(ground)), circuits_(std::move(circuits)) {}

    void check_element_mask(Mask x) const;

    GroundSet ground_;
    std::vector<Mask> circuits_; // canonically sorted, antichain
};

Matroid direct_sum(const Matroid& m1, const Matroid& m2);
Matroid parallel_connection(const Matroid& m1, const Matroid& m2, int basepoint);
Matroid two_sum(const Matroid& m1, const Matroid& m2, int basepoint);

// Rebuilds a matroid from a series class S and e in S: glues an
// (|S|+1)-circuit back onto the contraction by S-e via a 2-sum at e, then
// renames the one auxiliary element to e. The result is labeled-equal to
// the original whenever S is a series class. Handles the degenerate case
// where the contraction collapses to a single loop (S the whole ground
// set of a circuit).
Matroid series_class_reconstruction(const Matroid& m, Mask series_class, int e);

} // namespace bcx

#endif
