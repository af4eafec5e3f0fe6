#pragma once

#include <compare>
#include <string>
#include <vector>

namespace hlwhit {

// Partition: weakly decreasing positive parts; the empty partition is the
// unique partition of 0 and a perfectly ordinary value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // validates

  // "2,1"; "-" or "0" parse to the empty partition.
  static Partition parse(const std::string& s);

  int size() const;  // |lambda|
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const {  // 0-indexed, 0 beyond the length
    return (i >= 0 && i < length()) ? parts_[static_cast<size_t>(i)] : 0;
  }
  bool empty() const { return parts_.empty(); }

  int multiplicity(int j) const;  // number of parts equal to j (j >= 1)
  long n_stat() const;            // n(lambda) = sum (j-1) lambda_j
  Partition conjugate() const;

  friend bool operator==(const Partition& a, const Partition& b) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
  }

  std::string str() const;  // "2,1"; empty renders as "-"

 private:
  std::vector<int> parts_;
};

// true iff prefix sums of a dominate those of b; requires |a| = |b|.
bool dominates(const Partition& a, const Partition& b);

inline constexpr int kUnboundedLength = -1;

// All partitions of m with length <= max_length, in decreasing
// lexicographic order (the canonical order everywhere in this library).
std::vector<Partition> enumerate_partitions(int m, int max_length = kUnboundedLength);

// Weakly decreasing integer tuple (negative entries allowed): the Cartan
// coordinates a Whittaker value is indexed by before vanishing kicks in.
class WeaklyDecreasingTuple {
 public:
  WeaklyDecreasingTuple() = default;
  explicit WeaklyDecreasingTuple(std::vector<long> entries);  // validates
  static WeaklyDecreasingTuple parse(const std::string& s);

  const std::vector<long>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  bool last_negative() const { return !entries_.empty() && entries_.back() < 0; }
  // Requires all entries >= 0; drops trailing zeros.
  Partition to_partition() const;

  std::string str() const;

 private:
  std::vector<long> entries_;
};

}  // namespace hlwhit
