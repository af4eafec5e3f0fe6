#include "hlwhit/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hlwhit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

Partition Partition::parse(const std::string& s) {
  if (s.empty() || s == "-" || s == "0") return Partition();
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("Partition::parse: bad part '" + item + "'");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

int Partition::size() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int j) const {
  if (j < 1) throw std::invalid_argument("Partition::multiplicity: j must be >= 1");
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), j));
}

long Partition::n_stat() const {
  long acc = 0;
  for (size_t j = 0; j < parts_.size(); ++j) acc += static_cast<long>(j) * parts_[j];
  return acc;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return Partition();
  std::vector<int> out(static_cast<size_t>(parts_[0]), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++out[static_cast<size_t>(j)];
  return Partition(std::move(out));
}

std::string Partition::str() const {
  if (parts_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ",";
    os << parts_[i];
  }
  return os.str();
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("dominates: partitions of different sizes");
  long pa = 0, pb = 0;
  int len = std::max(a.length(), b.length());
  for (int i = 0; i < len; ++i) {
    pa += a.part(i);
    pb += b.part(i);
    if (pa < pb) return false;
  }
  return true;
}

namespace {
void emit_partitions(int remaining, int max_part, int slots_left,
                     std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  if (slots_left == 0) return;
  for (int p = std::min(max_part, remaining); p >= 1; --p) {
    acc.push_back(p);
    emit_partitions(remaining - p, p, slots_left - 1, acc, out);
    acc.pop_back();
  }
}
}  // namespace

std::vector<Partition> enumerate_partitions(int m, int max_length) {
  if (m < 0) throw std::invalid_argument("enumerate_partitions: negative size");
  std::vector<Partition> out;
  std::vector<int> acc;
  int slots = (max_length == kUnboundedLength) ? m : std::min(max_length, m);
  emit_partitions(m, m, slots, acc, out);
  return out;  // first-part-descending recursion yields decreasing lex order
}

WeaklyDecreasingTuple::WeaklyDecreasingTuple(std::vector<long> entries)
    : entries_(std::move(entries)) {
  for (size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i] > entries_[i - 1])
      throw std::invalid_argument("WeaklyDecreasingTuple: entries must be weakly decreasing");
}

WeaklyDecreasingTuple WeaklyDecreasingTuple::parse(const std::string& s) {
  if (s.empty() || s == "-") return WeaklyDecreasingTuple();
  std::vector<long> entries;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t pos = 0;
    long v = std::stol(item, &pos);
    if (pos != item.size())
      throw std::invalid_argument("WeaklyDecreasingTuple::parse: bad entry '" + item + "'");
    entries.push_back(v);
  }
  return WeaklyDecreasingTuple(std::move(entries));
}

Partition WeaklyDecreasingTuple::to_partition() const {
  std::vector<int> parts;
  for (long v : entries_) {
    if (v < 0)
      throw std::logic_error("WeaklyDecreasingTuple::to_partition: negative entry");
    if (v > 0) parts.push_back(static_cast<int>(v));
  }
  return Partition(std::move(parts));
}

std::string WeaklyDecreasingTuple::str() const {
  if (entries_.empty()) return "-";
  std::ostringstream os;
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ",";
    os << entries_[i];
  }
  return os.str();
}

}  // namespace hlwhit
