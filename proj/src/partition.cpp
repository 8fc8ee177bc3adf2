#include "lrbqv/partition.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace lrbqv {

  namespace {
    constexpr std::size_t unassigned = std::numeric_limits<std::size_t>::max();
  }

  Partition::Partition(std::size_t n, std::vector<element_set> blocks)
      : _blocks(std::move(blocks)), _block_of(n, unassigned) {
    for (auto& b : _blocks) {
      if (b.empty()) {
        throw PreconditionError("partition has an empty block");
      }
      std::sort(b.begin(), b.end());
    }
    std::sort(_blocks.begin(), _blocks.end(), [](auto const& x, auto const& y) {
      return x.front() < y.front();
    });
    for (std::size_t i = 0; i < _blocks.size(); ++i) {
      for (element_type x : _blocks[i]) {
        if (x >= n) {
          throw PreconditionError("partition block element out of range");
        }
        if (_block_of[x] != unassigned) {
          throw PreconditionError("partition blocks are not disjoint");
        }
        _block_of[x] = i;
      }
    }
    if (std::find(_block_of.begin(), _block_of.end(), unassigned)
        != _block_of.end()) {
      throw PreconditionError("partition blocks do not cover the ground set");
    }
  }

  Partition Partition::from_labels(std::vector<std::size_t> const& labels) {
    std::map<std::size_t, element_set> by_label;
    for (element_type x = 0; x < labels.size(); ++x) {
      by_label[labels[x]].push_back(x);
    }
    std::vector<element_set> blocks;
    for (auto& [label, block] : by_label) {
      blocks.push_back(std::move(block));
    }
    return Partition(labels.size(), std::move(blocks));
  }

  Partition Partition::discrete(std::size_t n) {
    std::vector<element_set> blocks;
    for (element_type x = 0; x < n; ++x) {
      blocks.push_back({x});
    }
    return Partition(n, std::move(blocks));
  }

  Partition Partition::single_block(std::size_t n) {
    element_set all(n);
    for (element_type x = 0; x < n; ++x) {
      all[x] = x;
    }
    return Partition(n, {all});
  }

  bool Partition::refines(Partition const& other) const {
    if (other.ground_size() != ground_size()) {
      return false;
    }
    for (auto const& b : _blocks) {
      for (element_type x : b) {
        if (!other.same_block(x, b.front())) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace lrbqv
