#pragma once

#include <cstddef>
#include <vector>

#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  //! A set partition of {0, ..., n - 1}.
  //!
  //! Blocks are stored sorted internally and ordered by their least element,
  //! so two partitions of the same set compare equal iff they have the same
  //! blocks.
  class Partition {
   public:
    //! Throws PreconditionError unless the blocks are non-empty, pairwise
    //! disjoint and cover {0, ..., n - 1}.
    Partition(std::size_t n, std::vector<element_set> blocks);

    //! Blocks are the classes of equal labels.
    static Partition from_labels(std::vector<std::size_t> const& labels);
    static Partition discrete(std::size_t n);
    static Partition single_block(std::size_t n);

    std::size_t ground_size() const noexcept {
      return _block_of.size();
    }
    std::size_t size() const noexcept {
      return _blocks.size();
    }
    std::vector<element_set> const& blocks() const noexcept {
      return _blocks;
    }
    element_set const& block(std::size_t i) const {
      return _blocks.at(i);
    }
    //! Index of the block containing x.
    std::size_t block_of(element_type x) const {
      return _block_of.at(x);
    }
    bool same_block(element_type x, element_type y) const {
      return block_of(x) == block_of(y);
    }

    //! True iff every block of *this lies inside a block of other.
    bool refines(Partition const& other) const;

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    std::vector<element_set> _blocks;
    std::vector<std::size_t> _block_of;
  };

}  // namespace lrbqv
