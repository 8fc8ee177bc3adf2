#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "lrbqv/semigroup.hpp"

namespace lrbqv {

  // Sign vectors -------------------------------------------------------------

  enum class Sign : std::uint8_t { zero, plus, minus, i, j };

  enum class SignMode { real, complex };

  char to_char(Sign s) noexcept;

  //! One sign per hyperplane. Real vectors use {0,+,-}; complex ones may also
  //! use i and j.
  class SignVector {
   public:
    //! Throws PreconditionError if a real vector contains i or j.
    SignVector(SignMode mode, std::vector<Sign> entries);

    //! Parses "(+-0)"; the parentheses are optional.
    static SignVector parse(std::string_view text, SignMode mode);

    SignMode mode() const noexcept {
      return _mode;
    }
    std::size_t size() const noexcept {
      return _entries.size();
    }
    Sign operator[](std::size_t i) const {
      return _entries.at(i);
    }
    std::vector<Sign> const& entries() const noexcept {
      return _entries;
    }
    std::size_t zero_count() const noexcept;

    //! "(+-0)"
    std::string to_string() const;

    friend bool operator==(SignVector const&, SignVector const&) = default;
    friend auto operator<=>(SignVector const&, SignVector const&) = default;

   private:
    SignMode          _mode;
    std::vector<Sign> _entries;
  };

  //! The face entered by moving a small distance from u towards v, computed
  //! entrywise: a zero entry of u takes v's entry, and otherwise the entries
  //! multiply as in Z (so + . i = i, i . + = i, + . - = +). On real vectors
  //! this is "keep u where nonzero". Throws PreconditionError on a length or
  //! mode mismatch.
  SignVector face_product(SignVector const& u, SignVector const& v);

  //! Product of single signs in the monoid Z = {0,+,-,i,j}.
  Sign z_product(Sign x, Sign y) noexcept;

  // Sign maps ----------------------------------------------------------------

  using Rational = boost::rational<std::int64_t>;

  struct RationalComplex {
    Rational re;
    Rational im;
  };

  Sign sign_s(Rational q) noexcept;
  Sign sign_psi(RationalComplex const& z) noexcept;

  // Fixed monoids ------------------------------------------------------------

  //! {0, +, -}: identity 0 and two left zeroes.
  FiniteSemigroup gen_L();
  //! L with a two-sided zero z appended.
  FiniteSemigroup gen_ZL();
  //! {0, +, -, i, j} in that order, the product of z_product.
  FiniteSemigroup gen_Z();

  //! Face monoid of a set of sign vectors closed under face_product. Element
  //! k is faces[k] named names[k] (defaults to the sign strings). Throws
  //! PreconditionError if the set is not closed.
  FiniteSemigroup face_monoid(std::vector<SignVector> const& faces,
                              std::vector<std::string>       names = {});

  //! L^n = {0,+,-}^n with sign-vector names, 1 <= n <= 4.
  FiniteSemigroup coordinate_arrangement_monoid(std::size_t n);

  //! Z^n with sign-vector names, 1 <= n <= 3.
  FiniteSemigroup complex_coordinate_monoid(std::size_t n);

  // Central line arrangements in the plane ------------------------------------

  //! n distinct lines through the origin, line k (1-based) at angle
  //! (k - 1) pi / n. Angles are integers in units of pi / (2n) taken modulo
  //! 4n, so every sign is exact.
  class LineArrangement2D {
   public:
    explicit LineArrangement2D(std::size_t n);

    std::size_t lines() const noexcept {
      return _n;
    }
    std::size_t full_turn() const noexcept {
      return 4 * _n;
    }
    //! Ray r_j, j = 1..2n, counter-clockwise from the positive x-axis.
    std::size_t ray_angle(std::size_t j) const;
    //! Chamber C_j, between r_j and r_{j+1}.
    std::size_t chamber_angle(std::size_t j) const;
    //! Sign of sin(theta - alpha_k) for the direction theta.
    Sign side(std::size_t angle, std::size_t line) const;
    SignVector sign_vector(std::size_t angle) const;

   private:
    std::size_t _n;
  };

  enum class FaceRole { origin, ray, chamber };

  struct Face {
    FaceRole    role;
    std::size_t index;  // j for r_j / C_j, 0 for the origin
    SignVector  signs;
  };

  struct LineArrangementFaces {
    LineArrangement2D arrangement;
    //! Element order: O, r_1..r_{2n}, C_1..C_{2n}, named "O", "r_j", "C_j".
    FiniteSemigroup   semigroup;
    std::vector<Face> faces;
  };

  //! F_n, the face monoid of n lines (2 <= n <= 8), of order 4n + 1.
  LineArrangementFaces line_arrangement_faces(std::size_t n);

  std::string ray_name(std::size_t j);
  std::string chamber_name(std::size_t j);

}  // namespace lrbqv
