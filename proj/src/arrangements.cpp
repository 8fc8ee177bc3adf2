#include "lrbqv/arrangements.hpp"

#include <map>

namespace lrbqv {

  namespace {
    bool is_real(Sign s) noexcept {
      return s == Sign::zero || s == Sign::plus || s == Sign::minus;
    }

    std::vector<std::vector<Sign>> all_words(std::vector<Sign> const& alphabet,
                                             std::size_t              n) {
      std::vector<std::vector<Sign>> words{{}};
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::vector<Sign>> next;
        for (auto const& w : words) {
          for (Sign s : alphabet) {
            next.push_back(w);
            next.back().push_back(s);
          }
        }
        words = std::move(next);
      }
      return words;
    }
  }  // namespace

  char to_char(Sign s) noexcept {
    switch (s) {
      case Sign::zero:
        return '0';
      case Sign::plus:
        return '+';
      case Sign::minus:
        return '-';
      case Sign::i:
        return 'i';
      case Sign::j:
        return 'j';
    }
    return '?';
  }

  SignVector::SignVector(SignMode mode, std::vector<Sign> entries)
      : _mode(mode), _entries(std::move(entries)) {
    if (_mode == SignMode::real) {
      for (Sign s : _entries) {
        if (!is_real(s)) {
          throw PreconditionError("real sign vector contains i or j");
        }
      }
    }
  }

  SignVector SignVector::parse(std::string_view text, SignMode mode) {
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
      text = text.substr(1, text.size() - 2);
    }
    std::vector<Sign> entries;
    for (char c : text) {
      switch (c) {
        case '0':
          entries.push_back(Sign::zero);
          break;
        case '+':
          entries.push_back(Sign::plus);
          break;
        case '-':
          entries.push_back(Sign::minus);
          break;
        case 'i':
          entries.push_back(Sign::i);
          break;
        case 'j':
          entries.push_back(Sign::j);
          break;
        default:
          throw ParseError(std::string("bad sign character '") + c + "'", 1, 0);
      }
    }
    return SignVector(mode, std::move(entries));
  }

  std::size_t SignVector::zero_count() const noexcept {
    std::size_t k = 0;
    for (Sign s : _entries) {
      k += s == Sign::zero;
    }
    return k;
  }

  std::string SignVector::to_string() const {
    std::string out = "(";
    for (Sign s : _entries) {
      out += to_char(s);
    }
    return out + ")";
  }

  Sign z_product(Sign x, Sign y) noexcept {
    if (x == Sign::zero) {
      return y;
    }
    if ((x == Sign::plus || x == Sign::minus) && (y == Sign::i || y == Sign::j)) {
      return y;
    }
    return x;
  }

  SignVector face_product(SignVector const& u, SignVector const& v) {
    if (u.mode() != v.mode() || u.size() != v.size()) {
      throw PreconditionError("face_product: sign vectors of different shape");
    }
    std::vector<Sign> out(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
      out[k] = z_product(u[k], v[k]);
    }
    return SignVector(u.mode(), std::move(out));
  }

  Sign sign_s(Rational q) noexcept {
    if (q > 0) {
      return Sign::plus;
    }
    return q < 0 ? Sign::minus : Sign::zero;
  }

  Sign sign_psi(RationalComplex const& z) noexcept {
    if (z.im > 0) {
      return Sign::i;
    }
    if (z.im < 0) {
      return Sign::j;
    }
    return sign_s(z.re);
  }

  FiniteSemigroup face_monoid(std::vector<SignVector> const& faces,
                              std::vector<std::string>       names) {
    if (names.empty()) {
      for (auto const& f : faces) {
        names.push_back(f.to_string());
      }
    }
    std::map<SignVector, element_type> index;
    for (std::size_t k = 0; k < faces.size(); ++k) {
      index.emplace(faces[k], static_cast<element_type>(k));
    }
    std::size_t const         n = faces.size();
    std::vector<element_type> table(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto it = index.find(face_product(faces[x], faces[y]));
        if (it == index.end()) {
          throw PreconditionError("face_monoid: faces not closed under product");
        }
        table[x * n + y] = it->second;
      }
    }
    return FiniteSemigroup::make_unchecked(std::move(names), std::move(table));
  }

  FiniteSemigroup gen_L() {
    return FiniteSemigroup::make({"0", "+", "-"}, {0, 1, 2, 1, 1, 1, 2, 2, 2});
  }

  FiniteSemigroup gen_ZL() {
    // clang-format off
    return FiniteSemigroup::make({"0", "+", "-", "z"},
                                 {0, 1, 2, 3,
                                  1, 1, 1, 3,
                                  2, 2, 2, 3,
                                  3, 3, 3, 3});
    // clang-format on
  }

  FiniteSemigroup gen_Z() {
    std::vector<Sign> const   order = {Sign::zero, Sign::plus, Sign::minus, Sign::i, Sign::j};
    std::vector<element_type> table;
    for (Sign x : order) {
      for (Sign y : order) {
        table.push_back(static_cast<element_type>(z_product(x, y)));
      }
    }
    return FiniteSemigroup::make({"0", "+", "-", "i", "j"}, std::move(table));
  }

  FiniteSemigroup coordinate_arrangement_monoid(std::size_t n) {
    if (n < 1 || n > 4) {
      throw PreconditionError("coordinate_arrangement_monoid: n must be in [1, 4]");
    }
    std::vector<SignVector> faces;
    for (auto& w : all_words({Sign::zero, Sign::plus, Sign::minus}, n)) {
      faces.emplace_back(SignMode::real, std::move(w));
    }
    return face_monoid(faces);
  }

  FiniteSemigroup complex_coordinate_monoid(std::size_t n) {
    if (n < 1 || n > 3) {
      throw PreconditionError("complex_coordinate_monoid: n must be in [1, 3]");
    }
    std::vector<SignVector> faces;
    for (auto& w : all_words({Sign::zero, Sign::plus, Sign::minus, Sign::i, Sign::j}, n)) {
      faces.emplace_back(SignMode::complex, std::move(w));
    }
    return face_monoid(faces);
  }

  LineArrangement2D::LineArrangement2D(std::size_t n) : _n(n) {
    if (n < 2) {
      throw PreconditionError("LineArrangement2D: need at least two lines");
    }
  }

  std::size_t LineArrangement2D::ray_angle(std::size_t j) const {
    if (j < 1 || j > 2 * _n) {
      throw PreconditionError("ray index out of range");
    }
    return 2 * (j - 1);
  }

  std::size_t LineArrangement2D::chamber_angle(std::size_t j) const {
    if (j < 1 || j > 2 * _n) {
      throw PreconditionError("chamber index out of range");
    }
    return 2 * j - 1;
  }

  Sign LineArrangement2D::side(std::size_t angle, std::size_t line) const {
    if (line < 1 || line > _n) {
      throw PreconditionError("line index out of range");
    }
    std::size_t const turn = full_turn();
    std::size_t const d    = (angle % turn + turn - 2 * (line - 1)) % turn;
    if (d == 0 || d == turn / 2) {
      return Sign::zero;
    }
    return d < turn / 2 ? Sign::plus : Sign::minus;
  }

  SignVector LineArrangement2D::sign_vector(std::size_t angle) const {
    std::vector<Sign> entries;
    for (std::size_t k = 1; k <= _n; ++k) {
      entries.push_back(side(angle, k));
    }
    return SignVector(SignMode::real, std::move(entries));
  }

  std::string ray_name(std::size_t j) {
    return "r_" + std::to_string(j);
  }

  std::string chamber_name(std::size_t j) {
    return "C_" + std::to_string(j);
  }

  LineArrangementFaces line_arrangement_faces(std::size_t n) {
    if (n < 2 || n > 8) {
      throw PreconditionError("line_arrangement_faces: n must be in [2, 8]");
    }
    LineArrangement2D        arrangement(n);
    std::vector<Face>        faces;
    std::vector<SignVector>  signs;
    std::vector<std::string> names;
    auto add = [&](FaceRole role, std::size_t j, SignVector v, std::string name) {
      faces.push_back({role, j, v});
      signs.push_back(std::move(v));
      names.push_back(std::move(name));
    };
    add(FaceRole::origin,
        0,
        SignVector(SignMode::real, std::vector<Sign>(n, Sign::zero)),
        "O");
    for (std::size_t j = 1; j <= 2 * n; ++j) {
      add(FaceRole::ray, j, arrangement.sign_vector(arrangement.ray_angle(j)), ray_name(j));
    }
    for (std::size_t j = 1; j <= 2 * n; ++j) {
      add(FaceRole::chamber,
          j,
          arrangement.sign_vector(arrangement.chamber_angle(j)),
          chamber_name(j));
    }
    return {arrangement, face_monoid(signs, std::move(names)), std::move(faces)};
  }

}  // namespace lrbqv
