#ifndef PEIFFER_RATIONAL_HPP_
#define PEIFFER_RATIONAL_HPP_

// Exact rational vectors and matrices, and subspaces kept in reduced row
// echelon form.

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "peiffer/error.hpp"

namespace peiffer {

  using Rational = boost::multiprecision::cpp_rational;
  using Vector   = std::vector<Rational>;

  // "p/q" or "p", optional leading sign.
  inline Rational parse_rational(std::string_view text) {
    using boost::multiprecision::cpp_int;
    auto digits_ok = [](std::string_view s) {
      if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        s.remove_prefix(1);
      }
      if (s.empty()) {
        return false;
      }
      for (char c : s) {
        if (c < '0' || c > '9') {
          return false;
        }
      }
      return true;
    };
    auto const slash = text.find('/');
    auto const num   = text.substr(0, slash);
    auto const den = slash == std::string_view::npos ? std::string_view("1")
                                                     : text.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+') {
      throw InvalidInput("bad rational '" + std::string(text) + "'");
    }
    auto strip = [](std::string_view s) {
      return std::string(s[0] == '+' ? s.substr(1) : s);
    };
    cpp_int const d(strip(den));
    if (d == 0) {
      throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(cpp_int(strip(num)), d);
  }

  inline std::string format_rational(Rational const& r) {
    auto const num = boost::multiprecision::numerator(r);
    auto const den = boost::multiprecision::denominator(r);
    if (den == 1) {
      return num.str();
    }
    return num.str() + "/" + den.str();
  }

  inline Vector zero_vector(std::size_t n) {
    return Vector(n, Rational(0));
  }

  inline Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v = zero_vector(n);
    v[i]     = 1;
    return v;
  }

  inline bool is_zero(Vector const& v) {
    for (auto const& x : v) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  inline Vector operator+(Vector a, Vector const& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] += b[i];
    }
    return a;
  }

  inline Vector operator-(Vector a, Vector const& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] -= b[i];
    }
    return a;
  }

  inline Vector operator*(Rational const& s, Vector v) {
    for (auto& x : v) {
      x *= s;
    }
    return v;
  }

  inline std::string format_vector(Vector const& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      s += (i ? ", " : "") + format_rational(v[i]);
    }
    return s + ")";
  }

  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

    static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
      }
      return m;
    }

    static Matrix from_columns(std::size_t rows,
                               std::vector<Vector> const& cols) {
      Matrix m(rows, cols.size());
      for (std::size_t j = 0; j < cols.size(); ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
          m(i, j) = cols[j][i];
        }
      }
      return m;
    }

    std::size_t rows() const noexcept {
      return rows_;
    }

    std::size_t cols() const noexcept {
      return cols_;
    }

    Rational& operator()(std::size_t i, std::size_t j) {
      return data_[i * cols_ + j];
    }

    Rational const& operator()(std::size_t i, std::size_t j) const {
      return data_[i * cols_ + j];
    }

    Vector column(std::size_t j) const {
      Vector v(rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        v[i] = (*this)(i, j);
      }
      return v;
    }

    Vector apply(Vector const& v) const {
      if (v.size() != cols_) {
        throw InvalidInput("matrix-vector dimension mismatch");
      }
      Vector out = zero_vector(rows_);
      for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
          if (v[j] != 0) {
            out[i] += (*this)(i, j) * v[j];
          }
        }
      }
      return out;
    }

    friend Matrix operator*(Matrix const& a, Matrix const& b) {
      if (a.cols_ != b.rows_) {
        throw InvalidInput("matrix product dimension mismatch");
      }
      Matrix c(a.rows_, b.cols_);
      for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
          if (a(i, k) == 0) {
            continue;
          }
          for (std::size_t j = 0; j < b.cols_; ++j) {
            c(i, j) += a(i, k) * b(k, j);
          }
        }
      }
      return c;
    }

    friend Matrix operator+(Matrix a, Matrix const& b) {
      for (std::size_t i = 0; i < a.data_.size(); ++i) {
        a.data_[i] += b.data_[i];
      }
      return a;
    }

    friend Matrix operator-(Matrix a, Matrix const& b) {
      for (std::size_t i = 0; i < a.data_.size(); ++i) {
        a.data_[i] -= b.data_[i];
      }
      return a;
    }

    friend Matrix operator*(Rational const& s, Matrix a) {
      for (auto& x : a.data_) {
        x *= s;
      }
      return a;
    }

    bool is_zero() const {
      for (auto const& x : data_) {
        if (x != 0) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t           rows_ = 0;
    std::size_t           cols_ = 0;
    std::vector<Rational> data_;
  };

  // Subspace of Q^n held as reduced row echelon rows.
  class Subspace {
   public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    std::size_t ambient() const noexcept {
      return ambient_;
    }

    std::size_t dim() const noexcept {
      return rows_.size();
    }

    std::vector<Vector> const& basis() const noexcept {
      return rows_;
    }

    std::vector<std::size_t> const& pivots() const noexcept {
      return pivots_;
    }

    // v minus its components along the pivot rows; zero iff v is in the
    // subspace, and otherwise supported off the pivot columns.
    Vector reduce(Vector v) const {
      for (std::size_t r = 0; r < rows_.size(); ++r) {
        Rational const c = v[pivots_[r]];
        if (c != 0) {
          v = v - c * rows_[r];
        }
      }
      return v;
    }

    bool contains(Vector const& v) const {
      return peiffer::is_zero(reduce(v));
    }

    // Adds v; returns false if v was already in the span.
    bool add(Vector const& v) {
      Vector w = reduce(v);
      std::size_t p = 0;
      while (p < ambient_ && w[p] == 0) {
        ++p;
      }
      if (p == ambient_) {
        return false;
      }
      w = Rational(1) / w[p] * w;
      for (auto& row : rows_) {
        if (row[p] != 0) {
          row = row - row[p] * w;
        }
      }
      auto const at = std::lower_bound(pivots_.begin(), pivots_.end(), p)
                      - pivots_.begin();
      pivots_.insert(pivots_.begin() + at, p);
      rows_.insert(rows_.begin() + at, std::move(w));
      return true;
    }

    // Columns that are not pivots; their unit vectors span a complement.
    std::vector<std::size_t> free_columns() const {
      std::vector<std::size_t> out;
      std::size_t              r = 0;
      for (std::size_t c = 0; c < ambient_; ++c) {
        if (r < pivots_.size() && pivots_[r] == c) {
          ++r;
        } else {
          out.push_back(c);
        }
      }
      return out;
    }

   private:
    std::size_t              ambient_;
    std::vector<Vector>      rows_;
    std::vector<std::size_t> pivots_;
  };

  inline std::size_t rank(std::vector<Vector> const& vs, std::size_t ambient) {
    Subspace s(ambient);
    for (auto const& v : vs) {
      s.add(v);
    }
    return s.dim();
  }

}  // namespace peiffer

#endif  // PEIFFER_RATIONAL_HPP_
