//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Finite semigroups given by their composition tables.

#ifndef IGWP_MUL_TABLE_HPP_
#define IGWP_MUL_TABLE_HPP_

#include <algorithm>  // for min
#include <array>    // for array
#include <iterator>  // for begin, end
#include <cstddef>  // for size_t
#include <cstdint>  // for uint32_t
#include <string>   // for string, to_string
#include <utility>  // for move
#include <vector>   // for vector

#include "error.hpp"

namespace igwp {

  using element_index = uint32_t;

  //! A finite semigroup presented as an n x n composition table.
  //!
  //! Element indices are canonical; names are optional labels which are
  //! carried along for printing and for resolving words typed by a user.
  class MulTable {
   public:
    MulTable() = default;

    //! Entries are row-major: \p entries[a * n + b] is the product ab.
    //! Throws ErrorCode::malformed_input if an entry is out of range or the
    //! sizes do not match.
    MulTable(size_t n,
             std::vector<element_index> entries,
             std::vector<std::string>   names = {})
        : _n(n), _table(std::move(entries)), _names(std::move(names)) {
      if (_table.size() != _n * _n) {
        fail(ErrorCode::malformed_input,
             "table has " + std::to_string(_table.size())
                 + " entries, expected " + std::to_string(_n * _n));
      }
      if (!_names.empty() && _names.size() != _n) {
        fail(ErrorCode::malformed_input,
             "names has " + std::to_string(_names.size())
                 + " entries, expected " + std::to_string(_n));
      }
      for (size_t a = 0; a < _n; ++a) {
        for (size_t b = 0; b < _n; ++b) {
          if (_table[a * _n + b] >= _n) {
            fail(ErrorCode::malformed_input,
                 "entry (" + std::to_string(a) + "," + std::to_string(b)
                     + ") = " + std::to_string(_table[a * _n + b])
                     + " is out of range [0, " + std::to_string(_n) + ")");
          }
        }
      }
    }

    size_t size() const noexcept {
      return _n;
    }

    element_index operator()(element_index a, element_index b) const noexcept {
      return _table[a * _n + b];
    }

    //! Product of a nonempty word, evaluated left to right.
    template <typename Range>
    element_index evaluate(Range const& word) const {
      auto it = std::begin(word);
      if (it == std::end(word)) {
        fail(ErrorCode::precondition, "cannot evaluate the empty word");
      }
      element_index x = *it++;
      for (; it != std::end(word); ++it) {
        x = (*this)(x, *it);
      }
      return x;
    }

    bool is_idempotent(element_index a) const noexcept {
      return (*this)(a, a) == a;
    }

    std::vector<element_index> idempotents() const {
      std::vector<element_index> out;
      for (element_index a = 0; a < _n; ++a) {
        if (is_idempotent(a)) {
          out.push_back(a);
        }
      }
      return out;
    }

    bool has_names() const noexcept {
      return !_names.empty();
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string name(element_index a) const {
      return _names.empty() ? std::to_string(a) : _names[a];
    }

    std::vector<element_index> const& entries() const noexcept {
      return _table;
    }

    bool operator==(MulTable const& that) const = default;

   private:
    size_t                     _n = 0;
    std::vector<element_index> _table;
    std::vector<std::string>   _names;
  };

  struct TableReport {
    //! Every triple (a, b, c) with (ab)c != a(bc).
    std::vector<std::array<element_index, 3>> violations;
    bool                                      band = false;

    bool associative() const noexcept {
      return violations.empty();
    }
  };

  //! Scans all triples for associativity failures and records whether every
  //! element is idempotent.
  inline TableReport validate_table(MulTable const& t) {
    TableReport  r;
    size_t const n = t.size();
    for (element_index a = 0; a < n; ++a) {
      for (element_index b = 0; b < n; ++b) {
        element_index const ab = t(a, b);
        for (element_index c = 0; c < n; ++c) {
          if (t(ab, c) != t(a, t(b, c))) {
            r.violations.push_back({a, b, c});
          }
        }
      }
    }
    r.band = true;
    for (element_index a = 0; a < n; ++a) {
      if (!t.is_idempotent(a)) {
        r.band = false;
        break;
      }
    }
    return r;
  }

  inline void require_semigroup(MulTable const& t) {
    auto r = validate_table(t);
    if (!r.associative()) {
      auto const& v = r.violations.front();
      fail(ErrorCode::malformed_input,
           "table is not associative, e.g. at (" + std::to_string(v[0]) + ","
               + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")");
    }
  }

  namespace tables {
    //! The rectangular band I x J with (i,j)(k,l) = (i,l); element (i,j) has
    //! index i * cols + j and name "e<i+1><j+1>".
    inline MulTable rectangular_band(size_t rows, size_t cols) {
      size_t                     n = rows * cols;
      std::vector<element_index> t(n * n);
      std::vector<std::string>   names(n);
      for (size_t a = 0; a < n; ++a) {
        names[a] = "e" + std::to_string(a / cols + 1) + std::to_string(a % cols + 1);
        for (size_t b = 0; b < n; ++b) {
          t[a * n + b] = static_cast<element_index>((a / cols) * cols + b % cols);
        }
      }
      return MulTable(n, std::move(t), std::move(names));
    }

    //! x y = x.
    inline MulTable left_zero(size_t n) {
      std::vector<element_index> t(n * n);
      for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
          t[a * n + b] = static_cast<element_index>(a);
        }
      }
      return MulTable(n, std::move(t));
    }

    //! The chain 0 < 1 < ... < n-1 under min.
    inline MulTable chain(size_t n) {
      std::vector<element_index> t(n * n);
      for (size_t a = 0; a < n; ++a) {
        for (size_t b = 0; b < n; ++b) {
          t[a * n + b] = static_cast<element_index>(std::min(a, b));
        }
      }
      return MulTable(n, std::move(t));
    }

    //! Transpose of the table, i.e. the dual semigroup.
    inline MulTable opposite(MulTable const& s) {
      size_t                     n = s.size();
      std::vector<element_index> t(n * n);
      for (element_index a = 0; a < n; ++a) {
        for (element_index b = 0; b < n; ++b) {
          t[a * n + b] = s(b, a);
        }
      }
      return MulTable(n, std::move(t), s.names());
    }
  }  // namespace tables

}  // namespace igwp

#endif  // IGWP_MUL_TABLE_HPP_
