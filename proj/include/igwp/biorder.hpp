//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// The biordered set of a semigroup as a partial algebra on its idempotents.

#ifndef IGWP_BIORDER_HPP_
#define IGWP_BIORDER_HPP_

#include <cstddef>   // for size_t
#include <cstdint>   // for int32_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for move
#include <vector>    // for vector

#include "error.hpp"
#include "mul_table.hpp"

namespace igwp {

  enum class BiorderSource { extracted, given };

  inline char const* biorder_source_name(BiorderSource s) noexcept {
    return s == BiorderSource::extracted ? "extracted-from-table"
                                         : "given-directly";
  }

  //! A finite biordered set (E, *) where e * f is defined exactly on the
  //! basic pairs. Idempotents are numbered 0, ..., m - 1.
  class Biorder {
   public:
    static constexpr int32_t undefined = -1;

    Biorder() = default;

    //! \p products is row-major m x m with Biorder::undefined for pairs that
    //! are not basic. Nothing beyond index ranges is checked here; see
    //! validate_biorder.
    Biorder(size_t                     m,
            std::vector<int32_t>       products,
            std::vector<std::string>   names  = {},
            BiorderSource              source = BiorderSource::given,
            std::vector<element_index> element_of = {})
        : _m(m),
          _prod(std::move(products)),
          _names(std::move(names)),
          _source(source),
          _element_of(std::move(element_of)) {
      if (_prod.size() != _m * _m) {
        fail(ErrorCode::malformed_input,
             "biorder product table has " + std::to_string(_prod.size())
                 + " entries, expected " + std::to_string(_m * _m));
      }
      if (!_names.empty() && _names.size() != _m) {
        fail(ErrorCode::malformed_input,
             "biorder names has " + std::to_string(_names.size())
                 + " entries, expected " + std::to_string(_m));
      }
      if (!_element_of.empty() && _element_of.size() != _m) {
        fail(ErrorCode::malformed_input, "element_of has the wrong size");
      }
      for (int32_t v : _prod) {
        if (v != undefined && (v < 0 || static_cast<size_t>(v) >= _m)) {
          fail(ErrorCode::malformed_input,
               "biorder product " + std::to_string(v) + " is out of range");
        }
      }
    }

    size_t size() const noexcept {
      return _m;
    }

    //! The stored product, or Biorder::undefined.
    int32_t operator()(element_index e, element_index f) const noexcept {
      return _prod[e * _m + f];
    }

    bool basic(element_index e, element_index f) const noexcept {
      return (*this)(e, f) != undefined;
    }

    BiorderSource source() const noexcept {
      return _source;
    }

    std::vector<int32_t> const& products() const noexcept {
      return _prod;
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::string name(element_index e) const {
      return _names.empty() ? std::to_string(e) : _names[e];
    }

    //! Index of the table element for idempotent e when extracted; empty
    //! otherwise.
    std::vector<element_index> const& element_of() const noexcept {
      return _element_of;
    }

    bool operator==(Biorder const&) const = default;

   private:
    size_t                     _m = 0;
    std::vector<int32_t>       _prod;
    std::vector<std::string>   _names;
    BiorderSource              _source = BiorderSource::given;
    std::vector<element_index> _element_of;
  };

  inline std::optional<element_index> basic_product(Biorder const& b,
                                                    element_index  e,
                                                    element_index  f) {
    if (e >= b.size() || f >= b.size()) {
      fail(ErrorCode::malformed_input, "idempotent index out of range");
    }
    int32_t v = b(e, f);
    if (v == Biorder::undefined) {
      return std::nullopt;
    }
    return static_cast<element_index>(v);
  }

  //! Idempotents of \p t in increasing order become 0, ..., m - 1.
  inline Biorder extract_biorder(MulTable const& t) {
    require_semigroup(t);
    std::vector<element_index> idem = t.idempotents();
    size_t const               m    = idem.size();
    std::vector<element_index> pos(t.size(), 0);
    for (size_t k = 0; k < m; ++k) {
      pos[idem[k]] = static_cast<element_index>(k);
    }
    std::vector<int32_t>     prod(m * m, Biorder::undefined);
    std::vector<std::string> names;
    for (size_t x = 0; x < m; ++x) {
      names.push_back(t.name(idem[x]));
      for (size_t y = 0; y < m; ++y) {
        element_index e = idem[x], f = idem[y];
        element_index ef = t(e, f), fe = t(f, e);
        if (ef == e || ef == f || fe == e || fe == f) {
          // ef is idempotent for basic pairs
          prod[x * m + y] = static_cast<int32_t>(pos[ef]);
        }
      }
    }
    return Biorder(m,
                   std::move(prod),
                   std::move(names),
                   BiorderSource::extracted,
                   std::move(idem));
  }

  struct BiorderViolation {
    element_index e;
    element_index f;
    std::string   what;
  };

  struct BiorderReport {
    std::vector<BiorderViolation> violations;

    bool ok() const noexcept {
      return violations.empty();
    }
  };

  //! Necessary conditions only: diagonal, symmetry of the domain, the
  //! basic-pair law and idempotency of products.
  inline BiorderReport validate_biorder(Biorder const& b) {
    BiorderReport r;
    size_t const  m = b.size();
    for (element_index e = 0; e < m; ++e) {
      if (b(e, e) != static_cast<int32_t>(e)) {
        r.violations.push_back({e, e, "diagonal pair missing or e*e != e"});
      }
    }
    for (element_index e = 0; e < m; ++e) {
      for (element_index f = 0; f < m; ++f) {
        int32_t ef = b(e, f);
        if (ef == Biorder::undefined) {
          continue;
        }
        if (!b.basic(f, e)) {
          r.violations.push_back({e, f, "(e,f) defined but (f,e) undefined"});
          continue;
        }
        int32_t fe = b(f, e);
        auto    in = [&](int32_t x) {
          return x == static_cast<int32_t>(e) || x == static_cast<int32_t>(f);
        };
        if (!in(ef) && !in(fe)) {
          r.violations.push_back({e, f, "{e,f} and {ef,fe} are disjoint"});
        }
        auto g = static_cast<element_index>(ef);
        if (b(g, g) != ef) {
          r.violations.push_back({e, f, "product g has g*g undefined or != g"});
        }
      }
    }
    return r;
  }

  inline Biorder dual(Biorder const& b) {
    size_t const         m = b.size();
    std::vector<int32_t> prod(m * m);
    for (element_index e = 0; e < m; ++e) {
      for (element_index f = 0; f < m; ++f) {
        prod[e * m + f] = b(f, e);
      }
    }
    return Biorder(m, std::move(prod), b.names(), b.source(), b.element_of());
  }

}  // namespace igwp

#endif  // IGWP_BIORDER_HPP_
