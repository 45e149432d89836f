//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Word problem and membership oracles for finitely presented groups.

#ifndef IGWP_GROUP_ORACLE_HPP_
#define IGWP_GROUP_ORACLE_HPP_

#include <deque>       // for deque
#include <functional>  // for function
#include <memory>      // for shared_ptr
#include <mutex>       // for mutex, lock_guard
#include <optional>    // for optional
#include <string>      // for string
#include <vector>      // for vector

#include "../error.hpp"
#include "presentation.hpp"
#include "tietze.hpp"
#include "todd_coxeter.hpp"
#include "word.hpp"

namespace igwp {

  enum class OracleStrategy {
    free_reduction,
    finite_enumeration,
    product_of_free,
    external,
    automatic  // free reduction when the presentation simplifies to a free
               // group, finite enumeration otherwise
  };

  inline char const* oracle_strategy_name(OracleStrategy s) noexcept {
    switch (s) {
      case OracleStrategy::free_reduction:
        return "free-reduction";
      case OracleStrategy::finite_enumeration:
        return "finite-enumeration";
      case OracleStrategy::product_of_free:
        return "product-of-free";
      case OracleStrategy::external:
        return "external";
      case OracleStrategy::automatic:
        return "auto";
    }
    return "unknown";
  }

  //! Subgroup closure inside a finite group: the elements of <gens>.
  inline std::vector<bool> subgroup_closure(CayleyTable const&           t,
                                            std::vector<uint32_t> const& gens) {
    std::vector<bool>    in(t.order, false);
    std::deque<uint32_t> queue{0};
    in[0] = true;
    while (!queue.empty()) {
      uint32_t x = queue.front();
      queue.pop_front();
      for (uint32_t g : gens) {
        for (uint32_t y : {t.mul[x][g], t.mul[x][t.inv[g]]}) {
          if (!in[y]) {
            in[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
    return in;
  }

  //! Answers equality and membership questions about a group presentation.
  //!
  //! Lazily computed data (simplification, Cayley table) is cached behind a
  //! mutex, so one oracle may be queried from several threads.
  class GroupOracle {
   public:
    using EqualFn  = std::function<bool(GroupWord const&, GroupWord const&)>;
    using MemberFn = std::function<bool(GroupWord const&,
                                        std::vector<GroupWord> const&)>;

    GroupOracle(GroupPresentation p, OracleStrategy s, size_t cap = 1000)
        : _p(std::move(p)), _strategy(s), _cap(cap), _cache(new Cache()) {
      _p.validate();
      if (s == OracleStrategy::external || s == OracleStrategy::product_of_free) {
        fail(ErrorCode::precondition,
             "use GroupOracle::external or a product-of-free factory");
      }
    }

    static GroupOracle external(GroupPresentation p,
                                EqualFn           eq,
                                MemberFn          member = nullptr) {
      GroupOracle o;
      o._p        = std::move(p);
      o._strategy = OracleStrategy::external;
      o._eq       = std::move(eq);
      o._member   = std::move(member);
      o._cache.reset(new Cache());
      return o;
    }

    //! For use by the product-of-free construction.
    static GroupOracle with_callbacks(GroupPresentation p,
                                      OracleStrategy    s,
                                      EqualFn           eq,
                                      MemberFn          member) {
      GroupOracle o = external(std::move(p), std::move(eq), std::move(member));
      o._strategy   = s;
      return o;
    }

    GroupPresentation const& presentation() const noexcept {
      return _p;
    }

    OracleStrategy strategy() const noexcept {
      return _strategy;
    }

    size_t cap() const noexcept {
      return _cap;
    }

    bool equal(GroupWord const& u, GroupWord const& v) const {
      check(u);
      check(v);
      switch (_strategy) {
        case OracleStrategy::external:
        case OracleStrategy::product_of_free:
          return _eq(u, v);
        case OracleStrategy::free_reduction:
          return free_equal(u, v, true);
        case OracleStrategy::finite_enumeration: {
          CayleyTable const& t = table();
          return t.evaluate(u) == t.evaluate(v);
        }
        case OracleStrategy::automatic: {
          if (simplified().relators.empty() || free_equal(u, v, false)) {
            return free_equal(u, v, false);
          }
          CayleyTable const* t = nullptr;
          try {
            t = &table();
          } catch (Error const& e) {
            if (e.code() != ErrorCode::overflow) {
              throw;
            }
            fail(ErrorCode::capability,
                 "auto oracle: words differ after simplification and the "
                 "group is not realised within cap "
                     + std::to_string(_cap));
          }
          return t->evaluate(u) == t->evaluate(v);
        }
      }
      return false;
    }

    bool is_identity(GroupWord const& w) const {
      return equal(w, {});
    }

    //! Whether w lies in the subgroup generated by the given words.
    bool member(GroupWord const& w, std::vector<GroupWord> const& gens) const {
      check(w);
      for (auto const& g : gens) {
        check(g);
      }
      switch (_strategy) {
        case OracleStrategy::external:
        case OracleStrategy::product_of_free:
          if (!_member) {
            fail(ErrorCode::capability, "oracle does not support membership");
          }
          return _member(w, gens);
        case OracleStrategy::free_reduction:
          fail(ErrorCode::capability,
               "free-reduction oracle does not support membership");
        case OracleStrategy::finite_enumeration:
        case OracleStrategy::automatic: {
          CayleyTable const&    t = table();
          std::vector<uint32_t> els;
          for (auto const& g : gens) {
            els.push_back(t.evaluate(g));
          }
          return subgroup_closure(t, els)[t.evaluate(w)];
        }
      }
      return false;
    }

    //! Membership in the subgroup generated by a set of generators.
    bool member(GroupWord const& w, std::vector<uint32_t> const& gens) const {
      std::vector<GroupWord> words;
      for (uint32_t g : gens) {
        words.push_back({gen_letter(g)});
      }
      return member(w, words);
    }

    //! The Cayley table; throws ErrorCode::overflow if the group is not
    //! realised within the cap.
    CayleyTable const& table() const {
      std::lock_guard<std::mutex> lock(_cache->mtx);
      if (!_cache->table_done) {
        _cache->table      = enumerate_finite(_p, _cap);
        _cache->table_done = true;
      }
      if (!_cache->table) {
        fail(ErrorCode::overflow,
             "group not realised by enumeration within cap "
                 + std::to_string(_cap));
      }
      return *_cache->table;
    }

    SimplifiedPresentation const& simplified() const {
      std::lock_guard<std::mutex> lock(_cache->mtx);
      if (!_cache->simple) {
        _cache->simple = tietze_simplify(_p);
      }
      return *_cache->simple;
    }

   private:
    GroupOracle() = default;

    struct Cache {
      std::mutex                            mtx;
      std::optional<SimplifiedPresentation> simple;
      bool                                  table_done = false;
      std::optional<CayleyTable>            table;
    };

    void check(GroupWord const& w) const {
      for (int32_t x : w) {
        if (x == 0 || letter_generator(x) >= _p.rank()) {
          fail(ErrorCode::malformed_input,
               "word uses a letter outside the presentation");
        }
      }
    }

    bool free_equal(GroupWord const& u, GroupWord const& v, bool strict) const {
      SimplifiedPresentation const& s = simplified();
      if (!s.relators.empty()) {
        if (strict) {
          fail(ErrorCode::capability,
               "free-reduction oracle: presentation does not simplify to a "
               "free group");
        }
      }
      return s.map(u) == s.map(v);
    }

    GroupPresentation      _p;
    OracleStrategy         _strategy = OracleStrategy::finite_enumeration;
    size_t                 _cap      = 1000;
    EqualFn                _eq;
    MemberFn               _member;
    std::shared_ptr<Cache> _cache;
  };

}  // namespace igwp

#endif  // IGWP_GROUP_ORACLE_HPP_
