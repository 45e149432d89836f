//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Finite group presentations.

#ifndef IGWP_GROUP_PRESENTATION_HPP_
#define IGWP_GROUP_PRESENTATION_HPP_

#include <cstdint>   // for uint32_t
#include <optional>  // for optional
#include <string>    // for string
#include <utility>   // for pair
#include <vector>    // for vector

#include "../error.hpp"
#include "word.hpp"

namespace igwp {

  struct GroupPresentation {
    std::vector<std::string>                   generators;
    std::vector<std::pair<GroupWord, GroupWord>> relations;
    //! Optional distinguished subgroup, as generator indices.
    std::optional<std::vector<uint32_t>> subgroup;

    size_t rank() const noexcept {
      return generators.size();
    }

    //! u v^-1 for each relation u = v, cyclically reduced, empty ones dropped.
    std::vector<GroupWord> relators() const {
      std::vector<GroupWord> out;
      for (auto const& [u, v] : relations) {
        GroupWord r = cyclic_reduce(u * inverse(v));
        if (!r.empty()) {
          out.push_back(std::move(r));
        }
      }
      return out;
    }

    void validate() const {
      auto check = [&](GroupWord const& w) {
        for (int32_t x : w) {
          if (x == 0 || letter_generator(x) >= generators.size()) {
            fail(ErrorCode::malformed_input,
                 "relation uses undeclared generator "
                     + std::to_string(x));
          }
        }
      };
      for (auto const& [u, v] : relations) {
        check(u);
        check(v);
      }
      if (subgroup) {
        for (uint32_t g : *subgroup) {
          if (g >= generators.size()) {
            fail(ErrorCode::malformed_input,
                 "subgroup generator " + std::to_string(g) + " undeclared");
          }
        }
      }
    }

    bool operator==(GroupPresentation const&) const = default;
  };

}  // namespace igwp

#endif  // IGWP_GROUP_PRESENTATION_HPP_
