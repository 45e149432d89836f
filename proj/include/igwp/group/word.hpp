//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Words in a free group. Generator g is the letter g + 1 and its inverse is
// -(g + 1), so 0 never occurs.

#ifndef IGWP_GROUP_WORD_HPP_
#define IGWP_GROUP_WORD_HPP_

#include <algorithm>  // for reverse
#include <cstdint>    // for int32_t, uint32_t
#include <cstdlib>    // for abs
#include <string>     // for string
#include <vector>     // for vector

#include "../error.hpp"

namespace igwp {

  using GroupWord = std::vector<int32_t>;

  inline int32_t gen_letter(uint32_t g, bool inverse = false) {
    int32_t x = static_cast<int32_t>(g) + 1;
    return inverse ? -x : x;
  }

  inline uint32_t letter_generator(int32_t x) {
    return static_cast<uint32_t>(std::abs(x) - 1);
  }

  inline GroupWord inverse(GroupWord w) {
    std::reverse(w.begin(), w.end());
    for (auto& x : w) {
      x = -x;
    }
    return w;
  }

  inline GroupWord free_reduce(GroupWord const& w) {
    GroupWord out;
    out.reserve(w.size());
    for (int32_t x : w) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  //! Free reduction followed by cancelling inverse letters at the two ends.
  inline GroupWord cyclic_reduce(GroupWord const& w) {
    GroupWord r = free_reduce(w);
    size_t    i = 0, j = r.size();
    while (j - i >= 2 && r[i] == -r[j - 1]) {
      ++i;
      --j;
    }
    return GroupWord(r.begin() + i, r.begin() + j);
  }

  inline GroupWord operator*(GroupWord u, GroupWord const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  //! "a", "a^-1"
  inline std::string letter_name(int32_t x, std::vector<std::string> const& names) {
    uint32_t    g = letter_generator(x);
    std::string s = g < names.size() ? names[g] : "x" + std::to_string(g);
    return x < 0 ? s + "^-1" : s;
  }

  inline std::string word_string(GroupWord const&                w,
                                 std::vector<std::string> const& names) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (size_t k = 0; k < w.size(); ++k) {
      if (k != 0) {
        out += " ";
      }
      out += letter_name(w[k], names);
    }
    return out;
  }

  //! Inverse of letter_name; throws malformed_input for unknown names.
  inline int32_t parse_letter(std::string const&              s,
                              std::vector<std::string> const& names) {
    std::string base = s;
    bool        inv  = false;
    if (base.size() > 3 && base.compare(base.size() - 3, 3, "^-1") == 0) {
      base.resize(base.size() - 3);
      inv = true;
    }
    for (uint32_t g = 0; g < names.size(); ++g) {
      if (names[g] == base) {
        return gen_letter(g, inv);
      }
    }
    fail(ErrorCode::malformed_input, "unknown generator '" + s + "'");
  }

}  // namespace igwp

#endif  // IGWP_GROUP_WORD_HPP_
