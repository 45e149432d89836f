//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// Command line front end.

#ifndef IGWP_TOOLS_CLI_HPP_
#define IGWP_TOOLS_CLI_HPP_

#include <ostream>  // for ostream
#include <string>   // for string
#include <vector>   // for vector

namespace igwp::cli {

  enum Exit : int {
    ok              = 0,
    decided_false   = 1,
    input_error     = 2,
    capability      = 3,
    internal_error  = 4
  };

  //! Runs one command; args excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace igwp::cli

#endif  // IGWP_TOOLS_CLI_HPP_
