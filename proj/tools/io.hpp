//
// igwp - regularity and the word problem for free idempotent generated
// semigroups over finite biordered sets.
//
// JSON file formats.

#ifndef IGWP_TOOLS_IO_HPP_
#define IGWP_TOOLS_IO_HPP_

#include <string>  // for string
#include <vector>  // for vector

#include "igwp/bgh.hpp"
#include "igwp/biorder.hpp"
#include "igwp/group/normalize.hpp"
#include "igwp/group/presentation.hpp"
#include "igwp/mul_table.hpp"

namespace igwp::io {

  // Table: {"n": 2, "table": [[0, 1], [1, 1]], "names": ["a", "b"]}
  MulTable    parse_table(std::string const& text);
  std::string dump_table(MulTable const& t);

  // Biorder: {"m": 2, "names": [...], "source": "...",
  //           "products": [{"e": "a", "f": "b", "ef": "b"}, ...]}
  // The diagonal products ee = e may be omitted on input.
  Biorder     parse_biorder(std::string const& text);
  std::string dump_biorder(Biorder const& b);

  // Presentation: {"generators": ["a"], "relations": [[["a", "a"], []]],
  //                "subgroup": ["a"]}, letters "a" or "a^-1".
  GroupPresentation parse_presentation(std::string const& text);
  std::string       dump_presentation(GroupPresentation const& p);

  // Normalized: {"generators": [...], "triples": [["a", "b", "c"], ...],
  //              "identity": "z", "subgroup": [...],
  //              "inverses": [["a", "a'"], ...]}
  NormalizedPresentation parse_normalized(std::string const& text);
  std::string            dump_normalized(NormalizedPresentation const& np);

  // Sidecar of a B_{G,H} table: {"normalized": ..., "I": [...], "J": [...],
  //                              "tags": [{"name", "part", "i", "j"}, ...]}
  std::string dump_bgh_provenance(BghBand const& bb);
  BghBand     load_bgh(std::string const& table_text,
                       std::string const& provenance_text);

  std::string read_file(std::string const& path);
  void        write_file(std::string const& path, std::string const& text);

}  // namespace igwp::io

#endif  // IGWP_TOOLS_IO_HPP_
