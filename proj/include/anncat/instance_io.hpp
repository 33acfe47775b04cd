#pragma once

// JSON instance documents.
//
//   {
//     "ring":   "dual(2)" | {"kind": "cyclic"|"dual"|"upper", "n": N}
//             | {"kind": "product", "factors": [ring, ...]}
//             | {"kind": "tables", "add": T, "mul": T, "zero": i, "one": i},
//     "module": "regular" | {"kind": "regular"}
//             | {"kind": "tables", "add": T, "zero": i, "left": T, "right": T},
//     "eta":    "zero" | [[m]],        eta[x][y]
//     "lambda": "zero" | [[[m]]],      lambda[a][x][y]
//     "beta":   "zero" | [[m]],        optional, beta[x][y]
//     "name":   "..."                  optional, ignored
//   }
//
// All entries are element indices.

#include <filesystem>
#include <string>
#include <string_view>

#include "anncat/category_model.hpp"

namespace anncat {

// Throws LocatedError (ParseError, ShapeError), AxiomViolation, MalformedSpec.
AnnStructure parse_instance(std::string_view text);
// As parse_instance, plus IoError when the file cannot be read.
AnnStructure load_instance(const std::filesystem::path& path);

// Canonical document: fixed key order, all-zero tables written as "zero",
// explicit-table rings and modules written in full. parse_instance inverts it.
std::string serialize_instance(const AnnStructure& s);

// Lower-case hex SHA-256 of serialize_instance(s).
std::string instance_digest(const AnnStructure& s);

}  // namespace anncat
