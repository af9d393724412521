#pragma once

#include <optional>
#include <string>

#include "wittbundle/realize.hpp"

namespace witt {

// Matrices as JSON arrays of rational strings: [["a11","a12"],["a21","a22"]].
std::string mat2_to_json(const Mat2& m);
Mat2 mat2_from_json(const std::string& json);

// Representation files:
//   { "genus": g, "pairs": [ {"A": matrix, "B": matrix}, ... ],
//     "boundary": matrix }      <- bounded only; closed reps omit it
// A "certificate" key (written by realize) is ignored on read.
std::string closed_rep_to_json(const ClosedSurfaceRep& r);
std::string bounded_rep_to_json(const BoundedSurfaceRep& r);

ClosedSurfaceRep closed_rep_from_json(const std::string& json);
BoundedSurfaceRep bounded_rep_from_json(const std::string& json);

// The realize output file: the closed rep plus its certificate.
std::string realize_result_to_json(const RealizeResult& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace witt
