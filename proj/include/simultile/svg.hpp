#ifndef SIMULTILE_SVG_HPP
#define SIMULTILE_SVG_HPP

#include <string>

#include "simultile/stepfn.hpp"

namespace simultile {

// Renders supp f on a number line with its two circle projections drawn
// as annotated arcs. Presentational only; double precision is fine here.
std::string render_svg(const PiecewiseFn& f, const FieldNum& alpha,
                       const FieldNum& beta);

void write_svg_file(const std::string& path, const std::string& svg);

}  // namespace simultile

#endif
