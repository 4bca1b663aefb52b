#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "affect/circumplex.hpp"
#include "affect/delsar.hpp"

namespace affect {

// RFC-4180-style field quoting (only when the field needs it).
std::string csv_escape(std::string_view field);

// Doubles formatted with 17 significant digits so CSV round-trips are
// lossless.
std::string format_double(double value);

void write_points_csv(std::ostream& out, const std::vector<CircumplexPoint>& raw,
                      const std::vector<CircumplexPoint>& normalized);
void write_centroids_csv(std::ostream& out, const CentroidReport& report);
void write_aggregates_csv(std::ostream& out, const std::vector<SubcorpusAggregate>& aggregates);

// Labeled scatter plots.  Every marker is a <circle> with data-series /
// data-label attributes followed by a <text> label; pixel coordinates
// are an affine map of the data values.
struct SvgSeriesPoint {
    std::string series;   // e.g. subcorpus name
    std::string label;    // e.g. emotion keyword
    double x = 0.0;
    double y = 0.0;
};

void write_scatter_svg(std::ostream& out, const std::string& title,
                       const std::string& x_axis, const std::string& y_axis,
                       const std::vector<SvgSeriesPoint>& points);

// 64-bit FNV-1a, used for the run manifest's content hashes.
std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace affect
