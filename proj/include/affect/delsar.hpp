#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "affect/corpus.hpp"
#include "affect/semspace.hpp"

namespace affect {

// Emotion x emotion nearest-neighbor tallies: counts[e][f] documents
// labeled e whose nearest neighbor is labeled f.  Every row sums to the
// subcorpus's n_per_emotion.
struct ClusteringMatrix {
    std::vector<std::string> emotions;
    std::vector<std::vector<std::int64_t>> counts;

    std::int64_t row_sum(std::size_t row) const;
    std::int64_t at(std::string_view from, std::string_view to) const;

    // CSV with a header row of emotion names; one row per source emotion.
    void write_csv(std::ostream& out) const;

    bool operator==(const ClusteringMatrix& other) const = default;
};

// Builds one semantic space over all documents of the subcorpus (each
// tokenized with its own label removed), reassigns every document to
// the label of its nearest neighbor and tallies the result.
// `threads` <= 0 picks a hardware-based default; the outcome does not
// depend on the thread count.
ClusteringMatrix run_delsar(const Subcorpus& subcorpus, int k,
                            const SvdOptions& options = {}, int threads = 0);

}  // namespace affect
