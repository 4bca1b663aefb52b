#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "affect/errors.hpp"

namespace affect {

using TokenStream = std::vector<std::string>;

// Case-folds, drops URLs and @-mentions, strips the '#' of hashtags
// (keeping the word), removes ASCII punctuation and splits on whitespace.
// Bytes outside ASCII pass through untouched.
TokenStream tokenize(std::string_view text);

// Removes every whole-token occurrence of `label` (tokens are already
// case-folded, so comparison is exact).
TokenStream remove_label_tokens(TokenStream tokens, std::string_view label);

// Sparse term-frequency matrix, terms as rows, documents as columns.
// Term indices follow first occurrence across the token streams, so the
// layout is deterministic.
struct TermDocMatrix {
    std::vector<std::string> terms;                 // row -> token
    std::unordered_map<std::string, int> vocab;     // token -> row
    Eigen::SparseMatrix<double> counts;             // terms x docs, tf >= 1

    std::size_t n_terms() const { return terms.size(); }
    std::size_t n_docs() const { return static_cast<std::size_t>(counts.cols()); }
};

// Throws EmptyCorpusError when every stream is empty.  Empty documents
// keep their (all-zero) column.
TermDocMatrix build_term_doc(const std::vector<TokenStream>& docs);

// Log-entropy weighting, applied in place:
//   weighted(i,j) = log2(1 + tf(i,j)) * G(i)
//   G(i) = 1 + sum_j p(i,j) log2 p(i,j) / log2 n,   p(i,j) = tf(i,j)/gf(i)
// G is clamped to [0,1] against rounding; with n < 2 documents the
// entropy is undefined and G is 1.  Returns the global weights G.
std::vector<double> apply_log_entropy(TermDocMatrix& matrix);

struct SvdOptions {
    // Dense exact decomposition is used when rows*cols is at or below
    // this; larger matrices go through seeded randomized subspace
    // iteration.
    std::int64_t dense_cells_threshold = 4'000'000;
    int oversample = 16;
    int max_rounds = 48;
    double tol = 1e-9;        // relative stabilization of the top-k values
    double fail_tol = 1e-2;   // still moving this much at budget -> fatal
    std::uint64_t seed = 1;
};

// k-dimensional document vectors (rows of V*Sigma) plus the singular
// values that produced them.
struct SemanticSpace {
    int k = 0;             // effective dimension (may be clamped)
    int requested_k = 0;
    bool clamped = false;
    Eigen::VectorXd singular_values;   // length k, non-increasing
    Eigen::MatrixXd doc_vectors;       // docs x k
    std::vector<std::string> terms;          // copied from the matrix
    std::vector<double> term_weights;        // global log-entropy weights
};

// Top-k singular triplets of the weighted matrix.  Deterministic for a
// fixed seed; throws SvdConvergenceError if the iterative path is still
// moving by more than fail_tol after max_rounds.
SemanticSpace truncated_svd(const TermDocMatrix& weighted, int k,
                            const SvdOptions& options = {});

// tokenize (minus each document's own label) -> counts -> log-entropy
// -> truncated SVD, in one call.
SemanticSpace build_semantic_space(const std::vector<TokenStream>& docs, int k,
                                   const SvdOptions& options = {});

// u.v / (|u||v|); similarity of a zero vector to anything is 0.
double cosine(const Eigen::VectorXd& u, const Eigen::VectorXd& v);

// Brute-force cosine scan over immutable document vectors with the
// norms precomputed.  Queries are independent and thread-safe.
class NearestNeighborIndex {
public:
    explicit NearestNeighborIndex(const Eigen::MatrixXd& doc_vectors);

    // argmax over j != query of cosine similarity; ties go to the
    // lowest document index.
    int nearest(int query) const;
    double similarity(int i, int j) const;
    std::size_t size() const { return static_cast<std::size_t>(vectors_.rows()); }

private:
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> vectors_;
    Eigen::VectorXd norms_;
};

// Single-query convenience; builds the index on the fly.
int nearest_document(int query, const SemanticSpace& space);

}  // namespace affect
