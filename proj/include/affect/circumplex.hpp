#pragma once

#include <set>
#include <string>
#include <vector>

#include "affect/delsar.hpp"

namespace affect {

// Which keywords count as positive-valence and which as engaged; the
// complements are negative / disengaged.
struct EmotionCategories {
    std::set<std::string> positive;
    std::set<std::string> engaged;

    static EmotionCategories defaults();
    bool is_positive(const std::string& emotion) const { return positive.count(emotion) > 0; }
    bool is_engaged(const std::string& emotion) const { return engaged.count(emotion) > 0; }
};

// One (subcorpus, emotion) coordinate.  Raw values are fractions in
// [0,1]; normalized values are mean-centered across the whole run.
struct CircumplexPoint {
    std::string subcorpus;
    std::string emotion;
    double valence = 0.0;
    double arousal = 0.0;
    bool normalized = false;
};

// valence  = fraction of the emotion's row mass on positive keywords,
// arousal  = fraction on engaged keywords.
CircumplexPoint raw_point(const ClusteringMatrix& matrix, const std::string& emotion,
                          const EmotionCategories& categories,
                          const std::string& subcorpus_name = "");

// raw_point for every row of the matrix, in matrix emotion order.
std::vector<CircumplexPoint> raw_points(const ClusteringMatrix& matrix,
                                        const EmotionCategories& categories,
                                        const std::string& subcorpus_name);

// Subtracts the mean valence and arousal over ALL points (regions and
// controls together) and flags the points as normalized.
void normalize_points(std::vector<CircumplexPoint>& points);

struct EmotionCentroid {
    std::string emotion;
    double valence = 0.0;
    double arousal = 0.0;
    double distance_sum = 0.0;  // sum of point distances to the centroid
};

struct CentroidReport {
    std::vector<EmotionCentroid> by_emotion;  // input emotion order

    // Ascending by distance_sum (name as tie-break).
    std::vector<EmotionCentroid> sorted_by_distance() const;
};

// Per-emotion arithmetic mean over subcorpora plus the total Euclidean
// distance of each emotion's points to its centroid.
CentroidReport centroids(const std::vector<CircumplexPoint>& points);

struct SubcorpusAggregate {
    std::string subcorpus;
    double positivity = 0.0;   // mean of the emotion valences
    double engagement = 0.0;   // mean of the emotion arousals
};

// Aggregates the points of one subcorpus; throws ConfigError unless
// every keyword in `emotions` is present exactly once.
SubcorpusAggregate aggregate_subcorpus(const std::vector<CircumplexPoint>& points,
                                       const EmotionSet& emotions);

}  // namespace affect
