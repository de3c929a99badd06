#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "osg/language.hpp"

namespace osg {

enum class Voter {
    hu,
    zernike,
    fourier,
    aspect_ratio,
    solidity,
    circularity,
    path_complexity,
};

inline constexpr std::array<Voter, 7> kAllVoters = {
    Voter::hu,           Voter::zernike,     Voter::fourier,        Voter::aspect_ratio,
    Voter::solidity,     Voter::circularity, Voter::path_complexity,
};

const char* voter_name(Voter v);

// Distances from one recording to every reference, for a single voter.
struct Vote {
    Voter voter{};
    std::string chosen_label;
    std::map<std::string, double> distances; // +inf when the reference's salient
                                             // keypoints were never observed
};

struct RecognitionResult {
    std::string predicted;
    std::vector<Vote> votes; // one per voter, in kAllVoters order
    std::map<std::string, int> tally;
    bool tie_broken = false;
};

// Per-voter distances of a normalized recording against one reference:
// the recording is filtered to the reference's salient keypoints, simplified,
// rasterized and described exactly as at definition time, then compared to the
// reference's cached descriptors (L2 for the three vector voters, absolute
// difference for the four scalars). Throws MissingSalient when none of the
// reference's salient keypoints was observed at least twice.
std::array<double, 7> score_against(const GestureTrajectory& normalized,
                                    const ReferenceGesture& ref, const GestureLanguage& lang);

// Seven-voter majority classification. Each voter votes for its nearest
// reference; ties in the final tally are broken by the lowest sum of
// per-voter distance ranks, then lexicographically. Deterministic.
RecognitionResult recognize(const GestureTrajectory& traj, const GestureLanguage& lang);

struct ConfusionMatrix {
    std::vector<std::string> labels;        // language order
    std::vector<std::vector<int>> counts;   // rows = true label, cols = predicted
    int total = 0;

    int correct() const;
    double accuracy() const;
};

struct LabeledSample {
    GestureTrajectory traj;
    std::string label;
};

// Recognizes every sample independently (optionally across `parallel`
// threads) and aggregates a confusion matrix. Throws UnknownLabel /
// EmptyDataset.
ConfusionMatrix evaluate(const std::vector<LabeledSample>& samples, const GestureLanguage& lang,
                         int parallel = 1);

} // namespace osg
