#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "osg/geometry.hpp"

namespace osg {

using KeypointId = std::string;

struct Keypoint {
    Point2 pos;
    std::optional<double> confidence; // in [0,1] when present
};

// One timestamped pose sample. Positions are in image pixels (x right,
// y down) before normalization, dimensionless afterwards.
struct KeypointFrame {
    double t = 0.0;
    std::map<KeypointId, Keypoint> keypoints;
};

struct GestureTrajectory {
    std::vector<KeypointFrame> frames;

    std::set<KeypointId> keypoint_ids() const;
    double duration() const; // last t - first t
};

// Centroid of whichever of {left_shoulder, right_shoulder, left_hip,
// right_hip} are present in the frame. Throws MissingTorso when none are.
Point2 torso_center(const KeypointFrame& frame);

// Two-stage normalization:
//   1. per frame, subtract that frame's torso center from every keypoint;
//   2. per keypoint, subtract the mean position of its own trajectory, then
//      divide everything by half the largest per-axis peak-to-peak extent
//      across all keypoints, putting coordinates roughly in [-1, 1].
// Timestamps are untouched. Throws MissingTorso / DegenerateExtent.
GestureTrajectory normalize(const GestureTrajectory& traj);

// One polyline per requested id, in id-sorted order, each holding that
// keypoint's positions in frame order (frames lacking the id are skipped).
// Throws EmptyPath when a requested id has fewer than 2 observations.
std::vector<Polyline2D> extract_path(const GestureTrajectory& traj,
                                     const std::set<KeypointId>& ids);

} // namespace osg
