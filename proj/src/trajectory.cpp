#include "osg/trajectory.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "osg/error.hpp"

namespace osg {

std::set<KeypointId> GestureTrajectory::keypoint_ids() const {
    std::set<KeypointId> ids;
    for (const auto& f : frames)
        for (const auto& [id, kp] : f.keypoints)
            ids.insert(id);
    return ids;
}

double GestureTrajectory::duration() const {
    if (frames.empty())
        return 0.0;
    return frames.back().t - frames.front().t;
}

static const std::array<const char*, 4> kTorsoIds = {
    "left_shoulder", "right_shoulder", "left_hip", "right_hip"};

Point2 torso_center(const KeypointFrame& frame) {
    Point2 sum{0.0, 0.0};
    int n = 0;
    for (const char* id : kTorsoIds) {
        auto it = frame.keypoints.find(id);
        if (it != frame.keypoints.end()) {
            sum = sum + it->second.pos;
            ++n;
        }
    }
    if (n == 0)
        fail(errc::missing_torso, "frame has no torso keypoint");
    return sum / static_cast<double>(n);
}

GestureTrajectory normalize(const GestureTrajectory& traj) {
    if (traj.frames.empty())
        fail(errc::invalid_argument, "empty trajectory");

    GestureTrajectory out = traj;
    for (auto& frame : out.frames) {
        const Point2 c = torso_center(frame);
        for (auto& [id, kp] : frame.keypoints)
            kp.pos = kp.pos - c;
    }

    // Per-keypoint centroid recentering.
    std::map<KeypointId, Point2> sums;
    std::map<KeypointId, int> counts;
    for (const auto& frame : out.frames) {
        for (const auto& [id, kp] : frame.keypoints) {
            sums[id] = sums[id] + kp.pos;
            counts[id] += 1;
        }
    }
    std::map<KeypointId, Point2> means;
    for (const auto& [id, s] : sums)
        means[id] = s / static_cast<double>(counts[id]);
    for (auto& frame : out.frames)
        for (auto& [id, kp] : frame.keypoints)
            kp.pos = kp.pos - means[id];

    // Global isotropic scale: half the largest per-axis peak-to-peak extent.
    double extent = 0.0;
    for (const auto& [id, n] : counts) {
        double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
        double ymin = xmin, ymax = -xmin;
        for (const auto& frame : out.frames) {
            auto it = frame.keypoints.find(id);
            if (it == frame.keypoints.end())
                continue;
            xmin = std::min(xmin, it->second.pos.x);
            xmax = std::max(xmax, it->second.pos.x);
            ymin = std::min(ymin, it->second.pos.y);
            ymax = std::max(ymax, it->second.pos.y);
        }
        extent = std::max({extent, xmax - xmin, ymax - ymin});
    }
    if (extent < 1e-9)
        fail(errc::degenerate_extent, "gesture has no motion");

    const double scale = extent / 2.0;
    for (auto& frame : out.frames)
        for (auto& [id, kp] : frame.keypoints)
            kp.pos = kp.pos / scale;
    return out;
}

std::vector<Polyline2D> extract_path(const GestureTrajectory& traj,
                                     const std::set<KeypointId>& ids) {
    if (ids.empty())
        fail(errc::invalid_argument, "no keypoint ids requested");
    std::vector<Polyline2D> paths;
    paths.reserve(ids.size());
    for (const auto& id : ids) { // std::set iterates in id-sorted order
        Polyline2D path;
        for (const auto& frame : traj.frames) {
            auto it = frame.keypoints.find(id);
            if (it != frame.keypoints.end())
                path.push_back(it->second.pos);
        }
        if (path.size() < 2)
            fail(errc::empty_path, "keypoint '" + id + "' observed fewer than 2 times");
        paths.push_back(std::move(path));
    }
    return paths;
}

} // namespace osg
