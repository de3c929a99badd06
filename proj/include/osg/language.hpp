#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "osg/descriptors.hpp"
#include "osg/trajectory.hpp"

namespace osg {

struct RasterConfig {
    int size = 256;
    int stroke_width = 3;
};

// One labeled reference gesture: the salient keypoints chosen from its single
// demonstration and their simplified normalized motion paths.
struct ReferenceGesture {
    std::string label;
    std::vector<KeypointId> salient_keypoints; // descending displacement order
    std::map<KeypointId, Polyline2D> polylines;
    std::optional<DescriptorSet> cached;
};

struct GestureLanguage {
    int version = 1;
    RasterConfig raster;
    double rdp_epsilon = 0.02;
    double salience_alpha = 0.6;
    std::vector<ReferenceGesture> gestures;

    const ReferenceGesture* find(const std::string& label) const;
};

// Keypoints whose peak-to-peak displacement D(i) = hypot(ptp_x, ptp_y) is at
// least alpha * max_j D(j), ordered by descending D then id. Expects a
// normalized trajectory. Throws DegenerateExtent when nothing moves.
std::vector<KeypointId> select_salient(const GestureTrajectory& traj, double alpha);

// Normalizes the demonstration, selects salient keypoints, extracts and
// simplifies their paths, computes the descriptor cache, and returns the
// language with the new gesture appended. The input language is unchanged.
GestureLanguage define_gesture(const GestureTrajectory& traj, const std::string& label,
                               const GestureLanguage& lang);

// The simplification + quantization step shared by definition and
// recognition: extract the given keypoints' paths from a normalized
// trajectory, RDP-simplify each, and quantize coordinates to serialization
// precision.
std::map<KeypointId, Polyline2D> prepare_polylines(const GestureTrajectory& normalized,
                                                   const std::vector<KeypointId>& ids,
                                                   double rdp_epsilon);

// JSON language file. load() validates the version, the structural schema,
// and that cached descriptors match recomputation from the stored polylines.
std::string save(const GestureLanguage& lang);
GestureLanguage load(const std::string& bytes);

GestureLanguage load_language_file(const std::string& path);
void save_language_file(const GestureLanguage& lang, const std::string& path); // atomic

} // namespace osg
