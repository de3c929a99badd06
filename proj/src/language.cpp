#include "osg/language.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>

#include <json.hpp>

#include "osg/error.hpp"

namespace osg {

using ordered_json = nlohmann::ordered_json;

const ReferenceGesture* GestureLanguage::find(const std::string& label) const {
    for (const auto& g : gestures)
        if (g.label == label)
            return &g;
    return nullptr;
}

std::vector<KeypointId> select_salient(const GestureTrajectory& traj, double alpha) {
    if (alpha <= 0.0 || alpha > 1.0)
        fail(errc::invalid_argument, "alpha must be in (0, 1]");

    struct Extent {
        double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
        double ymin = xmin, ymax = -xmin;
    };
    std::map<KeypointId, Extent> extents;
    for (const auto& frame : traj.frames) {
        for (const auto& [id, kp] : frame.keypoints) {
            Extent& e = extents[id];
            e.xmin = std::min(e.xmin, kp.pos.x);
            e.xmax = std::max(e.xmax, kp.pos.x);
            e.ymin = std::min(e.ymin, kp.pos.y);
            e.ymax = std::max(e.ymax, kp.pos.y);
        }
    }

    std::vector<std::pair<double, KeypointId>> displacement;
    double dmax = 0.0;
    for (const auto& [id, e] : extents) {
        const double d = std::hypot(e.xmax - e.xmin, e.ymax - e.ymin);
        displacement.emplace_back(d, id);
        dmax = std::max(dmax, d);
    }
    if (dmax <= 0.0)
        fail(errc::degenerate_extent, "no keypoint moved");

    std::sort(displacement.begin(), displacement.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    std::vector<KeypointId> out;
    for (const auto& [d, id] : displacement)
        if (d >= alpha * dmax)
            out.push_back(id);
    return out;
}

std::map<KeypointId, Polyline2D> prepare_polylines(const GestureTrajectory& normalized,
                                                   const std::vector<KeypointId>& ids,
                                                   double rdp_epsilon) {
    const std::set<KeypointId> idset(ids.begin(), ids.end());
    const auto paths = extract_path(normalized, idset); // id-sorted order
    std::map<KeypointId, Polyline2D> out;
    std::size_t i = 0;
    for (const auto& id : idset) {
        Polyline2D p = rdp_simplify(paths[i++], rdp_epsilon);
        for (Point2& pt : p)
            pt = quantize9(pt);
        out[id] = std::move(p);
    }
    return out;
}

namespace {

std::vector<Polyline2D> polyline_values(const std::map<KeypointId, Polyline2D>& m) {
    std::vector<Polyline2D> v;
    v.reserve(m.size());
    for (const auto& [id, poly] : m)
        v.push_back(poly);
    return v;
}

} // namespace

GestureLanguage define_gesture(const GestureTrajectory& traj, const std::string& label,
                               const GestureLanguage& lang) {
    if (label.empty())
        fail(errc::invalid_argument, "label must be non-empty");
    if (lang.find(label) != nullptr)
        fail(errc::duplicate_label, "label '" + label + "' already defined");

    const GestureTrajectory normalized = normalize(traj);
    ReferenceGesture ref;
    ref.label = label;
    ref.salient_keypoints = select_salient(normalized, lang.salience_alpha);
    ref.polylines = prepare_polylines(normalized, ref.salient_keypoints, lang.rdp_epsilon);
    ref.cached = compute_descriptor_set(polyline_values(ref.polylines), lang.raster.size,
                                        lang.raster.stroke_width);

    GestureLanguage out = lang;
    out.gestures.push_back(std::move(ref));
    return out;
}

namespace {

ordered_json metrics_to_json(const SecondaryMetrics& m) {
    return ordered_json{{"aspect_ratio", m.aspect_ratio},
                        {"solidity", m.solidity},
                        {"circularity", m.circularity},
                        {"path_complexity", m.path_complexity}};
}

ordered_json descriptors_to_json(const DescriptorSet& d) {
    ordered_json j;
    j["hu"] = d.hu.values;
    j["zernike"] = d.zernike.magnitudes;
    j["fourier"] = d.fourier.magnitudes;
    j["metrics"] = metrics_to_json(d.metrics);
    return j;
}

double get_number(const ordered_json& j, const std::string& where) {
    if (!j.is_number())
        fail(errc::parse_error, where + ": expected a number");
    return j.get<double>();
}

DescriptorSet descriptors_from_json(const ordered_json& j, const std::string& where) {
    DescriptorSet d;
    const auto& hu = j.at("hu");
    if (!hu.is_array() || hu.size() != 7)
        fail(errc::parse_error, where + ".hu: expected 7 floats");
    for (std::size_t i = 0; i < 7; ++i)
        d.hu.values[i] = get_number(hu[i], where + ".hu");
    for (const auto& v : j.at("zernike"))
        d.zernike.magnitudes.push_back(get_number(v, where + ".zernike"));
    d.zernike.order = 8;
    for (const auto& v : j.at("fourier"))
        d.fourier.magnitudes.push_back(get_number(v, where + ".fourier"));
    const auto& m = j.at("metrics");
    d.metrics.aspect_ratio = get_number(m.at("aspect_ratio"), where + ".metrics");
    d.metrics.solidity = get_number(m.at("solidity"), where + ".metrics");
    d.metrics.circularity = get_number(m.at("circularity"), where + ".metrics");
    d.metrics.path_complexity = get_number(m.at("path_complexity"), where + ".metrics");
    return d;
}

bool descriptor_sets_close(const DescriptorSet& a, const DescriptorSet& b, double tol) {
    auto close = [tol](double x, double y) { return std::abs(x - y) <= tol; };
    for (std::size_t i = 0; i < 7; ++i)
        if (!close(a.hu.values[i], b.hu.values[i]))
            return false;
    if (a.zernike.magnitudes.size() != b.zernike.magnitudes.size() ||
        a.fourier.magnitudes.size() != b.fourier.magnitudes.size())
        return false;
    for (std::size_t i = 0; i < a.zernike.magnitudes.size(); ++i)
        if (!close(a.zernike.magnitudes[i], b.zernike.magnitudes[i]))
            return false;
    for (std::size_t i = 0; i < a.fourier.magnitudes.size(); ++i)
        if (!close(a.fourier.magnitudes[i], b.fourier.magnitudes[i]))
            return false;
    return close(a.metrics.aspect_ratio, b.metrics.aspect_ratio) &&
           close(a.metrics.solidity, b.metrics.solidity) &&
           close(a.metrics.circularity, b.metrics.circularity) &&
           close(a.metrics.path_complexity, b.metrics.path_complexity);
}

} // namespace

std::string save(const GestureLanguage& lang) {
    ordered_json j;
    j["version"] = lang.version;
    j["raster"] = ordered_json{{"size", lang.raster.size}, {"stroke", lang.raster.stroke_width}};
    j["rdp_epsilon"] = quantize9(lang.rdp_epsilon);
    j["salience_alpha"] = quantize9(lang.salience_alpha);
    j["gestures"] = ordered_json::array();
    for (const auto& g : lang.gestures) {
        ordered_json jg;
        jg["label"] = g.label;
        jg["salient_keypoints"] = g.salient_keypoints;
        ordered_json polys = ordered_json::object();
        for (const auto& [id, poly] : g.polylines) { // id-sorted
            ordered_json pts = ordered_json::array();
            for (const Point2 p : poly)
                pts.push_back(ordered_json::array({p.x, p.y}));
            polys[id] = std::move(pts);
        }
        jg["polylines"] = std::move(polys);
        if (g.cached)
            jg["descriptors"] = descriptors_to_json(*g.cached);
        j["gestures"].push_back(std::move(jg));
    }
    return j.dump(2) + "\n";
}

GestureLanguage load(const std::string& bytes) {
    ordered_json j;
    try {
        j = ordered_json::parse(bytes);
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }

    try {
        if (!j.is_object() || !j.contains("version"))
            fail(errc::parse_error, "missing 'version'");
        const int version = j.at("version").get<int>();
        if (version != 1)
            fail(errc::version_mismatch, "unsupported language version " + std::to_string(version));

        GestureLanguage lang;
        lang.version = version;
        lang.raster.size = j.at("raster").at("size").get<int>();
        lang.raster.stroke_width = j.at("raster").at("stroke").get<int>();
        lang.rdp_epsilon = get_number(j.at("rdp_epsilon"), "rdp_epsilon");
        lang.salience_alpha = get_number(j.at("salience_alpha"), "salience_alpha");

        std::set<std::string> seen;
        for (const auto& jg : j.at("gestures")) {
            ReferenceGesture g;
            g.label = jg.at("label").get<std::string>();
            const std::string where = "gestures['" + g.label + "']";
            if (g.label.empty() || !seen.insert(g.label).second)
                fail(errc::parse_error, where + ": empty or duplicate label");
            for (const auto& id : jg.at("salient_keypoints"))
                g.salient_keypoints.push_back(id.get<std::string>());
            if (g.salient_keypoints.empty())
                fail(errc::parse_error, where + ": no salient keypoints");
            for (const auto& [id, pts] : jg.at("polylines").items()) {
                Polyline2D poly;
                for (const auto& pt : pts) {
                    if (!pt.is_array() || pt.size() != 2)
                        fail(errc::parse_error, where + ".polylines." + id + ": expected [x, y]");
                    poly.push_back({get_number(pt[0], where), get_number(pt[1], where)});
                }
                if (poly.size() < 2)
                    fail(errc::parse_error, where + ".polylines." + id + ": fewer than 2 points");
                g.polylines[id] = std::move(poly);
            }
            for (const auto& id : g.salient_keypoints)
                if (!g.polylines.count(id))
                    fail(errc::parse_error, where + ": salient keypoint '" + id + "' has no polyline");
            if (jg.contains("descriptors")) {
                g.cached = descriptors_from_json(jg.at("descriptors"), where + ".descriptors");
                const DescriptorSet recomputed = compute_descriptor_set(
                    polyline_values(g.polylines), lang.raster.size, lang.raster.stroke_width);
                if (!descriptor_sets_close(*g.cached, recomputed, 1e-9))
                    fail(errc::parse_error,
                         where + ": cached descriptors do not match recomputation");
            }
            lang.gestures.push_back(std::move(g));
        }
        return lang;
    } catch (const nlohmann::json::exception& e) {
        fail(errc::parse_error, e.what());
    }
}

GestureLanguage load_language_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(errc::parse_error, "cannot open '" + path + "'");
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return load(bytes);
}

void save_language_file(const GestureLanguage& lang, const std::string& path) {
    const std::string bytes = save(lang);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            fail(errc::parse_error, "cannot write '" + tmp + "'");
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out.flush())
            fail(errc::parse_error, "short write to '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        fail(errc::parse_error, "rename to '" + path + "' failed: " + ec.message());
}

} // namespace osg
