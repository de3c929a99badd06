#include "osg/recognizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "osg/error.hpp"

namespace osg {

const char* voter_name(Voter v) {
    switch (v) {
    case Voter::hu: return "hu";
    case Voter::zernike: return "zernike";
    case Voter::fourier: return "fourier";
    case Voter::aspect_ratio: return "aspect_ratio";
    case Voter::solidity: return "solidity";
    case Voter::circularity: return "circularity";
    case Voter::path_complexity: return "path_complexity";
    }
    return "?";
}

int ConfusionMatrix::correct() const {
    int c = 0;
    for (std::size_t i = 0; i < labels.size(); ++i)
        c += counts[i][i];
    return c;
}

double ConfusionMatrix::accuracy() const {
    return total > 0 ? static_cast<double>(correct()) / total : 0.0;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> hu_as_vector(const HuVector& h) {
    return {h.values.begin(), h.values.end()};
}

std::array<double, 7> distances_between(const DescriptorSet& rec, const DescriptorSet& ref) {
    std::array<double, 7> d{};
    d[0] = descriptor_distance(hu_as_vector(rec.hu), hu_as_vector(ref.hu));
    d[1] = descriptor_distance(rec.zernike.magnitudes, ref.zernike.magnitudes);
    d[2] = descriptor_distance(rec.fourier.magnitudes, ref.fourier.magnitudes);
    d[3] = std::abs(rec.metrics.aspect_ratio - ref.metrics.aspect_ratio);
    d[4] = std::abs(rec.metrics.solidity - ref.metrics.solidity);
    d[5] = std::abs(rec.metrics.circularity - ref.metrics.circularity);
    d[6] = std::abs(rec.metrics.path_complexity - ref.metrics.path_complexity);
    return d;
}

// Descriptors of one recording filtered to a given keypoint set. References
// sharing a salient set reuse the same computation within one recognition.
struct RecordingDescriptorCache {
    const GestureTrajectory& normalized;
    const GestureLanguage& lang;
    std::map<std::vector<KeypointId>, DescriptorSet> memo;

    const DescriptorSet& get(const std::vector<KeypointId>& usable) {
        auto it = memo.find(usable);
        if (it == memo.end()) {
            const auto polys = prepare_polylines(normalized, usable, lang.rdp_epsilon);
            std::vector<Polyline2D> values;
            values.reserve(polys.size());
            for (const auto& [id, poly] : polys)
                values.push_back(poly);
            it = memo.emplace(usable, compute_descriptor_set(values, lang.raster.size,
                                                             lang.raster.stroke_width))
                     .first;
        }
        return it->second;
    }
};

std::array<double, 7> score_impl(const ReferenceGesture& ref, RecordingDescriptorCache& cache) {
    std::vector<KeypointId> usable;
    for (const auto& id : ref.salient_keypoints) {
        int seen = 0;
        for (const auto& frame : cache.normalized.frames)
            if (frame.keypoints.count(id) && ++seen >= 2)
                break;
        if (seen >= 2)
            usable.push_back(id);
    }
    if (usable.empty())
        fail(errc::missing_salient, "none of the reference's salient keypoints observed");
    std::sort(usable.begin(), usable.end());

    const DescriptorSet& rec = cache.get(usable);
    if (ref.cached)
        return distances_between(rec, *ref.cached);
    std::vector<Polyline2D> values;
    values.reserve(ref.polylines.size());
    for (const auto& [id, poly] : ref.polylines)
        values.push_back(poly);
    return distances_between(
        rec, compute_descriptor_set(values, cache.lang.raster.size, cache.lang.raster.stroke_width));
}

} // namespace

std::array<double, 7> score_against(const GestureTrajectory& normalized,
                                    const ReferenceGesture& ref, const GestureLanguage& lang) {
    RecordingDescriptorCache cache{normalized, lang, {}};
    return score_impl(ref, cache);
}

RecognitionResult recognize(const GestureTrajectory& traj, const GestureLanguage& lang) {
    if (lang.gestures.empty())
        fail(errc::empty_language, "language has no gestures");

    const GestureTrajectory normalized = normalize(traj);
    RecordingDescriptorCache cache{normalized, lang, {}};

    const std::size_t n = lang.gestures.size();
    std::vector<std::array<double, 7>> dist(n);
    std::size_t missing = 0;
    for (std::size_t i = 0; i < n; ++i) {
        try {
            dist[i] = score_impl(lang.gestures[i], cache);
        } catch (const Error& e) {
            if (e.code() != errc::missing_salient)
                throw;
            dist[i].fill(kInf);
            ++missing;
        }
    }
    if (missing == n)
        fail(errc::all_references_missing, "no reference's salient keypoints were observed");

    RecognitionResult result;
    for (std::size_t v = 0; v < kAllVoters.size(); ++v) {
        Vote vote;
        vote.voter = kAllVoters[v];
        std::size_t best = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::string& label = lang.gestures[i].label;
            vote.distances[label] = dist[i][v];
            // Strictly smaller distance wins; equal distances go to the
            // lexicographically smaller label.
            if (i > 0 && (dist[i][v] < dist[best][v] ||
                          (dist[i][v] == dist[best][v] && label < lang.gestures[best].label)))
                best = i;
        }
        vote.chosen_label = lang.gestures[best].label;
        result.tally[vote.chosen_label] += 1;
        result.votes.push_back(std::move(vote));
    }

    int top = 0;
    for (const auto& [label, count] : result.tally)
        top = std::max(top, count);
    std::vector<std::string> leaders;
    for (const auto& [label, count] : result.tally)
        if (count == top)
            leaders.push_back(label);

    if (leaders.size() == 1) {
        result.predicted = leaders.front();
        return result;
    }

    // Tie-break: lowest sum of per-voter distance ranks, then label order.
    // Ranks rather than raw distances: the voters' units are incomparable.
    std::map<std::string, int> rank_sum;
    for (std::size_t v = 0; v < kAllVoters.size(); ++v) {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i)
            order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (dist[a][v] != dist[b][v])
                return dist[a][v] < dist[b][v];
            return lang.gestures[a].label < lang.gestures[b].label;
        });
        for (std::size_t r = 0; r < n; ++r)
            rank_sum[lang.gestures[order[r]].label] += static_cast<int>(r);
    }
    std::sort(leaders.begin(), leaders.end(), [&](const std::string& a, const std::string& b) {
        if (rank_sum[a] != rank_sum[b])
            return rank_sum[a] < rank_sum[b];
        return a < b;
    });
    result.predicted = leaders.front();
    result.tie_broken = true;
    return result;
}

ConfusionMatrix evaluate(const std::vector<LabeledSample>& samples, const GestureLanguage& lang,
                         int parallel) {
    if (samples.empty())
        fail(errc::empty_dataset, "no samples to evaluate");
    if (lang.gestures.empty())
        fail(errc::empty_language, "language has no gestures");

    ConfusionMatrix cm;
    std::map<std::string, std::size_t> index;
    for (const auto& g : lang.gestures) {
        index[g.label] = cm.labels.size();
        cm.labels.push_back(g.label);
    }
    for (const auto& s : samples)
        if (!index.count(s.label))
            fail(errc::unknown_label, "sample label '" + s.label + "' not in language");

    std::vector<std::string> predicted(samples.size());
    const int workers = std::max(1, parallel);
    if (workers == 1) {
        for (std::size_t i = 0; i < samples.size(); ++i)
            predicted[i] = recognize(samples[i].traj, lang).predicted;
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t i = static_cast<std::size_t>(w); i < samples.size();
                     i += static_cast<std::size_t>(workers))
                    predicted[i] = recognize(samples[i].traj, lang).predicted;
            });
        }
        for (auto& t : pool)
            t.join();
    }

    cm.counts.assign(cm.labels.size(), std::vector<int>(cm.labels.size(), 0));
    for (std::size_t i = 0; i < samples.size(); ++i) {
        cm.counts[index[samples[i].label]][index[predicted[i]]] += 1;
        cm.total += 1;
    }
    return cm;
}

} // namespace osg
