#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "osg/trajectory.hpp"

namespace osg {

// The start/stop hand trigger arrives as an explicit event from the upstream
// detector; this module only sees its firing time.
struct TriggerEvent {
    double t = 0.0;
};

using StreamEvent = std::variant<KeypointFrame, TriggerEvent>;

inline double event_time(const StreamEvent& ev) {
    return std::holds_alternative<TriggerEvent>(ev) ? std::get<TriggerEvent>(ev).t
                                                    : std::get<KeypointFrame>(ev).t;
}

struct SessionConfig {
    double debounce_seconds = 0.75; // a single salute must not count as start+stop
    std::size_t min_frames = 5;     // shorter recordings cannot be rasterized meaningfully
};

class SessionState {
public:
    explicit SessionState(SessionConfig cfg = {}) : cfg_(cfg) {}

    // Feeds one event; returns a finished trajectory when a recording closes.
    // Idle drops frames; a trigger opens a recording; a post-debounce trigger
    // closes it. Throws OutOfOrder on time regression beyond 1 ms.
    std::optional<GestureTrajectory> step(const StreamEvent& ev);

    bool recording() const { return recording_; }
    std::size_t dropped_short() const { return dropped_short_; }

private:
    SessionConfig cfg_;
    bool recording_ = false;
    std::vector<KeypointFrame> buffer_;
    double debounce_until_ = 0.0;
    double last_t_ = -std::numeric_limits<double>::infinity();
    std::size_t dropped_short_ = 0;
};

// Batch replay: folds step over the whole stream. An unterminated trailing
// recording is discarded (with a warning on the log).
std::vector<GestureTrajectory> segment_stream(const std::vector<StreamEvent>& events,
                                              SessionConfig cfg = {});

struct StreamHeader {
    int version = 1;
    int width = 0;
    int height = 0;
};

struct KeypointStream {
    StreamHeader header;
    std::vector<StreamEvent> events;
};

// JSON Lines keypoint stream: a header line, then one frame or event object
// per line. Throws ParseError with the offending line number.
KeypointStream read_stream(std::istream& in);
KeypointStream read_stream_file(const std::string& path); // "-" reads stdin
std::string write_stream(const KeypointStream& stream);
void write_stream_file(const KeypointStream& stream, const std::string& path);

} // namespace osg
